#pragma once

#include "zassen/expr.hpp"
#include "zassen/kernels.hpp"
#include "zassen/splitting.hpp"

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace zassen {

/// Uniform periodic grid on [-1,1): x_j = -1 + 2j/M with M a power of two >= 4.
struct Grid {
    int m = 0;

    Grid() = default;
    explicit Grid(int m_);
    double node(int j) const { return -1.0 + 2.0 * j / m; }
    friend bool operator==(const Grid &, const Grid &) = default;
};

/// Complex samples of the wavefunction at the grid nodes. The 2-norm carries
/// the quadrature weight 2/M.
class StateVector {
  public:
    StateVector() = default;
    StateVector(Grid g, std::vector<std::complex<double>> v);
    /// Samples fn(x_j).
    static StateVector sample(Grid g, const std::function<std::complex<double>(double)> &fn);

    const Grid &grid() const { return grid_; }
    const std::vector<std::complex<double>> &values() const { return v_; }
    std::vector<std::complex<double>> &values() { return v_; }
    int size() const { return grid_.m; }

    double norm() const;
    StateVector &operator-=(const StateVector &o);
    friend StateVector operator-(StateVector a, const StateVector &b) { return a -= b; }

  private:
    Grid grid_;
    std::vector<std::complex<double>> v_;
};

/// Weighted inner product (2/M) sum conj(a_j) b_j.
std::complex<double> inner(const StateVector &a, const StateVector &b);

/// Spectral derivative: mode m multiplied by (i pi m)^k; for odd k the
/// Nyquist mode is zeroed so the real-space operator stays exactly
/// skew-symmetric (even powers keep it symmetric).
StateVector diff_apply(const StateVector &u, int k, Exec exec = default_exec());

/// Discretization of scalar * <f>_k: scalar * (D_f K^k + K^k D_f)/2.
struct DiscreteAngOp {
    int k = 0;
    std::vector<double> f;
    std::complex<double> scalar{1.0, 0.0};
};

StateVector ang_apply(const DiscreteAngOp &op, const StateVector &u, Exec exec = default_exec());

/// A sum of discretized symmetrised terms acting on one grid.
class OperatorSum {
  public:
    OperatorSum() = default;
    OperatorSum(Grid g, std::vector<DiscreteAngOp> ops) : grid_(g), ops_(std::move(ops)) {}

    const Grid &grid() const { return grid_; }
    const std::vector<DiscreteAngOp> &ops() const { return ops_; }
    bool empty() const { return ops_.empty(); }

    StateVector apply(const StateVector &u, Exec exec = default_exec()) const;
    OperatorSum scaled(std::complex<double> c) const;

  private:
    Grid grid_;
    std::vector<DiscreteAngOp> ops_;
};

/// Instantiates an algebra element with concrete t, eps and potential samples.
/// Coefficient polynomials may mention the unit and one symbol, whose
/// derivative samples come from `v_expr`. Throws std::domain_error when the
/// element mentions anything else (manifest mismatch).
OperatorSum bind_exponent(const FTerm &w, Grid g, const ClosedExpr &v_expr, double t, double eps);

/// Dense matrix of an operator sum, assembled column-by-column through
/// ang_apply. Refuses M > 512 (oracle scale).
Eigen::MatrixXcd dense_assemble(const OperatorSum &op);

/// Dense matrix exponential exp(dt*H) (scaling-and-squaring Pade-13 oracle).
Eigen::MatrixXcd dense_expm(const Eigen::MatrixXcd &h, double dt = 1.0);

/// Krylov approximation of exp(op) u using `iters` matrix-vector products.
/// The operator must be skew-Hermitian; breakdown returns the exact result.
StateVector lanczos_expmv(const OperatorSum &op, const StateVector &u, int iters);

/// One Strang step exp(i dt eps K^2 / 2) exp(-i dt eps^-1 D_V) exp(i dt eps K^2 / 2) u.
StateVector step_strang(const StateVector &u, const ClosedExpr &v_expr, double eps, double dt);

/// Palindromic Zassenhaus stepper bound to a concrete grid/potential/step.
class ZassenhausStepper {
  public:
    ZassenhausStepper(Grid g, const Splitting &sp, const ClosedExpr &v_expr, double eps, double dt,
                      int lanczos_override = -1);

    StateVector step(const StateVector &u) const;
    /// Dense product of the same exponential palindrome (oracle for one step).
    Eigen::MatrixXcd dense_step_matrix() const;
    const std::vector<OperatorSum> &exponents() const { return bound_; }
    unsigned lanczos_iters(size_t k) const { return iters_.at(k); }

  private:
    Grid grid_;
    std::vector<OperatorSum> bound_; // W[0..n+1] with concrete scalars
    std::vector<unsigned> iters_;    // per exponent (0 for the first two)
    std::vector<std::complex<double>> kinetic_phase_;   // full exp(W0) phase
    std::vector<std::complex<double>> potential_phase_; // full exp(W1) phase
};

StateVector step_zassenhaus(const StateVector &u, const Splitting &sp, const ClosedExpr &v_expr,
                            double eps, double dt);

/// Largest |eigenvalue| of the dense assembly.
double dense_spectral_radius(const Eigen::MatrixXcd &h);

} // namespace zassen
