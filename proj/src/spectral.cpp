#include "zassen/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <random>

namespace zassen {

using cplx = std::complex<double>;

Grid::Grid(int m_) : m(m_)
{
    if (m < 4 || (m & (m - 1)) != 0)
        throw std::invalid_argument("Grid: M must be a power of two >= 4");
}

StateVector::StateVector(Grid g, std::vector<cplx> v) : grid_(g), v_(std::move(v))
{
    if ((int)v_.size() != grid_.m)
        throw std::invalid_argument("StateVector: sample count != M");
}

StateVector StateVector::sample(Grid g, const std::function<cplx(double)> &fn)
{
    std::vector<cplx> v(g.m);
    for (int j = 0; j < g.m; ++j)
        v[j] = fn(g.node(j));
    return StateVector(g, std::move(v));
}

double StateVector::norm() const
{
    double s = 0.0;
    for (const auto &z : v_)
        s += std::norm(z);
    return std::sqrt(s * 2.0 / grid_.m);
}

StateVector &StateVector::operator-=(const StateVector &o)
{
    if (!(grid_ == o.grid_))
        throw std::invalid_argument("StateVector: grid mismatch");
    for (size_t j = 0; j < v_.size(); ++j)
        v_[j] -= o.v_[j];
    return *this;
}

cplx inner(const StateVector &a, const StateVector &b)
{
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("inner: grid mismatch");
    cplx s(0.0);
    for (int j = 0; j < a.size(); ++j)
        s += std::conj(a.values()[j]) * b.values()[j];
    return s * (2.0 / a.size());
}

namespace {

// Fourier symbol ladder (i pi m)^k applied in place; odd k zeroes Nyquist.
void apply_symbol(std::vector<cplx> &hat, int mgrid, int k)
{
    for (int jj = 0; jj < mgrid; ++jj) {
        int mode = jj < mgrid / 2 ? jj : jj - mgrid;
        if (k % 2 == 1 && mode == -mgrid / 2) {
            hat[jj] = 0.0;
            continue;
        }
        cplx factor(1.0, 0.0);
        for (int p = 0; p < k; ++p)
            factor *= cplx(0.0, M_PI * mode);
        hat[jj] *= factor;
    }
}

} // namespace

StateVector diff_apply(const StateVector &u, int k, Exec exec)
{
    if (k < 0)
        throw std::out_of_range("diff_apply: k >= 0");
    if (k == 0)
        return u;
    std::vector<cplx> hat = u.values();
    kernels::fft(hat, false, exec);
    apply_symbol(hat, u.size(), k);
    kernels::fft(hat, true, exec);
    return StateVector(u.grid(), std::move(hat));
}

StateVector ang_apply(const DiscreteAngOp &op, const StateVector &u, Exec exec)
{
    if ((int)op.f.size() != u.size())
        throw std::invalid_argument("ang_apply: sample count mismatch");
    if (op.k == 0) {
        std::vector<cplx> out;
        kernels::pointwise_mul(op.f, u.values(), out, exec);
        for (auto &z : out)
            z *= op.scalar;
        return StateVector(u.grid(), std::move(out));
    }
    StateVector ku = diff_apply(u, op.k, exec);
    std::vector<cplx> f_ku;
    kernels::pointwise_mul(op.f, ku.values(), f_ku, exec);
    std::vector<cplx> fu;
    kernels::pointwise_mul(op.f, u.values(), fu, exec);
    StateVector k_fu = diff_apply(StateVector(u.grid(), std::move(fu)), op.k, exec);
    std::vector<cplx> out(u.size());
    const cplx half_scalar = 0.5 * op.scalar;
    for (int j = 0; j < u.size(); ++j)
        out[j] = half_scalar * (f_ku[j] + k_fu.values()[j]);
    return StateVector(u.grid(), std::move(out));
}

StateVector OperatorSum::apply(const StateVector &u, Exec exec) const
{
    std::vector<cplx> acc(u.size(), cplx(0.0));
    for (const auto &op : ops_) {
        StateVector part = ang_apply(op, u, exec);
        for (int j = 0; j < u.size(); ++j)
            acc[j] += part.values()[j];
    }
    return StateVector(u.grid(), std::move(acc));
}

OperatorSum OperatorSum::scaled(cplx c) const
{
    std::vector<DiscreteAngOp> ops = ops_;
    for (auto &op : ops)
        op.scalar *= c;
    return OperatorSum(grid_, std::move(ops));
}

namespace {

// the spectral discretization assumes 2-periodic coefficients
void require_periodic(const ClosedExpr &v)
{
    double left = v.eval(-1.0), right = v.eval(1.0);
    double scale = std::max({1.0, std::abs(left), std::abs(right)});
    if (std::abs(left - right) > 1e-8 * scale)
        throw std::domain_error("potential is not 2-periodic on [-1,1]");
}

} // namespace

OperatorSum bind_exponent(const FTerm &w, Grid g, const ClosedExpr &v_expr, double t, double eps)
{
    require_periodic(v_expr);
    // derivative samples of the potential, by order
    std::map<unsigned, std::vector<double>> deriv_samples;
    auto samples_for = [&](unsigned order) -> const std::vector<double> & {
        auto it = deriv_samples.find(order);
        if (it == deriv_samples.end()) {
            ClosedExpr d = v_expr.derivative(order);
            std::vector<double> s(g.m);
            for (int j = 0; j < g.m; ++j)
                s[j] = d.eval(g.node(j));
            it = deriv_samples.emplace(order, std::move(s)).first;
        }
        return it->second;
    };

    std::string symbol_name;
    std::vector<DiscreteAngOp> ops;
    for (const auto &[k, gp] : w.components()) {
        for (const auto &[grading, poly] : gp) {
            DiscreteAngOp op;
            op.k = k;
            op.scalar = ScaledScalar(Rational(1), grading.i_pow, grading.t_pow, grading.eps_pow)
                            .value(t, eps);
            op.f.assign(g.m, 0.0);
            for (const auto &[mono, coeff] : poly.terms()) {
                std::vector<double> term(g.m, coeff.to_double());
                for (const auto &factor : mono.factors()) {
                    if (symbol_name.empty())
                        symbol_name = factor.sym;
                    if (factor.sym != symbol_name)
                        throw std::domain_error(
                            "bind_exponent: manifest mismatch, element mentions several symbols");
                    const auto &s = samples_for(factor.deriv);
                    for (int j = 0; j < g.m; ++j)
                        for (unsigned e = 0; e < factor.exp; ++e)
                            term[j] *= s[j];
                }
                for (int j = 0; j < g.m; ++j)
                    op.f[j] += term[j];
            }
            ops.push_back(std::move(op));
        }
    }
    return OperatorSum(g, std::move(ops));
}

namespace {

// First row of the circulant K^k, structurally (anti)symmetrized so the
// assembled operator is exactly skew/symmetric rather than up to FFT roundoff.
std::vector<double> circulant_kernel(int m, int k, Exec exec)
{
    std::vector<cplx> sym(m);
    for (int jj = 0; jj < m; ++jj) {
        int mode = jj < m / 2 ? jj : jj - m;
        if (k % 2 == 1 && mode == -m / 2) {
            sym[jj] = 0.0;
            continue;
        }
        cplx factor(1.0, 0.0);
        for (int p = 0; p < k; ++p)
            factor *= cplx(0.0, M_PI * mode);
        sym[jj] = factor;
    }
    kernels::fft(sym, true, exec); // g[d] = (1/M) sum_m symbol_m e^{2 pi i m d / M}
    std::vector<double> g(m);
    for (int d = 0; d < m; ++d) {
        double a = sym[d].real();
        double b = sym[(m - d) % m].real();
        g[d] = (k % 2 == 0) ? 0.5 * (a + b) : 0.5 * (a - b);
    }
    return g;
}

} // namespace

Eigen::MatrixXcd dense_assemble(const OperatorSum &op)
{
    const int m = op.grid().m;
    if (m > 512)
        throw std::domain_error("dense_assemble: oracle scale is M <= 512");
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
    for (const auto &o : op.ops()) {
        if (o.k == 0) {
            for (int r = 0; r < m; ++r)
                h(r, r) += o.scalar * o.f[r];
            continue;
        }
        // (D_f K^k + K^k D_f)/2 has entries (f_r + f_c)/2 * g[(r-c) mod M]
        std::vector<double> g = circulant_kernel(m, o.k, Exec::serial);
#pragma omp parallel for schedule(static)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                h(r, c) += o.scalar * (0.5 * (o.f[r] + o.f[c]) * g[((r - c) % m + m) % m]);
    }
    return h;
}

Eigen::MatrixXcd dense_expm(const Eigen::MatrixXcd &h, double dt)
{
    Eigen::MatrixXcd a = dt * h;
    return a.exp();
}

double dense_spectral_radius(const Eigen::MatrixXcd &h)
{
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

StateVector lanczos_expmv(const OperatorSum &op, const StateVector &u, int iters)
{
    if (iters < 1)
        throw std::invalid_argument("lanczos_expmv: iters >= 1");
    const int m = u.size();
    iters = std::min(iters, m);

    const double beta0 = u.norm();
    if (beta0 == 0.0)
        return u;

    // Hermitian companion H = -i S of the skew-Hermitian operator S.
    auto apply_h = [&](const StateVector &q) {
        StateVector w = op.apply(q);
        for (auto &z : w.values())
            z *= cplx(0.0, -1.0);
        return w;
    };

    std::vector<StateVector> q;
    q.reserve(iters + 1);
    {
        std::vector<cplx> v0 = u.values();
        for (auto &z : v0)
            z /= beta0;
        q.emplace_back(u.grid(), std::move(v0));
    }

    std::vector<double> alpha, beta; // T diagonal / subdiagonal
    int steps = 0;
    for (int j = 0; j < iters; ++j) {
        StateVector w = apply_h(q[j]);
        double a = inner(q[j], w).real();
        alpha.push_back(a);
        ++steps;
        if (j + 1 == iters)
            break;
        for (int r = 0; r <= j; ++r) { // full reorthogonalization
            cplx c = inner(q[r], w);
            for (int t = 0; t < m; ++t)
                w.values()[t] -= c * q[r].values()[t];
        }
        double b = w.norm();
        if (b < 1e-14 * std::abs(beta0)) // Krylov breakdown: subspace is invariant
            break;
        beta.push_back(b);
        for (auto &z : w.values())
            z /= b;
        q.push_back(std::move(w));
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(steps, steps);
    for (int j = 0; j < steps; ++j) {
        t(j, j) = alpha[j];
        if (j + 1 < steps) {
            t(j, j + 1) = beta[j];
            t(j + 1, j) = beta[j];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Eigen::VectorXcd phases(steps);
    for (int j = 0; j < steps; ++j)
        phases(j) = std::exp(cplx(0.0, es.eigenvalues()(j)));
    Eigen::VectorXcd small = es.eigenvectors().cast<cplx>() *
                             (phases.asDiagonal() * (es.eigenvectors().transpose().cast<cplx>() *
                                                     Eigen::VectorXcd::Unit(steps, 0)));

    std::vector<cplx> out(m, cplx(0.0));
    for (int j = 0; j < steps; ++j)
        kernels::axpy(beta0 * small(j), q[j].values(), out, Exec::serial);
    return StateVector(u.grid(), std::move(out));
}

namespace {

std::vector<cplx> kinetic_phase(Grid g, cplx coefficient)
{
    // phase for exp(coefficient * K^2) applied in Fourier space
    std::vector<cplx> phase(g.m);
    for (int jj = 0; jj < g.m; ++jj) {
        int mode = jj < g.m / 2 ? jj : jj - g.m;
        phase[jj] = coefficient * cplx(-M_PI * M_PI * mode * mode, 0.0);
    }
    return phase;
}

void apply_fourier_phase(StateVector &u, const std::vector<cplx> &phase, Exec exec)
{
    std::vector<cplx> hat = u.values();
    kernels::fft(hat, false, exec);
    for (int j = 0; j < (int)hat.size(); ++j)
        hat[j] *= std::exp(phase[j]);
    kernels::fft(hat, true, exec);
    u.values() = std::move(hat);
}

} // namespace

StateVector step_strang(const StateVector &u, const ClosedExpr &v_expr, double eps, double dt)
{
    Grid g = u.grid();
    require_periodic(v_expr);
    auto half_kin = kinetic_phase(g, cplx(0.0, 0.5 * dt * eps));
    std::vector<cplx> pot_phase(g.m);
    for (int j = 0; j < g.m; ++j)
        pot_phase[j] = cplx(0.0, -dt / eps * v_expr.eval(g.node(j)));

    StateVector r = u;
    apply_fourier_phase(r, half_kin, default_exec());
    std::vector<cplx> tmp;
    kernels::pointwise_phase(pot_phase, r.values(), tmp, default_exec());
    r.values() = std::move(tmp);
    apply_fourier_phase(r, half_kin, default_exec());
    return r;
}

ZassenhausStepper::ZassenhausStepper(Grid g, const Splitting &sp, const ClosedExpr &v_expr,
                                     double eps, double dt, int lanczos_override)
    : grid_(g)
{
    const size_t count = sp.exponents.size();
    iters_.assign(count, 0);
    for (size_t k = 0; k < count; ++k) {
        bound_.push_back(bind_exponent(sp.exponents[k], g, v_expr, dt, eps));
        if (k >= 2)
            iters_[k] = lanczos_override > 0 ? (unsigned)lanczos_override : sp.lanczos_iterations(k);
    }

    // W[0] must be a constant-coefficient height-2 term (Fourier diagonal).
    const OperatorSum &w0 = bound_[0];
    if (w0.ops().size() != 1 || w0.ops()[0].k != 2)
        throw std::domain_error("ZassenhausStepper: W[0] is not a height-2 term");
    for (double f : w0.ops()[0].f)
        if (f != w0.ops()[0].f[0])
            throw std::domain_error("ZassenhausStepper: W[0] coefficient is not constant");
    kinetic_phase_ = kinetic_phase(g, w0.ops()[0].scalar * w0.ops()[0].f[0]);

    // W[1] must be pointwise (all heights zero).
    const OperatorSum &w1 = bound_[1];
    potential_phase_.assign(g.m, cplx(0.0));
    for (const auto &op : w1.ops()) {
        if (op.k != 0)
            throw std::domain_error("ZassenhausStepper: W[1] is not a multiplication operator");
        for (int j = 0; j < g.m; ++j)
            potential_phase_[j] += op.scalar * op.f[j];
    }

    // Inner exponents are exponentiated by Lanczos; check skew-Hermiticity of
    // each through the discrete adjoint test on random vectors.
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (size_t k = 2; k < count; ++k) {
        auto rnd = [&] {
            std::vector<cplx> v(g.m);
            for (auto &z : v)
                z = cplx(dist(rng), dist(rng));
            return StateVector(g, std::move(v));
        };
        StateVector x = rnd(), y = rnd();
        cplx lhs = inner(bound_[k].apply(x), y);
        cplx rhs = -inner(x, bound_[k].apply(y));
        double scale = std::max(1.0, std::abs(lhs));
        if (std::abs(lhs - rhs) > 1e-10 * scale)
            throw std::domain_error("ZassenhausStepper: exponent is not skew-Hermitian");
    }
}

StateVector ZassenhausStepper::step(const StateVector &u) const
{
    const size_t count = bound_.size();
    StateVector r = u;
    auto apply = [&](size_t k, double factor) {
        if (k == 0) {
            std::vector<cplx> scaled(kinetic_phase_.size());
            for (size_t j = 0; j < scaled.size(); ++j)
                scaled[j] = factor * kinetic_phase_[j];
            apply_fourier_phase(r, scaled, default_exec());
        } else if (k == 1) {
            std::vector<cplx> scaled(potential_phase_.size());
            for (size_t j = 0; j < scaled.size(); ++j)
                scaled[j] = factor * potential_phase_[j];
            std::vector<cplx> tmp;
            kernels::pointwise_phase(scaled, r.values(), tmp, default_exec());
            r.values() = std::move(tmp);
        } else {
            r = lanczos_expmv(bound_[k].scaled(factor), r, (int)iters_[k]);
        }
    };
    for (size_t k = 0; k + 1 < count; ++k)
        apply(k, 0.5);
    apply(count - 1, 1.0);
    for (size_t k = count - 1; k-- > 0;)
        apply(k, 0.5);
    return r;
}

Eigen::MatrixXcd ZassenhausStepper::dense_step_matrix() const
{
    const int m = grid_.m;
    std::vector<Eigen::MatrixXcd> half_exp(bound_.size());
    for (size_t k = 0; k < bound_.size(); ++k) {
        double factor = (k + 1 == bound_.size()) ? 1.0 : 0.5;
        Eigen::MatrixXcd h = dense_assemble(bound_[k]);
        half_exp[k] = dense_expm(factor * h);
    }
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(m, m);
    for (size_t k = 0; k + 1 < bound_.size(); ++k)
        prod = half_exp[k] * prod;                   // ... e^{W1/2} e^{W0/2}
    prod = half_exp[bound_.size() - 1] * prod;       // e^{W_{n+1}}
    for (size_t k = bound_.size() - 1; k-- > 0;)
        prod = half_exp[k] * prod;                   // e^{W0/2} ... on the left
    return prod;
}

StateVector step_zassenhaus(const StateVector &u, const Splitting &sp, const ClosedExpr &v_expr,
                            double eps, double dt)
{
    ZassenhausStepper stepper(u.grid(), sp, v_expr, eps, dt);
    return stepper.step(u);
}

} // namespace zassen
