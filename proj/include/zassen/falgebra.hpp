#pragma once

#include "zassen/coefficients.hpp"
#include "zassen/diffpoly.hpp"

#include <complex>
#include <functional>
#include <map>
#include <set>

namespace zassen {

/// Graded scalar weight q * i^a * t^b * eps^c. Stored canonically with
/// i_pow in {0,1}: even powers of i fold into the sign of q.
struct ScaledScalar {
    Rational q = Rational(1);
    int i_pow = 0;
    int t_pow = 0;
    int eps_pow = 0;

    ScaledScalar() = default;
    ScaledScalar(Rational q_, int i, int t, int eps) : q(std::move(q_)), i_pow(i), t_pow(t), eps_pow(eps)
    {
        canonicalize();
    }

    void canonicalize()
    {
        int m = ((i_pow % 4) + 4) % 4;
        if (m >= 2) {
            q = -q;
            m -= 2;
        }
        i_pow = m;
    }

    static ScaledScalar one() { return ScaledScalar(); }
    static ScaledScalar imaginary() { return ScaledScalar(Rational(1), 1, 0, 0); }

    ScaledScalar operator*(const ScaledScalar &o) const
    {
        return ScaledScalar(q * o.q, i_pow + o.i_pow, t_pow + o.t_pow, eps_pow + o.eps_pow);
    }

    friend bool operator==(const ScaledScalar &, const ScaledScalar &) = default;

    /// Concrete complex value with t and eps substituted.
    std::complex<double> value(double t, double eps) const;

    std::string str() const;
};

/// Scalar grading without the rational weight; the rational part lives in the
/// polynomial coefficients of the component it grades.
struct Grading {
    int i_pow = 0; // canonical 0 or 1
    int t_pow = 0;
    int eps_pow = 0;
    friend auto operator<=>(const Grading &, const Grading &) = default;
};

enum class Parity { even, odd, mixed };

const char *to_string(Parity p);

/// Element of the graded algebra: a finite sum of symmetrised terms <f>_k,
/// stored per height and per scalar grading. The zero element stores nothing
/// and has height -1.
class FTerm {
  public:
    using GradedPolys = std::map<Grading, DiffPoly>;

    FTerm() = default;
    static FTerm zero() { return FTerm(); }

    bool is_zero() const { return comps_.empty(); }
    int height() const;
    Parity parity() const;

    const std::map<int, GradedPolys> &components() const { return comps_; }
    /// All t-powers appearing in the element.
    std::set<int> t_degrees() const;
    /// The sub-element whose scalar grading carries exactly t^d.
    FTerm t_component(int d) const;

    FTerm &operator+=(const FTerm &o);
    FTerm &operator-=(const FTerm &o);
    friend FTerm operator+(FTerm a, const FTerm &b) { return a += b; }
    friend FTerm operator-(FTerm a, const FTerm &b) { return a -= b; }
    FTerm operator-() const;

    FTerm scaled(const Rational &c) const;
    FTerm scaled(const ScaledScalar &s) const;

    friend bool operator==(const FTerm &, const FTerm &) = default;

    /// Minimal sigma-order t_pow*sigma + eps_pow - k over all stored terms.
    /// Throws std::domain_error on the zero element.
    Rational min_sigma_order(const Rational &sigma) const;

    /// Inserts c * s * <poly>_k (internal builder; prefer ang()).
    void accumulate(int k, const Grading &g, const DiffPoly &poly);

    std::string str() const;

  private:
    std::map<int, GradedPolys> comps_;
};

/// The symmetrised term <f>_k (throws std::out_of_range for k < 0).
FTerm ang(const DiffPoly &f, int k);
FTerm ang(const DiffPoly &f, int k, const ScaledScalar &s);

/// Product, explicit commutator (via the lambda rule), and Jordan product.
FTerm assoc_mul(const FTerm &a, const FTerm &b);
FTerm commutator(const FTerm &a, const FTerm &b);
FTerm jordan(const FTerm &a, const FTerm &b);

inline int height(const FTerm &a) { return a.height(); }
inline Parity parity(const FTerm &a) { return a.parity(); }

/// True when the zero element or every height-k component carries i^(k+1)
/// times a real rational weight; such elements discretize to skew-Hermitian
/// matrices.
bool skew_hermitian_check(const FTerm &a);

/// True when a is zero or a's parity equals p (zero lies in every class).
bool lies_in(const FTerm &a, Parity p);

/// Checks the reconstruction identities behind the free-Lie-algebra equality:
/// <D x>_{2n} from [d^{2n+1}, <x>_0] and <D x>_{2n+1} from [d^{2n+2}, <x>_0],
/// with every commutator computed by this module. Requires n >= 1.
bool fla_reconstruct_check(const DiffPoly &x, unsigned n);

} // namespace zassen
