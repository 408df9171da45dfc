#include "zassen/matrix_example.hpp"

#include <random>

namespace zassen {

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        m.at(j, j) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix &o) const
{
    RationalMatrix r(rows_, cols_);
    for (size_t j = 0; j < a_.size(); ++j)
        r.a_[j] = a_[j] + o.a_[j];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix &o) const
{
    RationalMatrix r(rows_, cols_);
    for (size_t j = 0; j < a_.size(); ++j)
        r.a_[j] = a_[j] - o.a_[j];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix &o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("RationalMatrix: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational &c) const
{
    RationalMatrix r(rows_, cols_);
    for (size_t j = 0; j < a_.size(); ++j)
        r.a_[j] = a_[j] * c;
    return r;
}

bool RationalMatrix::is_zero() const
{
    for (const auto &v : a_)
        if (!v.is_zero())
            return false;
    return true;
}

RationalMatrix BlockMatrixExample::c_element(int n, const Rational &a, const RationalMatrix &A)
{
    RationalMatrix m(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        m.at(j, j) = a;
        m.at(n + j, n + j) = a;
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, n + c) = A.at(r, c);
    return m;
}

RationalMatrix BlockMatrixExample::c_element() const { return c_element(n, a, A); }

RationalMatrix BlockMatrixExample::d_element() const
{
    RationalMatrix m(2 * n, 2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            m.at(r, c) = E11.at(r, c);
            m.at(r, n + c) = E12.at(r, c);
            m.at(n + r, n + c) = E22.at(r, c);
        }
    return m;
}

bool BlockMatrixExample::in_commutative_algebra(const RationalMatrix &m, int n)
{
    const Rational scalar = m.at(0, 0);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) {
            bool diag_block = (r < n && c < n) || (r >= n && c >= n);
            if (r >= n && c < n) {
                if (!m.at(r, c).is_zero())
                    return false;
            } else if (diag_block) {
                Rational want = (r % n == c % n) ? scalar : Rational(0);
                if (!(m.at(r, c) == want))
                    return false;
            }
        }
    return true;
}

namespace {

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

RationalMatrix random_matrix(int n, std::mt19937_64 &rng)
{
    RationalMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = random_rational(rng);
    return m;
}

// <x>_k = (x d^k + d^k x) / 2
RationalMatrix sym_term(const RationalMatrix &x, const RationalMatrix &d, unsigned k)
{
    RationalMatrix dk = RationalMatrix::identity(d.rows());
    for (unsigned j = 0; j < k; ++j)
        dk = d * dk;
    return (x * dk + dk * x).scaled(Rational(1, 2));
}

} // namespace

BlockMatrixExample random_block_example(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    BlockMatrixExample e;
    e.n = n;
    e.a = random_rational(rng);
    e.A = random_matrix(n, rng);
    e.E11 = random_matrix(n, rng);
    e.E12 = random_matrix(n, rng);
    e.E22 = random_matrix(n, rng);
    return e;
}

MatrixReport matrix_example_verify(const BlockMatrixExample &example, unsigned k, unsigned l,
                                   unsigned trials, std::uint64_t seed)
{
    MatrixReport rep;
    if (example.n > 4 || k + l > 8)
        throw std::out_of_range("matrix_example_verify: n <= 4 and k+l <= 8");
    std::mt19937_64 rng(seed);
    const RationalMatrix d = example.d_element();
    const int n = example.n;

    for (unsigned trial = 0; trial < trials; ++trial) {
        ++rep.trials_run;
        RationalMatrix x = BlockMatrixExample::c_element(n, random_rational(rng), random_matrix(n, rng));
        RationalMatrix y = BlockMatrixExample::c_element(n, random_rational(rng), random_matrix(n, rng));

        // d must idealise the commutative algebra
        if (!BlockMatrixExample::in_commutative_algebra(mat_commutator(d, x), n)) {
            rep.passed = false;
            rep.detail = "[d,x] left the commutative algebra at trial " + std::to_string(trial);
            return rep;
        }

        // derivative ladders ad_d^i
        unsigned maxd = k + l;
        std::vector<RationalMatrix> dx{x}, dy{y};
        for (unsigned j = 1; j <= maxd; ++j) {
            dx.push_back(mat_commutator(d, dx.back()));
            dy.push_back(mat_commutator(d, dy.back()));
        }

        RationalMatrix lhs = mat_commutator(sym_term(x, d, k), sym_term(y, d, l));
        RationalMatrix rhs(2 * n, 2 * n);
        for (unsigned s = 0; 2 * s + 1 <= k + l; ++s)
            for (unsigned i = 0; i <= 2 * s + 1; ++i) {
                Rational lam = lambda_coeff(k, l, s, i);
                if (lam.is_zero())
                    continue;
                RationalMatrix z = dx[i] * dy[2 * s + 1 - i]; // product inside C
                rhs = rhs + sym_term(z, d, k + l - 2 * s - 1).scaled(lam);
            }
        if (!(lhs == rhs)) {
            rep.passed = false;
            rep.detail = "commutator rule mismatch at trial " + std::to_string(trial) + " (k=" +
                         std::to_string(k) + ", l=" + std::to_string(l) + ")";
            return rep;
        }
    }
    return rep;
}

} // namespace zassen
