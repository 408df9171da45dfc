#include "zassen/coefficients.hpp"

#include <array>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace zassen {

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache; // B_0..B_max computed so far

std::shared_mutex pi_mutex;
std::map<std::array<unsigned, 4>, Rational> pi_cache;

} // namespace

Rational bernoulli(unsigned r)
{
    {
        std::shared_lock lock(bernoulli_mutex);
        if (r < bernoulli_cache.size())
            return bernoulli_cache[r];
    }
    std::unique_lock lock(bernoulli_mutex);
    if (bernoulli_cache.empty())
        bernoulli_cache.push_back(Rational(1));
    // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j; yields B_1 = -1/2.
    for (unsigned m = bernoulli_cache.size(); m <= r; ++m) {
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += binomial(m + 1, j) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / Rational(m + 1));
    }
    return bernoulli_cache[r];
}

Rational p_r(unsigned r)
{
    BigInt two_r = BigInt(1) << r;
    Rational v = Rational(BigInt(two_r - 1)) * bernoulli(r);
    return (r % 2 == 0) ? v : -v;
}

Rational l_value(unsigned k, unsigned l, unsigned a, unsigned p)
{
    if (a > k + l || p > a)
        throw std::out_of_range("l_value: need a <= k+l and p <= a");
    Rational v(0);
    if (p == 0)
        v += binomial(k, a) + binomial(k + l, a);
    v += binomial(k, p) * (binomial((long long)k - p, (long long)a - p) +
                           binomial((long long)k + l - p, (long long)a - p));
    return v;
}

namespace {

// Fills pi_{n,i}^{k,l} for all n <= a_max, i <= n (bottom-up) into the shared cache.
void fill_pi_rows(unsigned k, unsigned l, unsigned a_max)
{
    {
        std::shared_lock lock(pi_mutex);
        if (pi_cache.count({k, l, a_max, 0}))
            return;
    }
    // Compute locally, publish under the write lock.
    std::vector<std::vector<Rational>> rows(a_max + 1);
    for (unsigned a = 0; a <= a_max; ++a) {
        rows[a].resize(a + 1);
        for (unsigned p = 0; p <= a; ++p) {
            Rational acc = l_value(k, l, a, p);
            for (unsigned n = 0; n < a; ++n) {
                Rational inner(0);
                for (unsigned i = 0; i <= n && i <= p; ++i)
                    inner += rows[n][i] * binomial(a - n, (long long)p - i);
                acc -= Rational(2) * binomial(k + l - n, a - n) * inner;
            }
            rows[a][p] = acc / Rational(4);
        }
    }
    std::unique_lock lock(pi_mutex);
    for (unsigned a = 0; a <= a_max; ++a)
        for (unsigned p = 0; p <= a; ++p)
            pi_cache.emplace(std::array<unsigned, 4>{k, l, a, p}, rows[a][p]);
}

} // namespace

Rational pi_recursive(const CoeffKey &key)
{
    key.validate();
    {
        std::shared_lock lock(pi_mutex);
        auto it = pi_cache.find({key.k, key.l, key.n, key.i});
        if (it != pi_cache.end())
            return it->second;
    }
    fill_pi_rows(key.k, key.l, key.n);
    std::shared_lock lock(pi_mutex);
    return pi_cache.at({key.k, key.l, key.n, key.i});
}

Rational pi_explicit(const CoeffKey &key)
{
    key.validate();
    const unsigned q = key.k + key.l;
    Rational acc(0);
    // A is lower triangular: only s <= n, j <= i contribute.
    for (unsigned s = 0; s <= key.n; ++s) {
        for (unsigned j = 0; j <= key.i && j <= s; ++j) {
            unsigned r = key.n - s;
            Rational a = (s == key.n && j == key.i) ? Rational(1) : Rational(0);
            a -= p_r(r + 1) / Rational(r + 1) * binomial(q - s, r) * binomial(r, (long long)key.i - j);
            if (!a.is_zero())
                acc += a * l_value(key.k, key.l, s, j);
        }
    }
    return acc / Rational(2);
}

Rational pi_total(unsigned k, unsigned l, long long n, long long i)
{
    if (n < 0 || i < 0 || n > (long long)k + l || i > n)
        return Rational(0);
    return pi_recursive(CoeffKey{k, l, (unsigned)n, (unsigned)i});
}

Rational lambda_coeff(unsigned k, unsigned l, unsigned n, unsigned i)
{
    if (2 * n + 1 > k + l || i > 2 * n + 1)
        throw std::out_of_range("lambda_coeff: need 2n+1 <= k+l and i <= 2n+1");
    return Rational(2) * pi_recursive(CoeffKey{k, l, 2 * n + 1, i});
}

Rational mu_coeff(unsigned k, unsigned l, unsigned n, unsigned i)
{
    CoeffKey{k, l, n, i}.validate();
    return pi_recursive(CoeffKey{k, l, n, i}) - pi_recursive(CoeffKey{l, k, n, n - i});
}

Rational gamma_coeff(unsigned k, unsigned l, unsigned n, unsigned i)
{
    CoeffKey{k, l, n, i}.validate();
    return (pi_recursive(CoeffKey{k, l, n, i}) + pi_recursive(CoeffKey{l, k, n, n - i})) / Rational(2);
}

const char *to_string(CoeffKind kind)
{
    switch (kind) {
    case CoeffKind::pi: return "pi";
    case CoeffKind::lambda: return "lambda";
    case CoeffKind::mu: return "mu";
    case CoeffKind::gamma: return "gamma";
    }
    return "?";
}

CoeffKind coeff_kind_from_string(const std::string &s)
{
    if (s == "pi") return CoeffKind::pi;
    if (s == "lambda") return CoeffKind::lambda;
    if (s == "mu") return CoeffKind::mu;
    if (s == "gamma") return CoeffKind::gamma;
    throw std::invalid_argument("unknown coefficient kind '" + s + "'");
}

Rational coeff_value(CoeffKind kind, const CoeffKey &key)
{
    switch (kind) {
    case CoeffKind::pi: return pi_recursive(key);
    case CoeffKind::lambda: return lambda_coeff(key.k, key.l, key.n, key.i);
    case CoeffKind::mu: return mu_coeff(key.k, key.l, key.n, key.i);
    case CoeffKind::gamma: return gamma_coeff(key.k, key.l, key.n, key.i);
    }
    throw std::invalid_argument("coeff_value: bad kind");
}

CoeffTable CoeffTable::build(CoeffKind kind, unsigned kmax)
{
    CoeffTable t;
    t.kind = kind;
    for (unsigned total = 0; total <= kmax; ++total) {
        for (unsigned k = total; k + k >= total; --k) {
            unsigned l = total - k;
            if (kind == CoeffKind::lambda) {
                for (unsigned n = 0; 2 * n + 1 <= total; ++n)
                    for (unsigned i = 0; i <= 2 * n + 1; ++i)
                        t.entries[CoeffKey{k, l, n, i}] = lambda_coeff(k, l, n, i);
            } else {
                for (unsigned n = 0; n <= total; ++n)
                    for (unsigned i = 0; i <= n; ++i)
                        t.entries[CoeffKey{k, l, n, i}] = coeff_value(kind, CoeffKey{k, l, n, i});
            }
            if (k == 0)
                break;
        }
    }
    return t;
}

std::string CoeffTable::render_text() const
{
    // Group by (k,l), one line per n. The lambda table indexes rows by n with
    // 2n+2 columns; the others have n+1 columns.
    std::ostringstream out;
    out << "coefficients: " << to_string(kind) << "\n";
    std::map<std::pair<unsigned, unsigned>, std::map<unsigned, std::vector<std::string>>> blocks;
    for (const auto &[key, value] : entries)
        blocks[{key.k, key.l}][key.n].resize(0);
    for (const auto &[key, value] : entries) {
        auto &row = blocks[{key.k, key.l}][key.n];
        if (row.size() <= key.i)
            row.resize(key.i + 1);
        row[key.i] = value.str();
    }
    std::vector<std::pair<unsigned, unsigned>> order;
    for (const auto &[kl, rows] : blocks)
        order.push_back(kl);
    std::sort(order.begin(), order.end(), [](auto a, auto b) {
        unsigned ta = a.first + a.second, tb = b.first + b.second;
        if (ta != tb)
            return ta < tb;
        return a.first > b.first;
    });
    for (auto kl : order) {
        out << "(" << kl.first << "," << kl.second << ")\n";
        for (const auto &[n, row] : blocks[kl]) {
            out << "  n=" << n << ":";
            for (const auto &cell : row)
                out << "  " << cell;
            out << "\n";
        }
    }
    return out.str();
}

namespace {

// 1/m! with the convention that negative arguments kill the term.
Rational inv_factorial(long long m)
{
    if (m < 0)
        return Rational(0);
    return Rational(BigInt(1), factorial((unsigned)m));
}

} // namespace

IdentityReport verify_bernoulli_identities(unsigned b_max)
{
    IdentityReport rep;
    auto fail = [&](const std::string &msg) {
        if (rep.passed) {
            rep.passed = false;
            rep.first_failure = msg;
        }
    };

    // Vandermonde-style factorial sum. With A = a-n, B = n-s, P = p-j it reads
    // sum_m 1/((P-m)! (A-P+m)! m! (B-m)!) = C(A+B, P) / (A! B!).
    for (unsigned A = 0; A <= b_max && rep.passed; ++A) {
        for (unsigned B = 0; B <= b_max && rep.passed; ++B) {
            for (unsigned P = 0; P <= A + B && rep.passed; ++P) {
                Rational lhs(0);
                for (unsigned m = 0; m <= P; ++m)
                    lhs += inv_factorial((long long)P - m) * inv_factorial((long long)A - P + m) *
                           inv_factorial(m) * inv_factorial((long long)B - m);
                Rational rhs = binomial(A + B, P) * inv_factorial(A) * inv_factorial(B);
                if (lhs != rhs)
                    fail("factorial identity fails at A=" + std::to_string(A) + " B=" +
                         std::to_string(B) + " P=" + std::to_string(P));
            }
        }
    }

    // Bernoulli-binomial sum: sum_{n<=b} C(b+1,n+1)(2^{n+1}-1)B_{n+1}
    //  = -1/2 for b = 0, and -P_{b+1} for b > 0.
    for (unsigned b = 0; b <= b_max && rep.passed; ++b) {
        Rational lhs(0);
        for (unsigned n = 0; n <= b; ++n)
            lhs += binomial(b + 1, n + 1) * Rational(BigInt((BigInt(1) << (n + 1)) - 1)) * bernoulli(n + 1);
        Rational rhs = (b == 0) ? Rational(-1, 2) : -p_r(b + 1);
        if (lhs != rhs)
            fail("Bernoulli-binomial identity fails at b=" + std::to_string(b));
    }

    // P_r convolution: sum_{n<=b} P_{n+1}/((n+1)!(b-n)!)
    //  = 1/b! - (1/2) delta_{b,0} - P_{b+1}/(b+1)! delta_{b>0}.
    for (unsigned b = 0; b <= b_max && rep.passed; ++b) {
        Rational lhs(0);
        for (unsigned n = 0; n <= b; ++n)
            lhs += p_r(n + 1) * inv_factorial(n + 1) * inv_factorial((long long)b - n);
        Rational rhs = inv_factorial(b);
        if (b == 0)
            rhs -= Rational(1, 2);
        else
            rhs -= p_r(b + 1) * inv_factorial(b + 1);
        if (lhs != rhs)
            fail("P_r convolution identity fails at b=" + std::to_string(b));
    }

    return rep;
}

} // namespace zassen
