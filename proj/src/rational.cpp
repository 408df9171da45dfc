#include "zassen/rational.hpp"

namespace zassen {

Rational Rational::parse(std::string_view s)
{
    auto bad = [&] { throw std::invalid_argument("Rational::parse: malformed literal '" + std::string(s) + "'"); };
    if (s.empty())
        bad();
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string num(s.substr(0, slash));
        std::string den(s.substr(slash + 1));
        if (num.empty() || den.empty())
            bad();
        try {
            return Rational(BigInt(num), BigInt(den));
        } catch (const std::runtime_error &) {
            bad();
        }
    }
    auto dot = s.find('.');
    try {
        if (dot == std::string_view::npos)
            return Rational(BigInt(std::string(s)));
        std::string head(s.substr(0, dot));
        std::string tail(s.substr(dot + 1));
        if (tail.empty())
            bad();
        bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+")
            head += '0';
        BigInt scale = 1;
        for (size_t i = 0; i < tail.size(); ++i)
            scale *= 10;
        BigInt frac(tail);
        BigInt whole(head);
        BigInt num = whole * scale + (neg ? -frac : frac);
        return Rational(num, scale);
    } catch (const std::runtime_error &) {
        bad();
    }
    return Rational(); // unreachable
}

std::string Rational::str() const
{
    std::string s = num().str();
    if (den() != 1)
        s += "/" + den().str();
    return s;
}

BigInt Rational::ceil() const
{
    BigInt q = num() / den();
    if (num() > 0 && num() % den() != 0)
        ++q;
    return q;
}

BigInt Rational::floor() const
{
    BigInt q = num() / den();
    if (num() < 0 && num() % den() != 0)
        --q;
    return q;
}

BigInt binomial_int(long long n, long long m)
{
    if (m < 0 || m > n || n < 0)
        return 0;
    if (m > n - m)
        m = n - m;
    BigInt r = 1;
    for (long long j = 1; j <= m; ++j) {
        r *= (n - m + j);
        r /= j;
    }
    return r;
}

Rational binomial(long long n, long long m) { return Rational(binomial_int(n, m)); }

BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned j = 2; j <= n; ++j)
        r *= j;
    return r;
}

} // namespace zassen
