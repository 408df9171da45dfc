#include "zassen/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace zassen {

namespace {

std::atomic<Exec> g_exec{Exec::parallel};

// Below this many elements the thread launch costs more than the loop.
constexpr long long min_parallel = 1 << 14;

} // namespace

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

namespace kernels {

void fft(std::vector<cplx> &v, bool inverse, Exec exec)
{
    const size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: length must be a power of two");

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(v[i], v[j]);
    }

    const double dir = inverse ? 2.0 * M_PI : -2.0 * M_PI;
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = dir / (double)len;
        const long long nblocks = (long long)(n / len);
        if (exec == Exec::parallel && n >= (size_t)min_parallel && nblocks > 1) {
#pragma omp parallel for schedule(static)
            for (long long blk = 0; blk < nblocks; ++blk) {
                size_t i = (size_t)blk * len;
                for (size_t j = 0; j < len / 2; ++j) {
                    cplx w = std::polar(1.0, ang * (double)j);
                    cplx x = v[i + j];
                    cplx y = v[i + j + len / 2] * w;
                    v[i + j] = x + y;
                    v[i + j + len / 2] = x - y;
                }
            }
        } else {
            for (long long blk = 0; blk < nblocks; ++blk) {
                size_t i = (size_t)blk * len;
                for (size_t j = 0; j < len / 2; ++j) {
                    cplx w = std::polar(1.0, ang * (double)j);
                    cplx x = v[i + j];
                    cplx y = v[i + j + len / 2] * w;
                    v[i + j] = x + y;
                    v[i + j + len / 2] = x - y;
                }
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / (double)n;
        for (auto &z : v)
            z *= s;
    }
}

void pointwise_mul(const std::vector<double> &f, const std::vector<cplx> &u, std::vector<cplx> &out,
                   Exec exec)
{
    const long long n = (long long)u.size();
    out.resize(u.size());
    if (exec == Exec::parallel && n >= min_parallel) {
#pragma omp parallel for schedule(static)
        for (long long j = 0; j < n; ++j)
            out[j] = f[j] * u[j];
    } else {
        for (long long j = 0; j < n; ++j)
            out[j] = f[j] * u[j];
    }
}

void pointwise_phase(const std::vector<cplx> &phase, const std::vector<cplx> &u,
                     std::vector<cplx> &out, Exec exec)
{
    const long long n = (long long)u.size();
    out.resize(u.size());
    if (exec == Exec::parallel && n >= min_parallel) {
#pragma omp parallel for schedule(static)
        for (long long j = 0; j < n; ++j)
            out[j] = std::exp(phase[j]) * u[j];
    } else {
        for (long long j = 0; j < n; ++j)
            out[j] = std::exp(phase[j]) * u[j];
    }
}

void axpy(cplx a, const std::vector<cplx> &x, std::vector<cplx> &y, Exec exec)
{
    const long long n = (long long)x.size();
    if (exec == Exec::parallel && n >= min_parallel) {
#pragma omp parallel for schedule(static)
        for (long long j = 0; j < n; ++j)
            y[j] += a * x[j];
    } else {
        for (long long j = 0; j < n; ++j)
            y[j] += a * x[j];
    }
}

void dense_matvec(const std::vector<cplx> &a, const std::vector<cplx> &u, std::vector<cplx> &out,
                  int n, Exec exec)
{
    out.assign(n, cplx(0.0));
    if (exec == Exec::parallel && (long long)n * n >= min_parallel) {
#pragma omp parallel for schedule(static)
        for (int r = 0; r < n; ++r) {
            cplx acc(0.0);
            for (int c = 0; c < n; ++c)
                acc += a[(size_t)r * n + c] * u[c];
            out[r] = acc;
        }
    } else {
        for (int r = 0; r < n; ++r) {
            cplx acc(0.0);
            for (int c = 0; c < n; ++c)
                acc += a[(size_t)r * n + c] * u[c];
            out[r] = acc;
        }
    }
}

} // namespace kernels

} // namespace zassen
