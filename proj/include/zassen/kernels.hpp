#pragma once

#include <complex>
#include <vector>

namespace zassen {

/// Execution policy for the grid kernels. Both paths produce bitwise
/// identical results; `parallel` threads independent elements/blocks only.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

namespace kernels {

using cplx = std::complex<double>;

/// In-place radix-2 FFT, power-of-two length. Forward: X_k = sum_j x_j e^{-2 pi i jk/N};
/// inverse includes the 1/N factor.
void fft(std::vector<cplx> &v, bool inverse, Exec exec);

/// out[j] = f[j] * u[j]
void pointwise_mul(const std::vector<double> &f, const std::vector<cplx> &u, std::vector<cplx> &out,
                   Exec exec);

/// out[j] = exp(phase[j]) * u[j] for complex phases
void pointwise_phase(const std::vector<cplx> &phase, const std::vector<cplx> &u,
                     std::vector<cplx> &out, Exec exec);

/// y[j] += a * x[j]
void axpy(cplx a, const std::vector<cplx> &x, std::vector<cplx> &y, Exec exec);

/// Dense row-major matvec out = A u (n x n), deterministic row sums.
void dense_matvec(const std::vector<cplx> &a, const std::vector<cplx> &u, std::vector<cplx> &out,
                  int n, Exec exec);

} // namespace kernels

} // namespace zassen
