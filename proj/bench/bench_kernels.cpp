// Timing comparison: serial reference vs OpenMP kernels.
#include "zassen/solve.hpp"
#include "zassen/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zassen;
using cplx = std::complex<double>;

namespace {

double time_ms(int reps, const std::function<void()> &fn)
{
    fn(); // warm up
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char *name, int m, double serial_ms, double parallel_ms)
{
    std::printf("%-18s M=%-6d serial %10.4f ms   openmp %10.4f ms   speedup %5.2fx\n", name, m,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    for (int m : {1 << 10, 1 << 13, 1 << 16}) {
        std::vector<cplx> data((size_t)m);
        for (auto &z : data)
            z = cplx(dist(rng), dist(rng));
        const int reps = m > (1 << 14) ? 20 : 200;

        double s = time_ms(reps, [&] {
            auto v = data;
            kernels::fft(v, false, Exec::serial);
        });
        double p = time_ms(reps, [&] {
            auto v = data;
            kernels::fft(v, false, Exec::parallel);
        });
        row("fft", m, s, p);

        std::vector<double> f((size_t)m, 1.5);
        std::vector<cplx> out;
        s = time_ms(reps, [&] { kernels::pointwise_mul(f, data, out, Exec::serial); });
        p = time_ms(reps, [&] { kernels::pointwise_mul(f, data, out, Exec::parallel); });
        row("pointwise_mul", m, s, p);
    }

    for (int m : {256, 512}) {
        Grid g(m);
        std::vector<cplx> data((size_t)m);
        for (auto &z : data)
            z = cplx(dist(rng), dist(rng));
        StateVector u(g, data);
        std::vector<double> f((size_t)m);
        for (int j = 0; j < m; ++j)
            f[j] = std::cos(M_PI * g.node(j));
        DiscreteAngOp op{2, f, cplx(0.0, -0.001)};
        double s = time_ms(100, [&] { (void)ang_apply(op, u, Exec::serial); });
        double p = time_ms(100, [&] { (void)ang_apply(op, u, Exec::parallel); });
        row("ang_apply k=2", m, s, p);

        std::vector<cplx> a((size_t)m * m);
        for (auto &z : a)
            z = cplx(dist(rng), dist(rng));
        std::vector<cplx> y;
        s = time_ms(20, [&] { kernels::dense_matvec(a, data, y, m, Exec::serial); });
        p = time_ms(20, [&] { kernels::dense_matvec(a, data, y, m, Exec::parallel); });
        row("dense_matvec", m, s, p);
    }

    // one full integration step, end to end
    {
        Grid g(512);
        double eps = 1.0 / 64.0, dt = 0.005;
        ClosedExpr v = ClosedExpr::parse("cos(pi*x)");
        FTerm a = ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1));
        FTerm b = ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1));
        Splitting sp = zassenhaus(a, b, 2, Rational(1, 2));
        ZassenhausStepper stepper(g, sp, v, eps, dt);
        StateVector u = initial_wavepacket(g, eps);
        set_default_exec(Exec::serial);
        double s = time_ms(50, [&] { u = stepper.step(u); });
        set_default_exec(Exec::parallel);
        double p = time_ms(50, [&] { u = stepper.step(u); });
        row("zassenhaus step", 512, s, p);
        set_default_exec(Exec::parallel);
    }
    return 0;
}
