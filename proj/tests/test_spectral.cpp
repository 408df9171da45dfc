#include "doctest.h"

#include "zassen/solve.hpp"
#include "zassen/spectral.hpp"

#include <random>
#include <sstream>
#include <thread>

using namespace zassen;
using cplx = std::complex<double>;

namespace {

FTerm kinetic() { return ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1)); }
FTerm potential() { return ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1)); }

double max_diff(const StateVector &a, const StateVector &b)
{
    double worst = 0.0;
    for (int j = 0; j < a.size(); ++j)
        worst = std::max(worst, std::abs(a.values()[j] - b.values()[j]));
    return worst;
}

} // namespace

TEST_CASE("grid validation")
{
    CHECK_THROWS_AS(Grid(3), std::invalid_argument);
    CHECK_THROWS_AS(Grid(2), std::invalid_argument);
    Grid g(8);
    CHECK(g.node(0) == -1.0);
    CHECK(g.node(4) == 0.0);
}

TEST_CASE("spectral differentiation on eigenfunctions")
{
    Grid g(64);
    StateVector u = StateVector::sample(g, [](double x) { return std::polar(1.0, M_PI * x); });
    StateVector du = diff_apply(u, 1);
    for (int j = 0; j < g.m; ++j)
        CHECK(std::abs(du.values()[j] - cplx(0.0, M_PI) * u.values()[j]) < 1e-12);

    StateVector ones = StateVector::sample(g, [](double) { return cplx(1.0); });
    for (int k = 1; k <= 4; ++k) {
        StateVector dk = diff_apply(ones, k);
        for (const auto &z : dk.values())
            CHECK(std::abs(z) < 1e-12);
    }

    StateVector c = StateVector::sample(g, [](double x) { return cplx(std::cos(M_PI * x)); });
    StateVector d2 = diff_apply(c, 2);
    for (int j = 0; j < g.m; ++j)
        CHECK(std::abs(d2.values()[j] + M_PI * M_PI * c.values()[j]) < 1e-11);

    CHECK(max_diff(diff_apply(u, 0), u) == 0.0);
    CHECK_THROWS_AS(diff_apply(u, -1), std::out_of_range);
}

TEST_CASE("ang_apply low-height special cases and the adjoint test")
{
    Grid g(32);
    std::vector<double> f(g.m);
    for (int j = 0; j < g.m; ++j)
        f[j] = std::cos(M_PI * g.node(j));
    StateVector u = initial_wavepacket(g, 0.25);

    DiscreteAngOp mul0{0, f, cplx(2.0, 0.0)};
    StateVector w = ang_apply(mul0, u);
    for (int j = 0; j < g.m; ++j)
        CHECK(w.values()[j] == 2.0 * f[j] * u.values()[j]);

    std::vector<double> ones(g.m, 1.0);
    DiscreteAngOp kin{2, ones, cplx(1.0, 0.0)};
    CHECK(max_diff(ang_apply(kin, u), diff_apply(u, 2)) < 1e-12);

    // skew-Hermitian element: i^{k+1} real weight at k = 2 is -i
    DiscreteAngOp skew{2, f, cplx(0.0, -1.0)};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto rnd = [&] {
        std::vector<cplx> v(g.m);
        for (auto &z : v)
            z = cplx(dist(rng), dist(rng));
        return StateVector(g, std::move(v));
    };
    StateVector x = rnd(), y = rnd();
    cplx lhs = inner(ang_apply(skew, x), y);
    cplx rhs = -inner(x, ang_apply(skew, y));
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));

    Grid other(64);
    CHECK_THROWS_AS(ang_apply(mul0, initial_wavepacket(other, 0.25)), std::invalid_argument);
}

TEST_CASE("bind_exponent produces the discretized Hamiltonian pieces")
{
    Grid g(32);
    ClosedExpr v = ClosedExpr::parse("cos(pi*x)");
    double dt = 0.01, eps = 0.25;
    OperatorSum kin = bind_exponent(kinetic(), g, v, dt, eps);
    REQUIRE(kin.ops().size() == 1);
    CHECK(kin.ops()[0].k == 2);
    CHECK(kin.ops()[0].scalar == cplx(0.0, dt * eps));
    CHECK(kin.ops()[0].f[5] == 1.0);

    OperatorSum pot = bind_exponent(potential(), g, v, dt, eps);
    REQUIRE(pot.ops().size() == 1);
    CHECK(pot.ops()[0].k == 0);
    // the rational weight -1 lives in the samples, the grading i t eps^-1 in the scalar
    cplx effective = pot.ops()[0].scalar * pot.ops()[0].f[3];
    CHECK(effective.real() == doctest::Approx(0.0));
    CHECK(effective.imag() == doctest::Approx(-dt / eps * std::cos(M_PI * g.node(3))));

    FTerm mixed = ang(DiffPoly::var("V"), 0) + ang(DiffPoly::var("W"), 0);
    CHECK_THROWS_AS(bind_exponent(mixed, g, v, dt, eps), std::domain_error);

    // non-periodic coefficients are rejected at the binding boundary
    ClosedExpr ramp = ClosedExpr::parse("x");
    CHECK_THROWS_AS(bind_exponent(potential(), g, ramp, dt, eps), std::domain_error);
    StateVector u = initial_wavepacket(g, eps);
    CHECK_THROWS_AS(step_strang(u, ramp, eps, dt), std::domain_error);
}

TEST_CASE("dense oracle basics")
{
    Grid g(32);
    std::vector<double> ones(g.m, 1.0);
    OperatorSum k2(g, {DiscreteAngOp{2, ones, cplx(1.0)}});
    Eigen::MatrixXcd h = dense_assemble(k2);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    std::vector<double> f(g.m);
    for (int j = 0; j < g.m; ++j)
        f[j] = std::sin(M_PI * g.node(j));
    OperatorSum skew1(g, {DiscreteAngOp{1, f, cplx(0.0, 1.0)}}); // i <f>_1 is Hermitian, not skew
    Eigen::MatrixXcd h1 = dense_assemble(skew1);
    CHECK((h1 - h1.adjoint()).cwiseAbs().maxCoeff() < 1e-13);

    Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(8, 8);
    CHECK((dense_expm(zero) - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

    Eigen::MatrixXcd hmix = dense_assemble(k2) * cplx(0.0, 0.001);
    Eigen::MatrixXcd prod = dense_expm(hmix, 1.0) * dense_expm(hmix, -1.0);
    CHECK((prod - Eigen::MatrixXcd::Identity(g.m, g.m)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(dense_assemble(OperatorSum(Grid(1024), {})), std::domain_error);
}

TEST_CASE("lanczos_expmv")
{
    Grid g(32);
    double eps = 0.25;
    ClosedExpr v = ClosedExpr::parse("cos(pi*x)");
    StateVector u = initial_wavepacket(g, eps);

    OperatorSum zero_op(g, {DiscreteAngOp{0, std::vector<double>(g.m, 0.0), cplx(0.0)}});
    CHECK(max_diff(lanczos_expmv(zero_op, u, 4), u) == 0.0);

    OperatorSum ham = bind_exponent(kinetic(), g, v, 0.01, eps);
    StateVector full = lanczos_expmv(ham, u, g.m);
    Eigen::MatrixXcd e = dense_expm(dense_assemble(ham));
    Eigen::VectorXcd uv(g.m);
    for (int j = 0; j < g.m; ++j)
        uv(j) = u.values()[j];
    Eigen::VectorXcd want = e * uv;
    double worst = 0.0;
    for (int j = 0; j < g.m; ++j)
        worst = std::max(worst, std::abs(full.values()[j] - want(j)));
    CHECK(worst < 1e-10);
    CHECK(std::abs(full.norm() - u.norm()) < 1e-12);
    CHECK_THROWS_AS(lanczos_expmv(ham, u, 0), std::invalid_argument);
}

TEST_CASE("strang stepper")
{
    Grid g(64);
    double eps = 1.0 / 16.0;
    ClosedExpr v = ClosedExpr::parse("cos(pi*x)");
    StateVector u = initial_wavepacket(g, eps);

    StateVector tiny = step_strang(u, v, eps, 1e-10);
    CHECK(max_diff(tiny, u) < 1e-8);
    StateVector one = step_strang(u, v, eps, 0.01);
    CHECK(std::abs(one.norm() - u.norm()) < 1e-12);
}

TEST_CASE("zassenhaus stepper for n = 0 is the midpoint splitting")
{
    Grid g(64);
    double eps = 1.0 / 16.0, dt = 0.01;
    ClosedExpr v = ClosedExpr::parse("cos(pi*x)");
    StateVector u = initial_wavepacket(g, eps);
    Splitting sp = zassenhaus(kinetic(), potential(), 0, Rational(1, 2));
    StateVector a = step_zassenhaus(u, sp, v, eps, dt);
    StateVector b = step_strang(u, v, eps, dt);
    CHECK(max_diff(a, b) < 1e-13);
    CHECK(std::abs(a.norm() - u.norm()) < 1e-12);
}

TEST_CASE("zassenhaus stepper n = 1 stays unitary and beats Strang on one step")
{
    Grid g(128);
    double eps = 1.0 / 16.0, dt = 0.02;
    ClosedExpr v = ClosedExpr::parse("cos(pi*x)");
    StateVector u = initial_wavepacket(g, eps);
    Splitting sp = zassenhaus(kinetic(), potential(), 1, Rational(1, 2));
    ZassenhausStepper stepper(g, sp, v, eps, dt);
    CHECK(stepper.lanczos_iters(2) == 3);

    StateVector z = stepper.step(u);
    CHECK(std::abs(z.norm() - u.norm()) < 1e-12);

    OperatorSum kin = bind_exponent(kinetic(), g, v, dt, eps);
    OperatorSum pot = bind_exponent(potential(), g, v, dt, eps);
    Eigen::MatrixXcd h = dense_assemble(kin) + dense_assemble(pot);
    Eigen::MatrixXcd e = dense_expm(h);
    Eigen::VectorXcd uv(g.m);
    for (int j = 0; j < g.m; ++j)
        uv(j) = u.values()[j];
    Eigen::VectorXcd exact = e * uv;
    auto err = [&](const StateVector &s) {
        double acc = 0.0;
        for (int j = 0; j < g.m; ++j)
            acc += std::norm(s.values()[j] - exact(j));
        return std::sqrt(acc * 2.0 / g.m);
    };
    CHECK(err(z) < err(step_strang(u, v, eps, dt)));
}

TEST_CASE("n = 2 splitting converges at sixth order")
{
    auto error_at = [](double dt) {
        RunConfig cfg;
        cfg.m = 64;
        cfg.eps = 0.25;
        cfg.dt = dt;
        cfg.steps = (int)std::lround(0.5 / dt);
        cfg.scheme = "zassenhaus";
        cfg.order_n = 2;
        return solve_run(cfg).error_l2;
    };
    double coarse = error_at(0.05), fine = error_at(0.025);
    CHECK(std::log2(coarse / fine) > 5.5);
}

TEST_CASE("solve_run produces a CSV row and a loadable dump")
{
    RunConfig cfg;
    cfg.m = 64;
    cfg.eps = 0.25;
    cfg.dt = 0.01;
    cfg.steps = 10;
    cfg.scheme = "zassenhaus";
    cfg.order_n = 1;
    SolveResult r = solve_run(cfg);
    CHECK(r.norm_drift < 1e-12);
    CHECK(r.error_l2 < 1e-4);
    CHECK(csv_header() == "M,eps,dt,steps,scheme,error_l2,norm_drift,wall_ms");
    std::string row = csv_row(r);
    CHECK(row.find("64,0.25,0.01,10,zassenhaus,") == 0);

    std::stringstream buf;
    write_state(buf, r.final_state);
    CHECK(buf.str().size() == 16 + 16 * 64);
    StateVector back = read_state(buf);
    CHECK(max_diff(back, r.final_state) == 0.0);

    std::stringstream bad("not a dump");
    CHECK_THROWS_AS(read_state(bad), std::invalid_argument);
}

TEST_CASE("validation of run configs")
{
    RunConfig cfg;
    cfg.m = 100;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.m = 64;
    cfg.scheme = "leapfrog";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.scheme = "strang";
    cfg.dt = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("independent runs execute concurrently without shared state")
{
    auto run = [](const char *scheme, unsigned n) {
        RunConfig cfg;
        cfg.m = 32;
        cfg.eps = 0.25;
        cfg.dt = 0.01;
        cfg.steps = 25;
        cfg.scheme = scheme;
        cfg.order_n = n;
        return solve_run(cfg);
    };
    SolveResult strang_serial = run("strang", 0);
    SolveResult zass_serial = run("zassenhaus", 1);

    SolveResult strang_threaded, zass_threaded;
    std::thread t1([&] { strang_threaded = run("strang", 0); });
    std::thread t2([&] { zass_threaded = run("zassenhaus", 1); });
    t1.join();
    t2.join();
    CHECK(strang_threaded.error_l2 == strang_serial.error_l2);
    CHECK(zass_threaded.error_l2 == zass_serial.error_l2);
    CHECK(max_diff(strang_threaded.final_state, strang_serial.final_state) == 0.0);
    CHECK(max_diff(zass_threaded.final_state, zass_serial.final_state) == 0.0);
}

TEST_CASE("serial and parallel kernels agree bitwise")
{
    Grid g(128);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> v(g.m);
    for (auto &z : v)
        z = cplx(dist(rng), dist(rng));
    StateVector u(g, v);
    for (int k : {1, 2, 3}) {
        StateVector a = diff_apply(u, k, Exec::serial);
        StateVector b = diff_apply(u, k, Exec::parallel);
        CHECK(max_diff(a, b) == 0.0);
    }
    std::vector<double> f(g.m, 0.5);
    std::vector<cplx> o1, o2;
    kernels::pointwise_mul(f, u.values(), o1, Exec::serial);
    kernels::pointwise_mul(f, u.values(), o2, Exec::parallel);
    CHECK(o1 == o2);
}
