#include "zassen/solve.hpp"

#include <chrono>
#include <cstring>
#include <ostream>
#include <sstream>

namespace zassen {

void RunConfig::validate() const
{
    Grid check(m); // throws for bad M
    if (eps <= 0.0)
        throw std::domain_error("RunConfig: eps must be positive");
    if (dt <= 0.0)
        throw std::domain_error("RunConfig: dt must be positive");
    if (steps < 1)
        throw std::domain_error("RunConfig: steps >= 1");
    if (scheme != "strang" && scheme != "zassenhaus")
        throw std::invalid_argument("RunConfig: scheme must be strang or zassenhaus");
    if (!(sigma > Rational(0)))
        throw std::domain_error("RunConfig: sigma must be positive");
}

StateVector initial_wavepacket(Grid g, double eps)
{
    const double delta = 0.1;
    const double momentum = 1.0;
    StateVector u = StateVector::sample(g, [&](double x) {
        double envelope = std::exp(-x * x / (2.0 * delta * delta));
        return std::polar(envelope, momentum * x / eps);
    });
    double nrm = u.norm();
    for (auto &z : u.values())
        z /= nrm;
    return u;
}

namespace {

FTerm tdse_kinetic() { return ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1)); }
FTerm tdse_potential() { return ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1)); }

} // namespace

SolveResult solve_run(const RunConfig &config)
{
    config.validate();
    Grid g(config.m);
    ClosedExpr v = ClosedExpr::parse(config.potential);
    StateVector u = initial_wavepacket(g, config.eps);
    const double norm0 = u.norm();

    std::optional<ZassenhausStepper> stepper;
    if (config.scheme == "zassenhaus") {
        Splitting sp = zassenhaus(tdse_kinetic(), tdse_potential(), config.order_n, config.sigma);
        stepper.emplace(g, sp, v, config.eps, config.dt, config.lanczos_override);
    }

    auto t0 = std::chrono::steady_clock::now();
    StateVector state = u;
    for (int s = 0; s < config.steps; ++s)
        state = stepper ? stepper->step(state) : step_strang(state, v, config.eps, config.dt);
    auto t1 = std::chrono::steady_clock::now();

    SolveResult r;
    r.config = config;
    r.norm_drift = std::abs(state.norm() - norm0);
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (config.m <= 512) {
        // exact semidiscrete reference u(T) = exp(T (i eps K^2 - i/eps D_V)) u0
        OperatorSum kin = bind_exponent(tdse_kinetic(), g, v, 1.0, config.eps);
        OperatorSum pot = bind_exponent(tdse_potential(), g, v, 1.0, config.eps);
        Eigen::MatrixXcd h = dense_assemble(kin) + dense_assemble(pot);
        Eigen::MatrixXcd propagator = dense_expm(h, config.dt * config.steps);
        Eigen::VectorXcd u0(g.m);
        for (int j = 0; j < g.m; ++j)
            u0(j) = u.values()[j];
        Eigen::VectorXcd uref = propagator * u0;
        double err = 0.0;
        for (int j = 0; j < g.m; ++j)
            err += std::norm(state.values()[j] - uref(j));
        r.error_l2 = std::sqrt(err * 2.0 / g.m);
    }
    r.final_state = std::move(state);
    return r;
}

std::string csv_header() { return "M,eps,dt,steps,scheme,error_l2,norm_drift,wall_ms"; }

std::string csv_row(const SolveResult &r)
{
    std::ostringstream out;
    out.precision(12);
    out << r.config.m << "," << r.config.eps << "," << r.config.dt << "," << r.config.steps << ","
        << r.config.scheme << "," << r.error_l2 << "," << r.norm_drift << "," << r.wall_ms;
    return out.str();
}

void write_state(std::ostream &out, const StateVector &u)
{
    char header[16] = {};
    std::memcpy(header, "ZASS", 4);
    std::uint32_t m = (std::uint32_t)u.size();
    std::uint32_t reserved = 0;
    std::memcpy(header + 8, &m, 4);
    std::memcpy(header + 12, &reserved, 4);
    out.write(header, 16);
    for (const auto &z : u.values()) {
        double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char *>(&re), 8);
        out.write(reinterpret_cast<const char *>(&im), 8);
    }
}

StateVector read_state(std::istream &in)
{
    char header[16];
    in.read(header, 16);
    if (!in || std::memcmp(header, "ZASS", 4) != 0)
        throw std::invalid_argument("read_state: bad magic");
    std::uint32_t m;
    std::memcpy(&m, header + 8, 4);
    Grid g((int)m);
    std::vector<std::complex<double>> v(m);
    for (auto &z : v) {
        double re, im;
        in.read(reinterpret_cast<char *>(&re), 8);
        in.read(reinterpret_cast<char *>(&im), 8);
        z = {re, im};
    }
    if (!in)
        throw std::invalid_argument("read_state: truncated payload");
    return StateVector(g, std::move(v));
}

} // namespace zassen
