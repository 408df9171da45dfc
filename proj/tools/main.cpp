#include "zassen/json_io.hpp"
#include "zassen/solve.hpp"
#include "zassen/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace zassen;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;
constexpr int exit_verification = 4;

struct GlobalOpts {
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 1;

    std::ostream &stream(std::ofstream &file) const
    {
        if (out_path.empty())
            return std::cout;
        file.open(out_path);
        if (!file)
            throw std::invalid_argument("cannot open output file '" + out_path + "'");
        return file;
    }
};

std::pair<std::string, int> parse_term_spec(const std::string &spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
        throw std::invalid_argument("term spec must look like sym:height, got '" + spec + "'");
    int k;
    try {
        size_t used = 0;
        k = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1)
            throw std::invalid_argument("");
    } catch (const std::exception &) {
        throw std::invalid_argument("bad height in term spec '" + spec + "'");
    }
    if (k < 0)
        throw std::invalid_argument("height must be non-negative in '" + spec + "'");
    return {spec.substr(0, colon), k};
}

FTerm tdse_kinetic() { return ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1)); }
FTerm tdse_potential() { return ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1)); }

int cmd_coeffs(const GlobalOpts &g, const std::string &kind_name, unsigned kmax)
{
    if (kmax > 12)
        throw std::invalid_argument("coeffs: kmax <= 12");
    CoeffKind kind = coeff_kind_from_string(kind_name);
    CoeffTable table = CoeffTable::build(kind, kmax);
    std::ofstream file;
    std::ostream &out = g.stream(file);
    if (g.format == "json")
        out << coeff_table_to_json(table).dump(2) << "\n";
    else
        out << table.render_text();
    return exit_ok;
}

int cmd_commutator(const GlobalOpts &g, const std::string &left, const std::string &right)
{
    auto [ls, lk] = parse_term_spec(left);
    auto [rs, rk] = parse_term_spec(right);
    FTerm result = commutator(ang(DiffPoly::var(ls), lk), ang(DiffPoly::var(rs), rk));
    std::ofstream file;
    std::ostream &out = g.stream(file);
    if (g.format == "json")
        out << fterm_to_json(result).dump(2) << "\n";
    else
        out << result.str() << "\n";
    return exit_ok;
}

int cmd_sbch(const GlobalOpts &g, unsigned order)
{
    FTerm s = sbch(tdse_kinetic(), tdse_potential(), order);
    std::ofstream file;
    std::ostream &out = g.stream(file);
    if (g.format == "json")
        out << fterm_to_json(s).dump(2) << "\n";
    else
        out << s.str() << "\n";
    return exit_ok;
}

int cmd_split(const GlobalOpts &g, unsigned n, const std::string &sigma_text)
{
    Rational sigma = Rational::parse(sigma_text);
    Splitting sp = zassenhaus(tdse_kinetic(), tdse_potential(), n, sigma);
    std::ofstream file;
    std::ostream &out = g.stream(file);
    if (g.format == "json") {
        out << splitting_to_json(sp).dump(2) << "\n";
        return exit_ok;
    }
    out << "symmetric Zassenhaus splitting, n=" << n << ", sigma=" << sigma.str()
        << ", error order eps^(" << sp.order_target.str() << ")\n";
    for (size_t k = 0; k < sp.exponents.size(); ++k) {
        out << "W[" << k << "]  (sigma-order " << sp.exponent_order(k).str();
        if (k >= 2)
            out << ", lanczos iterations " << sp.lanczos_iterations(k);
        out << ")\n    " << sp.formula(k) << "\n";
    }
    out << "potential derivative orders needed:";
    for (unsigned d : sp.derivative_orders())
        out << " " << d;
    out << "\n";
    return exit_ok;
}

int cmd_cost(const GlobalOpts &g, unsigned n, const std::string &sigma_text)
{
    Rational sigma = Rational::parse(sigma_text);
    std::ofstream file;
    std::ostream &out = g.stream(file);
    out << cost(n, sigma) << "\n";
    return exit_ok;
}

int cmd_solve(const GlobalOpts &g, const RunConfig &cfg, const std::string &dump_path)
{
    SolveResult r = solve_run(cfg);
    std::ofstream file;
    std::ostream &out = g.stream(file);
    out << csv_header() << "\n" << csv_row(r) << "\n";
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path, std::ios::binary);
        if (!dump)
            throw std::invalid_argument("cannot open dump file '" + dump_path + "'");
        write_state(dump, r.final_state);
    }
    return exit_ok;
}

int cmd_verify(const GlobalOpts &g, const std::string &suite)
{
    auto reports = run_suites(suite, g.seed);
    std::ofstream file;
    std::ostream &out = g.stream(file);
    bool all_ok = true;
    for (const auto &rep : reports) {
        out << "suite " << rep.name << "\n";
        for (const auto &check : rep.checks) {
            out << "  [" << (check.passed ? "PASS" : "FAIL") << "] " << check.label;
            if (!check.passed && !check.detail.empty())
                out << "  -- " << check.detail;
            out << "\n";
            all_ok = all_ok && check.passed;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", rep.elapsed_s);
        out << "  (" << buf << " s)\n";
    }
    out << (all_ok ? "verification passed" : "verification FAILED") << "\n";
    return all_ok ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"graded operator algebra, symmetric Zassenhaus splittings and a pseudospectral "
                 "solver for the semiclassical Schrodinger equation"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --format/--seed/--out after the subcommand

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text|json|csv")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--out", g.out_path, "write output to FILE instead of stdout");

    std::string kind = "pi";
    unsigned kmax = 4;
    auto *coeffs = app.add_subcommand("coeffs", "structure coefficient tables");
    coeffs->add_option("--kind", kind, "pi|lambda|mu|gamma")->capture_default_str();
    coeffs->add_option("--kmax", kmax, "emit all k+l <= kmax (max 12)")->capture_default_str();

    std::string left, right;
    auto *comm = app.add_subcommand("commutator", "expand [ <sym>_k, <sym>_l ]");
    comm->add_option("left", left, "left term, sym:height")->required();
    comm->add_option("right", right, "right term, sym:height")->required();

    unsigned sbch_order = 3;
    auto *sbch_cmd = app.add_subcommand("sbch", "symmetric BCH exponent of the Schrodinger pair");
    sbch_cmd->add_option("--order", sbch_order, "t-degree truncation")->capture_default_str();

    unsigned split_n = 1;
    std::string sigma_text = "1/2";
    auto *split = app.add_subcommand("split", "derive the symmetric Zassenhaus splitting");
    split->add_option("--n", split_n, "splitting order parameter")->capture_default_str();
    split->add_option("--sigma", sigma_text, "time-step scaling exponent, exact rational")
        ->capture_default_str();

    unsigned cost_n = 1;
    std::string cost_sigma = "1";
    auto *cost_cmd = app.add_subcommand("cost", "FFTs per time step of the splitting");
    cost_cmd->add_option("n", cost_n, "splitting order parameter")->required();
    cost_cmd->add_option("sigma", cost_sigma, "sigma as exact rational")->required();

    RunConfig cfg;
    std::string dump_path;
    auto *solve = app.add_subcommand("solve", "run one integration and emit a CSV error table");
    solve->add_option("--M", cfg.m, "grid points (power of two)")->capture_default_str();
    solve->add_option("--eps", cfg.eps, "semiclassical parameter")->capture_default_str();
    solve->add_option("--dt", cfg.dt, "time step")->capture_default_str();
    solve->add_option("--steps", cfg.steps, "number of steps")->capture_default_str();
    solve->add_option("--potential", cfg.potential, "potential V(x)")->capture_default_str();
    solve->add_option("--scheme", cfg.scheme, "strang|zassenhaus")->capture_default_str();
    solve->add_option("--order", cfg.order_n, "Zassenhaus n")->capture_default_str();
    std::string solve_sigma = "1/2";
    solve->add_option("--sigma", solve_sigma, "sigma as exact rational")->capture_default_str();
    solve->add_option("--lanczos", cfg.lanczos_override, "override Lanczos iteration count");
    solve->add_option("--dump", dump_path, "write the final state (binary) to FILE");

    std::string suite = "all";
    auto *verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "coeffs|algebra|matrix|numeric|all")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return exit_usage;
    }

    try {
        if (coeffs->parsed())
            return cmd_coeffs(g, kind, kmax);
        if (comm->parsed())
            return cmd_commutator(g, left, right);
        if (sbch_cmd->parsed())
            return cmd_sbch(g, sbch_order);
        if (split->parsed())
            return cmd_split(g, split_n, sigma_text);
        if (cost_cmd->parsed())
            return cmd_cost(g, cost_n, cost_sigma);
        if (solve->parsed()) {
            cfg.sigma = Rational::parse(solve_sigma);
            cfg.seed = g.seed;
            return cmd_solve(g, cfg, dump_path);
        }
        if (verify->parsed())
            return cmd_verify(g, suite);
    } catch (const parse_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_usage;
}
