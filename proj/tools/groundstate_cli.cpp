#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "groundstate/pohozaev.hpp"
#include "groundstate/sweep.hpp"
#include "groundstate/verify.hpp"

namespace {

using namespace groundstate;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitSolver = 3;
constexpr int kExitUsage = 64;

std::string human(double x) {
    if (std::isinf(x)) return "infinite";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

json num_or_inf(double x) {
    if (std::isinf(x)) return "inf";
    return x;
}

json controls_json(const SolverControls& ctl) {
    return {{"rtol", ctl.rtol},       {"atol", ctl.atol},
            {"r_max", ctl.r_max},     {"alpha_tol", ctl.alpha_tol},
            {"h0_scale", ctl.h0_scale}, {"h_max", ctl.h_max},
            {"u_floor", ctl.u_floor}};
}

json report_json(const VerificationReport& rep, const SolverControls& ctl) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"lhs", num_or_inf(c.lhs)},
                          {"rhs", num_or_inf(c.rhs)},
                          {"margin", num_or_inf(c.margin)}});
    return {{"params",
             {{"n", rep.n}, {"p", rep.p}, {"q", rep.q}, {"omega", rep.omega}}},
            {"critical_points",
             {{"b", rep.critical_points.b},
              {"c", rep.critical_points.c},
              {"beta", rep.critical_points.beta},
              {"theta", rep.critical_points.theta},
              {"B", rep.critical_points.big_b},
              {"C", num_or_inf(rep.critical_points.big_c)}}},
            {"alpha", rep.alpha},
            {"checks", checks},
            {"overall", rep.overall},
            {"controls", controls_json(ctl)}};
}

struct Options {
    int n = 3;
    double p = 2.0, q = 3.0, omega = 0.1875;
    SolverControls ctl;
    std::string format = "human";
    std::string output;
    std::string trajectory_path;
    std::string sweep_spec;
    long long seed = 20240901;
};

struct OutputStream {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& get() { return *os; }
};

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const DoublePowerParams& params, Dimension dim) {
    os << "r,u,du,P,Sigma_u\n";
    char buf[200];
    for (const auto& s : traj.samples) {
        const double P = eval_P(s.r, s.u, s.du, dim, params);
        const double sig = eval_Sigma(params, dim, std::max(s.u, 0.0));
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.r, s.u,
                      s.du, P, sig);
        os << buf;
    }
}

int cmd_critical_points(const Options& opt) {
    const DoublePowerParams params(opt.omega, opt.p, opt.q);
    const Dimension dim(opt.n);
    if (!params.exists_ground_state) {
        std::cerr << "existence violated: omega = " << human(opt.omega)
                  << " >= omega_pq = " << human(params.omega_pq) << "\n";
        return kExitDomain;
    }
    const bool closed = std::abs(opt.q - (2.0 * opt.p - 1.0)) < 1e-12;
    const CriticalPoints cp =
        closed ? closed_forms_q2p1(params, dim) : critical_points(params, dim);
    const PohozaevCoeffs co = pohozaev_coeffs(dim, opt.p, opt.q);
    const double omega_st =
        co.tau > 0.0 ? sigma_threshold(co, opt.p, opt.q) : kInfinity;

    OutputStream out(opt.output);
    if (opt.format == "json") {
        json j{{"params",
                {{"n", opt.n}, {"p", opt.p}, {"q", opt.q}, {"omega", opt.omega}}},
               {"path", closed ? "closed-form" : "root-finding"},
               {"sigma", co.sigma},
               {"tau", co.tau},
               {"omega_pq", params.omega_pq},
               {"omega_sigma_tau", num_or_inf(omega_st)},
               {"critical_points",
                {{"b", cp.b},
                 {"c", cp.c},
                 {"beta", cp.beta},
                 {"theta", cp.theta},
                 {"B", cp.big_b},
                 {"C", num_or_inf(cp.big_c)}}}};
        out.get() << j.dump(2) << "\n";
    } else {
        out.get() << "path: " << (closed ? "closed-form (q = 2p-1)" : "root-finding")
                  << "\n"
                  << "sigma = " << human(co.sigma) << ", tau = " << human(co.tau)
                  << "\n"
                  << "omega_pq = " << human(params.omega_pq)
                  << ", omega_sigma_tau = " << human(omega_st) << "\n"
                  << "b = " << human(cp.b) << ", c = " << human(cp.c) << "\n"
                  << "beta = " << human(cp.beta) << ", theta = " << human(cp.theta)
                  << "\n"
                  << "B = " << human(cp.big_b) << ", C = " << human(cp.big_c)
                  << "\n";
    }
    return kExitOk;
}

int cmd_shoot(const Options& opt) {
    const DoublePowerParams params(opt.omega, opt.p, opt.q);
    const Dimension dim(opt.n);
    const GroundState gs = find_ground_state(params, dim, opt.ctl);
    const CriticalPoints cp = critical_points(params, dim);

    OutputStream out(opt.output);
    if (opt.format == "json") {
        json j{{"params",
                {{"n", opt.n}, {"p", opt.p}, {"q", opt.q}, {"omega", opt.omega}}},
               {"alpha", gs.alpha},
               {"bracket_width", gs.bracket_width},
               {"iterations", gs.iterations},
               {"decay_rate", gs.decay_rate},
               {"bounds",
                {{"beta_lt_alpha", gs.alpha > cp.beta - 1e-6},
                 {"alpha_lt_c", gs.alpha < cp.c},
                 {"B_lt_alpha", cp.big_b < gs.alpha},
                 {"B_minus_beta", cp.big_b - cp.beta}}},
               {"controls", controls_json(opt.ctl)}};
        out.get() << j.dump(2) << "\n";
    } else {
        out.get() << "alpha = " << human(gs.alpha)
                  << " (bracket width " << human(gs.bracket_width) << ", "
                  << gs.iterations << " iterations)\n"
                  << "decay rate = " << human(gs.decay_rate)
                  << " (expected near " << human(-std::sqrt(opt.omega)) << ")\n"
                  << "beta < alpha: " << (gs.alpha > cp.beta - 1e-6 ? "yes" : "NO")
                  << " (beta = " << human(cp.beta) << ")\n"
                  << "alpha < c:    " << (gs.alpha < cp.c ? "yes" : "NO")
                  << " (c = " << human(cp.c) << ")\n"
                  << "B < alpha:    " << (cp.big_b < gs.alpha ? "yes" : "NO")
                  << " (B = " << human(cp.big_b) << ")\n"
                  << "B - beta = " << human(cp.big_b - cp.beta) << "\n";
    }
    if (!opt.trajectory_path.empty()) {
        std::ofstream tf(opt.trajectory_path);
        if (!tf)
            throw std::runtime_error("cannot open trajectory file: " +
                                     opt.trajectory_path);
        write_trajectory_csv(tf, gs.trajectory, params, dim);
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const DoublePowerParams params(opt.omega, opt.p, opt.q);
    const Dimension dim(opt.n);
    OutputStream out(opt.output);
    if (!params.exists_ground_state) {
        json j{{"params",
                {{"n", opt.n}, {"p", opt.p}, {"q", opt.q}, {"omega", opt.omega}}},
               {"critical_points", nullptr},
               {"alpha", nullptr},
               {"checks",
                json::array({{{"name", "existence"},
                              {"passed", false},
                              {"lhs", opt.omega},
                              {"rhs", params.omega_pq},
                              {"margin", params.omega_pq - opt.omega}}})},
               {"overall", false},
               {"controls", controls_json(opt.ctl)}};
        out.get() << j.dump(2) << "\n";
        return kExitOk;
    }
    const VerificationReport rep = full_verification(params, dim, opt.ctl);
    out.get() << report_json(rep, opt.ctl).dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    SweepGrid grid;
    grid.n = opt.n;
    grid.p = opt.p;
    grid.q = opt.q;
    grid.omega = opt.omega;
    {
        std::stringstream ss(opt.sweep_spec);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() != 4) {
            std::cerr << "--sweep expects VAR:START:STOP:COUNT\n";
            return kExitUsage;
        }
        grid.var = parts[0];
        try {
            grid.start = std::stod(parts[1]);
            grid.stop = std::stod(parts[2]);
            grid.count = std::stoi(parts[3]);
        } catch (const std::exception&) {
            std::cerr << "--sweep expects numeric START:STOP:COUNT\n";
            return kExitUsage;
        }
        if (grid.count < 2) {
            std::cerr << "sweep count must be >= 2\n";
            return kExitUsage;
        }
        if (grid.var != "omega" && grid.var != "p" && grid.var != "q" &&
            grid.var != "n") {
            std::cerr << "sweep variable must be omega, p, q or n\n";
            return kExitUsage;
        }
    }
    const std::vector<SweepRow> rows = run_sweep(grid, opt.ctl, true);
    bool any = false;
    for (const auto& row : rows) any = any || !row.skipped;
    OutputStream out(opt.output);
    write_sweep_csv(out.get(), rows);
    if (!any) {
        std::cerr << "sweep grid contains no valid points\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial ground states of the scalar field equation with "
                 "double-power nonlinearity"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "space dimension (>= 1)");
    app.add_option("--p", opt.p, "lower exponent p (> 1)");
    app.add_option("--q", opt.q, "upper exponent q (> p)");
    app.add_option("--omega", opt.omega, "frequency omega (> 0)");
    app.add_option("--rtol", opt.ctl.rtol, "integrator relative tolerance");
    app.add_option("--atol", opt.ctl.atol, "integrator absolute tolerance");
    app.add_option("--r-max", opt.ctl.r_max, "integration radius cap");
    app.add_option("--alpha-tol", opt.ctl.alpha_tol, "shooting bracket target");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--output", opt.output, "output path (default stdout)");
    app.add_option("--seed", opt.seed, "random seed for sampled checks");

    auto* sc_cp = app.add_subcommand("critical-points",
                                     "thresholds and the six critical points");
    auto* sc_shoot = app.add_subcommand("shoot", "ground-state maximum by shooting");
    sc_shoot->add_option("--trajectory", opt.trajectory_path,
                         "write the trajectory as CSV (r,u,du,P,Sigma_u)");
    auto* sc_verify =
        app.add_subcommand("verify", "full verification report (JSON)");
    auto* sc_sweep = app.add_subcommand("sweep", "parameter sweep (CSV)");
    sc_sweep->add_option("--sweep", opt.sweep_spec, "VAR:START:STOP:COUNT")
        ->required();
    for (auto* sc : {sc_cp, sc_shoot, sc_verify, sc_sweep}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!(opt.n >= 1) || !(opt.p > 1.0) || !(opt.q > opt.p) ||
            !(opt.omega > 0.0)) {
            std::cerr << "invalid parameters: need n >= 1, 1 < p < q, omega > 0\n";
            return kExitUsage;
        }
        if (sc_cp->parsed()) return cmd_critical_points(opt);
        if (sc_shoot->parsed()) return cmd_shoot(opt);
        if (sc_verify->parsed()) return cmd_verify(opt);
        if (sc_sweep->parsed()) return cmd_sweep(opt);
        return kExitUsage;
    } catch (const ExistenceError& e) {
        std::cerr << "existence violated: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NoPositivePartError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    }
}
