#include "cli.hpp"

#include <cmath>
#include <numeric>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "modheat/io.hpp"
#include "modheat/presets.hpp"
#include "modheat/quantize.hpp"
#include "modheat/seminorm.hpp"
#include "modheat/verify.hpp"
#include "modheat/version.hpp"

namespace modheat::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json load_config(const std::filesystem::path& path) {
    if (path.empty()) return ordered_json::object();
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    try {
        ordered_json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw ValidationError("config is not valid JSON: " + std::string(e.what()));
    }
}

OutputMeta meta_for(const ordered_json& cfg) {
    OutputMeta m;
    m.config_hash = config_hash(cfg.dump());
    return m;
}

// grid parameters may sit at the top level ({d, K, L, n, ...}) or under a
// "grid" object; the nested form wins when both are present
GridGeometry geometry_from(const ordered_json& cfg, std::size_t def_d = 1, double def_L = 12.0,
                           std::size_t def_n = 2048) {
    const auto g = cfg.value("grid", ordered_json::object());
    GridGeometry geom{g.value("d", cfg.value("d", def_d)),
                      g.value("L", cfg.value("L", def_L)),
                      g.value("n", cfg.value("n", def_n))};
    geom.validate();
    return geom;
}

std::size_t degree_from(const ordered_json& cfg, const GridGeometry& geom) {
    const auto g = cfg.value("grid", ordered_json::object());
    const std::size_t def = geom.d >= 2 ? std::size_t{16} : std::size_t{32};
    return g.value("K", cfg.value("K", def));
}

std::string grid_desc_with_degree(const GridGeometry& geom, std::size_t K) {
    ordered_json j;
    j["d"] = geom.d;
    j["L"] = geom.L;
    j["n"] = geom.n;
    j["K"] = K;
    return j.dump();
}

GridFunction function_from(const ordered_json& spec, const GridGeometry& geom) {
    if (spec.contains("file")) return read_grid_function_csv(spec["file"].get<std::string>());
    const std::string preset = spec.value("preset", "gauss");
    const double scale = spec.value("scale", 1.0);
    std::vector<double> center = spec.value("center", std::vector<double>{});
    std::vector<double> modulation = spec.value("modulation", std::vector<double>{});
    return initial_data_preset(preset, geom, scale, std::move(center), std::move(modulation));
}

Nonlinearity nonlinearity_from(const ordered_json& cfg) {
    if (!cfg.contains("nonlinearity")) return Nonlinearity::zero();
    const auto& nl = cfg["nonlinearity"];
    const std::string kind = nl.value("kind", "power");
    if (kind == "power") {
        const Complex lambda{nl.value("lambda_re", 0.0), nl.value("lambda_im", 0.0)};
        return Nonlinearity::power(lambda, nl.value("k", std::size_t{1}));
    }
    if (kind == "series") {
        Nonlinearity::SeriesTable table;
        for (const auto& e : nl.value("coeff_table", ordered_json::array())) {
            table[{e.at("j").get<std::size_t>(), e.at("k").get<std::size_t>()}] =
                Complex{e.value("re", 0.0), e.value("im", 0.0)};
        }
        return Nonlinearity::series(std::move(table));
    }
    throw ValidationError("nonlinearity kind must be 'power' or 'series'");
}

double exponent_from(const ordered_json& cfg, const char* key, double def) {
    if (!cfg.contains(key)) return def;
    if (cfg[key].is_string()) {
        if (cfg[key] == "inf") return kInf;
        throw ValidationError(std::string(key) + " must be a number or \"inf\"");
    }
    return cfg[key].get<double>();
}

PhaseGrid lattice_from(const ordered_json& cfg, const GridGeometry& geom) {
    const auto l = cfg.value("lattice", ordered_json::object());
    return PhaseGrid::make_default(geom, l.value("step", 0.25), l.value("x_halfwidth", 10.0),
                                   l.value("w_halfwidth", 10.0));
}

void emit(const GlobalOpts& opts, const ordered_json& summary) {
    if (opts.json)
        std::cout << summary.dump(2) << std::endl;
    else
        for (const auto& [k, v] : summary.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// ---------------------------------------------------------------- commands

int cmd_propagate(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg);
    auto basis = make_basis(geom.d, degree_from(cfg, geom), geom.L, geom.n);
    const double beta = cfg.value("beta", opts.beta);
    const double t = cfg.value("t", 0.5);
    GridFunction u0 = function_from(cfg.value("initial_data", ordered_json::object()), geom);
    GridFunction ut = propagate(u0, t, beta, basis);
    OutputMeta meta = meta_for(cfg);
    meta.grid_desc = grid_desc_with_degree(geom, basis->max_degree());
    write_grid_function_csv(opts.out / "u0.csv", u0, meta);
    write_grid_function_csv(opts.out / "ut.csv", ut, meta);
    SpectralField c = analyze(u0, basis);
    ordered_json summary;
    summary["t"] = t;
    summary["beta"] = beta;
    summary["l2_u0"] = u0.l2_norm();
    summary["l2_ut"] = ut.l2_norm();
    summary["truncation_top_shell_mass"] = c.top_shell_mass();
    summary["out"] = (opts.out / "ut.csv").string();
    emit(opts, summary);
    return 0;
}

int cmd_solve(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg);
    auto basis = make_basis(geom.d, degree_from(cfg, geom), geom.L, geom.n);
    const double beta = cfg.value("beta", opts.beta);
    const double T = cfg.value("T", 0.1);
    const std::size_t M = cfg.value("M", std::size_t{64});
    const double tol = cfg.value("tol", 1e-10);
    const std::size_t max_iter = cfg.value("max_iter", std::size_t{25});
    const Nonlinearity F = nonlinearity_from(cfg);
    GridFunction u0g = function_from(cfg.value("initial_data", ordered_json::object()), geom);
    SpectralField u0 = analyze(u0g, basis);

    auto res = picard_solve(u0, F, beta, T, M, tol, max_iter);  // ConvergenceError -> exit 3

    OutputMeta meta = meta_for(cfg);
    meta.grid_desc = grid_desc_with_degree(geom, basis->max_degree());
    write_trajectory_json(opts.out / "trajectory.json", res.trajectory, meta);

    std::vector<double> modnorms;
    if (cfg.value("diagnostics_modnorm", true) && geom.d == 1) {
        const Window g = gaussian_window(geom);
        const PhaseGrid lattice = lattice_from(cfg, geom);
        const Weight w{Weight::Kind::FrequencyOnly, 1.0};
        for (const auto& state : res.trajectory.states)
            modnorms.push_back(mod_norm(synthesize(state), g, 1.0, 1.0, w, lattice));
    }
    write_trajectory_diagnostics_csv(opts.out / "diagnostics.csv", res.trajectory, modnorms, meta);

    ordered_json summary;
    summary["converged"] = res.report.converged;
    summary["iterates"] = res.report.iterates;
    summary["diffs"] = res.report.diffs;
    summary["ratios"] = res.report.ratios;
    summary["endpoint_l2"] = res.trajectory.states.back().l2_norm();
    summary["out"] = (opts.out / "trajectory.json").string();
    emit(opts, summary);
    return 0;
}

int cmd_stft(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg);
    GridFunction f = function_from(cfg.value("function", ordered_json::object()), geom);
    const Window g = gaussian_window(geom);
    const PhaseGrid lattice = lattice_from(cfg, geom);
    STFTTable table = stft(f, g, lattice);
    write_stft_csv(opts.out / "stft.csv", table, meta_for(cfg));
    double peak = 0.0;
    for (const auto& v : table.values) peak = std::max(peak, std::abs(v));
    ordered_json summary;
    summary["nodes"] = table.values.size();
    summary["max_abs"] = peak;
    summary["max_snap_error"] = table.max_snap_error;
    summary["density"] = lattice.density();
    summary["out"] = (opts.out / "stft.csv").string();
    emit(opts, summary);
    return 0;
}

int cmd_modnorm(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg);
    GridFunction f = function_from(cfg.value("function", ordered_json::object()), geom);
    const Window g = gaussian_window(geom);
    const double p = exponent_from(cfg, "p", 2.0);
    const double q = exponent_from(cfg, "q", 2.0);
    const auto wj = cfg.value("weight", ordered_json::object());
    Weight w;
    w.s = wj.value("s", 0.0);
    const std::string kind = wj.value("kind", "freq");
    if (kind == "freq")
        w.kind = Weight::Kind::FrequencyOnly;
    else if (kind == "full")
        w.kind = Weight::Kind::Full;
    else
        throw ValidationError("weight kind must be 'freq' or 'full'");
    const PhaseGrid lattice = lattice_from(cfg, geom);
    const double value = mod_norm(f, g, p, q, w, lattice);
    std::ostringstream gm;
    gm << "a=" << format_double(lattice.a) << " b=" << format_double(lattice.b);
    write_norm_json(opts.out / "norm.json", p, q, w, value, gm.str(), meta_for(cfg));
    ordered_json summary;
    summary["value"] = value;
    summary["out"] = (opts.out / "norm.json").string();
    emit(opts, summary);
    return 0;
}

int cmd_wigner(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg, 1, 16.0, 512);
    GridFunction f = function_from(cfg.value("f", ordered_json::object()), geom);
    GridFunction g =
        cfg.contains("g") ? function_from(cfg["g"], geom) : f;
    const double tau = cfg.value("tau", opts.tau);
    const auto ps = cfg.value("ps", ordered_json::object());
    GridGeometry ps_geom{2, ps.value("L", geom.L), ps.value("n", geom.n)};
    GridFunction W = tau_wigner(f, g, tau, ps_geom);
    write_grid_function_csv(opts.out / "wigner.csv", W, meta_for(cfg));
    double mass_re = (W.geometry().cell_volume() *
                      std::accumulate(W.values().begin(), W.values().end(), Complex{0, 0}))
                         .real();
    ordered_json summary;
    summary["tau"] = tau;
    summary["mass"] = mass_re;
    summary["out"] = (opts.out / "wigner.csv").string();
    emit(opts, summary);
    return 0;
}

int cmd_gabor_matrix(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg, 1, 16.0, 512);
    const auto ps = cfg.value("ps", ordered_json::object());
    GridGeometry ps_geom{2, ps.value("L", geom.L), ps.value("n", geom.n)};
    const double tau = cfg.value("tau", opts.tau);
    Symbol sigma = symbol_preset(cfg.value("symbol", opts.symbol));
    const Window g = gaussian_window(geom);

    SweepSpec spec;
    const auto sj = cfg.value("sweep", ordered_json::object());
    spec.radii = sj.value("radii", spec.radii);
    spec.directions = sj.value("directions", static_cast<std::size_t>(opts.rays));
    spec.z_halfwidth = sj.value("z_halfwidth", spec.z_halfwidth);
    spec.z_step = sj.value("z_step", spec.z_step);
    spec.snap = sj.value("snap", spec.snap);
    spec.with_identity = sj.value("with_identity", true);

    const std::size_t N = cfg.value("N", std::size_t{2});
    const double m = cfg.value("m", sigma.order());

    GaborAnalyzer an(sigma, tau, g, ps_geom);
    auto samples = an.sweep(spec);
    const DecayFit fit = decay_fit(samples, m, N, tau);

    const OutputMeta meta = meta_for(cfg);
    write_sweep_csv(opts.out / "gabor_sweep.csv", samples, m, N, tau, meta);
    write_decay_fit_json(opts.out / "decay_fit.json", fit, tau, m, N, meta);

    ordered_json summary;
    summary["tau"] = tau;
    summary["symbol"] = sigma.label();
    summary["samples"] = samples.size();
    summary["C"] = fit.C;
    if (fit.slope_valid) summary["slope"] = fit.slope;
    summary["out"] = (opts.out / "gabor_sweep.csv").string();
    emit(opts, summary);
    return 0;
}

int cmd_seminorm(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    Symbol sigma = symbol_preset(cfg.value("symbol", opts.symbol));
    SampleBox box;
    const auto bj = cfg.value("box", ordered_json::object());
    box.halfwidth = bj.value("halfwidth", box.halfwidth);
    box.coarse_step = bj.value("coarse_step", box.coarse_step);
    box.refine_step = bj.value("refine_step", box.refine_step);
    box.fd_step = bj.value("fd_step", box.fd_step);

    const std::string kind = cfg.value("kind", "hormander");
    SeminormEstimate est;
    if (kind == "hormander") {
        est = symbol_seminorm(sigma, cfg.value("N", std::size_t{2}),
                              cfg.value("m", sigma.order()), box);
    } else if (kind == "shubin") {
        est = shubin_seminorm(sigma, cfg.value("k", std::size_t{2}), box);
    } else {
        throw ValidationError("seminorm kind must be 'hormander' or 'shubin'");
    }
    ordered_json j;
    j["meta"] = ordered_json::parse(meta_for(cfg).to_json());
    j["symbol"] = sigma.label();
    j["kind"] = kind;
    j["N"] = est.N;
    j["m"] = est.m;
    j["value"] = est.value;
    j["converged"] = est.converged;
    j["grid_meta"] = est.grid_meta;
    atomic_write(opts.out / "seminorm.json", j.dump(2) + "\n");
    ordered_json summary;
    summary["value"] = est.value;
    summary["converged"] = est.converged;
    summary["out"] = (opts.out / "seminorm.json").string();
    emit(opts, summary);
    return 0;
}

std::vector<GaborMatrixSample> read_sweep_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::getline(in, line);  // meta
    std::getline(in, line);  // header
    std::vector<GaborMatrixSample> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> cols;
        while (std::getline(ss, tok, ',')) cols.push_back(std::stod(tok));
        if (cols.size() < 8) throw IoError("bad sweep row in " + path.string());
        GaborMatrixSample s;
        s.z = make_point(cols[0], cols[1]);
        s.y = make_point(cols[2], cols[3]);
        s.direct_value = Complex{cols[4], 0.0};  // magnitude only
        s.identity_magnitude = cols[5];
        out.push_back(std::move(s));
    }
    return out;
}

int cmd_decay_fit(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    if (!cfg.contains("samples_csv"))
        throw ValidationError("decay-fit needs samples_csv in the config");
    auto samples = read_sweep_csv(cfg["samples_csv"].get<std::string>());
    const double tau = cfg.value("tau", opts.tau);
    const std::size_t N = cfg.value("N", std::size_t{2});
    const double m = cfg.value("m", 0.0);
    const DecayFit fit = decay_fit(samples, m, N, tau);
    write_decay_fit_json(opts.out / "decay_fit.json", fit, tau, m, N, meta_for(cfg));
    ordered_json summary;
    summary["C"] = fit.C;
    if (fit.slope_valid) summary["slope"] = fit.slope;
    summary["out"] = (opts.out / "decay_fit.json").string();
    emit(opts, summary);
    return 0;
}

int cmd_time_search(const GlobalOpts& opts) {
    const ordered_json cfg = load_config(opts.config);
    const GridGeometry geom = geometry_from(cfg);
    auto basis = make_basis(geom.d, degree_from(cfg, geom), geom.L, geom.n);
    const double beta = cfg.value("beta", opts.beta);
    const Nonlinearity F = nonlinearity_from(cfg);
    GridFunction u0g = function_from(cfg.value("initial_data", ordered_json::object()), geom);
    SpectralField u0 = analyze(u0g, basis);
    auto res = local_time_search(u0, F, beta, cfg.value("target_ratio", 0.5),
                                 cfg.value("M", std::size_t{64}), cfg.value("tol", 1e-10));
    ordered_json j;
    j["meta"] = ordered_json::parse(meta_for(cfg).to_json());
    j["T_est"] = res.T_est;
    j["any_converged"] = res.any_converged;
    ordered_json probes = ordered_json::array();
    for (const auto& [T, rep] : res.probes) {
        ordered_json p;
        p["T"] = T;
        p["converged"] = rep.converged;
        p["iterates"] = rep.iterates;
        p["diffs"] = rep.diffs;
        p["ratios"] = rep.ratios;
        probes.push_back(std::move(p));
    }
    j["probes"] = std::move(probes);
    atomic_write(opts.out / "time_search.json", j.dump(2) + "\n");
    ordered_json summary;
    summary["T_est"] = res.T_est;
    summary["out"] = (opts.out / "time_search.json").string();
    emit(opts, summary);
    return 0;
}

int cmd_verify(const GlobalOpts& opts) {
    if (opts.suite.empty())
        throw ValidationError("verify needs --suite <name>; see 'modheat suites'");
    VerifyReport rep = run_suite(opts.suite, opts.seed);  // unknown suite -> ValidationError
    atomic_write(opts.out / ("verify_" + opts.suite + ".json"), rep.to_json() + "\n");
    if (opts.json) {
        std::cout << rep.to_json() << std::endl;
    } else {
        std::cout << "suite " << rep.suite << " (seed " << rep.seed << ")\n";
        for (const auto& c : rep.checks)
            std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
                      << "  measured=" << format_double(c.measured)
                      << " target=" << format_double(c.target) << "\n";
        for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
        std::cout << (rep.overall ? "OVERALL PASS" : "OVERALL FAIL") << std::endl;
    }
    return rep.overall ? 0 : 1;
}

int cmd_suites(const GlobalOpts& opts) {
    ordered_json j = ordered_json::array();
    for (const auto& [name, desc] : list_suites()) {
        if (opts.json) {
            ordered_json e;
            e["name"] = name;
            e["description"] = desc;
            j.push_back(std::move(e));
        } else {
            std::cout << name << "  -  " << desc << "\n";
        }
    }
    if (opts.json) std::cout << j.dump(2) << std::endl;
    return 0;
}

}  // namespace

int run_command(const std::string& command, const GlobalOpts& opts) {
    if (command == "propagate") return cmd_propagate(opts);
    if (command == "solve") return cmd_solve(opts);
    if (command == "stft") return cmd_stft(opts);
    if (command == "modnorm") return cmd_modnorm(opts);
    if (command == "wigner") return cmd_wigner(opts);
    if (command == "gabor-matrix") return cmd_gabor_matrix(opts);
    if (command == "seminorm") return cmd_seminorm(opts);
    if (command == "decay-fit") return cmd_decay_fit(opts);
    if (command == "time-search") return cmd_time_search(opts);
    if (command == "verify") return cmd_verify(opts);
    if (command == "suites") return cmd_suites(opts);
    throw ValidationError("unknown command: " + command);
}

}  // namespace modheat::cli
