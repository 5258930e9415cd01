#include "modheat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "modheat/version.hpp"

namespace modheat {

using ordered_json = nlohmann::ordered_json;

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

std::string OutputMeta::to_json() const {
    ordered_json j;
    j["version"] = std::string(kVersion);
    j["config_hash"] = config_hash;
    if (!grid_desc.empty()) j["grid"] = grid_desc;
    j["float_env"] = "ieee754-binary64; libm is platform-dependent";
    return j.dump();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw IoError("short write to " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed for " + path.string() + ": " + ec.message());
}

namespace {

std::string grid_json(const GridGeometry& g) {
    ordered_json j;
    j["d"] = g.d;
    j["L"] = g.L;
    j["n"] = g.n;
    return j.dump();
}

ordered_json meta_obj(const OutputMeta& meta) { return ordered_json::parse(meta.to_json()); }

}  // namespace

void write_grid_function_csv(const std::filesystem::path& path, const GridFunction& f,
                             const OutputMeta& meta) {
    OutputMeta m = meta;
    if (m.grid_desc.empty()) m.grid_desc = grid_json(f.geometry());
    std::ostringstream out;
    out << "# meta " << m.to_json() << "\n";
    const auto& geom = f.geometry();
    for (std::size_t ax = 0; ax < geom.d; ++ax) out << "x" << ax << ",";
    out << "re,im\n";
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        const auto x = geom.node(flat);
        for (double xi : x) out << format_double(xi) << ",";
        out << format_double(f[flat].real()) << "," << format_double(f[flat].imag()) << "\n";
    }
    atomic_write(path, out.str());
}

GridFunction read_grid_function_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("# meta ", 0) != 0)
        throw IoError("missing metadata header in " + path.string());
    ordered_json meta;
    try {
        meta = ordered_json::parse(line.substr(7));
    } catch (const std::exception& e) {
        throw IoError("bad metadata header in " + path.string() + ": " + e.what());
    }
    if (!meta.contains("grid")) throw IoError("metadata lacks grid parameters");
    ordered_json g = ordered_json::parse(meta["grid"].get<std::string>());
    GridGeometry geom{g.at("d").get<std::size_t>(), g.at("L").get<double>(),
                      g.at("n").get<std::size_t>()};
    geom.validate();
    std::getline(in, line);  // column header
    GridFunction f(geom);
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (count >= f.size()) throw IoError("too many rows in " + path.string());
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> cols;
        while (std::getline(ss, tok, ',')) cols.push_back(std::stod(tok));
        if (cols.size() != geom.d + 2) throw IoError("bad row arity in " + path.string());
        f[count] = Complex{cols[geom.d], cols[geom.d + 1]};
        ++count;
    }
    if (count != f.size()) throw IoError("row count mismatch in " + path.string());
    return f;
}

void write_spectral_field_json(const std::filesystem::path& path, const SpectralField& c,
                               const OutputMeta& meta) {
    OutputMeta m = meta;
    if (m.grid_desc.empty()) m.grid_desc = grid_json(c.basis->geometry());
    ordered_json j;
    j["meta"] = meta_obj(m);
    j["K"] = c.basis->max_degree();
    ordered_json arr = ordered_json::array();
    const auto& idx = c.basis->indices();
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        ordered_json e;
        e["multi_index"] = idx[i].entries;
        e["re"] = c.coeffs[i].real();
        e["im"] = c.coeffs[i].imag();
        arr.push_back(std::move(e));
    }
    j["coefficients"] = std::move(arr);
    atomic_write(path, j.dump(2) + "\n");
}

SpectralField read_spectral_field_json(const std::filesystem::path& path, BasisPtr basis) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("bad JSON in " + path.string() + ": " + e.what());
    }
    SpectralField c = zero_field(basis);
    const auto& arr = j.at("coefficients");
    if (arr.size() != c.coeffs.size())
        throw IoError("coefficient count does not match the basis");
    const auto& idx = basis->indices();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto mi = arr[i].at("multi_index").get<std::vector<std::size_t>>();
        if (mi != idx[i].entries) throw IoError("multi-index order mismatch in " + path.string());
        c.coeffs[i] = Complex{arr[i].at("re").get<double>(), arr[i].at("im").get<double>()};
    }
    return c;
}

void write_stft_csv(const std::filesystem::path& path, const STFTTable& table,
                    const OutputMeta& meta) {
    OutputMeta m = meta;
    if (m.grid_desc.empty()) m.grid_desc = grid_json(table.source);
    std::ostringstream out;
    out << "# meta " << m.to_json() << "\n";
    const std::size_t d = table.grid.dim();
    for (std::size_t ax = 0; ax < d; ++ax) out << "x" << ax << ",";
    for (std::size_t ax = 0; ax < d; ++ax) out << "w" << ax << ",";
    out << "re,im,abs\n";
    const std::size_t wc = table.grid.w_count();
    for (std::size_t xf = 0; xf < table.grid.x_count(); ++xf) {
        const auto j = table.grid.x_multi(xf);
        for (std::size_t wf = 0; wf < wc; ++wf) {
            const auto l = table.grid.w_multi(wf);
            for (long ji : j) out << format_double(static_cast<double>(ji) * table.grid.a) << ",";
            for (long li : l) out << format_double(static_cast<double>(li) * table.grid.b) << ",";
            const Complex v = table.at(xf, wf);
            out << format_double(v.real()) << "," << format_double(v.imag()) << ","
                << format_double(std::abs(v)) << "\n";
        }
    }
    atomic_write(path, out.str());
}

void write_norm_json(const std::filesystem::path& path, double p, double q, const Weight& w,
                     double value, const std::string& grid_meta, const OutputMeta& meta) {
    ordered_json j;
    j["meta"] = meta_obj(meta);
    if (std::isinf(p))
        j["p"] = "inf";
    else
        j["p"] = p;
    if (std::isinf(q))
        j["q"] = "inf";
    else
        j["q"] = q;
    j["weight_kind"] = w.kind == Weight::Kind::Full ? "vs_phase_space" : "one_otimes_vs";
    j["s"] = w.s;
    j["value"] = value;
    j["grid_meta"] = grid_meta;
    atomic_write(path, j.dump(2) + "\n");
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<GaborMatrixSample>& samples, double m, std::size_t N,
                     double tau, const OutputMeta& meta) {
    std::ostringstream out;
    out << "# meta " << meta.to_json() << "\n";
    const std::size_t d = samples.empty() ? 1 : samples.front().z.dim();
    for (std::size_t ax = 0; ax < d; ++ax) out << "z_pos" << ax << ",";
    for (std::size_t ax = 0; ax < d; ++ax) out << "z_freq" << ax << ",";
    for (std::size_t ax = 0; ax < d; ++ax) out << "y_pos" << ax << ",";
    for (std::size_t ax = 0; ax < d; ++ax) out << "y_freq" << ax << ",";
    out << "abs_direct,identity,bound_value,ratio\n";
    for (const auto& s : samples) {
        for (double v : s.z.pos) out << format_double(v) << ",";
        for (double v : s.z.freq) out << format_double(v) << ",";
        for (double v : s.y.pos) out << format_double(v) << ",";
        for (double v : s.y.freq) out << format_double(v) << ",";
        const double mag = std::abs(s.direct_value);
        const PhasePoint diff = s.y - s.z;
        const double bound = std::pow(t_tau(s.z, s.y, tau).bracket(), m) /
                             std::pow(diff.bracket(), 2.0 * static_cast<double>(N));
        const double ratio = std::abs(mag - s.identity_magnitude) / (s.identity_magnitude + 1e-12);
        out << format_double(mag) << "," << format_double(s.identity_magnitude) << ","
            << format_double(bound) << "," << format_double(ratio) << "\n";
    }
    atomic_write(path, out.str());
}

void write_decay_fit_json(const std::filesystem::path& path, const DecayFit& fit, double tau,
                          double m, std::size_t N, const OutputMeta& meta) {
    ordered_json j;
    j["meta"] = meta_obj(meta);
    j["tau"] = tau;
    j["m"] = m;
    j["N"] = N;
    j["C"] = fit.C;
    if (fit.slope_valid) j["slope"] = fit.slope;
    if (fit.corollary_valid) j["corollary_C"] = fit.corollary_C;
    j["sample_count"] = fit.sample_count;
    j["box_meta"] = fit.box_meta;
    atomic_write(path, j.dump(2) + "\n");
}

void write_trajectory_json(const std::filesystem::path& path, const Trajectory& tr,
                           const OutputMeta& meta) {
    ordered_json j;
    j["meta"] = meta_obj(meta);
    j["T"] = tr.grid.T;
    j["M"] = tr.grid.M;
    const auto& basis = *tr.states.front().basis;
    j["K"] = basis.max_degree();
    ordered_json nodes = ordered_json::array();
    const auto& idx = basis.indices();
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
        ordered_json node;
        node["t"] = tr.grid.node(i);
        ordered_json arr = ordered_json::array();
        for (std::size_t c = 0; c < tr.states[i].coeffs.size(); ++c) {
            ordered_json e;
            e["multi_index"] = idx[c].entries;
            e["re"] = tr.states[i].coeffs[c].real();
            e["im"] = tr.states[i].coeffs[c].imag();
            arr.push_back(std::move(e));
        }
        node["coefficients"] = std::move(arr);
        nodes.push_back(std::move(node));
    }
    j["states"] = std::move(nodes);
    atomic_write(path, j.dump() + "\n");
}

void write_trajectory_diagnostics_csv(const std::filesystem::path& path, const Trajectory& tr,
                                      const std::vector<double>& modnorms,
                                      const OutputMeta& meta) {
    std::ostringstream out;
    out << "# meta " << meta.to_json() << "\n";
    out << "t,l2_norm,mod_norm_p1q1s1\n";
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
        out << format_double(tr.grid.node(i)) << "," << format_double(tr.states[i].l2_norm())
            << ",";
        if (i < modnorms.size())
            out << format_double(modnorms[i]);
        else
            out << "nan";
        out << "\n";
    }
    atomic_write(path, out.str());
}

}  // namespace modheat
