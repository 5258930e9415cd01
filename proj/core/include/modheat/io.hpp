// File emission and parsing. Every emitted file starts with a JSON metadata
// header (version, config hash, grid parameters, float-environment note);
// CSV files carry it as a '# meta ' comment line, JSON files as a "meta"
// member. Writes are atomic: temp file in the target directory, then rename.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "modheat/evolution.hpp"
#include "modheat/hermite.hpp"
#include "modheat/quantize.hpp"
#include "modheat/stft.hpp"

namespace modheat {

struct OutputMeta {
    std::string config_hash = "0";
    std::string grid_desc;
    // serialized alongside version and the float disclaimer
    std::string to_json() const;
};

std::string format_double(double v);  // round-trip-exact, %.17g

void atomic_write(const std::filesystem::path& path, const std::string& content);

void write_grid_function_csv(const std::filesystem::path& path, const GridFunction& f,
                             const OutputMeta& meta);
GridFunction read_grid_function_csv(const std::filesystem::path& path);

void write_spectral_field_json(const std::filesystem::path& path, const SpectralField& c,
                               const OutputMeta& meta);
SpectralField read_spectral_field_json(const std::filesystem::path& path, BasisPtr basis);

void write_stft_csv(const std::filesystem::path& path, const STFTTable& table,
                    const OutputMeta& meta);

void write_norm_json(const std::filesystem::path& path, double p, double q, const Weight& w,
                     double value, const std::string& grid_meta, const OutputMeta& meta);

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<GaborMatrixSample>& samples, double m, std::size_t N,
                     double tau, const OutputMeta& meta);

void write_decay_fit_json(const std::filesystem::path& path, const DecayFit& fit, double tau,
                          double m, std::size_t N, const OutputMeta& meta);

void write_trajectory_json(const std::filesystem::path& path, const Trajectory& tr,
                           const OutputMeta& meta);

// rows (t, l2_norm, mod_norm_p1q1s); the modulation-norm column is optional
void write_trajectory_diagnostics_csv(const std::filesystem::path& path, const Trajectory& tr,
                                      const std::vector<double>& modnorms,
                                      const OutputMeta& meta);

}  // namespace modheat
