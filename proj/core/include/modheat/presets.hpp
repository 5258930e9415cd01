// Named initial-data presets and the seeded Gaussian-class test family used
// by the verification suites.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modheat/grid.hpp"

namespace modheat {

// name is one of "gauss", "hermite:k", "chirp"; center/modulation default to
// the origin when empty
GridFunction initial_data_preset(const std::string& name, const GridGeometry& geom,
                                 double scale = 1.0, std::vector<double> center = {},
                                 std::vector<double> modulation = {});

// Shifted, dilated and (gently) modulated unit Gaussians with parameters drawn
// from the seeded generator; deterministic across runs and across grids.
std::vector<GridFunction> gaussian_class_test_set(const GridGeometry& geom, std::size_t count,
                                                  std::uint64_t seed);

}  // namespace modheat
