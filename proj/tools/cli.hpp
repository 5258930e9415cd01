// Command dispatch for the modheat tool. Kept as a library so the command
// runners are testable without spawning processes.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace modheat::cli {

struct GlobalOpts {
    std::filesystem::path out = "out";
    std::filesystem::path config;  // command-specific JSON parameters
    std::uint64_t seed = 0;
    bool json = false;             // machine-readable stdout
    double tau = 0.5;
    double beta = 1.0;
    std::string symbol = "gauss";
    std::string suite;
    unsigned rays = 8;
};

// exit codes: 0 success, 1 failed verification, 2 schema/validation,
// 3 numerical non-convergence, 4 I/O failure
int run_command(const std::string& command, const GlobalOpts& opts);

}  // namespace modheat::cli
