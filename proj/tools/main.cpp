// modheat -- fractional Hermite heat semigroup, Gabor/time-frequency analysis
// and the Picard solver for the semilinear Cauchy problem, with named
// verification suites.
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"
#include "modheat/errors.hpp"
#include "modheat/evolution.hpp"
#include "modheat/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"modheat: Hermite heat semigroup and time-frequency toolkit"};
    app.set_version_flag("--version", std::string(modheat::kVersion));
    app.require_subcommand(1);

    modheat::cli::GlobalOpts opts;
    const std::vector<std::string> commands = {
        "propagate", "solve", "stft", "modnorm", "wigner", "gabor-matrix",
        "seminorm", "decay-fit", "verify", "time-search", "suites"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", opts.config, "JSON parameter file");
        sub->add_option("--out", opts.out, "output directory");
        sub->add_option("--seed", opts.seed, "seed for randomized selections");
        sub->add_option("--tau", opts.tau, "quantization parameter in [0,1]");
        sub->add_option("--beta", opts.beta, "fractional power in (0,1]");
        sub->add_option("--symbol", opts.symbol, "symbol preset name");
        sub->add_option("--suite", opts.suite, "verification suite name");
        sub->add_option("--rays", opts.rays, "ray directions for matrix sweeps");
        sub->add_flag("--json", opts.json, "machine-readable stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return modheat::cli::run_command(command, opts);
    } catch (const modheat::ConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const modheat::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const modheat::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
