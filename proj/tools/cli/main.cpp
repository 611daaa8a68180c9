#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"fracdiff: fractional-diffusion simulators and reference solutions"};
    app.require_subcommand(1);

    fdcli::GlobalOptions opts;
    std::uint64_t seed_value = 0;
    bool seed_given = false;

    const char* commands[] = {"sample", "ml-eval", "green",   "solve",
                              "agents", "ctrw",    "compare", "mass-report"};
    const char* descriptions[] = {
        "draw stable / one-sided / subgaussian variates",
        "evaluate the Mittag-Leffler function, derivatives, or the jump-count law",
        "tabulate Green functions and stable densities",
        "run the explicit Riesz-fractional scheme and emit snapshots",
        "run the 2-d fractional SDE ensemble",
        "run the continuous-time random walk",
        "compare agent positions against a macro snapshot and the analytic density",
        "trace the solver mass step by step",
    };
    for (int i = 0; i < 8; ++i) {
        auto* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("--config", opts.config_path, "key = value configuration file")
            ->required();
        sub->add_option("--seed", seed_value, "seed for randomized commands")
            ->each([&seed_given](const std::string&) { seed_given = true; });
        sub->add_option("--out", opts.out_dir, "output directory (default .)");
        sub->add_option("--format", opts.format, "output format (csv)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? fdcli::kExitConfig : fdcli::kExitOk;
    }

    if (seed_given) opts.seed = seed_value;
    std::string command = app.get_subcommands().front()->get_name();

    try {
        fdcli::RawConfig cfg = fdcli::RawConfig::parse_file(opts.config_path);
        return fdcli::run_command(command, cfg, opts);
    } catch (const fdcli::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return fdcli::kExitConfig;
    } catch (const fdcli::NumericError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return fdcli::kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return fdcli::kExitFailure;
    }
}
