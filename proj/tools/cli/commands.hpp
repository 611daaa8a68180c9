#ifndef FRACDIFF_CLI_COMMANDS_HPP
#define FRACDIFF_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "config.hpp"

namespace fdcli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // unexpected errors
inline constexpr int kExitConfig = 2;   // config / usage errors
inline constexpr int kExitNumeric = 3;  // numerical failure (instability, non-convergence)

// A C-API call failed for numerical reasons.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed; // --seed, overrides [global] seed
    std::string format = "csv";
};

// Dispatch by subcommand name; throws ConfigError / NumericError.
int run_command(const std::string& name, const RawConfig& cfg, const GlobalOptions& opts);

} // namespace fdcli

#endif
