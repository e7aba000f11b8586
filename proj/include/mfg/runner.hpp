#pragma once

#include "mfg/config.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace mfg {

// Executes one batch command against a parsed config, writing report files
// into out_dir. Returns the process exit status contract: 0 success,
// 1 error (non-convergence, failed verification), 2 hypothesis failure
// (smallness conditions unmet). Throws on I/O errors and invalid commands.
int run_command(const FullConfig& cfg, const std::string& command,
                const std::string& out_dir, std::optional<std::uint64_t> seed_override,
                int threads, std::string& message);

} // namespace mfg
