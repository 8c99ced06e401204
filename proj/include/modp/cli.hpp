#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modp::cli {

/// Runs one command line (without the program name) and returns the exit
/// code: 0 ok, 1 failed check, 2 parse or invalid input, 3 cap exceeded,
/// 4 precondition, 5 I/O.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable consulted when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "MODP_HECKE_CACHE_DIR";

}  // namespace modp::cli
