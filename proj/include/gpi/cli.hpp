#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gpi/maps.hpp"

namespace gpi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInput = 2;

/// Runs one command; args[0] is the program name. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated map specs: id, zero, frob, frob[j], lmul:<elem>, rmul:<elem>, transpose, [[matrix rows]].
std::vector<AdditiveMap> parse_maps(const std::string& spec, const Algebra& A);

}  // namespace gpi::cli
