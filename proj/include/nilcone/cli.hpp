#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nilcone/solver.hpp"

namespace nilcone::cli {

enum ExitCode : int { pass = 0, usage_error = 1, prediction_mismatch = 2 };

/// Monic polynomial in t with rational coefficients, e.g. "t^2-3/2*t+1".
/// Throws std::invalid_argument on malformed or non-monic input.
[[nodiscard]] CasimirPolynomial parse_polynomial(std::string_view text);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcone::cli
