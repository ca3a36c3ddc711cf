#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "abh/types.hpp"

namespace abh {

/// Complex literal: "a", "a+bi", "a-bi" or "bi" with decimal reals.
/// Throws DomainError on anything else.
Complex parse_complex(std::string_view text);

/// Inclusive grid "start:stop:step" (step > 0, at least one point).
/// Values are rounded to 1e-12 so that 0 is hit exactly.
std::vector<double> parse_grid(std::string_view text);

/// Entry point of the abh tool. Exit codes: 0 success, 1 failed suite or
/// numerical failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abh
