#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace frobenia {

/// Exit codes: 0 success, 1 verification failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "L" or "L,factor" where factor is a polynomial in x ("x-2",
/// "x^2+x+1") or a coefficient list "[5,1]" (low to high), reduced mod L.
std::pair<std::uint64_t, std::vector<std::uint64_t>> parse_prime_option(const std::string& text);

}  // namespace frobenia
