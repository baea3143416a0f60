#pragma once

#include <string>

#include "fcg/dense.hpp"

namespace fcg {

// Text format: first line "m n", then m rows of n entries, then one line of
// m entries for b. '#' starts a comment anywhere; blank lines are skipped.
// Numbers must be finite decimals. ParseError carries the 1-based physical
// line number.
LinearSystem parse_system(const std::string& text);
std::string serialize_system(const LinearSystem& sys);
LinearSystem load_system_file(const std::string& path);

// shortest decimal form that parses back to the same double
std::string format_double(double v);

}  // namespace fcg
