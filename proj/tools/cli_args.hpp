#pragma once

// Range and value syntax shared by the phentropy subcommands.
//
//   "5"          single value
//   "0:10"       inclusive range, step 1
//   "2:7:0.5"    inclusive range with step
//   "2,3,4,5,10" explicit list (items may themselves be ranges)
//   "2/3"        fraction, for q only

#include <string>
#include <vector>

#include "phentropy/states.hpp"
#include "phentropy/table.hpp"

namespace phentropy::cli {

/// Throws ValidationError(field) on malformed input, empty or descending
/// ranges, and non-integer values.
std::vector<int> parse_int_range(const std::string& text, const std::string& field);
std::vector<double> parse_real_range(const std::string& text, const std::string& field);

/// A decimal number or a fraction a/b.
double parse_real(const std::string& text, const std::string& field);

Space parse_space(const std::string& s);
Mode parse_mode(const std::string& s);
MethodChoice parse_method(const std::string& s);

}  // namespace phentropy::cli
