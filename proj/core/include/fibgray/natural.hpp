#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibgray {

/// Unbounded non-negative integer used for sequence terms, values and
/// remainders.
using Natural = boost::multiprecision::cpp_int;

/// Parses a base-10 non-negative integer of any size. Throws ParseError.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& n);

}  // namespace fibgray
