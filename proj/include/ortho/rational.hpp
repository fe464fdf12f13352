#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ortho {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Formats a rational as "p" when integral, otherwise "p/q".
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rat rat_parse(std::string_view text);

double rat_to_double(const Rat& r);

/// 17-significant-digit formatting; the single float-to-text path so that
/// every report and golden file agrees bit for bit.
std::string format_double(double x);

}  // namespace ortho
