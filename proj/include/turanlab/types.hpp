#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace turan {

// All copy counts are exact arbitrary-precision integers; closed-form Turán
// counts overflow 64 bits already at modest n.
using Count = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "3" for integers, "3/2" otherwise.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

Count binomial(int n, int k);
Count falling_factorial(int n, int k);

} // namespace turan
