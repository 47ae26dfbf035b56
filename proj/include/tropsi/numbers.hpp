#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tropsi {

// Exact arithmetic everywhere: weights, ray coordinates and cone weights are
// integers or rationals, never floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace tropsi
