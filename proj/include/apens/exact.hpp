#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace apens {

// Counts are kept exact: m! and N_m leave the 64-bit range at m >= 21.
using ExactCount = boost::multiprecision::cpp_int;

// Shares are evaluated as exact rationals first and converted to double last.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace apens
