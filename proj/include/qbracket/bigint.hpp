#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qbracket {

// Every value in this library is an exact signed integer; there is no
// floating point anywhere. p(n) and sigma_alpha(n) overflow fixed-width
// types almost immediately, so the coefficient domain is arbitrary
// precision throughout.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace qbracket
