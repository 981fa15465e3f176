#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hstrace {

// Coefficients grow under group-ring convolution; everything integer-valued
// uses arbitrary precision.
using Int = boost::multiprecision::cpp_int;

}  // namespace hstrace
