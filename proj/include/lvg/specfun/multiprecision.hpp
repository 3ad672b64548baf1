#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lvg {

// wide enough that the 2^k cancellation inside the unit-argument 3F2 terms and
// the conditioning of the Levin table both leave > 30 correct digits
using wide_real = boost::multiprecision::cpp_bin_float_100;

} // namespace lvg
