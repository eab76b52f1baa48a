#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schub {

// Exact arbitrary-precision integer used for all coefficients and ranks.
using Int = boost::multiprecision::cpp_int;

} // namespace schub
