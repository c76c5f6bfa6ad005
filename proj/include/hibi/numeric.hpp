#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace hibi {

// Exact arithmetic everywhere: divisor coefficients and certificate entries
// are unbounded integers, polytope membership is decided over the rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

}  // namespace hibi
