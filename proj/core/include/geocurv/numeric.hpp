#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace geocurv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_to_string(const Rational& r);

}  // namespace geocurv
