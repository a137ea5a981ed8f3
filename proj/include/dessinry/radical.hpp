#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace dessinry {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Evaluates a closed form built from integers, + - * /, ^ with an integer
// exponent, parentheses, sqrt(e), root4(e) and root(k, e), in 50-digit
// arithmetic. Throws Error(Parse) on malformed input and Error(InvalidArgument)
// for even roots of negative values or division by zero.
BigFloat evaluate_radical(const std::string& expression);

}  // namespace dessinry
