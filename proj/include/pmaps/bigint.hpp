#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pmaps {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(long n, long k);
BigInt factorial(long n);
// Number of bits needed to write any value in [0, count); 0 when count <= 1.
unsigned ceil_log2(const BigInt& count);

}  // namespace pmaps
