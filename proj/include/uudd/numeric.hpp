#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and rationals,
// plus the small combinatorial helpers the series kernel needs. Entries of
// the p_n(k) triangle grow factorially, so fixed-width integers overflow
// around n = 10; everything downstream uses these types.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace uudd {

using Integer = boost::multiprecision::cpp_int;

// Canonical form by construction: lowest terms, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denom(r) == 1; }

// Exact conversion; throws nonintegral_error if r has a nontrivial denominator.
Integer to_integer(const Rational& r);

Integer ipow(Integer base, unsigned exp);
Integer pow2(unsigned exp);
Integer factorial(unsigned n);

// Row n of Pascal's triangle: C(n,0..n).
std::vector<Integer> binomial_row(unsigned n);

// Rows 0..n of Pascal's triangle.
std::vector<std::vector<Integer>> pascal_triangle(unsigned n);

// "7", "-3/4"; integers print without the "/1".
std::string rat_str(const Rational& r);

}  // namespace uudd
