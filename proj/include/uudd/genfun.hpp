#pragma once

// Closed-form generating functions for the p_n(k) triangle, computed in
// scaled variables so every coefficient stays rational: the bivariate series
// returned by table_series satisfies
//
//     coeff(n+k, n-k) = 2^n * p_n(k),
//
// and equals cosh(x-y) / (cosh(x+y) - (x+y) sinh(x+y)). The published
// unscaled form is recovered by substituting x -> x/sqrt2, y -> y/sqrt2,
// which this kernel never needs to perform.
//
// Also here: the skew derivative d/dx - d/dy whose square acts on the table
// series as multiplication by 4, the Seidel-array closed forms (recurrence
// a_{i+1,j} - a_{i,j+1} = 2 a_{i,j} <=> generating function e^{-2y} A(x+y)),
// and the univariate specializations used by the identity checks.

#include <uudd/numeric.hpp>
#include <uudd/pnk.hpp>
#include <uudd/series1.hpp>
#include <uudd/series2.hpp>

#include <span>

namespace uudd::genfun {

// cosh(x-y) / (cosh(x+y) - (x+y) sinh(x+y)) to total degree 2*n_max.
// Coefficients of odd total degree vanish and the series is symmetric in
// its two indices.
fps::Series2 table_series(int n_max);

// coeff(n+k, n-k) / 2^n, checked to be a nonnegative integer.
Integer extract_pnk(const fps::Series2& table, int n, int k);

// d/dx - d/dy (order drops by one).
fps::Series2 skew_derivative(const fps::Series2& s);

// odd = (1/2) * skew_derivative(table); full = table + odd. full satisfies
// skew_derivative(full) = 2*full, i.e. the Seidel relation, and splits back
// into table (even total degrees) and odd.
struct SeidelCompanion {
    fps::Series2 odd;
    fps::Series2 full;
};
SeidelCompanion seidel_companion(const fps::Series2& table);

// a(i+1,j) - a(i,j+1) = 2*a(i,j) wherever all three entries exist.
bool satisfies_seidel_relation(const fps::Series2& a);

// a(j,i) = (-1)^{i+j} a(i,j) for all i+j <= order.
bool sign_symmetric(const fps::Series2& a);

// Fill the triangular array from its first row a_{i,0} = seed[i] by
// a_{i,j+1} = a_{i+1,j} - 2*a_{i,j}, and independently build the closed form
// e^{-2y} A(x+y) with A(x) = sum seed[i] x^i/i!. The two are checked equal
// coefficient-wise (a mismatch would be a kernel bug and throws logic_error);
// both are returned so callers can compare them again externally.
struct SeidelFill {
    fps::Series2 array;        // recurrence-filled, entries as EGF coefficients
    fps::Series2 closed_form;  // e^{-2y} A(x+y)
};
SeidelFill seidel_from_seed(std::span<const Rational> seed);

// For seeds whose induced array is sign-symmetric (checked; throws
// sign_symmetry_error otherwise): B(x) = e^{-x} A(x) has even powers only,
// the even-total-degree part of the array equals cosh(x-y) B(x+y) and the
// odd part equals sinh(x-y) B(x+y).
struct SeidelSplit {
    fps::Series2 array;
    fps::Series1 even_factor;  // B
    fps::Series2 even;
    fps::Series2 odd;
};
SeidelSplit seidel_even_odd_split(std::span<const Rational> seed);

// cosh x / (cosh x - x sinh x); coefficient at x^{2n}/(2n)! is 2^n p_n(n).
fps::Series1 diag_series(int order);

// sinh x / (cosh x - x sinh x); coefficient at x^{2n+1}/(2n+1)! is 2^n V_n,
// where V_n counts up-up-or-down-down permutations of length 2n+1.
fps::Series1 uudd_series(int order);

// coeff(2n+1) / 2^n from uudd_series output, checked integral and positive.
Integer extract_V(const fps::Series1& u, int n);

// 2 p_n(n) = 2n V_{n-1} for 1 <= n <= n_max.
bool verify_w_relation(const pnk::Table& t, int n_max);

// sum_k p_n(k) = V_n for 0 <= n <= n_max.
bool verify_beta_row_sum(const pnk::Table& t, int n_max);

}  // namespace uudd::genfun
