#pragma once

// Two more last-entry-fixed bivariate families, each pinned against a
// brute-force oracle:
//
//   * alternating permutations of {-m,...,n} ending with 0 (Entringer
//     numbers), generating function (cos y + sin y)/cos(x+y);
//   * descent polynomials A_{m,n}(t) over permutations of {-m,...,n} ending
//     with 0, via sum_{m,n} A_{m,n}(t)/(1-t)^{m+n+1} x^m/m! y^n/n!
//     = e^x / (1 - t e^{x+y}), whose (m,n) EGF coefficient is
//     sum_j t^j (j+1)^m j^n.

#include <uudd/numeric.hpp>
#include <uudd/permlab.hpp>
#include <uudd/series2.hpp>
#include <uudd/tpoly.hpp>

namespace uudd::extras {

// (cos y + sin y) / cos(x+y) to total degree `order`; the (m,n) EGF
// coefficient counts alternating permutations of {-m,...,n} ending with 0.
fps::Series2 entringer_series(int order);

// EGF coefficient (m,n), checked to be a nonnegative integer.
Integer entringer_count(const fps::Series2& s, int m, int n);

// A_{m,n}(t) = (1-t)^{m+n+1} sum_j t^j (j+1)^m j^n truncated at degree m+n;
// the truncated j-sum is evaluated at two depths and must stabilize.
TPoly eulerian_poly(int m, int n);

// Check one candidate polynomial against both independent routes: the
// brute-force descent count (when within feasibility) and a directly
// expanded e^x * sum_j t^j e^{j(x+y)} whose (m,n) coefficients are formed by
// binomial convolution rather than the power formula.
bool eulerian_matches_oracle(int m, int n, const TPoly& candidate,
                             const permlab::Limits& lim = {});

// eulerian_matches_oracle over every m+n <= max_total with the closed-form
// polynomials.
bool verify_eulerian_identity(int max_total);

}  // namespace uudd::extras
