#pragma once

// Truncated bivariate formal power series over exact rationals, truncated by
// total degree and stored in the EGF convention: coeff(i,j) multiplies
// x^i/i! * y^j/j!. Storage is a flat triangle; every (i,j) with i+j <= order
// is present.
//
// Only linear substitutions are supported (compose_linear); in the EGF
// convention f(a*x + b*y) has the closed-form coefficient f_{i+j} a^i b^j,
// which is all the closed forms here require.

#include <uudd/numeric.hpp>
#include <uudd/series1.hpp>

#include <vector>

namespace uudd::fps {

class Series2 {
public:
    // Zero series truncated at the given total degree (inclusive).
    explicit Series2(int order);

    int order() const { return order_; }
    const Rational& coeff(int i, int j) const;  // throws std::out_of_range past the order
    void set_coeff(int i, int j, Rational v);

    bool operator==(const Series2& o) const { return order_ == o.order_ && c_ == o.c_; }

private:
    size_t index(int i, int j) const;

    int order_;
    std::vector<Rational> c_;  // degree-major triangle: (i,j) at (i+j)(i+j+1)/2 + j
};

Series2 operator+(const Series2& a, const Series2& b);
Series2 operator-(const Series2& a, const Series2& b);
Series2 operator*(const Series2& a, const Rational& s);
Series2 operator*(const Rational& s, const Series2& a);

// EGF product: r_{i,j} = sum C(i,p) C(j,q) a_{p,q} b_{i-p,j-q}.
Series2 operator*(const Series2& a, const Series2& b);

// Exact deconvolution by increasing total degree; the divisor must have a
// nonzero constant term.
Series2 operator/(const Series2& a, const Series2& b);

Series2 truncated(const Series2& s, int order);
bool agree(const Series2& a, const Series2& b);

// EGF-shift derivatives: (d/dx s)(i,j) = s(i+1,j), order drops by one.
Series2 partial_x(const Series2& s);
Series2 partial_y(const Series2& s);

// Keep only coefficients of even (resp. odd) total degree.
Series2 even_part(const Series2& s);
Series2 odd_part(const Series2& s);

// Swap the roles of x and y.
Series2 transpose(const Series2& s);

// f(a*x + b*y) truncated at total degree `order`; needs f.order() >= order.
Series2 compose_linear(const Series1& f, const Rational& a, const Rational& b, int order);

// The degree-1 series x + y.
Series2 x_plus_y(int order);

// s(x, 0) as a univariate series of the same order.
Series1 restrict_y0(const Series2& s);

}  // namespace uudd::fps
