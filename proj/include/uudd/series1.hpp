#pragma once

// Truncated univariate formal power series over exact rationals, stored in
// the EGF convention: coeff(i) is the number multiplying x^i/i!. This makes
// the product a binomial convolution and keeps every closed form in this
// project free of irrational scale factors.
//
// Binary operations truncate to the minimum of the operands' orders; the
// effective order is carried by the result.

#include <uudd/numeric.hpp>

#include <string_view>
#include <vector>

namespace uudd::fps {

class Series1 {
public:
    // Zero series of the given truncation order (inclusive).
    explicit Series1(int order);
    // coeffs.size() must be order+1.
    Series1(int order, std::vector<Rational> coeffs);

    static Series1 constant(const Rational& v, int order);
    // The series x (coefficient 1 at x^1/1!), truncated at the given order.
    static Series1 monomial_x(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;  // throws std::out_of_range past the order
    void set_coeff(int i, Rational v);

    bool operator==(const Series1& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

Series1 operator+(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a, const Series1& b);
Series1 operator*(const Series1& a, const Rational& s);
Series1 operator*(const Rational& s, const Series1& a);

// EGF product: r_k = sum_i C(k,i) a_i b_{k-i}.
Series1 operator*(const Series1& a, const Series1& b);

// Unique q with b*q = a through the common order, by exact forward
// deconvolution. Requires b to have a nonzero constant term.
Series1 operator/(const Series1& a, const Series1& b);

Series1 truncated(const Series1& s, int order);

// Coefficient-wise equality through the minimum available order.
bool agree(const Series1& a, const Series1& b);

// f(a*x): coefficient i becomes f_i * a^i.
Series1 compose_scale(const Series1& f, const Rational& a);

// Exact EGF coefficients of a named series: one of
// exp | sinh | cosh | tanh | sin | cos. Unknown names throw.
Series1 elementary(std::string_view name, int order);

}  // namespace uudd::fps
