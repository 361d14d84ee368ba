#pragma once

// Dense polynomial in a formal variable t with arbitrary-precision integer
// coefficients. Used for the descent-counting polynomials A_{m,n}(t).

#include <uudd/numeric.hpp>

#include <string>
#include <vector>

namespace uudd {

class TPoly {
public:
    TPoly() = default;  // the zero polynomial
    explicit TPoly(std::vector<Integer> coeffs);

    static TPoly constant(Integer c);
    static TPoly monomial(int degree, Integer c = 1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Zero beyond the degree.
    Integer coeff(int d) const;

    void add_term(int d, const Integer& v);

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const { return c_ == o.c_; }

    TPoly truncated(int max_degree) const;

    Integer eval(const Integer& t) const;

    // "t + 2*t^2", "1", "0"
    std::string str() const;

private:
    void normalize();

    std::vector<Integer> c_;  // c_[d] multiplies t^d; no trailing zeros
};

// (1-t)^e truncated at max_degree.
TPoly one_minus_t_pow(int e, int max_degree);

}  // namespace uudd
