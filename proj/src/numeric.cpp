#include <uudd/numeric.hpp>

#include <uudd/errors.hpp>

namespace uudd {

Integer to_integer(const Rational& r) {
    if (!is_integral(r)) {
        throw nonintegral_error("expected an integer, got " + rat_str(r));
    }
    return numer(r);
}

Integer ipow(Integer base, unsigned exp) {
    Integer result = 1;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

Integer pow2(unsigned exp) {
    return Integer(1) << exp;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<Integer> binomial_row(unsigned n) {
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at every step
        row[k] = row[k - 1] * (n - k + 1) / k;
    }
    return row;
}

std::vector<std::vector<Integer>> pascal_triangle(unsigned n) {
    std::vector<std::vector<Integer>> rows(n + 1);
    rows[0] = {1};
    for (unsigned i = 1; i <= n; ++i) {
        rows[i].resize(i + 1);
        rows[i][0] = rows[i][i] = 1;
        for (unsigned j = 1; j < i; ++j) {
            rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
        }
    }
    return rows;
}

std::string rat_str(const Rational& r) {
    std::string s = numer(r).str();
    if (denom(r) != 1) {
        s += "/" + denom(r).str();
    }
    return s;
}

}  // namespace uudd
