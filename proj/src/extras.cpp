#include <uudd/extras.hpp>

#include <uudd/errors.hpp>
#include <uudd/series1.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace uudd::extras {

using fps::Series1;
using fps::Series2;

namespace {

// sum_{j=0}^{depth} t^j (j+1)^m j^n, with 0^0 = 1.
TPoly power_sum(int m, int n, int depth) {
    std::vector<Integer> c(static_cast<size_t>(depth) + 1);
    for (int j = 0; j <= depth; ++j) {
        c[static_cast<size_t>(j)] =
            ipow(j + 1, static_cast<unsigned>(m)) * (n == 0 ? Integer(1) : ipow(j, static_cast<unsigned>(n)));
    }
    return TPoly(std::move(c));
}

TPoly assemble_eulerian(int m, int n, const TPoly& jsum) {
    int d = m + n;
    return (one_minus_t_pow(d + 1, d) * jsum).truncated(d);
}

}  // namespace

Series2 entringer_series(int order) {
    Series1 cos1 = fps::elementary("cos", order);
    Series1 sin1 = fps::elementary("sin", order);
    Series2 numerator = fps::compose_linear(cos1, 0, 1, order) + fps::compose_linear(sin1, 0, 1, order);
    Series2 denominator = fps::compose_linear(cos1, 1, 1, order);
    return numerator / denominator;
}

Integer entringer_count(const Series2& s, int m, int n) {
    const Rational& c = s.coeff(m, n);
    if (!is_integral(c) || c < 0) {
        throw nonintegral_error("coefficient (" + std::to_string(m) + "," + std::to_string(n) +
                                ") is not a nonnegative integer");
    }
    return numer(c);
}

TPoly eulerian_poly(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
    int d = m + n;
    TPoly shallow = assemble_eulerian(m, n, power_sum(m, n, d));
    TPoly deep = assemble_eulerian(m, n, power_sum(m, n, 2 * d + 2));
    if (!(shallow == deep)) {
        throw std::logic_error("truncated j-sum did not stabilize for A_{" + std::to_string(m) +
                               "," + std::to_string(n) + "}");
    }
    return deep;
}

bool eulerian_matches_oracle(int m, int n, const TPoly& candidate, const permlab::Limits& lim) {
    int d = m + n;
    // Route 1: direct expansion of e^x * e^{j(x+y)} as an EGF product; its
    // (m,n) coefficient reaches (j+1)^m j^n through binomial convolution.
    Series1 exp1 = fps::elementary("exp", d);
    Series2 ex = fps::compose_linear(exp1, 1, 0, d);
    TPoly direct_jsum;
    for (int j = 0; j <= 2 * d + 2; ++j) {
        Series2 term = ex * fps::compose_linear(exp1, j, j, d);
        const Rational& c = term.coeff(m, n);
        if (!is_integral(c)) return false;
        if (numer(c) != ipow(j + 1, static_cast<unsigned>(m)) *
                            (n == 0 ? Integer(1) : ipow(j, static_cast<unsigned>(n)))) {
            return false;
        }
        direct_jsum.add_term(j, numer(c));
    }
    if (!(assemble_eulerian(m, n, direct_jsum) == candidate)) return false;

    // Route 2: brute-force descent counting, feasibility permitting.
    if (m + n + 1 <= lim.fixed_last_length) {
        if (!(permlab::brute_descent_poly_ending_zero(m, n, lim) == candidate)) return false;
    }
    return true;
}

bool verify_eulerian_identity(int max_total) {
    for (int m = 0; m <= max_total; ++m) {
        for (int n = 0; m + n <= max_total; ++n) {
            if (!eulerian_matches_oracle(m, n, eulerian_poly(m, n))) return false;
        }
    }
    return true;
}

}  // namespace uudd::extras
