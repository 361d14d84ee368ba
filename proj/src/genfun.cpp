#include <uudd/genfun.hpp>

#include <uudd/errors.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace uudd::genfun {

using fps::Series1;
using fps::Series2;

namespace {

// cosh u - u sinh u evaluated at u = x (univariate denominator shared by
// diag_series and uudd_series).
Series1 denom1(int order) {
    return fps::elementary("cosh", order) -
           Series1::monomial_x(order) * fps::elementary("sinh", order);
}

Series2 fill_from_seed(std::span<const Rational> seed) {
    if (seed.empty()) throw std::invalid_argument("seed must be nonempty");
    int order = static_cast<int>(seed.size()) - 1;
    Series2 a(order);
    for (int i = 0; i <= order; ++i) a.set_coeff(i, 0, seed[static_cast<size_t>(i)]);
    for (int j = 0; j < order; ++j) {
        for (int i = 0; i + j + 1 <= order; ++i) {
            a.set_coeff(i, j + 1, a.coeff(i + 1, j) - 2 * a.coeff(i, j));
        }
    }
    return a;
}

}  // namespace

Series2 table_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    int order = 2 * n_max;
    Series1 cosh1 = fps::elementary("cosh", order);
    Series1 sinh1 = fps::elementary("sinh", order);
    Series2 numerator = fps::compose_linear(cosh1, 1, -1, order);
    Series2 denominator = fps::compose_linear(cosh1, 1, 1, order) -
                          fps::x_plus_y(order) * fps::compose_linear(sinh1, 1, 1, order);
    return numerator / denominator;
}

Integer extract_pnk(const Series2& table, int n, int k) {
    if (n < 0 || k < -n || k > n) throw std::out_of_range("need |k| <= n and n >= 0");
    if (2 * n > table.order()) {
        throw std::out_of_range("n = " + std::to_string(n) + " needs order >= " +
                                std::to_string(2 * n));
    }
    Rational scaled = table.coeff(n + k, n - k) / Rational(pow2(static_cast<unsigned>(n)));
    if (!is_integral(scaled) || scaled < 0) {
        throw nonintegral_error("coefficient (" + std::to_string(n + k) + "," +
                                std::to_string(n - k) + ") does not descale to a nonnegative integer");
    }
    return numer(scaled);
}

Series2 skew_derivative(const Series2& s) {
    return fps::partial_x(s) - fps::partial_y(s);
}

SeidelCompanion seidel_companion(const Series2& table) {
    if (table.order() < 2) throw std::invalid_argument("need order >= 2");
    Series2 odd = skew_derivative(table) * Rational(1, 2);
    Series2 full = fps::truncated(table, odd.order()) + odd;
    return {std::move(odd), std::move(full)};
}

bool satisfies_seidel_relation(const Series2& a) {
    for (int d = 0; d + 1 <= a.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            if (a.coeff(i + 1, j) - a.coeff(i, j + 1) != 2 * a.coeff(i, j)) return false;
        }
    }
    return true;
}

bool sign_symmetric(const Series2& a) {
    for (int d = 0; d <= a.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            const Rational& mirror = a.coeff(j, i);
            if (d % 2 == 0 ? mirror != a.coeff(i, j) : mirror != -a.coeff(i, j)) return false;
        }
    }
    return true;
}

SeidelFill seidel_from_seed(std::span<const Rational> seed) {
    Series2 array = fill_from_seed(seed);
    int order = array.order();
    Series1 a_series(order, std::vector<Rational>(seed.begin(), seed.end()));
    Series2 closed = fps::compose_linear(fps::elementary("exp", order), 0, -2, order) *
                     fps::compose_linear(a_series, 1, 1, order);
    if (!fps::agree(array, closed)) {
        throw std::logic_error("Seidel recurrence fill disagrees with e^{-2y} A(x+y)");
    }
    return {std::move(array), std::move(closed)};
}

SeidelSplit seidel_even_odd_split(std::span<const Rational> seed) {
    Series2 array = fill_from_seed(seed);
    int order = array.order();
    if (!sign_symmetric(array)) {
        throw sign_symmetry_error("seed's induced array violates a(j,i) = (-1)^{i+j} a(i,j)");
    }
    Series1 a_series(order, std::vector<Rational>(seed.begin(), seed.end()));
    Series1 b = fps::compose_scale(fps::elementary("exp", order), -1) * a_series;
    for (int i = 1; i <= order; i += 2) {
        if (b.coeff(i) != 0) {
            throw std::logic_error("e^{-x} A(x) has a nonzero odd coefficient despite sign symmetry");
        }
    }
    Series2 even = fps::even_part(array);
    Series2 odd = fps::odd_part(array);
    Series2 b_of_sum = fps::compose_linear(b, 1, 1, order);
    if (!fps::agree(even, fps::compose_linear(fps::elementary("cosh", order), 1, -1, order) * b_of_sum) ||
        !fps::agree(odd, fps::compose_linear(fps::elementary("sinh", order), 1, -1, order) * b_of_sum)) {
        throw std::logic_error("even/odd split disagrees with cosh/sinh times the even factor");
    }
    return {std::move(array), std::move(b), std::move(even), std::move(odd)};
}

Series1 diag_series(int order) {
    return fps::elementary("cosh", order) / denom1(order);
}

Series1 uudd_series(int order) {
    return fps::elementary("sinh", order) / denom1(order);
}

Integer extract_V(const Series1& u, int n) {
    if (n < 0 || 2 * n + 1 > u.order()) {
        throw std::out_of_range("V_" + std::to_string(n) + " needs order >= " +
                                std::to_string(2 * n + 1));
    }
    Rational scaled = u.coeff(2 * n + 1) / Rational(pow2(static_cast<unsigned>(n)));
    if (!is_integral(scaled) || scaled <= 0) {
        throw nonintegral_error("coefficient " + std::to_string(2 * n + 1) +
                                " does not descale to a positive integer");
    }
    return numer(scaled);
}

bool verify_w_relation(const pnk::Table& t, int n_max) {
    if (n_max > t.max_n()) throw std::out_of_range("table too small for requested n_max");
    if (n_max < 1) return true;
    Series1 u = uudd_series(2 * n_max - 1);
    for (int n = 1; n <= n_max; ++n) {
        if (2 * t.value(n, n) != Integer(2 * n) * extract_V(u, n - 1)) return false;
    }
    return true;
}

bool verify_beta_row_sum(const pnk::Table& t, int n_max) {
    if (n_max > t.max_n()) throw std::out_of_range("table too small for requested n_max");
    Series1 u = uudd_series(2 * n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (t.row_sum(n) != extract_V(u, n)) return false;
    }
    return true;
}

}  // namespace uudd::genfun
