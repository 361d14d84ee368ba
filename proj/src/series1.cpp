#include <uudd/series1.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uudd::fps {

namespace {

int common_order(const Series1& a, const Series1& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

Series1::Series1(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(static_cast<size_t>(order) + 1);
}

Series1::Series1(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (order < 0 || c_.size() != static_cast<size_t>(order) + 1) {
        throw std::invalid_argument("coefficient count does not match series order");
    }
}

Series1 Series1::constant(const Rational& v, int order) {
    Series1 s(order);
    s.c_[0] = v;
    return s;
}

Series1 Series1::monomial_x(int order) {
    Series1 s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

const Rational& Series1::coeff(int i) const {
    if (i < 0 || i > order()) {
        throw std::out_of_range("coefficient index " + std::to_string(i) +
                                " past truncation order " + std::to_string(order()));
    }
    return c_[static_cast<size_t>(i)];
}

void Series1::set_coeff(int i, Rational v) {
    if (i < 0 || i > order()) {
        throw std::out_of_range("coefficient index " + std::to_string(i) +
                                " past truncation order " + std::to_string(order()));
    }
    c_[static_cast<size_t>(i)] = std::move(v);
}

Series1 operator+(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    Series1 r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

Series1 operator-(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    Series1 r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

Series1 operator*(const Series1& a, const Rational& s) {
    Series1 r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.set_coeff(i, a.coeff(i) * s);
    return r;
}

Series1 operator*(const Rational& s, const Series1& a) {
    return a * s;
}

Series1 operator*(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    Series1 r(n);
    auto pascal = pascal_triangle(static_cast<unsigned>(n));
    for (int k = 0; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) {
            const Rational& ai = a.coeff(i);
            if (ai == 0) continue;
            const Rational& bj = b.coeff(k - i);
            if (bj == 0) continue;
            acc += ai * bj * Rational(pascal[static_cast<size_t>(k)][static_cast<size_t>(i)]);
        }
        r.set_coeff(k, acc);
    }
    return r;
}

Series1 operator/(const Series1& a, const Series1& b) {
    if (b.coeff(0) == 0) {
        throw std::domain_error("series division requires a nonzero constant term in the divisor");
    }
    int n = common_order(a, b);
    Series1 q(n);
    auto pascal = pascal_triangle(static_cast<unsigned>(n));
    for (int k = 0; k <= n; ++k) {
        // a_k = sum_{i=0}^{k} C(k,i) b_i q_{k-i}; solve for q_k
        Rational acc = a.coeff(k);
        for (int i = 1; i <= k; ++i) {
            const Rational& bi = b.coeff(i);
            if (bi == 0) continue;
            acc -= bi * q.coeff(k - i) * Rational(pascal[static_cast<size_t>(k)][static_cast<size_t>(i)]);
        }
        q.set_coeff(k, acc / b.coeff(0));
    }
    return q;
}

Series1 truncated(const Series1& s, int order) {
    if (order > s.order()) throw std::out_of_range("cannot extend a truncated series");
    Series1 r(order);
    for (int i = 0; i <= order; ++i) r.set_coeff(i, s.coeff(i));
    return r;
}

bool agree(const Series1& a, const Series1& b) {
    int n = common_order(a, b);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return false;
    }
    return true;
}

Series1 compose_scale(const Series1& f, const Rational& a) {
    Series1 r(f.order());
    Rational p = 1;
    for (int i = 0; i <= f.order(); ++i) {
        r.set_coeff(i, f.coeff(i) * p);
        p *= a;
    }
    return r;
}

Series1 elementary(std::string_view name, int order) {
    Series1 s(order);
    if (name == "exp") {
        for (int k = 0; k <= order; ++k) s.set_coeff(k, 1);
    } else if (name == "cosh") {
        for (int k = 0; k <= order; k += 2) s.set_coeff(k, 1);
    } else if (name == "sinh") {
        for (int k = 1; k <= order; k += 2) s.set_coeff(k, 1);
    } else if (name == "cos") {
        for (int k = 0; k <= order; k += 2) s.set_coeff(k, (k / 2) % 2 == 0 ? 1 : -1);
    } else if (name == "sin") {
        for (int k = 1; k <= order; k += 2) s.set_coeff(k, ((k - 1) / 2) % 2 == 0 ? 1 : -1);
    } else if (name == "tanh") {
        s = elementary("sinh", order) / elementary("cosh", order);
    } else {
        throw std::invalid_argument("unknown elementary series: " + std::string(name));
    }
    return s;
}

}  // namespace uudd::fps
