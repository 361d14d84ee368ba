#include <uudd/series2.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uudd::fps {

namespace {

int common_order(const Series2& a, const Series2& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

Series2::Series2(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(static_cast<size_t>(order + 1) * static_cast<size_t>(order + 2) / 2);
}

size_t Series2::index(int i, int j) const {
    int d = i + j;
    return static_cast<size_t>(d) * static_cast<size_t>(d + 1) / 2 + static_cast<size_t>(j);
}

const Rational& Series2::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) {
        throw std::out_of_range("coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                ") past total-degree order " + std::to_string(order_));
    }
    return c_[index(i, j)];
}

void Series2::set_coeff(int i, int j, Rational v) {
    if (i < 0 || j < 0 || i + j > order_) {
        throw std::out_of_range("coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                ") past total-degree order " + std::to_string(order_));
    }
    c_[index(i, j)] = std::move(v);
}

Series2 operator+(const Series2& a, const Series2& b) {
    int n = common_order(a, b);
    Series2 r(n);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, a.coeff(d - j, j) + b.coeff(d - j, j));
    return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
    int n = common_order(a, b);
    Series2 r(n);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, a.coeff(d - j, j) - b.coeff(d - j, j));
    return r;
}

Series2 operator*(const Series2& a, const Rational& s) {
    Series2 r(a.order());
    for (int d = 0; d <= a.order(); ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, a.coeff(d - j, j) * s);
    return r;
}

Series2 operator*(const Rational& s, const Series2& a) {
    return a * s;
}

Series2 operator*(const Series2& a, const Series2& b) {
    int n = common_order(a, b);
    Series2 r(n);
    auto pascal = pascal_triangle(static_cast<unsigned>(n));
    for (int da = 0; da <= n; ++da) {
        for (int ja = 0; ja <= da; ++ja) {
            int ia = da - ja;
            const Rational& av = a.coeff(ia, ja);
            if (av == 0) continue;
            for (int db = 0; da + db <= n; ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    int ib = db - jb;
                    const Rational& bv = b.coeff(ib, jb);
                    if (bv == 0) continue;
                    int i = ia + ib, j = ja + jb;
                    Rational term = av * bv;
                    term *= Rational(pascal[static_cast<size_t>(i)][static_cast<size_t>(ia)] *
                                     pascal[static_cast<size_t>(j)][static_cast<size_t>(ja)]);
                    r.set_coeff(i, j, r.coeff(i, j) + term);
                }
            }
        }
    }
    return r;
}

Series2 operator/(const Series2& a, const Series2& b) {
    if (b.coeff(0, 0) == 0) {
        throw std::domain_error("series division requires a nonzero constant term in the divisor");
    }
    int n = common_order(a, b);
    Series2 q(n);
    auto pascal = pascal_triangle(static_cast<unsigned>(n));
    const Rational b00 = b.coeff(0, 0);
    // Every subtracted term references q at strictly smaller total degree.
    for (int d = 0; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            Rational acc = a.coeff(i, j);
            for (int p = 0; p <= i; ++p) {
                for (int s = 0; s <= j; ++s) {
                    if (p == 0 && s == 0) continue;
                    const Rational& bv = b.coeff(p, s);
                    if (bv == 0) continue;
                    Rational term = bv * q.coeff(i - p, j - s);
                    term *= Rational(pascal[static_cast<size_t>(i)][static_cast<size_t>(p)] *
                                     pascal[static_cast<size_t>(j)][static_cast<size_t>(s)]);
                    acc -= term;
                }
            }
            q.set_coeff(i, j, acc / b00);
        }
    }
    return q;
}

Series2 truncated(const Series2& s, int order) {
    if (order > s.order()) throw std::out_of_range("cannot extend a truncated series");
    Series2 r(order);
    for (int d = 0; d <= order; ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, s.coeff(d - j, j));
    return r;
}

bool agree(const Series2& a, const Series2& b) {
    int n = common_order(a, b);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j)
            if (a.coeff(d - j, j) != b.coeff(d - j, j)) return false;
    return true;
}

Series2 partial_x(const Series2& s) {
    if (s.order() < 1) throw std::invalid_argument("cannot differentiate an order-0 series");
    Series2 r(s.order() - 1);
    for (int d = 0; d <= r.order(); ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, s.coeff(d - j + 1, j));
    return r;
}

Series2 partial_y(const Series2& s) {
    if (s.order() < 1) throw std::invalid_argument("cannot differentiate an order-0 series");
    Series2 r(s.order() - 1);
    for (int d = 0; d <= r.order(); ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, s.coeff(d - j, j + 1));
    return r;
}

Series2 even_part(const Series2& s) {
    Series2 r(s.order());
    for (int d = 0; d <= s.order(); d += 2)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, s.coeff(d - j, j));
    return r;
}

Series2 odd_part(const Series2& s) {
    Series2 r(s.order());
    for (int d = 1; d <= s.order(); d += 2)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, s.coeff(d - j, j));
    return r;
}

Series2 transpose(const Series2& s) {
    Series2 r(s.order());
    for (int d = 0; d <= s.order(); ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, s.coeff(j, d - j));
    return r;
}

Series2 compose_linear(const Series1& f, const Rational& a, const Rational& b, int order) {
    if (f.order() < order) {
        throw std::invalid_argument("compose_linear needs the univariate series to cover the target order");
    }
    std::vector<Rational> apow(static_cast<size_t>(order) + 1), bpow(static_cast<size_t>(order) + 1);
    apow[0] = bpow[0] = 1;
    for (int k = 1; k <= order; ++k) {
        apow[static_cast<size_t>(k)] = apow[static_cast<size_t>(k - 1)] * a;
        bpow[static_cast<size_t>(k)] = bpow[static_cast<size_t>(k - 1)] * b;
    }
    Series2 r(order);
    for (int d = 0; d <= order; ++d) {
        const Rational& fd = f.coeff(d);
        if (fd == 0) continue;
        for (int j = 0; j <= d; ++j) {
            r.set_coeff(d - j, j, fd * apow[static_cast<size_t>(d - j)] * bpow[static_cast<size_t>(j)]);
        }
    }
    return r;
}

Series2 x_plus_y(int order) {
    Series2 r(order);
    if (order >= 1) {
        r.set_coeff(1, 0, 1);
        r.set_coeff(0, 1, 1);
    }
    return r;
}

Series1 restrict_y0(const Series2& s) {
    Series1 r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.set_coeff(i, s.coeff(i, 0));
    return r;
}

}  // namespace uudd::fps
