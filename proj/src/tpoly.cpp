#include <uudd/tpoly.hpp>

#include <algorithm>

namespace uudd {

TPoly::TPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

TPoly TPoly::constant(Integer c) {
    return TPoly(std::vector<Integer>{std::move(c)});
}

TPoly TPoly::monomial(int degree, Integer c) {
    std::vector<Integer> v(static_cast<size_t>(degree) + 1);
    v[static_cast<size_t>(degree)] = std::move(c);
    return TPoly(std::move(v));
}

Integer TPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(d)];
}

void TPoly::add_term(int d, const Integer& v) {
    if (d >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(d) + 1);
    c_[static_cast<size_t>(d)] += v;
    normalize();
}

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return TPoly(std::move(r));
}

TPoly TPoly::operator-(const TPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return TPoly(std::move(r));
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return TPoly(std::move(r));
}

TPoly TPoly::truncated(int max_degree) const {
    if (max_degree < 0) return TPoly();
    std::vector<Integer> r(c_.begin(), c_.begin() + std::min(c_.size(), static_cast<size_t>(max_degree) + 1));
    return TPoly(std::move(r));
}

Integer TPoly::eval(const Integer& t) const {
    Integer result = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        result = result * t + c_[i];
    }
    return result;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t d = 0; d < c_.size(); ++d) {
        const Integer& c = c_[d];
        if (c == 0) continue;
        Integer a = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        if (d == 0) {
            s += a.str();
        } else {
            if (a != 1) s += a.str() + "*";
            s += (d == 1) ? "t" : "t^" + std::to_string(d);
        }
    }
    return s;
}

void TPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly one_minus_t_pow(int e, int max_degree) {
    auto binom = binomial_row(static_cast<unsigned>(e));
    int top = std::min(e, max_degree);
    if (top < 0) return TPoly();
    std::vector<Integer> r(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        r[static_cast<size_t>(d)] = (d % 2 == 0) ? binom[static_cast<size_t>(d)] : -binom[static_cast<size_t>(d)];
    }
    return TPoly(std::move(r));
}

}  // namespace uudd
