#include <uudd/pnk.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace uudd::pnk {

Table Table::build(int max_n) {
    if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
    std::vector<std::vector<Integer>> rows;
    rows.reserve(static_cast<size_t>(max_n) + 1);
    rows.push_back({Integer(1)});
    for (int n = 0; n < max_n; ++n) {
        const auto& cur = rows.back();
        std::vector<Integer> next(static_cast<size_t>(2 * (n + 1) + 1));
        for (int k = -(n + 1); k <= n + 1; ++k) {
            Integer sum = 0;
            for (int j = -n; j <= n; ++j) {
                sum += Integer(std::abs(j - k)) * cur[static_cast<size_t>(j + n)];
            }
            next[static_cast<size_t>(k + n + 1)] = std::move(sum);
        }
        rows.push_back(std::move(next));
    }
    return Table(std::move(rows));
}

Table Table::from_rows(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) throw std::invalid_argument("table must have at least row 0");
    for (size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].size() != 2 * n + 1) {
            throw std::invalid_argument("row " + std::to_string(n) + " must have " +
                                        std::to_string(2 * n + 1) + " entries");
        }
    }
    return Table(std::move(rows));
}

const std::vector<Integer>& Table::row(int n) const {
    if (n < 0 || n > max_n()) throw std::out_of_range("row " + std::to_string(n) + " not built");
    return rows_[static_cast<size_t>(n)];
}

const Integer& Table::value(int n, int k) const {
    const auto& r = row(n);
    if (k < -n || k > n) throw std::out_of_range("k out of range for row " + std::to_string(n));
    return r[static_cast<size_t>(k + n)];
}

Integer Table::row_sum(int n) const {
    Integer s = 0;
    for (const auto& v : row(n)) s += v;
    return s;
}

bool verify_symmetry(const Table& t) {
    for (int n = 0; n <= t.max_n(); ++n) {
        for (int k = 1; k <= n; ++k) {
            if (t.value(n, k) != t.value(n, -k)) return false;
        }
    }
    return true;
}

bool verify_second_difference(const Table& t) {
    for (int n = 0; n + 1 <= t.max_n(); ++n) {
        for (int k = -n; k <= n; ++k) {
            Integer lhs = t.value(n + 1, k + 1) - 2 * t.value(n + 1, k) + t.value(n + 1, k - 1);
            if (lhs != 2 * t.value(n, k)) return false;
        }
    }
    return true;
}

bool verify_edge_relation(const Table& t) {
    for (int n = 1; n <= t.max_n(); ++n) {
        if (Integer(n - 1) * t.value(n, n) != Integer(n) * t.value(n, n - 1)) return false;
    }
    return true;
}

}  // namespace uudd::pnk
