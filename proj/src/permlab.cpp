#include <uudd/permlab.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace uudd::permlab {

namespace {

void read_env_limit(const char* name, int& field) {
    if (const char* v = std::getenv(name)) {
        int parsed = std::atoi(v);
        if (parsed > field) field = parsed;
    }
}

std::vector<int> contiguous_range(int lo, int hi) {
    std::vector<int> v(static_cast<size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

// The eight rank patterns of a vortex, positions listed cyclically as
// (top-left, top-right, bottom-right, bottom-left): the cell holding rank t
// must sit at cycle position s + t or s - t (mod 4) for some start s.
std::array<std::array<int, 4>, 8> make_vortex_patterns() {
    std::array<std::array<int, 4>, 8> pats{};
    int p = 0;
    for (int dir : {1, -1}) {
        for (int start = 0; start < 4; ++start) {
            for (int t = 0; t < 4; ++t) {
                int pos = ((start + dir * t) % 4 + 4) % 4;
                pats[static_cast<size_t>(p)][static_cast<size_t>(pos)] = t;
            }
            ++p;
        }
    }
    return pats;
}

const std::array<std::array<int, 4>, 8> kVortexPatterns = make_vortex_patterns();

// Values in cyclic order (tl, tr, br, bl).
bool is_vortex(int tl, int tr, int br, int bl) {
    const std::array<int, 4> v{tl, tr, br, bl};
    std::array<int, 4> rank{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (v[static_cast<size_t>(j)] < v[static_cast<size_t>(i)]) ++rank[static_cast<size_t>(i)];
        }
    }
    for (const auto& pat : kVortexPatterns) {
        if (pat == rank) return true;
    }
    return false;
}

bool all_blocks_vortex(std::span<const int> cells, int rows, int cols) {
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c + 1 < cols; ++c) {
            if (!is_vortex(cells[static_cast<size_t>(r * cols + c)],
                           cells[static_cast<size_t>(r * cols + c + 1)],
                           cells[static_cast<size_t>((r + 1) * cols + c + 1)],
                           cells[static_cast<size_t>((r + 1) * cols + c)])) {
                return false;
            }
        }
    }
    return true;
}

bool alternates_with_final_zero(std::span<const int> head) {
    // pattern over head ++ (0): odd 1-based steps descend, even ones ascend
    auto entry = [&](size_t i) { return i < head.size() ? head[i] : 0; };
    size_t len = head.size() + 1;
    for (size_t i = 0; i + 1 < len; ++i) {
        if (i % 2 == 0) {
            if (!(entry(i) > entry(i + 1))) return false;
        } else {
            if (!(entry(i) < entry(i + 1))) return false;
        }
    }
    return true;
}

int descents_with_final_zero(std::span<const int> head) {
    auto entry = [&](size_t i) { return i < head.size() ? head[i] : 0; };
    int d = 0;
    for (size_t i = 0; i + 1 < head.size() + 1; ++i) {
        if (entry(i) > entry(i + 1)) ++d;
    }
    return d;
}

}  // namespace

Permutation Permutation::from_entries(std::vector<int> entries) {
    if (entries.empty()) throw std::invalid_argument("permutation must be nonempty");
    auto [mn, mx] = std::minmax_element(entries.begin(), entries.end());
    int lo = *mn, hi = *mx;
    if (hi - lo + 1 != static_cast<int>(entries.size())) {
        throw std::invalid_argument("entries do not fill a contiguous range");
    }
    std::vector<char> seen(entries.size(), 0);
    for (int e : entries) {
        char& s = seen[static_cast<size_t>(e - lo)];
        if (s) throw std::invalid_argument("duplicate entry " + std::to_string(e));
        s = 1;
    }
    return Permutation(std::move(entries), lo, hi);
}

bool is_uudd(std::span<const int> a) {
    for (size_t i = 2; i < a.size(); i += 2) {
        if ((a[i - 2] < a[i - 1]) != (a[i - 1] < a[i])) return false;
    }
    return true;
}

Extrema classify_extrema(std::span<const int> a) {
    Extrema e;
    for (size_t j = 1; j + 1 < a.size(); ++j) {
        if (a[j - 1] < a[j] && a[j] > a[j + 1]) e.peaks.push_back(static_cast<int>(j) + 1);
        if (a[j - 1] > a[j] && a[j] < a[j + 1]) e.valleys.push_back(static_cast<int>(j) + 1);
    }
    return e;
}

Limits Limits::from_env() {
    Limits lim;
    read_env_limit("UUDD_LIMIT_PNK_N", lim.pnk_n);
    read_env_limit("UUDD_LIMIT_UUDD_LENGTH", lim.uudd_length);
    read_env_limit("UUDD_LIMIT_WHIRLPOOL_CELLS", lim.whirlpool_cells);
    read_env_limit("UUDD_LIMIT_FIXED_LAST", lim.fixed_last_length);
    return lim;
}

std::vector<Integer> brute_pnk_row(int n, const Limits& lim) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > lim.pnk_n) {
        throw bound_error("brute_pnk_row(" + std::to_string(n) + ") exceeds the bound n <= " +
                          std::to_string(lim.pnk_n));
    }
    std::vector<int> v = contiguous_range(-n, n);
    std::vector<std::uint64_t> counts(static_cast<size_t>(2 * n + 1), 0);
    do {
        if (is_uudd(v)) ++counts[static_cast<size_t>(v.back() + n)];
    } while (std::next_permutation(v.begin(), v.end()));
    return {counts.begin(), counts.end()};
}

Integer brute_uudd_count(int length, const Limits& lim) {
    if (length < 1 || length % 2 == 0) {
        throw std::invalid_argument("length must be a positive odd integer");
    }
    if (length > lim.uudd_length) {
        throw bound_error("brute_uudd_count(" + std::to_string(length) +
                          ") exceeds the bound length <= " + std::to_string(lim.uudd_length));
    }
    std::vector<int> v = contiguous_range(1, length);
    std::uint64_t count = 0;
    do {
        if (is_uudd(v)) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

WhirlpoolMatrix WhirlpoolMatrix::from_cells(int rows, int cols, std::vector<int> cells) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if (static_cast<int>(cells.size()) != rows * cols) {
        throw std::invalid_argument("cell count does not match dimensions");
    }
    std::vector<char> seen(cells.size(), 0);
    for (int e : cells) {
        if (e < 1 || e > rows * cols || seen[static_cast<size_t>(e - 1)]) {
            throw std::invalid_argument("cells must be a permutation of 1..rows*cols");
        }
        seen[static_cast<size_t>(e - 1)] = 1;
    }
    return WhirlpoolMatrix(rows, cols, std::move(cells));
}

bool is_whirlpool(const WhirlpoolMatrix& m) {
    std::vector<int> cells;
    cells.reserve(static_cast<size_t>(m.rows() * m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) cells.push_back(m.at(r, c));
    return all_blocks_vortex(cells, m.rows(), m.cols());
}

Integer count_whirlpool(int rows, int cols, const Limits& lim) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    int cells = rows * cols;
    if (cells > lim.whirlpool_cells) {
        throw bound_error("count_whirlpool(" + std::to_string(rows) + "," + std::to_string(cols) +
                          ") exceeds the bound rows*cols <= " + std::to_string(lim.whirlpool_cells));
    }
    std::vector<int> v = contiguous_range(1, cells);
    std::uint64_t count = 0;
    do {
        if (all_blocks_vortex(v, rows, cols)) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

Integer brute_alternating_ending_zero(int m, int n, const Limits& lim) {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
    int length = m + n + 1;
    if (length > lim.fixed_last_length) {
        throw bound_error("brute_alternating_ending_zero(" + std::to_string(m) + "," +
                          std::to_string(n) + ") exceeds the bound m+n+1 <= " +
                          std::to_string(lim.fixed_last_length));
    }
    std::vector<int> head;
    for (int e = -m; e <= n; ++e)
        if (e != 0) head.push_back(e);
    if (head.empty()) return 1;  // the permutation (0)
    std::uint64_t count = 0;
    do {
        if (alternates_with_final_zero(head)) ++count;
    } while (std::next_permutation(head.begin(), head.end()));
    return count;
}

TPoly brute_descent_poly_ending_zero(int m, int n, const Limits& lim) {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
    int length = m + n + 1;
    if (length > lim.fixed_last_length) {
        throw bound_error("brute_descent_poly_ending_zero(" + std::to_string(m) + "," +
                          std::to_string(n) + ") exceeds the bound m+n+1 <= " +
                          std::to_string(lim.fixed_last_length));
    }
    std::vector<int> head;
    for (int e = -m; e <= n; ++e)
        if (e != 0) head.push_back(e);
    std::vector<std::uint64_t> by_descents(static_cast<size_t>(length), 0);
    if (head.empty()) {
        by_descents[0] = 1;
    } else {
        do {
            ++by_descents[static_cast<size_t>(descents_with_final_zero(head))];
        } while (std::next_permutation(head.begin(), head.end()));
    }
    return TPoly(std::vector<Integer>(by_descents.begin(), by_descents.end()));
}

}  // namespace uudd::permlab
