#pragma once

// Ground-truth brute-force oracles: enumerate permutations of small labeled
// sets and count the ones satisfying the pattern conditions that the closed
// forms and recurrences elsewhere in this project are supposed to reproduce.
//
// Enumeration is streaming lexicographic next-permutation with running
// counters; nothing is materialized, memory stays O(length). Every counter
// checks its input against a configurable feasibility bound first.

#include <uudd/errors.hpp>
#include <uudd/numeric.hpp>
#include <uudd/tpoly.hpp>

#include <span>
#include <vector>

namespace uudd::permlab {

// A permutation of a contiguous signed range [lo, hi]: entries are pairwise
// distinct and their multiset is exactly {lo, lo+1, ..., hi}.
class Permutation {
public:
    static Permutation from_entries(std::vector<int> entries);  // validates, throws std::invalid_argument

    std::span<const int> entries() const { return entries_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int size() const { return static_cast<int>(entries_.size()); }

private:
    Permutation(std::vector<int> entries, int lo, int hi)
        : entries_(std::move(entries)), lo_(lo), hi_(hi) {}

    std::vector<int> entries_;
    int lo_ = 0;
    int hi_ = 0;
};

// True iff (a_{2i-1} < a_{2i}) <=> (a_{2i} < a_{2i+1}) for every i with
// 2i+1 <= length; equivalently every peak and every valley sits at an odd
// (1-based) index. Lengths 1 and 2 are vacuously true.
bool is_uudd(std::span<const int> a);
inline bool is_uudd(const Permutation& p) { return is_uudd(p.entries()); }

// 1-based interior indices, ascending. i is a peak iff a_{i-1} < a_i > a_{i+1},
// a valley iff a_{i-1} > a_i < a_{i+1}.
struct Extrema {
    std::vector<int> peaks;
    std::vector<int> valleys;
    bool operator==(const Extrema&) const = default;
};
Extrema classify_extrema(std::span<const int> a);
inline Extrema classify_extrema(const Permutation& p) { return classify_extrema(p.entries()); }

// Feasibility bounds. Defaults keep every enumeration below ~40M states;
// raise them explicitly (or via UUDD_LIMIT_*) for longer runs.
struct Limits {
    int pnk_n = 5;               // brute_pnk_row walks (2n+1)! permutations
    int uudd_length = 11;        // brute_uudd_count walks length!
    int whirlpool_cells = 9;     // count_whirlpool walks (rows*cols)!
    int fixed_last_length = 11;  // alternating/descent counts walk (length-1)!

    // Reads UUDD_LIMIT_PNK_N, UUDD_LIMIT_UUDD_LENGTH, UUDD_LIMIT_WHIRLPOOL_CELLS,
    // UUDD_LIMIT_FIXED_LAST; each raises (never lowers) its field.
    static Limits from_env();
};

// Entry n+k counts the permutations of {-n,...,n} that pass is_uudd and end
// with k.
std::vector<Integer> brute_pnk_row(int n, const Limits& lim = {});

// Number of permutations of {1..length} passing is_uudd; length must be odd.
Integer brute_uudd_count(int length, const Limits& lim = {});

// rows x cols arrangement of 1..rows*cols, row-major.
class WhirlpoolMatrix {
public:
    static WhirlpoolMatrix from_cells(int rows, int cols, std::vector<int> cells);  // validates

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return cells_[static_cast<size_t>(r * cols_ + c)]; }

private:
    WhirlpoolMatrix(int rows, int cols, std::vector<int> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {}

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> cells_;
};

// True iff every adjacent 2x2 submatrix is a vortex: its four values, taken
// in increasing order, trace a cyclic (clockwise or counterclockwise) path
// around the block.
bool is_whirlpool(const WhirlpoolMatrix& m);

Integer count_whirlpool(int rows, int cols, const Limits& lim = {});

// Permutations of {-m,...,n} ending with 0 and satisfying the strict
// alternation a_1 > a_2 < a_3 > ... ; the length-1 permutation (0) counts 1.
Integer brute_alternating_ending_zero(int m, int n, const Limits& lim = {});

// Sum of t^(number of descents a_i > a_{i+1}) over permutations of {-m,...,n}
// ending with 0; the step into the final 0 can be a descent.
TPoly brute_descent_poly_ending_zero(int m, int n, const Limits& lim = {});

}  // namespace uudd::permlab
