#pragma once

// Exact recurrence engine for the triangle p_n(k): the number of
// up-up-or-down-down permutations of {-n,...,n} ending with k, built from
// p_{n+1}(k) = sum_{j=-n}^{n} |j-k| p_n(j) with p_0(0) = 1, plus verifiers
// for the triangle's structural identities.
//
// Offset convention, fixed project-wide: row n stores 2n+1 entries and
// index n+k holds p_n(k).

#include <uudd/numeric.hpp>

#include <vector>

namespace uudd::pnk {

class Table {
public:
    // Rows 0..max_n by direct evaluation of the recurrence.
    static Table build(int max_n);

    // Adopt explicit rows (row n must have 2n+1 entries); values are taken
    // as-is, so tests can construct tampered tables.
    static Table from_rows(std::vector<std::vector<Integer>> rows);

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<Integer>& row(int n) const;
    const Integer& value(int n, int k) const;  // k in [-n, n]
    Integer row_sum(int n) const;

private:
    explicit Table(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {}

    std::vector<std::vector<Integer>> rows_;
};

// Every row palindromic: p_n(-k) = p_n(k).
bool verify_symmetry(const Table& t);

// p_{n+1}(k+1) - 2 p_{n+1}(k) + p_{n+1}(k-1) = 2 p_n(k) for all -n <= k <= n.
bool verify_second_difference(const Table& t);

// (n-1) p_n(n) = n p_n(n-1) for all 1 <= n <= max_n.
bool verify_edge_relation(const Table& t);

}  // namespace uudd::pnk
