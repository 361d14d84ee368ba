#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <uudd/permlab.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace uudd;
using namespace uudd::permlab;

namespace {

std::vector<int> random_perm(std::mt19937& rng, int length, int lo = 1) {
    std::vector<int> v(static_cast<size_t>(length));
    std::iota(v.begin(), v.end(), lo);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

}  // namespace

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(Permutation::from_entries({-1, 1, 0}));
    CHECK(Permutation::from_entries({3, 5, 4}).lo() == 3);
    CHECK_THROWS_AS(Permutation::from_entries({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_entries({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_entries({}), std::invalid_argument);
}

TEST_CASE("is_uudd on short permutations") {
    CHECK(is_uudd(std::vector<int>{1}));
    CHECK(is_uudd(std::vector<int>{1, 2}));
    CHECK(is_uudd(std::vector<int>{2, 1}));
    CHECK(is_uudd(std::vector<int>{1, 2, 3}));
    CHECK(is_uudd(std::vector<int>{3, 2, 1}));
    CHECK_FALSE(is_uudd(std::vector<int>{1, 3, 2}));
    CHECK_FALSE(is_uudd(std::vector<int>{2, 1, 3}));
}

TEST_CASE("length-5 uudd count is 14") {
    std::vector<int> v{1, 2, 3, 4, 5};
    int count = 0;
    do {
        if (is_uudd(v)) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(count == 14);
}

TEST_CASE("classify_extrema") {
    CHECK(classify_extrema(std::vector<int>{1, 2, 3}) == Extrema{});
    CHECK(classify_extrema(std::vector<int>{1, 3, 2}) == Extrema{{2}, {}});
    CHECK(classify_extrema(std::vector<int>{2, 1, 3, 4}) == Extrema{{}, {2}});
    CHECK(classify_extrema(std::vector<int>{1, 3, 2, 4, 3 + 2}) == Extrema{{2, 4}, {3}});
}

TEST_CASE("is_uudd iff every peak and valley is odd") {
    std::mt19937 rng(31001);
    for (int rep = 0; rep < 300; ++rep) {
        auto v = random_perm(rng, 1 + static_cast<int>(rng() % 9));
        Extrema e = classify_extrema(v);
        bool all_odd = true;
        for (int i : e.peaks) all_odd = all_odd && (i % 2 == 1);
        for (int i : e.valleys) all_odd = all_odd && (i % 2 == 1);
        CHECK(is_uudd(v) == all_odd);
    }
}

TEST_CASE("is_uudd is invariant under order-preserving relabeling") {
    std::mt19937 rng(31002);
    for (int rep = 0; rep < 200; ++rep) {
        int length = 1 + static_cast<int>(rng() % 8);
        int lo = static_cast<int>(rng() % 21) - 10;
        auto v = random_perm(rng, length, lo);
        auto shifted = v;
        for (int& e : shifted) e += 100;
        CHECK(is_uudd(v) == is_uudd(shifted));
    }
}

TEST_CASE("brute_pnk_row small rows") {
    CHECK(brute_pnk_row(0) == std::vector<Integer>{1});
    CHECK(brute_pnk_row(1) == std::vector<Integer>{1, 0, 1});
    CHECK(brute_pnk_row(2) == std::vector<Integer>{4, 2, 2, 2, 4});
    CHECK(brute_pnk_row(3) == std::vector<Integer>{42, 28, 22, 20, 22, 28, 42});
}

TEST_CASE("brute_pnk_row properties") {
    for (int n = 0; n <= 3; ++n) {
        auto row = brute_pnk_row(n);
        for (int k = 0; k <= n; ++k) {
            CHECK(row[static_cast<size_t>(n + k)] == row[static_cast<size_t>(n - k)]);
        }
        Integer sum = std::accumulate(row.begin(), row.end(), Integer(0));
        CHECK(sum == brute_uudd_count(2 * n + 1));
    }
}

TEST_CASE("feasibility bounds") {
    Limits lim;
    CHECK_THROWS_AS(brute_pnk_row(lim.pnk_n + 1), bound_error);
    CHECK_THROWS_AS(brute_uudd_count(lim.uudd_length + 2), bound_error);
    CHECK_THROWS_AS(count_whirlpool(2, 5), bound_error);
    CHECK_THROWS_AS(brute_alternating_ending_zero(6, 6), bound_error);
    CHECK_THROWS_AS(brute_descent_poly_ending_zero(6, 6), bound_error);

    Limits raised;
    raised.whirlpool_cells = 10;
    CHECK_NOTHROW(count_whirlpool(2, 5, raised));
}

TEST_CASE("brute_uudd_count") {
    CHECK(brute_uudd_count(1) == 1);
    CHECK(brute_uudd_count(3) == 2);
    CHECK(brute_uudd_count(5) == 14);
    CHECK(brute_uudd_count(7) == 204);
    CHECK(brute_uudd_count(9) == 5104);
    CHECK_THROWS_AS(brute_uudd_count(4), std::invalid_argument);
    CHECK_THROWS_AS(brute_uudd_count(0), std::invalid_argument);
}

TEST_CASE("whirlpool predicate") {
    // no 2x2 submatrix at all
    CHECK(is_whirlpool(WhirlpoolMatrix::from_cells(2, 1, {1, 2})));
    CHECK(is_whirlpool(WhirlpoolMatrix::from_cells(2, 1, {2, 1})));
    // 1 -> 2 -> 3 -> 4 clockwise
    CHECK(is_whirlpool(WhirlpoolMatrix::from_cells(2, 2, {1, 2, 4, 3})));
    // 1 -> 2 -> 3 -> 4 wanders diagonally
    CHECK_FALSE(is_whirlpool(WhirlpoolMatrix::from_cells(2, 2, {1, 2, 3, 4})));
    CHECK_THROWS_AS(WhirlpoolMatrix::from_cells(2, 2, {1, 2, 3, 5}), std::invalid_argument);
}

TEST_CASE("whirlpool counts") {
    CHECK(count_whirlpool(2, 1) == 2);
    CHECK(count_whirlpool(1, 4) == 24);  // single row: every arrangement counts
    CHECK(count_whirlpool(2, 2) == 8);
    CHECK(count_whirlpool(2, 3) == 84);
    // 2xc whirlpool count equals 2c times the uudd count of length 2c-1
    for (int c = 2; c <= 3; ++c) {
        CHECK(count_whirlpool(2, c) == Integer(2 * c) * brute_uudd_count(2 * c - 1));
    }
}

TEST_CASE("alternating permutations ending with 0") {
    CHECK(brute_alternating_ending_zero(0, 0) == 1);
    CHECK(brute_alternating_ending_zero(1, 1) == 1);  // only (1, -1, 0)
    CHECK(brute_alternating_ending_zero(1, 0) == 0);  // (-1, 0) starts with an ascent
    CHECK(brute_alternating_ending_zero(0, 1) == 1);  // (1, 0)
}

TEST_CASE("descent polynomials ending with 0") {
    CHECK(brute_descent_poly_ending_zero(0, 0) == TPoly::constant(1));
    CHECK(brute_descent_poly_ending_zero(0, 2) == TPoly({0, 1, 1}));  // t + t^2
    // sole permutation (-1, 0) has no descent
    CHECK(brute_descent_poly_ending_zero(1, 0) == TPoly::constant(1));
    CHECK(brute_descent_poly_ending_zero(1, 1) == TPoly({0, 2}));  // (1,-1,0) and (-1,1,0)
    // evaluating at t = 1 counts all (m+n)! permutations
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n)
            CHECK(brute_descent_poly_ending_zero(m, n).eval(1) ==
                  factorial(static_cast<unsigned>(m + n)));
}
