#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <uudd/errors.hpp>
#include <uudd/genfun.hpp>
#include <uudd/permlab.hpp>

#include <random>

using namespace uudd;
using fps::Series1;
using fps::Series2;

TEST_CASE("table series coefficients") {
    Series2 p = genfun::table_series(4);
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(4, 0) == 16);       // 2^2 * p_2(2)
    CHECK(p.coeff(4, 4) == 16 * 408); // 2^4 * p_4(0)
    CHECK(p.coeff(2, 0) == 2);        // 2^1 * p_1(1)

    // odd total degrees vanish, and the series is symmetric
    for (int d = 1; d <= p.order(); d += 2)
        for (int j = 0; j <= d; ++j) CHECK(p.coeff(d - j, j) == 0);
    CHECK(fps::agree(p, fps::transpose(p)));
}

TEST_CASE("extract_pnk") {
    Series2 p = genfun::table_series(4);
    CHECK(genfun::extract_pnk(p, 0, 0) == 1);
    CHECK(genfun::extract_pnk(p, 3, 1) == 22);
    CHECK(genfun::extract_pnk(p, 3, -1) == 22);
    CHECK(genfun::extract_pnk(p, 4, 2) == 492);
    CHECK_THROWS_AS(genfun::extract_pnk(p, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(genfun::extract_pnk(p, 5, 0), std::out_of_range);

    Series2 tampered = p;
    tampered.set_coeff(2, 0, tampered.coeff(2, 0) + 1);  // 3 is not divisible by 2
    CHECK_THROWS_AS(genfun::extract_pnk(tampered, 1, 1), nonintegral_error);
}

TEST_CASE("closed form matches the recurrence table") {
    int n_max = 15;
    Series2 p = genfun::table_series(n_max);
    pnk::Table t = pnk::Table::build(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int k = -n; k <= n; ++k) CHECK(genfun::extract_pnk(p, n, k) == t.value(n, k));
}

TEST_CASE("three-way agreement with the enumeration oracle") {
    Series2 p = genfun::table_series(4);
    pnk::Table t = pnk::Table::build(4);
    for (int n = 0; n <= 4; ++n) {
        auto brute = permlab::brute_pnk_row(n);
        for (int k = -n; k <= n; ++k) {
            CHECK(genfun::extract_pnk(p, n, k) == brute[static_cast<size_t>(k + n)]);
            CHECK(t.value(n, k) == brute[static_cast<size_t>(k + n)]);
        }
    }
}

TEST_CASE("skew derivative") {
    // symmetric series lie in the kernel
    Series2 symmetric = fps::compose_linear(fps::elementary("cosh", 8), 1, 1, 8);
    Series2 zero(7);
    CHECK(genfun::skew_derivative(symmetric) == zero);

    // e^{x-y} is an eigenseries with eigenvalue 2
    Series2 exy = fps::compose_linear(fps::elementary("exp", 8), 1, -1, 8);
    CHECK(fps::agree(genfun::skew_derivative(exy), exy * Rational(2)));

    // applied twice to the table series it rescales by 4
    Series2 p = genfun::table_series(10);
    CHECK(fps::agree(genfun::skew_derivative(genfun::skew_derivative(p)), p * Rational(4)));
}

TEST_CASE("seidel companion") {
    Series2 p = genfun::table_series(10);
    auto companion = genfun::seidel_companion(p);
    CHECK(companion.odd.coeff(0, 0) == 0);
    CHECK(genfun::satisfies_seidel_relation(companion.full));
    CHECK(genfun::sign_symmetric(companion.full));
    CHECK(fps::agree(genfun::skew_derivative(companion.full), companion.full * Rational(2)));
    // the companion splits back into the table series and its odd part
    CHECK(fps::agree(fps::even_part(companion.full), p));
    CHECK(fps::agree(fps::odd_part(companion.full), companion.odd));

    // series-level edge identity: coeff(2n,0) = 2n * odd coeff(2n-1,0)
    for (int n = 1; 2 * n - 1 <= companion.odd.order(); ++n) {
        CHECK(p.coeff(2 * n, 0) == Rational(2 * n) * companion.odd.coeff(2 * n - 1, 0));
    }
}

TEST_CASE("seidel fill from seed: fixed cases") {
    std::vector<Rational> zeros(8, Rational(0));
    auto z = genfun::seidel_from_seed(zeros);
    CHECK(z.array == Series2(7));

    // seed all ones: A = e^x, array entry (i,j) = (-1)^j from e^{x-y}
    std::vector<Rational> ones(9, Rational(1));
    auto e = genfun::seidel_from_seed(ones);
    for (int d = 0; d <= e.array.order(); ++d)
        for (int j = 0; j <= d; ++j) CHECK(e.array.coeff(d - j, j) == (j % 2 == 0 ? 1 : -1));
}

TEST_CASE("seidel fill equals the closed form on random seeds") {
    std::mt19937 rng(41001);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<Rational> seed(10);
        for (auto& s : seed) s = entry(rng);
        auto fill = genfun::seidel_from_seed(seed);
        CHECK(fps::agree(fill.array, fill.closed_form));
        CHECK(genfun::satisfies_seidel_relation(fill.array));
    }
}

TEST_CASE("even/odd split from the companion's first row") {
    Series2 p = genfun::table_series(10);
    auto companion = genfun::seidel_companion(p);
    std::vector<Rational> seed;
    for (int i = 0; i <= companion.full.order(); ++i) seed.push_back(companion.full.coeff(i, 0));

    auto split = genfun::seidel_even_odd_split(seed);
    // the fill from the first row reproduces the companion itself
    CHECK(fps::agree(split.array, companion.full));

    // B = 1/(cosh x - x sinh x)
    int ord = companion.full.order();
    Series1 expected = Series1::constant(1, ord) /
                       (fps::elementary("cosh", ord) -
                        Series1::monomial_x(ord) * fps::elementary("sinh", ord));
    CHECK(fps::agree(split.even_factor, expected));
    CHECK(fps::agree(split.even, p));
}

TEST_CASE("even/odd split rejects seeds without sign symmetry") {
    // A = cosh: the induced array has a(0,1) = -2 but (-1)^1 a(1,0) = 0
    std::vector<Rational> cosh_seed;
    for (int i = 0; i <= 10; ++i) cosh_seed.push_back(i % 2 == 0 ? 1 : 0);
    CHECK_THROWS_AS(genfun::seidel_even_odd_split(cosh_seed), sign_symmetry_error);
}

TEST_CASE("even/odd split on zero and random even-factor seeds") {
    std::vector<Rational> zeros(8, Rational(0));
    auto z = genfun::seidel_even_odd_split(zeros);
    CHECK(z.even_factor == Series1(7));
    CHECK(z.even == Series2(7));
    CHECK(z.odd == Series2(7));

    // seeds built as A = e^x * B with B even satisfy the sign condition
    std::mt19937 rng(41002);
    std::uniform_int_distribution<int> entry(-9, 9);
    int ord = 9;
    for (int rep = 0; rep < 20; ++rep) {
        Series1 even_b(ord);
        for (int i = 0; i <= ord; i += 2) even_b.set_coeff(i, entry(rng));
        Series1 a = fps::elementary("exp", ord) * even_b;
        std::vector<Rational> seed;
        for (int i = 0; i <= ord; ++i) seed.push_back(a.coeff(i));

        auto split = genfun::seidel_even_odd_split(seed);
        CHECK(fps::agree(split.even_factor, even_b));
        Series2 b_sum = fps::compose_linear(split.even_factor, 1, 1, ord);
        CHECK(fps::agree(split.even,
                         fps::compose_linear(fps::elementary("cosh", ord), 1, -1, ord) * b_sum));
        CHECK(fps::agree(split.odd,
                         fps::compose_linear(fps::elementary("sinh", ord), 1, -1, ord) * b_sum));
    }
}

TEST_CASE("diagonal series") {
    Series1 d = genfun::diag_series(8);
    CHECK(d.coeff(0) == 1);
    CHECK(d.coeff(4) == 16);        // 2^2 * p_2(2)
    CHECK(d.coeff(8) == 16 * 816);  // 2^4 * p_4(4)
    for (int i = 1; i <= 8; i += 2) CHECK(d.coeff(i) == 0);

    // matches the restriction of the bivariate closed form to y = 0
    CHECK(fps::agree(d, fps::restrict_y0(genfun::table_series(4))));
}

TEST_CASE("uudd series and V extraction") {
    Series1 u = genfun::uudd_series(13);
    CHECK(genfun::extract_V(u, 0) == 1);
    CHECK(genfun::extract_V(u, 1) == 2);
    CHECK(genfun::extract_V(u, 2) == 14);
    CHECK(genfun::extract_V(u, 3) == 204);
    CHECK(genfun::extract_V(u, 4) == 5104);
    CHECK(genfun::extract_V(u, 6) == 10570416);
    CHECK_THROWS_AS(genfun::extract_V(u, 7), std::out_of_range);

    // the x^11 coefficient has no pinned reference value; both routes must
    // agree on whatever it is
    pnk::Table t = pnk::Table::build(5);
    CHECK(genfun::extract_V(u, 5) == t.row_sum(5));
}

TEST_CASE("w relation and beta row sums") {
    pnk::Table t = pnk::Table::build(12);
    CHECK(genfun::verify_w_relation(t, 12));
    CHECK(genfun::verify_beta_row_sum(t, 12));
    // spot values: 2 p_3(3) = 6 V_2 and 2 p_4(4) = 8 V_3
    Series1 u = genfun::uudd_series(9);
    CHECK(2 * t.value(3, 3) == 6 * genfun::extract_V(u, 2));
    CHECK(2 * t.value(4, 4) == 8 * genfun::extract_V(u, 3));

    std::vector<std::vector<Integer>> rows;
    for (int n = 0; n <= 4; ++n) rows.push_back(t.row(n));
    rows[4][8] += 2;
    rows[4][0] += 2;  // keep it palindromic so only the sum checks fail
    pnk::Table bad = pnk::Table::from_rows(std::move(rows));
    CHECK_FALSE(genfun::verify_w_relation(bad, 4));
    CHECK_FALSE(genfun::verify_beta_row_sum(bad, 4));
}
