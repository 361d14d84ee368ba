// Command-line front end: the p_n(k) triangle, the closed-form series
// coefficients, the brute-force oracles, and the verification suites, in
// machine-readable formats.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 feasibility-bound exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <uudd/errors.hpp>
#include <uudd/extras.hpp>
#include <uudd/genfun.hpp>
#include <uudd/numeric.hpp>
#include <uudd/permlab.hpp>
#include <uudd/pnk.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace uudd;
using fps::Series1;
using fps::Series2;

// ---------------------------------------------------------------- output --

void print_json(const std::string& command, json parameters, json payload) {
    json doc{{"meta", {{"command", command}, {"parameters", std::move(parameters)}}},
             {"payload", std::move(payload)}};
    std::cout << doc.dump(2) << "\n";
}

void print_csv(const std::string& header, const std::vector<std::vector<std::string>>& rows) {
    std::cout << header << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << row[i];
        }
        std::cout << "\n";
    }
}

// OEIS b-file convention: "index value", 1-based line numbering.
void print_bfile(const std::vector<std::string>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        std::cout << (i + 1) << " " << values[i] << "\n";
    }
}

// ------------------------------------------------------------------- pnk --

int run_pnk(int n_max, const std::string& format) {
    pnk::Table t = pnk::Table::build(n_max);
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (int n = 0; n <= n_max; ++n)
            for (int k = -n; k <= n; ++k)
                rows.push_back({std::to_string(n), std::to_string(k), t.value(n, k).str()});
        print_csv("n,k,p", rows);
    } else if (format == "json") {
        json rows = json::array();
        for (int n = 0; n <= n_max; ++n) {
            json row = json::array();
            for (int k = -n; k <= n; ++k) row.push_back(t.value(n, k).str());
            rows.push_back(std::move(row));
        }
        print_json("pnk", {{"n", n_max}, {"format", format}}, {{"rows", rows}});
    } else {  // bfile: the table flattened row by row, k from -n to n
        std::vector<std::string> flat;
        for (int n = 0; n <= n_max; ++n)
            for (int k = -n; k <= n; ++k) flat.push_back(t.value(n, k).str());
        print_bfile(flat);
    }
    return 0;
}

// ---------------------------------------------------------------- series --

int run_series(const std::string& name, int order, const std::string& format) {
    if (name == "uudd") {
        Series1 u = genfun::uudd_series(order);
        std::vector<std::string> values;
        for (int n = 0; 2 * n + 1 <= order; ++n) values.push_back(genfun::extract_V(u, n).str());
        if (format == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (size_t n = 0; n < values.size(); ++n) rows.push_back({std::to_string(n), values[n]});
            print_csv("n,V", rows);
        } else if (format == "json") {
            print_json("series", {{"name", name}, {"order", order}, {"format", format}},
                       {{"V", values}});
        } else {
            print_bfile(values);
        }
    } else if (name == "diag") {
        Series1 d = genfun::diag_series(order);
        std::vector<std::string> values;
        for (int n = 0; 2 * n <= order; ++n) {
            Rational descaled = d.coeff(2 * n) / Rational(pow2(static_cast<unsigned>(n)));
            values.push_back(to_integer(descaled).str());
        }
        if (format == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (size_t n = 0; n < values.size(); ++n) rows.push_back({std::to_string(n), values[n]});
            print_csv("n,p_n_n", rows);
        } else if (format == "json") {
            print_json("series", {{"name", name}, {"order", order}, {"format", format}},
                       {{"diagonal", values}});
        } else {
            print_bfile(values);
        }
    } else if (name == "P") {
        Series2 p = genfun::table_series(order / 2);
        int n_max = order / 2;
        if (format == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (int n = 0; n <= n_max; ++n)
                for (int k = -n; k <= n; ++k)
                    rows.push_back({std::to_string(n), std::to_string(k),
                                    genfun::extract_pnk(p, n, k).str()});
            print_csv("n,k,p", rows);
        } else if (format == "json") {
            json rows = json::array();
            for (int n = 0; n <= n_max; ++n) {
                json row = json::array();
                for (int k = -n; k <= n; ++k) row.push_back(genfun::extract_pnk(p, n, k).str());
                rows.push_back(std::move(row));
            }
            print_json("series", {{"name", name}, {"order", order}, {"format", format}},
                       {{"rows", rows}});
        } else {
            std::vector<std::string> flat;
            for (int n = 0; n <= n_max; ++n)
                for (int k = -n; k <= n; ++k) flat.push_back(genfun::extract_pnk(p, n, k).str());
            print_bfile(flat);
        }
    } else {  // entringer
        Series2 e = extras::entringer_series(order);
        // reading order: total degree ascending, then m ascending
        std::vector<std::vector<std::string>> rows;
        for (int d = 0; d <= order; ++d)
            for (int m = 0; m <= d; ++m)
                rows.push_back({std::to_string(m), std::to_string(d - m),
                                extras::entringer_count(e, m, d - m).str()});
        if (format == "csv") {
            print_csv("m,n,count", rows);
        } else if (format == "json") {
            json counts = json::array();
            for (const auto& r : rows) {
                counts.push_back(json::array({std::stoi(r[0]), std::stoi(r[1]), r[2]}));
            }
            print_json("series", {{"name", name}, {"order", order}, {"format", format}},
                       {{"counts", counts}});
        } else {
            std::vector<std::string> flat;
            for (const auto& r : rows) flat.push_back(r[2]);
            print_bfile(flat);
        }
    }
    return 0;
}

// ----------------------------------------------------------------- brute --

struct BruteParams {
    std::string kind;
    int n = -1, length = -1, rows = -1, cols = -1, m = -1;
    int limit = 0;  // raises the kind's feasibility bound when larger
    std::string format = "csv";
};

int run_brute(const BruteParams& p) {
    permlab::Limits lim = permlab::Limits::from_env();
    auto raise = [&](int& field) {
        if (p.limit > field) field = p.limit;
    };
    auto need = [](int value, const char* flag) {
        if (value < 0) throw CLI::ValidationError(std::string("--") + flag + " is required for this kind");
    };

    if (p.kind == "pnk") {
        need(p.n, "n");
        raise(lim.pnk_n);
        auto row = permlab::brute_pnk_row(p.n, lim);
        if (p.format == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (int k = -p.n; k <= p.n; ++k)
                rows.push_back({std::to_string(p.n), std::to_string(k),
                                row[static_cast<size_t>(k + p.n)].str()});
            print_csv("n,k,count", rows);
        } else {
            json values = json::array();
            for (const auto& v : row) values.push_back(v.str());
            print_json("brute", {{"kind", p.kind}, {"n", p.n}, {"format", p.format}},
                       {{"row", values}});
        }
    } else if (p.kind == "uudd") {
        need(p.length, "length");
        raise(lim.uudd_length);
        Integer c = permlab::brute_uudd_count(p.length, lim);
        if (p.format == "csv") {
            print_csv("length,count", {{std::to_string(p.length), c.str()}});
        } else {
            print_json("brute", {{"kind", p.kind}, {"length", p.length}, {"format", p.format}},
                       {{"count", c.str()}});
        }
    } else if (p.kind == "whirlpool") {
        need(p.rows, "rows");
        need(p.cols, "cols");
        raise(lim.whirlpool_cells);
        Integer c = permlab::count_whirlpool(p.rows, p.cols, lim);
        if (p.format == "csv") {
            print_csv("rows,cols,count",
                      {{std::to_string(p.rows), std::to_string(p.cols), c.str()}});
        } else {
            print_json("brute",
                       {{"kind", p.kind}, {"rows", p.rows}, {"cols", p.cols}, {"format", p.format}},
                       {{"count", c.str()}});
        }
    } else if (p.kind == "alternating") {
        need(p.m, "m");
        need(p.n, "n");
        raise(lim.fixed_last_length);
        Integer c = permlab::brute_alternating_ending_zero(p.m, p.n, lim);
        if (p.format == "csv") {
            print_csv("m,n,count", {{std::to_string(p.m), std::to_string(p.n), c.str()}});
        } else {
            print_json("brute",
                       {{"kind", p.kind}, {"m", p.m}, {"n", p.n}, {"format", p.format}},
                       {{"count", c.str()}});
        }
    } else {  // descents
        need(p.m, "m");
        need(p.n, "n");
        raise(lim.fixed_last_length);
        TPoly poly = permlab::brute_descent_poly_ending_zero(p.m, p.n, lim);
        if (p.format == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (int d = 0; d <= std::max(poly.degree(), 0); ++d)
                rows.push_back({std::to_string(d), poly.coeff(d).str()});
            print_csv("degree,coeff", rows);
        } else {
            json coeffs = json::array();
            for (int d = 0; d <= std::max(poly.degree(), 0); ++d) coeffs.push_back(poly.coeff(d).str());
            print_json("brute",
                       {{"kind", p.kind}, {"m", p.m}, {"n", p.n}, {"format", p.format}},
                       {{"coefficients", coeffs}, {"poly", poly.str()}});
        }
    }
    return 0;
}

// ---------------------------------------------------------------- verify --

struct Check {
    std::string name;
    std::function<bool()> run;
};

int run_verify(const std::string& suite, int n_max, int order, bool corrupt,
               const std::string& format) {
    pnk::Table table = pnk::Table::build(std::max(n_max, order / 2));
    Series2 closed = genfun::table_series(order / 2);
    if (corrupt) {
        // test-only hook: perturb one table entry and one series coefficient
        std::vector<std::vector<Integer>> rows;
        for (int n = 0; n <= table.max_n(); ++n) rows.push_back(table.row(n));
        if (table.max_n() >= 1) rows[1][2] += 1;
        table = pnk::Table::from_rows(std::move(rows));
        if (closed.order() >= 2) closed.set_coeff(2, 0, closed.coeff(2, 0) + 1);
    }

    std::vector<Check> checks;
    auto add = [&](std::string name, std::function<bool()> fn) {
        checks.push_back({std::move(name), std::move(fn)});
    };

    if (suite == "lemmas" || suite == "all") {
        add("symmetry: p_n(-k) = p_n(k) for n <= " + std::to_string(n_max),
            [&] { return pnk::verify_symmetry(table); });
        add("second difference: p_{n+1}(k+1) - 2 p_{n+1}(k) + p_{n+1}(k-1) = 2 p_n(k)",
            [&] { return pnk::verify_second_difference(table); });
        add("edge relation: (n-1) p_n(n) = n p_n(n-1)",
            [&] { return pnk::verify_edge_relation(table); });
        add("recurrence matches enumeration for n <= " + std::to_string(std::min(n_max, 4)), [&] {
            for (int n = 0; n <= std::min(n_max, 4); ++n) {
                if (permlab::brute_pnk_row(n) != table.row(n)) return false;
            }
            return true;
        });
    }

    if (suite == "theorem" || suite == "all") {
        int nn = order / 2;
        add("closed form: coefficients of odd total degree vanish", [&] {
            for (int d = 1; d <= closed.order(); d += 2)
                for (int j = 0; j <= d; ++j)
                    if (closed.coeff(d - j, j) != 0) return false;
            return true;
        });
        add("closed form: symmetric under swapping the two indices",
            [&] { return fps::agree(closed, fps::transpose(closed)); });
        add("skew derivative applied twice rescales the closed form by 4", [&] {
            Series2 twice = genfun::skew_derivative(genfun::skew_derivative(closed));
            return fps::agree(twice, closed * Rational(4));
        });
        add("closed form matches the recurrence table for n <= " + std::to_string(nn), [&] {
            for (int n = 0; n <= nn; ++n)
                for (int k = -n; k <= n; ++k)
                    if (genfun::extract_pnk(closed, n, k) != table.value(n, k)) return false;
            return true;
        });
        add("three-way agreement with enumeration for n <= " + std::to_string(std::min(nn, 4)), [&] {
            for (int n = 0; n <= std::min(nn, 4); ++n) {
                auto brute = permlab::brute_pnk_row(n);
                for (int k = -n; k <= n; ++k) {
                    if (genfun::extract_pnk(closed, n, k) != brute[static_cast<size_t>(k + n)]) return false;
                    if (table.value(n, k) != brute[static_cast<size_t>(k + n)]) return false;
                }
            }
            return true;
        });
        add("series edge identity: coeff(2n,0) = 2n * odd-companion coeff(2n-1,0)", [&] {
            auto companion = genfun::seidel_companion(closed);
            for (int n = 1; 2 * n <= companion.odd.order() + 1; ++n) {
                if (closed.coeff(2 * n, 0) !=
                    Rational(2 * n) * companion.odd.coeff(2 * n - 1, 0)) return false;
            }
            return true;
        });
    }

    if (suite == "seidel" || suite == "all") {
        add("seidel companion: a(i+1,j) - a(i,j+1) = 2 a(i,j)", [&] {
            return genfun::satisfies_seidel_relation(genfun::seidel_companion(closed).full);
        });
        add("seidel companion: skew derivative doubles it", [&] {
            auto full = genfun::seidel_companion(closed).full;
            return fps::agree(genfun::skew_derivative(full), full * Rational(2));
        });
        add("seidel companion: sign symmetry a(j,i) = (-1)^{i+j} a(i,j)", [&] {
            return genfun::sign_symmetric(genfun::seidel_companion(closed).full);
        });
        add("even factor of the companion equals 1/(cosh x - x sinh x)", [&] {
            auto full = genfun::seidel_companion(closed).full;
            Series1 b = fps::compose_scale(fps::elementary("exp", full.order()), -1) *
                        fps::restrict_y0(full);
            Series1 expected = Series1::constant(1, full.order()) /
                               (fps::elementary("cosh", full.order()) -
                                Series1::monomial_x(full.order()) *
                                    fps::elementary("sinh", full.order()));
            return fps::agree(b, expected);
        });
        add("random seeds: recurrence fill equals e^{-2y} A(x+y) (25 seeds)", [&] {
            std::mt19937 rng(77001);
            std::uniform_int_distribution<int> entry(-9, 9);
            for (int rep = 0; rep < 25; ++rep) {
                std::vector<Rational> seed(10);
                for (auto& s : seed) s = entry(rng);
                auto fill = genfun::seidel_from_seed(seed);
                if (!fps::agree(fill.array, fill.closed_form)) return false;
            }
            return true;
        });
        add("random even-factor seeds: even/odd split holds (10 seeds)", [&] {
            std::mt19937 rng(77002);
            std::uniform_int_distribution<int> entry(-9, 9);
            int ord = 9;
            for (int rep = 0; rep < 10; ++rep) {
                Series1 even_b(ord);
                for (int i = 0; i <= ord; i += 2) even_b.set_coeff(i, entry(rng));
                Series1 a = fps::elementary("exp", ord) * even_b;
                std::vector<Rational> seed;
                for (int i = 0; i <= ord; ++i) seed.push_back(a.coeff(i));
                auto split = genfun::seidel_even_odd_split(seed);
                if (!fps::agree(split.even_factor, even_b)) return false;
            }
            return true;
        });
    }

    if (suite == "section3" || suite == "all") {
        add("w relation: 2 p_n(n) = 2n V_{n-1} for n <= " + std::to_string(n_max),
            [&] { return genfun::verify_w_relation(table, n_max); });
        add("row sums: sum_k p_n(k) = V_n for n <= " + std::to_string(n_max),
            [&] { return genfun::verify_beta_row_sum(table, n_max); });
        add("diagonal series: coeff(2n) = 2^n p_n(n)", [&] {
            Series1 d = genfun::diag_series(2 * n_max);
            for (int n = 0; n <= n_max; ++n) {
                if (d.coeff(2 * n) != Rational(pow2(static_cast<unsigned>(n)) * table.value(n, n)))
                    return false;
            }
            return true;
        });
        add("whirlpool counts: count(2,c) = 2c V_{c-1} for c <= 4", [&] {
            Series1 u = genfun::uudd_series(7);
            for (int c = 1; c <= 4; ++c) {
                if (permlab::count_whirlpool(2, c) != Integer(2 * c) * genfun::extract_V(u, c - 1))
                    return false;
            }
            return true;
        });
        add("entringer series matches enumeration for m+n <= 5", [&] {
            Series2 e = extras::entringer_series(5);
            for (int m = 0; m <= 5; ++m)
                for (int n = 0; m + n <= 5; ++n)
                    if (extras::entringer_count(e, m, n) !=
                        permlab::brute_alternating_ending_zero(m, n)) return false;
            return true;
        });
        add("eulerian polynomials match enumeration and direct expansion for m+n <= 4",
            [&] { return extras::verify_eulerian_identity(4); });
        add("eulerian at t=1: A_{m,n}(1) = (m+n)! for m+n <= 6", [&] {
            for (int m = 0; m <= 6; ++m)
                for (int n = 0; m + n <= 6; ++n)
                    if (extras::eulerian_poly(m, n).eval(1) !=
                        factorial(static_cast<unsigned>(m + n))) return false;
            return true;
        });
    }

    int failed = 0;
    json results = json::array();
    for (const auto& check : checks) {
        bool pass = false;
        std::string note;
        try {
            pass = check.run();
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        if (!pass) ++failed;
        if (format == "json") {
            results.push_back({{"name", check.name}, {"pass", pass}});
        } else {
            std::cout << (pass ? "[PASS] " : "[FAIL] ") << check.name;
            if (!note.empty()) std::cout << " (" << note << ")";
            std::cout << "\n";
        }
    }
    if (format == "json") {
        print_json("verify",
                   {{"suite", suite}, {"n", n_max}, {"order", order}},
                   {{"checks", results}, {"all_pass", failed == 0}});
    } else if (failed == 0) {
        std::cout << "all " << checks.size() << " checks passed\n";
    } else {
        std::cout << failed << " of " << checks.size() << " checks FAILED\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts and identity checks for up-up-or-down-down permutations"};
    app.require_subcommand(1);

    int pnk_n = 4;
    std::string pnk_format = "csv";
    auto* cmd_pnk = app.add_subcommand("pnk", "emit rows 0..n of the p_n(k) triangle");
    cmd_pnk->add_option("--n", pnk_n, "largest row index")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    cmd_pnk->add_option("--format", pnk_format, "csv, json, or bfile")
        ->check(CLI::IsMember({"csv", "json", "bfile"}))
        ->capture_default_str();

    std::string verify_suite = "all";
    int verify_n = 12, verify_order = 24;
    bool verify_corrupt = false;
    std::string verify_format = "text";
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", verify_suite, "lemmas, theorem, seidel, section3, or all")
        ->check(CLI::IsMember({"lemmas", "theorem", "seidel", "section3", "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--n", verify_n, "table depth for the row-based checks")
        ->check(CLI::Range(1, 60))
        ->capture_default_str();
    cmd_verify->add_option("--order", verify_order, "series truncation order")
        ->check(CLI::Range(4, 120))
        ->capture_default_str();
    cmd_verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd_verify->add_flag("--corrupt", verify_corrupt)->group("");  // test-only hook

    std::string series_name, series_format = "csv";
    int series_order = 20;
    auto* cmd_series = app.add_subcommand("series", "emit closed-form series coefficients");
    cmd_series->add_option("--name", series_name, "uudd, diag, P, or entringer")
        ->check(CLI::IsMember({"uudd", "diag", "P", "entringer"}))
        ->required();
    cmd_series->add_option("--order", series_order, "truncation order")
        ->check(CLI::Range(0, 200))
        ->capture_default_str();
    cmd_series->add_option("--format", series_format, "csv, json, or bfile")
        ->check(CLI::IsMember({"csv", "json", "bfile"}))
        ->capture_default_str();

    BruteParams brute;
    auto* cmd_brute = app.add_subcommand("brute", "run a brute-force oracle count");
    cmd_brute->add_option("--kind", brute.kind, "pnk, uudd, whirlpool, alternating, or descents")
        ->check(CLI::IsMember({"pnk", "uudd", "whirlpool", "alternating", "descents"}))
        ->required();
    cmd_brute->add_option("--n", brute.n, "row index (pnk) or positive-side size (alternating/descents)");
    cmd_brute->add_option("--length", brute.length, "permutation length (uudd)");
    cmd_brute->add_option("--rows", brute.rows, "matrix rows (whirlpool)");
    cmd_brute->add_option("--cols", brute.cols, "matrix columns (whirlpool)");
    cmd_brute->add_option("--m", brute.m, "negative-side size (alternating/descents)");
    cmd_brute->add_option("--limit", brute.limit,
                          "raise the feasibility bound for this kind (also via UUDD_LIMIT_*)");
    cmd_brute->add_option("--format", brute.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_pnk)) return run_pnk(pnk_n, pnk_format);
        if (app.got_subcommand(cmd_verify))
            return run_verify(verify_suite, verify_n, verify_order, verify_corrupt, verify_format);
        if (app.got_subcommand(cmd_series)) return run_series(series_name, series_order, series_format);
        if (app.got_subcommand(cmd_brute)) return run_brute(brute);
    } catch (const bound_error& e) {
        std::cerr << "feasibility bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
