#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bifib/grammar.hpp"
#include "bifib/sequences.hpp"
#include "bifib/strategies.hpp"
#include "oracles.hpp"

#include <cmath>
#include <complex>

using namespace bifib;

namespace {

const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);

MultiPoly P(const char* text) { return parse_poly(text); }

}  // namespace

TEST_CASE("initial conditions") {
    CHECK(h_n(SeqParams::fib(), 0) == MultiPoly(0));
    CHECK(h_n(SeqParams::fib(), 1) == MultiPoly(1));
    CHECK(h_n(SeqParams::lucas(), 0) == MultiPoly(2));
    CHECK(h_n(SeqParams::lucas(), 1) == X);
}

TEST_CASE("forward recurrence against frozen values") {
    CHECK(h_n(SeqParams::fib(), 5) == P("x^4 + 3*x^2*y + y^2"));
    CHECK(h_n(SeqParams::fib(), 6) == P("x^5 + 4*x^3*y + 3*x*y^2"));
    CHECK(h_n(SeqParams::lucas(), 3) == P("x^3 + 3*x*y"));
    CHECK(h_n(SeqParams::lucas(), 4) == P("x^4 + 4*x^2*y + 2*y^2"));
    // full prefix against the raw walk oracle
    auto f = oracles::poly_walk(MultiPoly(0), MultiPoly(1), 32);
    auto l = oracles::poly_walk(MultiPoly(2), X, 32);
    for (long long n = 0; n <= 32; ++n) {
        CHECK(h_n(SeqParams::fib(), n) == f[n]);
        CHECK(h_n(SeqParams::lucas(), n) == l[n]);
    }
}

TEST_CASE("negative indices walk the reverse recurrence") {
    CHECK(h_n(SeqParams::fib(), -1) == P("y^-1"));
    CHECK(h_n(SeqParams::fib(), -2) == P("-1*x*y^-2"));
    CHECK(h_n(SeqParams::lucas(), -1) == P("-1*x*y^-1"));
    // H_1 = x H_0 + y H_{-1} must hold for the walked values
    for (const SeqParams& params : {SeqParams::fib(), SeqParams::lucas()}) {
        for (long long n = -12; n <= 10; ++n) {
            CHECK(h_n(params, n + 1) == X * h_n(params, n) + Y * h_n(params, n - 1));
        }
    }
}

TEST_CASE("companion matrix powers") {
    Matrix2 a1 = a_matrix_power(1);
    CHECK(a1 == a_matrix());
    CHECK(a1.m11 == X);
    CHECK(a1.m12 == MultiPoly(1));
    CHECK(a1.m21 == Y);
    CHECK(a1.m22 == MultiPoly(0));

    Matrix2 a2 = a_matrix_power(2);
    CHECK(a2.m11 == P("x^2 + y"));
    CHECK(a2.m12 == X);
    CHECK(a2.m21 == P("x*y"));
    CHECK(a2.m22 == Y);

    CHECK(a_matrix_power(3).det() == P("-1*y^3"));
    CHECK_THROWS_AS(a_matrix_power(0), DomainError);

    auto f = oracles::poly_walk(MultiPoly(0), MultiPoly(1), 17);
    for (long long n = 1; n <= 16; ++n) {
        Matrix2 an = a_matrix_power(n);
        CHECK(an.m11 == f[n + 1]);
        CHECK(an.m12 == f[n]);
        CHECK(an.m21 == Y * f[n]);
        CHECK(an.m22 == Y * f[n - 1]);
        CHECK(an.det() == (-Y).pow(static_cast<unsigned long long>(n)));
    }
    for (auto [m, n] : {std::pair{1ll, 5ll}, {3ll, 4ll}, {7ll, 9ll}}) {
        CHECK(a_matrix_power(m + n) == a_matrix_power(m) * a_matrix_power(n));
    }
}

TEST_CASE("C and C*A^n") {
    Matrix2 b = c_matrix(SeqParams::lucas());
    CHECK(b.m11 == P("x^2 + 2*y"));
    CHECK(b.m12 == X);
    CHECK(b.m21 == P("x*y"));
    CHECK(b.m22 == P("2*y"));

    Matrix2 ca0 = ca_matrix_power(SeqParams::fib(), 0);
    CHECK(ca0 == a_matrix());  // entries (H_2, H_1, yH_1, yH_0) = (x, 1, y, 0)

    Matrix2 ca1 = ca_matrix_power(SeqParams::lucas(), 1);
    auto l = oracles::poly_walk(MultiPoly(2), X, 8);
    CHECK(ca1.m11 == l[3]);
    CHECK(ca1.m12 == l[2]);
    CHECK(ca1.m21 == Y * l[2]);
    CHECK(ca1.m22 == Y * l[1]);

    CHECK_THROWS_AS(ca_matrix_power(SeqParams::fib(), -1), DomainError);

    SeqParams odd{MultiPoly(1), X};
    auto h = oracles::poly_walk(odd.a0, odd.a1, 14);
    for (long long n = 0; n <= 12; ++n) {
        Matrix2 can = ca_matrix_power(odd, n);
        CHECK(can.m11 == h[n + 2]);
        CHECK(can.m12 == h[n + 1]);
        CHECK(can.m21 == Y * h[n + 1]);
        CHECK(can.m22 == Y * h[n]);
        if (n >= 1) CHECK(can == c_matrix(odd) * a_matrix_power(n));
    }
}

TEST_CASE("doubling pair") {
    auto [f0, f1] = fib_doubling(0);
    CHECK(f0 == MultiPoly(0));
    CHECK(f1 == MultiPoly(1));
    auto pair10 = fib_doubling(10);
    CHECK(pair10.first == h_n(SeqParams::fib(), 10));
    CHECK(pair10.second == h_n(SeqParams::fib(), 11));
    for (long long n : {1ll, 2ll, 3ll, 7ll, 20ll, 33ll, 64ll}) {
        auto [fn, fn1] = fib_doubling(n);
        CHECK(fn == h_n(SeqParams::fib(), n));
        CHECK(fn1 == h_n(SeqParams::fib(), n + 1));
    }
    // F_30 = 832040 at (1,1)
    auto ints = oracles::int_walk(0, 1, 1, 1, 30);
    CHECK(ints[30] == 832040);
    RationalPoint pt{{Var::x, Rat(1)}, {Var::y, Rat(1)}};
    CHECK(fib_doubling(29).second.evaluate_exact(pt) == GaussianRational(Rat(832040)));
}

TEST_CASE("closed form") {
    CHECK(closed_form_fib(0) == MultiPoly(1));
    CHECK(closed_form_fib(3) == P("x^3 + 2*x*y"));
    CHECK(closed_form_fib(4) == P("x^4 + 3*x^2*y + y^2"));
    for (long long n = 0; n <= 32; ++n)
        CHECK(closed_form_fib(n) == h_n(SeqParams::fib(), n + 1));
}

TEST_CASE("binomial against the Pascal recurrence") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    for (long long n = 1; n <= 40; ++n)
        for (long long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("conversion from F to H") {
    CHECK(h_from_fib(SeqParams::lucas(), 0) == X);
    CHECK(h_from_fib(SeqParams::lucas(), 1) == P("x^2 + 2*y"));
    for (long long n = 0; n <= 16; ++n) {
        CHECK(h_from_fib(SeqParams::fib(), n) == h_n(SeqParams::fib(), n + 1));
        CHECK(h_from_fib(SeqParams::lucas(), n) == h_n(SeqParams::lucas(), n + 1));
    }
}

TEST_CASE("negative-index closed form") {
    CHECK(h_negative_closed(SeqParams::fib(), 1) == P("y^-1"));
    CHECK(h_negative_closed(SeqParams::lucas(), 1) == P("-1*x*y^-1"));
    CHECK(h_negative_closed(SeqParams::fib(), 2) == h_n(SeqParams::fib(), -2));
    CHECK_THROWS_AS(h_negative_closed(SeqParams::fib(), 0), DomainError);
    SeqParams odd{MultiPoly(1), X};
    for (long long n = 1; n <= 32; ++n) {
        CHECK(h_negative_closed(SeqParams::fib(), n) == h_n(SeqParams::fib(), -n));
        CHECK(h_negative_closed(SeqParams::lucas(), n) == h_n(SeqParams::lucas(), -n));
        CHECK(h_negative_closed(odd, n) == h_n(odd, -n));
    }
}

TEST_CASE("series expansion") {
    auto f = series_coeffs(SeqParams::fib(), 4);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == MultiPoly(0));
    CHECK(f[1] == MultiPoly(1));
    CHECK(f[2] == X);
    CHECK(f[3] == P("x^2 + y"));
    auto l = series_coeffs(SeqParams::lucas(), 3);
    CHECK(l[0] == MultiPoly(2));
    CHECK(l[1] == X);
    CHECK(l[2] == P("x^2 + 2*y"));
    SeqParams custom{P("x + y"), P("(0+1i)")};
    CHECK(series_coeffs(custom, 1)[0] == custom.a0);
    auto h = series_coeffs(custom, 20);
    for (long long k = 0; k < 20; ++k) CHECK(h[k] == h_n(custom, k));
}

TEST_CASE("binet roots") {
    auto roots = binet_roots(1.0, 1.0);
    CHECK(std::abs(roots.alpha + roots.beta - 1.0) < 1e-12);
    CHECK(std::abs(roots.alpha * roots.beta + 1.0) < 1e-12);
    CHECK_THROWS_AS(binet_roots(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(binet_roots(2.0, -1.0), DomainError);  // x^2 + 4y = 0
    auto complex_roots = binet_roots(1.0, -3.0);            // x^2 + 4y < 0
    CHECK(complex_roots.alpha.imag() != 0.0);
}

TEST_CASE("binet closed form at sample points") {
    CHECK(std::abs(binet_numeric(SeqParams::fib(), 10, 1.0, 1.0) -
                   std::complex<double>(55.0)) < 1e-7);
    CHECK(std::abs(binet_numeric(SeqParams::lucas(), 0, 0.5, 2.0) -
                   std::complex<double>(2.0)) < 1e-9);
    CHECK(std::abs(binet_numeric(SeqParams::fib(), 5, 2.0, 1.0) -
                   std::complex<double>(29.0)) < 1e-7);  // Pell P_5
}

TEST_CASE("binet tracks exact evaluation over the grid") {
    const double grid[] = {-2.0, -1.0, 0.5, 1.0, 2.0};
    for (const SeqParams& params : {SeqParams::fib(), SeqParams::lucas()}) {
        for (double x : grid) {
            for (double y : grid) {
                if (y == 0.0 || x * x + 4.0 * y == 0.0) continue;
                for (long long n = -40; n <= 40; ++n) {
                    std::complex<double> exact = h_n(params, n).evaluate_float(
                        {{Var::x, {x, 0.0}}, {Var::y, {y, 0.0}}});
                    std::complex<double> closed = binet_numeric(params, n, x, y);
                    double scale = std::max(std::abs(exact), 1e-3);
                    CHECK(std::abs(closed - exact) / scale < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("gaussian sum representation at y = 1") {
    CHECK(complex_rep_fib_y1(1) == MultiPoly(1));
    CHECK(complex_rep_fib_y1(2) == X);
    CHECK(complex_rep_fib_y1(4) == P("x^3 + 2*x"));
    CHECK_THROWS_AS(complex_rep_fib_y1(0), DomainError);
    for (long long n = 1; n <= 16; ++n) {
        MultiPoly sum = complex_rep_fib_y1(n);
        for (const auto& [e, c] : sum.terms()) CHECK(c.is_real());
        CHECK(sum == h_n(SeqParams::fib(), n).substitute({{Var::y, MultiPoly(1)}}));
    }
}

TEST_CASE("gaussian sum representation in the s-ring") {
    CHECK(complex_rep_fib(2) == X);
    CHECK(complex_rep_fib(3) == P("x^2 + s^2"));
    CHECK(complex_rep_fib(5) == P("x^4 + 3*x^2*s^2 + s^4"));
    for (long long n = 1; n <= 12; ++n) {
        CHECK(complex_rep_fib(n) ==
              h_n(SeqParams::fib(), n)
                  .substitute({{Var::y, MultiPoly::variable(Var::s, 2)}}));
    }
}

TEST_CASE("routes agree") {
    auto f = oracles::poly_walk(MultiPoly(0), MultiPoly(1), 65);
    auto series = series_coeffs(SeqParams::fib(), 66);
    for (long long n = 0; n <= 64; ++n) {
        MultiPoly expect = f[n];
        CHECK(h_n(SeqParams::fib(), n) == expect);
        CHECK(fib_doubling(n).first == expect);
        CHECK(series[n] == expect);
        if (n >= 1) {
            CHECK(closed_form_fib(n - 1) == expect);
            CHECK(a_matrix_power(n).m12 == expect);
            CHECK(a_matrix_power(n).trace() == h_n(SeqParams::lucas(), n));
        }
    }
}

TEST_CASE("quasi-homogeneity of the presets") {
    for (long long n = 1; n <= 32; ++n) {
        CHECK(h_n(SeqParams::fib(), n).weighted_degree_profile({{Var::x, 1}, {Var::y, 2}}) ==
              std::set<long long>{n - 1});
        CHECK(h_n(SeqParams::lucas(), n).weighted_degree_profile(
                  {{Var::x, 1}, {Var::y, 2}}) == std::set<long long>{n});
    }
}
