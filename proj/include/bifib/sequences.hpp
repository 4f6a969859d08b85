#pragma once

#include "bifib/matrix2.hpp"
#include "bifib/multipoly.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace bifib {

/**
 * Initial conditions of a generalized bivariate Fibonacci sequence
 * H_n = x*H_{n-1} + y*H_{n-2}, H_0 = a0, H_1 = a1, where a0 and a1 are
 * themselves polynomials. The Fibonacci preset is (0, 1) and the Lucas
 * preset is (2, x).
 */
struct SeqParams {
    MultiPoly a0;
    MultiPoly a1;

    static const SeqParams& fib();
    static const SeqParams& lucas();

    bool operator==(const SeqParams&) const = default;
};

/**
 * H_n for any integer n. Nonnegative indices walk the forward recurrence;
 * negative indices walk H_{-n} = -(x/y) H_{-(n-1)} + (1/y) H_{-(n-2)}, which
 * produces Laurent terms in y.
 */
MultiPoly h_n(const SeqParams& params, long long n);

/// The companion matrix A = [[x, 1], [y, 0]].
Matrix2 a_matrix();

/// A^n for n >= 1 by binary exponentiation; entries are
/// (F_{n+1}, F_n, y F_n, y F_{n-1}).
Matrix2 a_matrix_power(long long n);

/// C = a0*y*I + a1*A; for the Lucas preset this is the matrix B.
Matrix2 c_matrix(const SeqParams& params);

/// C * A^n for n >= 0; entries are (H_{n+2}, H_{n+1}, y H_{n+1}, y H_n).
Matrix2 ca_matrix_power(const SeqParams& params, long long n);

/// (F_n, F_{n+1}) for n >= 0 via the index-doubling step.
std::pair<MultiPoly, MultiPoly> fib_doubling(long long n);

/// F_{n+1} as the binomial sum over binom(n-k, k) y^k x^(n-2k), n >= 0.
MultiPoly closed_form_fib(long long n);

/// H_{n+1} = a0*y*F_n + a1*F_{n+1} for n >= 0.
MultiPoly h_from_fib(const SeqParams& params, long long n);

/// H_{-n} = (-1)^n y^-n (a0*F_{n+1} - a1*F_n) for n >= 1.
MultiPoly h_negative_closed(const SeqParams& params, long long n);

/// First `count` power-series coefficients of
/// (a0 + (a1 - a0*x) t) / (1 - x t - y t^2).
std::vector<MultiPoly> series_coeffs(const SeqParams& params, std::size_t count);

/// Characteristic roots of t^2 - t*x - y at a numeric point.
struct BinetRoots {
    std::complex<double> alpha;
    std::complex<double> beta;
};

/// Requires y != 0 and x^2 + 4y != 0; the square root goes complex when
/// x^2 + 4y < 0.
BinetRoots binet_roots(double x, double y);

/// H_n from the closed form in the roots; n may be negative.
std::complex<double> binet_numeric(const SeqParams& params, long long n, double x, double y);

/// F_n(x, 1) as the Gaussian-coefficient sum over binom(2n-1-r, r)
/// (x+2i)^(n-r-1) (-i)^r, n >= 1. All imaginary parts cancel.
MultiPoly complex_rep_fib_y1(long long n);

/// The same sum with sqrt(y) encoded as the formal variable s:
/// binom(2n-1-r, r) (x+2si)^(n-r-1) (-si)^r, n >= 1. Equals F_n with y -> s^2.
MultiPoly complex_rep_fib(long long n);

}  // namespace bifib
