#include "bifib/sequences.hpp"

#include "bifib/strategies.hpp"

#include <cmath>

namespace bifib {

namespace {

const MultiPoly& poly_x() {
    static const MultiPoly p = MultiPoly::variable(Var::x);
    return p;
}
const MultiPoly& poly_y() {
    static const MultiPoly p = MultiPoly::variable(Var::y);
    return p;
}

std::complex<double> complex_int_pow(std::complex<double> base, long long n) {
    bool invert = n < 0;
    unsigned long long k = static_cast<unsigned long long>(invert ? -n : n);
    std::complex<double> acc{1.0, 0.0};
    while (k != 0) {
        if (k & 1ull) acc *= base;
        base *= base;
        k >>= 1ull;
    }
    return invert ? 1.0 / acc : acc;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::naive: return "naive";
        case Strategy::matrix_pow: return "matrix_pow";
        case Strategy::doubling: return "doubling";
        case Strategy::closed_form: return "closed_form";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    for (Strategy s : all_strategies())
        if (strategy_name(s) == name) return s;
    return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
    static const std::vector<Strategy> v = {Strategy::naive, Strategy::matrix_pow,
                                            Strategy::doubling, Strategy::closed_form};
    return v;
}

const SeqParams& SeqParams::fib() {
    static const SeqParams p{MultiPoly(0), MultiPoly(1)};
    return p;
}

const SeqParams& SeqParams::lucas() {
    static const SeqParams p{MultiPoly(2), MultiPoly::variable(Var::x)};
    return p;
}

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int acc(1);
    for (long long j = 1; j <= k; ++j) {
        acc *= Int(n - k + j);
        acc /= Int(j);  // exact: acc is binom(n-k+j, j) after this step
    }
    return acc;
}

MultiPoly h_n(const SeqParams& params, long long n) {
    if (n == 0) return params.a0;
    if (n == 1) return params.a1;
    if (n > 1) {
        MultiPoly prev = params.a0;
        MultiPoly cur = params.a1;
        for (long long k = 2; k <= n; ++k) {
            MultiPoly next = poly_x() * cur + poly_y() * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // H_{-k} = -(x/y) H_{-(k-1)} + (1/y) H_{-(k-2)}, seeded by (H_1, H_0).
    const MultiPoly minus_x_over_y =
        MultiPoly::monomial(GaussianInt(-1), [] {
            Exponents e;
            e[Var::x] = 1;
            e[Var::y] = -1;
            return e;
        }());
    const MultiPoly y_inv = MultiPoly::variable(Var::y, -1);
    MultiPoly prev = params.a1;  // H_{-(k-2)}
    MultiPoly cur = params.a0;   // H_{-(k-1)}
    for (long long k = 1; k <= -n; ++k) {
        MultiPoly next = minus_x_over_y * cur + y_inv * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Matrix2 a_matrix() {
    return {poly_x(), MultiPoly(1), poly_y(), MultiPoly()};
}

Matrix2 a_matrix_power(long long n) {
    if (n < 1) throw DomainError("a_matrix_power requires n >= 1");
    auto m = matrix_power_entries(PolyFibRing{}, n);
    return {std::move(m[0]), std::move(m[1]), std::move(m[2]), std::move(m[3])};
}

Matrix2 c_matrix(const SeqParams& params) {
    Matrix2 c = Matrix2::identity().scaled(params.a0 * poly_y());
    return c + a_matrix().scaled(params.a1);
}

Matrix2 ca_matrix_power(const SeqParams& params, long long n) {
    if (n < 0) throw DomainError("ca_matrix_power requires n >= 0");
    Matrix2 c = c_matrix(params);
    return n == 0 ? c : c * a_matrix_power(n);
}

std::pair<MultiPoly, MultiPoly> fib_doubling(long long n) {
    if (n < 0) throw DomainError("fib_doubling requires n >= 0");
    return fib_doubling_pair(PolyFibRing{}, n);
}

MultiPoly closed_form_fib(long long n) {
    if (n < 0) throw DomainError("closed_form_fib requires n >= 0");
    return fib_closed_form(PolyFibRing{}, n + 1);
}

MultiPoly h_from_fib(const SeqParams& params, long long n) {
    if (n < 0) throw DomainError("h_from_fib requires n >= 0");
    auto [fn, fn1] = fib_doubling(n);
    return params.a0 * poly_y() * fn + params.a1 * fn1;
}

MultiPoly h_negative_closed(const SeqParams& params, long long n) {
    if (n < 1) throw DomainError("h_negative_closed requires n >= 1");
    auto [fn, fn1] = fib_doubling(n);
    MultiPoly bracket = params.a0 * fn1 - params.a1 * fn;
    GaussianInt sign(n % 2 == 0 ? 1 : -1);
    Exponents e;
    e[Var::y] = static_cast<std::int32_t>(-n);
    return MultiPoly::monomial(sign, e) * bracket;
}

std::vector<MultiPoly> series_coeffs(const SeqParams& params, std::size_t count) {
    if (count < 1) throw DomainError("series_coeffs requires count >= 1");
    std::vector<MultiPoly> c;
    c.reserve(count);
    // (1 - x t - y t^2) * sum c_k t^k = a0 + (a1 - a0 x) t fixes every
    // coefficient in turn.
    c.push_back(params.a0);
    if (count > 1) c.push_back(params.a1 - params.a0 * poly_x() + poly_x() * c[0]);
    for (std::size_t k = 2; k < count; ++k)
        c.push_back(poly_x() * c[k - 1] + poly_y() * c[k - 2]);
    return c;
}

BinetRoots binet_roots(double x, double y) {
    if (y == 0.0) throw DomainError("binet_roots requires y != 0");
    std::complex<double> disc(x * x + 4.0 * y, 0.0);
    if (disc.real() == 0.0) throw DomainError("binet_roots requires x^2 + 4y != 0");
    std::complex<double> root = std::sqrt(disc);
    return {(std::complex<double>(x) + root) / 2.0, (std::complex<double>(x) - root) / 2.0};
}

std::complex<double> binet_numeric(const SeqParams& params, long long n, double x, double y) {
    auto [alpha, beta] = binet_roots(x, y);
    FloatPoint pt{{Var::x, {x, 0.0}}, {Var::y, {y, 0.0}}};
    std::complex<double> a0 = params.a0.evaluate_float(pt);
    std::complex<double> a1 = params.a1.evaluate_float(pt);
    std::complex<double> spread = alpha - beta;
    return (a1 - beta * a0) * complex_int_pow(alpha, n) / spread -
           (a1 - alpha * a0) * complex_int_pow(beta, n) / spread;
}

MultiPoly complex_rep_fib_y1(long long n) {
    if (n < 1) throw DomainError("complex_rep_fib_y1 requires n >= 1");
    const MultiPoly base = poly_x() + MultiPoly(GaussianInt(Int(0), Int(2)));  // x + 2i
    MultiPoly acc;
    MultiPoly base_pow(1);  // base^(n-r-1), built from r = n-1 downwards
    for (long long r = n - 1; r >= 0; --r) {
        GaussianInt coeff = GaussianInt(binomial(2 * n - 1 - r, r)) * unit_i_pow(-r);
        acc += MultiPoly(coeff) * base_pow;
        if (r > 0) base_pow *= base;
    }
    return acc;
}

MultiPoly complex_rep_fib(long long n) {
    if (n < 1) throw DomainError("complex_rep_fib requires n >= 1");
    // x + 2si and -si, with s the formal square root of y
    const MultiPoly base =
        poly_x() + MultiPoly::monomial(GaussianInt(Int(0), Int(2)), [] {
            Exponents e;
            e[Var::s] = 1;
            return e;
        }());
    const MultiPoly minus_si = MultiPoly::monomial(GaussianInt(Int(0), Int(-1)), [] {
        Exponents e;
        e[Var::s] = 1;
        return e;
    }());
    MultiPoly acc;
    MultiPoly base_pow(1);
    for (long long r = n - 1; r >= 0; --r) {
        acc += MultiPoly(GaussianInt(binomial(2 * n - 1 - r, r))) * minus_si.pow(r) * base_pow;
        if (r > 0) base_pow *= base;
    }
    return acc;
}

}  // namespace bifib
