#pragma once

#include "bifib/gaussian.hpp"
#include "bifib/multipoly.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace bifib {

/// The four ways of producing F_n that the benchmark compares.
enum class Strategy { naive, matrix_pow, doubling, closed_form };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);
const std::vector<Strategy>& all_strategies();

Int binomial(long long n, long long k);

/**
 * Ring contexts the strategies are generic over. A context supplies the
 * images of x and y, the ring constants, and a lift of big integers into
 * the ring. `PolyFibRing` computes symbolically; `RationalFibRing`
 * computes exact values at a rational point.
 */
struct PolyFibRing {
    using value_type = MultiPoly;
    MultiPoly x = MultiPoly::variable(Var::x);
    MultiPoly y = MultiPoly::variable(Var::y);
    MultiPoly zero() const { return MultiPoly(); }
    MultiPoly one() const { return MultiPoly(1); }
    MultiPoly lift(const Int& v) const { return MultiPoly(GaussianInt(v)); }
};

struct RationalFibRing {
    using value_type = Rat;
    Rat x;
    Rat y;
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat lift(const Int& v) const { return Rat(v); }
};

/// F_n by the two-term recurrence, n >= 0.
/// Intermediates are pinned to value_type so that expression-template
/// scalars (boost rationals) evaluate before their operands move.
template <class Ring>
typename Ring::value_type fib_naive(const Ring& ring, long long n) {
    using V = typename Ring::value_type;
    V f = ring.zero();
    V g = ring.one();
    for (long long k = 0; k < n; ++k) {
        V next = ring.x * g + ring.y * f;
        f = std::move(g);
        g = std::move(next);
    }
    return f;
}

/// A^n for A = [[x, 1], [y, 0]] by binary exponentiation, n >= 1.
/// Entry order: {m11, m12, m21, m22} = {F_{n+1}, F_n, y*F_n, y*F_{n-1}}.
template <class Ring>
std::array<typename Ring::value_type, 4> matrix_power_entries(const Ring& ring, long long n) {
    using V = typename Ring::value_type;
    auto mul = [](const std::array<V, 4>& a, const std::array<V, 4>& b) {
        return std::array<V, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    std::array<V, 4> result{ring.one(), ring.zero(), ring.zero(), ring.one()};
    std::array<V, 4> base{ring.x, ring.one(), ring.y, ring.zero()};
    unsigned long long k = static_cast<unsigned long long>(n);
    while (true) {
        if (k & 1ull) result = mul(result, base);
        k >>= 1ull;
        if (k == 0) break;
        base = mul(base, base);
    }
    return result;
}

template <class Ring>
typename Ring::value_type fib_matrix_pow(const Ring& ring, long long n) {
    return matrix_power_entries(ring, n)[1];
}

/**
 * (F_n, F_{n+1}) by index doubling, n >= 0. The step combines
 * L_k = 2*F_{k+1} - x*F_k with F_{2k} = F_k * L_k and
 * F_{2k+1} = F_{k+1}^2 + y*F_k^2, walking the bits of n from the top.
 */
template <class Ring>
std::pair<typename Ring::value_type, typename Ring::value_type> fib_doubling_pair(
    const Ring& ring, long long n) {
    using V = typename Ring::value_type;
    V f = ring.zero();  // F_0
    V g = ring.one();   // F_1
    for (int bit = 62; bit >= 0; --bit) {
        if ((n >> bit) == 0) continue;
        V even = f * (g + g - ring.x * f);  // F_{2k}
        V odd = g * g + ring.y * (f * f);   // F_{2k+1}
        if ((n >> bit) & 1ll) {
            f = std::move(odd);
            g = ring.x * f + ring.y * even;  // F_{2k+2}
        } else {
            f = std::move(even);
            g = std::move(odd);
        }
    }
    return {std::move(f), std::move(g)};
}

/// F_n as the binomial sum over y^k * x^(n-1-2k), n >= 0.
template <class Ring>
typename Ring::value_type fib_closed_form(const Ring& ring, long long n) {
    using V = typename Ring::value_type;
    if (n == 0) return ring.zero();
    long long deg = n - 1;
    std::vector<V> ypow;
    ypow.push_back(ring.one());
    for (long long k = 1; k <= deg / 2; ++k) {
        V next = ypow.back() * ring.y;
        ypow.push_back(std::move(next));
    }
    V xsq = ring.x * ring.x;
    V xp = deg % 2 == 0 ? ring.one() : ring.x;  // x^(deg - 2k), k descending
    V acc = ring.zero();
    for (long long k = deg / 2; k >= 0; --k) {
        V term = ring.lift(binomial(deg - k, k)) * ypow[static_cast<std::size_t>(k)] * xp;
        acc += term;
        if (k > 0) xp *= xsq;
    }
    return acc;
}

template <class Ring>
typename Ring::value_type run_strategy(Strategy s, const Ring& ring, long long n) {
    switch (s) {
        case Strategy::naive: return fib_naive(ring, n);
        case Strategy::matrix_pow: return fib_matrix_pow(ring, n);
        case Strategy::doubling: return fib_doubling_pair(ring, n).first;
        case Strategy::closed_form: return fib_closed_form(ring, n);
    }
    throw DomainError("unknown strategy");
}

}  // namespace bifib
