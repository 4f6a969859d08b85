#pragma once

#include "bifib/gaussian.hpp"

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bifib {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonInvertibleSubstitution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnboundVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct EmptyGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

/**
 * The closed variable universe. `s` is a formal square root of `y` (the
 * convention is that `y` has been replaced by `s^2`), `g` is the complex
 * inversion parameter, `a` the scaling parameter, and `z1`, `z2` the
 * quadratic-form arguments. The parser rejects any other name.
 */
enum class Var : std::uint8_t { x = 0, y, s, g, a, z1, z2 };

inline constexpr std::size_t kVarCount = 7;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/**
 * Signed exponent vector over the fixed variable order (x, y, s, g, a, z1, z2).
 * Negative entries are allowed (Laurent exponents); zero means "absent".
 * Comparison is lexicographic over that order, which is total.
 */
struct Exponents {
    std::array<std::int32_t, kVarCount> e{};

    std::int32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
    std::int32_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }

    bool is_constant() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    Exponents operator+(const Exponents& o) const {
        Exponents r;
        for (std::size_t i = 0; i < kVarCount; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Exponents operator-() const {
        Exponents r;
        for (std::size_t i = 0; i < kVarCount; ++i) r.e[i] = -e[i];
        return r;
    }
    Exponents scaled(std::int32_t k) const {
        Exponents r;
        for (std::size_t i = 0; i < kVarCount; ++i) r.e[i] = e[i] * k;
        return r;
    }

    auto operator<=>(const Exponents&) const = default;
};

/// Canonical term order: descending lexicographic over (x, y, s, g, a, z1, z2).
struct TermOrder {
    bool operator()(const Exponents& l, const Exponents& r) const { return r < l; }
};

/// Exact rational assignment for evaluation.
using RationalPoint = std::map<Var, Rat>;
/// Floating (complex) assignment for numeric evaluation.
using FloatPoint = std::map<Var, std::complex<double>>;

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

/**
 * Sparse Laurent polynomial in the fixed variables over Gaussian integers.
 *
 * Values are canonical (no zero coefficients, term map keyed by exponent
 * vector) and immutable in practice: all operations return new values, so
 * instances may be freely shared between threads.
 */
class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussianInt, TermOrder>;

    MultiPoly() = default;  // the zero polynomial
    explicit MultiPoly(long long c) {
        if (c != 0) terms_.emplace(Exponents{}, GaussianInt(c));
    }
    explicit MultiPoly(GaussianInt c) {
        if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
    }

    static MultiPoly variable(Var v, std::int32_t exp = 1);
    static MultiPoly monomial(GaussianInt c, const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given exponent vector (zero if absent).
    GaussianInt coefficient(const Exponents& e) const;

    /// True when the polynomial is a single term with unit coefficient,
    /// i.e. a monomial invertible in the Laurent ring.
    bool is_invertible_monomial() const {
        return terms_.size() == 1 && terms_.begin()->second.is_unit();
    }

    bool has_negative_exponent(Var v) const;
    std::set<Var> variables() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    bool operator==(const MultiPoly&) const = default;

    /// p^k for k >= 0 by binary exponentiation; pow(p, 0) == 1.
    MultiPoly pow(unsigned long long k) const;

    /**
     * Simultaneous substitution of polynomials for variables. Unbound
     * variables are left untouched. A bound variable that occurs with a
     * negative exponent must be mapped to an invertible monomial (single
     * term, coefficient a unit of Z[i]); otherwise
     * NonInvertibleSubstitution is thrown.
     */
    MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const;

    /// Exact evaluation; every occurring variable must be bound, and values
    /// raised to negative exponents must be nonzero.
    GaussianRational evaluate_exact(const RationalPoint& pt) const;

    /// Floating evaluation under the same binding rules.
    std::complex<double> evaluate_float(const FloatPoint& pt) const;

    /// The set of weighted total degrees { sum_v w(v)*e(v) } over all terms;
    /// a singleton {d} means the polynomial is quasi-homogeneous of weight d.
    /// An absent weight counts as zero. Empty for the zero polynomial.
    std::set<long long> weighted_degree_profile(const std::map<Var, long long>& weights) const;

private:
    void add_term(const Exponents& e, GaussianInt c);
    TermMap terms_;
};

}  // namespace bifib
