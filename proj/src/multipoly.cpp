#include "bifib/multipoly.hpp"

#include <utility>

namespace bifib {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"x", "y",  "s", "g",
                                                               "a", "z1", "z2"};

// Exact rational power with signed exponent.
Rat rat_pow(const Rat& base, std::int32_t exp) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    using boost::multiprecision::pow;
    if (exp == 0) return Rat(1);
    if (base.is_zero() && exp < 0) throw DivisionByZero("zero raised to a negative exponent");
    unsigned k = static_cast<unsigned>(exp < 0 ? -static_cast<std::int64_t>(exp) : exp);
    Int num = pow(numerator(base), k);
    Int den = pow(denominator(base), k);
    if (exp < 0) num.swap(den);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

std::complex<double> complex_pow(std::complex<double> base, std::int32_t exp) {
    if (exp == 0) return {1.0, 0.0};
    bool invert = exp < 0;
    if (invert && std::abs(base) == 0.0)
        throw DivisionByZero("zero raised to a negative exponent");
    std::uint32_t k = static_cast<std::uint32_t>(invert ? -static_cast<std::int64_t>(exp) : exp);
    std::complex<double> acc{1.0, 0.0};
    while (k != 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return invert ? 1.0 / acc : acc;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

MultiPoly MultiPoly::variable(Var v, std::int32_t exp) {
    Exponents e;
    e[v] = exp;
    return monomial(GaussianInt(1), e);
}

MultiPoly MultiPoly::monomial(GaussianInt c, const Exponents& e) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

GaussianInt MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianInt() : it->second;
}

bool MultiPoly::has_negative_exponent(Var v) const {
    for (const auto& [e, c] : terms_)
        if (e[v] < 0) return true;
    return false;
}

std::set<Var> MultiPoly::variables() const {
    std::set<Var> out;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (e.e[i] != 0) out.insert(static_cast<Var>(i));
    return out;
}

void MultiPoly::add_term(const Exponents& e, GaussianInt c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // Iterate the smaller operand on the outside to keep the accumulation
    // map hits cheap.
    const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ea, ca] : outer.terms_)
        for (const auto& [eb, cb] : inner.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

MultiPoly MultiPoly::pow(unsigned long long k) const {
    MultiPoly result(1);
    if (k == 0) return result;
    MultiPoly base = *this;
    while (true) {
        if (k & 1ull) result *= base;
        k >>= 1ull;
        if (k == 0) break;
        base *= base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& bindings) const {
    for (const auto& [v, image] : bindings) {
        if (has_negative_exponent(v) && !image.is_invertible_monomial())
            throw NonInvertibleSubstitution(
                std::string("variable ") + std::string(var_name(v)) +
                " occurs with a negative exponent; its image must be a single "
                "term with a unit coefficient");
    }

    // Cache image^e per (variable, exponent); negative powers invert the
    // (unit) monomial first.
    std::map<std::pair<Var, std::int32_t>, MultiPoly> powers;
    auto image_power = [&](Var v, std::int32_t exp, const MultiPoly& image) -> const MultiPoly& {
        auto key = std::make_pair(v, exp);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        MultiPoly value;
        if (exp >= 0) {
            value = image.pow(static_cast<unsigned long long>(exp));
        } else {
            const auto& [me, mc] = *image.terms().begin();
            MultiPoly inverse = monomial(mc.unit_inverse(), -me);
            value = inverse.pow(static_cast<unsigned long long>(-static_cast<std::int64_t>(exp)));
        }
        return powers.emplace(key, std::move(value)).first->second;
    };

    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents residual;
        MultiPoly term;
        bool term_started = false;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e.e[i] == 0) continue;
            Var v = static_cast<Var>(i);
            auto b = bindings.find(v);
            if (b == bindings.end()) {
                residual.e[i] = e.e[i];
                continue;
            }
            const MultiPoly& p = image_power(v, e.e[i], b->second);
            term = term_started ? term * p : p;
            term_started = true;
        }
        MultiPoly base = monomial(c, residual);
        out += term_started ? base * term : base;
    }
    return out;
}

GaussianRational MultiPoly::evaluate_exact(const RationalPoint& pt) const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        Rat mono(1);
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e.e[i] == 0) continue;
            Var v = static_cast<Var>(i);
            auto it = pt.find(v);
            if (it == pt.end())
                throw UnboundVariable(std::string("variable ") + std::string(var_name(v)) +
                                      " has no value");
            mono *= rat_pow(it->second, e.e[i]);
        }
        acc += GaussianRational(Rat(c.re) * mono, Rat(c.im) * mono);
    }
    return acc;
}

std::complex<double> MultiPoly::evaluate_float(const FloatPoint& pt) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        std::complex<double> mono{1.0, 0.0};
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e.e[i] == 0) continue;
            Var v = static_cast<Var>(i);
            auto it = pt.find(v);
            if (it == pt.end())
                throw UnboundVariable(std::string("variable ") + std::string(var_name(v)) +
                                      " has no value");
            mono *= complex_pow(it->second, e.e[i]);
        }
        acc += std::complex<double>(static_cast<double>(c.re), static_cast<double>(c.im)) * mono;
    }
    return acc;
}

std::set<long long> MultiPoly::weighted_degree_profile(
    const std::map<Var, long long>& weights) const {
    std::set<long long> out;
    for (const auto& [e, c] : terms_) {
        long long d = 0;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e.e[i] == 0) continue;
            auto it = weights.find(static_cast<Var>(i));
            if (it != weights.end()) d += it->second * e.e[i];
        }
        out.insert(d);
    }
    return out;
}

}  // namespace bifib
