#pragma once

// Test-only oracles, kept independent of the library's sequence engine:
// plain recurrence walks over polynomials and big integers, and a small
// random-polynomial generator for property tests.

#include "bifib/gaussian.hpp"
#include "bifib/multipoly.hpp"

#include <random>
#include <vector>

namespace oracles {

// H_0..H_upto by the raw two-term recurrence.
inline std::vector<bifib::MultiPoly> poly_walk(const bifib::MultiPoly& a0,
                                               const bifib::MultiPoly& a1, long long upto) {
    using bifib::MultiPoly;
    using bifib::Var;
    const MultiPoly x = MultiPoly::variable(Var::x);
    const MultiPoly y = MultiPoly::variable(Var::y);
    std::vector<MultiPoly> v{a0};
    if (upto >= 1) v.push_back(a1);
    for (long long k = 2; k <= upto; ++k)
        v.push_back(x * v[static_cast<std::size_t>(k - 1)] +
                    y * v[static_cast<std::size_t>(k - 2)]);
    return v;
}

// Integer walk of the same recurrence at a fixed integer point.
inline std::vector<bifib::Int> int_walk(long long a0, long long a1, long long x, long long y,
                                        long long upto) {
    std::vector<bifib::Int> v{bifib::Int(a0)};
    if (upto >= 1) v.emplace_back(a1);
    for (long long k = 2; k <= upto; ++k)
        v.push_back(bifib::Int(x) * v[static_cast<std::size_t>(k - 1)] +
                    bifib::Int(y) * v[static_cast<std::size_t>(k - 2)]);
    return v;
}

struct PolyGenOptions {
    int max_terms = 4;
    int max_exp = 3;
    bool laurent = false;    // allow negative exponents
    bool gaussian = false;   // allow imaginary coefficient parts
    int num_vars = 3;        // draw from the first num_vars of (x, y, s, g, a, z1, z2)
};

inline bifib::MultiPoly random_poly(std::mt19937& rng, const PolyGenOptions& opt = {}) {
    using bifib::Exponents;
    using bifib::GaussianInt;
    using bifib::Int;
    using bifib::MultiPoly;
    using bifib::Var;
    std::uniform_int_distribution<int> term_count(0, opt.max_terms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exp(opt.laurent ? -opt.max_exp : 0, opt.max_exp);
    std::uniform_int_distribution<int> pick(0, 9);
    MultiPoly p;
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e;
        for (int v = 0; v < opt.num_vars; ++v)
            if (pick(rng) < 5) e[static_cast<Var>(v)] = exp(rng);
        GaussianInt c{Int(coeff(rng)), opt.gaussian && pick(rng) < 3 ? Int(coeff(rng)) : Int(0)};
        p += MultiPoly::monomial(c, e);
    }
    return p;
}

}  // namespace oracles
