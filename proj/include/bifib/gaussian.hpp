#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace bifib {

/// Arbitrary-precision integer and rational scalars used throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/**
 * Gaussian integer a + b*i with arbitrary-precision components.
 *
 * This is the coefficient domain of every polynomial in the library;
 * ordinary integer coefficients are the im == 0 special case.
 */
struct GaussianInt {
    Int re;
    Int im;

    GaussianInt() = default;
    GaussianInt(Int r) : re(std::move(r)) {}
    GaussianInt(long long r) : re(r) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianInt unit_i() { return GaussianInt(Int(0), Int(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_one() const { return re == 1 && im.is_zero(); }

    // The units of the Gaussian integers: 1, -1, i, -i.
    bool is_unit() const {
        return (im.is_zero() && (re == 1 || re == -1)) ||
               (re.is_zero() && (im == 1 || im == -1));
    }

    GaussianInt conjugate() const { return GaussianInt(re, -im); }

    // Multiplicative inverse of a unit; for the four units u^-1 == conj(u).
    GaussianInt unit_inverse() const { return conjugate(); }

    GaussianInt operator-() const { return GaussianInt(-re, -im); }

    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o) {
        Int r = re * o.re - im * o.im;
        Int i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

    bool operator==(const GaussianInt&) const = default;
};

/// i^k for any integer k; the powers cycle through 1, i, -1, -i.
inline GaussianInt unit_i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianInt(1);
        case 1: return GaussianInt(Int(0), Int(1));
        case 2: return GaussianInt(-1);
        default: return GaussianInt(Int(0), Int(-1));
    }
}

/// Exact Gaussian rational p + q*i; the value domain of exact evaluation.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() = default;
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }

    bool operator==(const GaussianRational&) const = default;
};

}  // namespace bifib
