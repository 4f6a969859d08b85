#pragma once

#include "bifib/multipoly.hpp"

namespace bifib {

/// 2x2 matrix over the polynomial ring.
struct Matrix2 {
    MultiPoly m11, m12, m21, m22;

    static Matrix2 identity() {
        return {MultiPoly(1), MultiPoly(), MultiPoly(), MultiPoly(1)};
    }

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }

    Matrix2 scaled(const MultiPoly& k) const {
        return {k * m11, k * m12, k * m21, k * m22};
    }

    MultiPoly det() const { return m11 * m22 - m12 * m21; }
    MultiPoly trace() const { return m11 + m22; }

    bool operator==(const Matrix2&) const = default;
};

}  // namespace bifib
