#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bifib/gaussian.hpp"

using namespace bifib;

TEST_CASE("imaginary unit squares to minus one") {
    GaussianInt i = GaussianInt::unit_i();
    CHECK(i * i == GaussianInt(-1));
    CHECK(i * i * i * i == GaussianInt(1));
}

TEST_CASE("arithmetic basics") {
    GaussianInt a(Int(2), Int(3));
    GaussianInt b(Int(-1), Int(4));
    CHECK(a + b == GaussianInt(Int(1), Int(7)));
    CHECK(a - b == GaussianInt(Int(3), Int(-1)));
    // (2+3i)(-1+4i) = -2+8i-3i+12i^2 = -14+5i
    CHECK(a * b == GaussianInt(Int(-14), Int(5)));
    CHECK(-a == GaussianInt(Int(-2), Int(-3)));
    CHECK(a * GaussianInt(0) == GaussianInt(0));
    CHECK(GaussianInt().is_zero());
}

TEST_CASE("units and their inverses") {
    for (auto u : {GaussianInt(1), GaussianInt(-1), GaussianInt(Int(0), Int(1)),
                   GaussianInt(Int(0), Int(-1))}) {
        CHECK(u.is_unit());
        CHECK(u * u.unit_inverse() == GaussianInt(1));
    }
    CHECK_FALSE(GaussianInt(2).is_unit());
    CHECK_FALSE(GaussianInt(Int(1), Int(1)).is_unit());
    CHECK_FALSE(GaussianInt(0).is_unit());
}

TEST_CASE("powers of i cycle with period four") {
    CHECK(unit_i_pow(0) == GaussianInt(1));
    CHECK(unit_i_pow(1) == GaussianInt::unit_i());
    CHECK(unit_i_pow(2) == GaussianInt(-1));
    CHECK(unit_i_pow(3) == GaussianInt(Int(0), Int(-1)));
    CHECK(unit_i_pow(-1) == GaussianInt(Int(0), Int(-1)));
    CHECK(unit_i_pow(-2) == GaussianInt(-1));
    CHECK(unit_i_pow(17) == unit_i_pow(1));
}

TEST_CASE("large components stay exact") {
    Int big("123456789012345678901234567890");
    GaussianInt a(big, Int(1));
    GaussianInt product = a * a.conjugate();
    CHECK(product == GaussianInt(big * big + 1));
}

TEST_CASE("gaussian rationals") {
    GaussianRational h(Rat(1, 2), Rat(-3, 4));
    GaussianRational k(Rat(2), Rat(1, 4));
    CHECK(h + k == GaussianRational(Rat(5, 2), Rat(-1, 2)));
    // (1/2 - 3/4 i)(2 + 1/4 i) = 1 + 3/16 + i(1/8 - 3/2)
    CHECK(h * k == GaussianRational(Rat(19, 16), Rat(-11, 8)));
    CHECK(GaussianRational(Rat(3)).is_real());
}
