#include <gtest/gtest.h>

#include <random>

#include "fgchar/cyclotomic.hpp"

using fgchar::CycNum;

namespace {

CycNum z(int e, int k = 1) { return CycNum::root(e, k); }

CycNum random_element(std::mt19937& rng, int e) {
    std::uniform_int_distribution<int> coef(-3, 3), den(1, 4);
    CycNum out(0);
    for (int k = 0; k < e; ++k) out += z(e, k).scaled(mpq_class(coef(rng), den(rng)));
    return out;
}

}  // namespace

TEST(Cyclotomic, Basics) {
    EXPECT_EQ(z(4) * z(4), CycNum(-1));
    EXPECT_EQ(z(3) + z(3, 2), CycNum(-1));
    CycNum s(0);
    for (int k = 0; k < 5; ++k) s += z(5, k);
    EXPECT_TRUE(s.is_zero());
    for (int e : {1, 2, 6, 8, 9, 12, 15, 30, 60, 105}) {
        CycNum p(1);
        for (int i = 0; i < e; ++i) p *= z(e);
        EXPECT_EQ(p, CycNum(1)) << e;
        EXPECT_EQ(static_cast<int>(z(e).coeffs().size()), static_cast<int>(fgchar::detail::cyclotomic_polynomial(e).size()) - 1);
    }
}

TEST(Cyclotomic, PolynomialDegrees) {
    auto totient = [](int n) {
        int r = 0;
        for (int k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
        return r;
    };
    for (int e = 1; e <= 120; ++e)
        EXPECT_EQ(static_cast<int>(fgchar::detail::cyclotomic_polynomial(e).size()) - 1, totient(e)) << e;
    // coefficient 2 first appears in Phi_105
    const auto& p105 = fgchar::detail::cyclotomic_polynomial(105);
    bool has_two = false;
    for (const auto& c : p105) has_two |= abs(c) == 2;
    EXPECT_TRUE(has_two);
}

TEST(Cyclotomic, Conjugation) {
    EXPECT_EQ(z(4).conj(), -z(4));
    EXPECT_EQ(CycNum(mpq_class(3, 7)).conj(), CycNum(mpq_class(3, 7)));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(1, 60);
    for (int t = 0; t < 100; ++t) {
        int e = pick(rng);
        CycNum a = random_element(rng, e);
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_EQ(a.abs_square(), a.conj().abs_square());
    }
}

TEST(Cyclotomic, AbsSquareAndRational) {
    EXPECT_EQ(z(8).abs_square(), CycNum(1));
    EXPECT_EQ((CycNum(1) + z(4)).abs_square(), CycNum(2));
    auto r = (z(3) + z(3, 2)).is_rational();
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, -1);
    EXPECT_FALSE(z(5).is_rational());
}

TEST(Cyclotomic, MixedConductors) {
    EXPECT_EQ(z(4) * z(3), z(12, 7));
    EXPECT_EQ(z(6, 2), z(3));
    EXPECT_EQ(z(2), CycNum(-1));
    EXPECT_EQ(z(4).embed(8), z(8, 2));
    EXPECT_THROW(z(2520) * z(7, 1) * z(11), fgchar::Error);
    EXPECT_THROW(CycNum::root(2521, 1), fgchar::Error);
}

TEST(Cyclotomic, RingAxiomsAndConjAutomorphism) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(1, 24);
    for (int t = 0; t < 60; ++t) {
        int e1 = pick(rng), e2 = pick(rng);
        CycNum a = random_element(rng, e1), b = random_element(rng, e2), c = random_element(rng, e1);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Cyclotomic, SumsOfRootsHaveRealAbsSquare) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> k(0, 23);
    for (int t = 0; t < 30; ++t) {
        CycNum a(0);
        for (int i = 0; i < 5; ++i) a += z(24, k(rng));
        auto s = a.abs_square();
        EXPECT_EQ(s.conj(), s);
    }
}

TEST(Cyclotomic, Text) {
    EXPECT_EQ(CycNum(0).to_string(), "0");
    EXPECT_EQ(z(4).to_string(), "E(4)");
    EXPECT_EQ((CycNum(1) - z(8, 3).scaled(2)).to_string(), "1 - 2*E(8)^3");
}
