#include <gtest/gtest.h>

#include "lietorus/cyclotomic.hpp"
#include "lietorus/rng.hpp"

using namespace lietorus;

namespace {

Cyc random_cyc(Rng& rng, int m) {
    std::vector<Rat> c(static_cast<std::size_t>(euler_phi(m)));
    for (auto& x : c) {
        long num = rng.range(-6, 6);
        long den = rng.range(1, 4);
        x = rat_of(num, den);
    }
    return Cyc(m, std::move(c));
}

} // namespace

TEST(Cyclotomic, PolynomialTable) {
    // Phi_1 = x-1, Phi_2 = x+1, Phi_3 = x^2+x+1, Phi_4 = x^2+1, Phi_6 = x^2-x+1
    EXPECT_EQ(cyclotomic_poly(1), (std::vector<Int>{-1, 1}));
    EXPECT_EQ(cyclotomic_poly(2), (std::vector<Int>{1, 1}));
    EXPECT_EQ(cyclotomic_poly(3), (std::vector<Int>{1, 1, 1}));
    EXPECT_EQ(cyclotomic_poly(4), (std::vector<Int>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(6), (std::vector<Int>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), (std::vector<Int>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, EulerPhi) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(2), 1);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(euler_phi(36), 12);
}

TEST(Cyclotomic, AddExamples) {
    Rng rng(0);
    Cyc x = random_cyc(rng, 4);
    EXPECT_EQ(Cyc::zero(4) + x, x);
    Cyc z4 = Cyc::zeta(4);
    EXPECT_EQ(z4 + z4, Rat(2) * z4);
    // 1 + z3 + z3^2 = 0
    Cyc z3 = Cyc::zeta(3);
    EXPECT_EQ(z3 + z3 * z3, -Cyc::one(3));
}

TEST(Cyclotomic, MulExamples) {
    Rng rng(1);
    Cyc x = random_cyc(rng, 3);
    EXPECT_EQ(Cyc::one(3) * x, x);
    Cyc z4 = Cyc::zeta(4);
    EXPECT_EQ(z4 * z4, -Cyc::one(4));
    Cyc minus_one = -Cyc::one(2);
    EXPECT_EQ(minus_one * minus_one, Cyc::one(2));
}

TEST(Cyclotomic, InvExamples) {
    EXPECT_EQ(Cyc::one(4).inv(), Cyc::one(4));
    Cyc z4 = Cyc::zeta(4);
    EXPECT_EQ(z4.inv(), -z4);
    EXPECT_EQ(Cyc::of_long(2).inv(), Cyc::of_rat(rat_of(1, 2)));
}

TEST(Cyclotomic, OrderMismatchThrows) {
    EXPECT_THROW(Cyc::one(2) + Cyc::one(4), std::domain_error);
    EXPECT_THROW(Cyc::one(3) * Cyc::one(4), std::domain_error);
}

TEST(Cyclotomic, ZeroInverseThrows) {
    EXPECT_THROW(Cyc::zero(4).inv(), std::domain_error);
}

TEST(Cyclotomic, FieldAxiomsOnSamples) {
    for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
        Rng rng(100 + static_cast<std::uint64_t>(m));
        for (int trial = 0; trial < 20; ++trial) {
            Cyc a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            if (!a.is_zero()) { EXPECT_EQ(a * a.inv(), Cyc::one(m)); }
        }
    }
}

TEST(Cyclotomic, ZetaHasExactOrder) {
    for (int m = 1; m <= 16; ++m) {
        Cyc z = Cyc::zeta(m);
        EXPECT_EQ(z.pow(m), Cyc::one(m)) << "m=" << m;
        for (int j = 1; j < m; ++j) EXPECT_NE(z.pow(j), Cyc::one(m)) << "m=" << m << " j=" << j;
    }
}

TEST(Cyclotomic, NegativePowersAndRationals) {
    Cyc z = Cyc::zeta(12);
    EXPECT_EQ(z.pow(-5) * z.pow(5), Cyc::one(12));
    Cyc half = Cyc::of_rat(rat_of(1, 2), 12);
    EXPECT_TRUE(half.is_rational());
    EXPECT_EQ(half.rational_value(), rat_of(1, 2));
    EXPECT_FALSE(z.is_rational());
    EXPECT_THROW(z.rational_value(), std::domain_error);
}
