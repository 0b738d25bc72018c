#include <gtest/gtest.h>

#include "lietorus/quadform.hpp"
#include "lietorus/rng.hpp"
#include "lietorus/torus.hpp"

using namespace lietorus;

namespace {

QuadFormF2 form_l1l2() {
    BitMat a{{0, 1}, {0, 0}};
    return QuadFormF2(2, {0, 0}, a);
}

QuadFormF2 random_form(Rng& rng, int n) {
    std::uint64_t bits = n + n * (n - 1) / 2;
    return QuadFormF2::decode(n, rng.below(1ULL << bits));
}

} // namespace

TEST(QuadForm, EvalExamples) {
    QuadFormF2 k = form_l1l2();
    EXPECT_EQ(k.eval({1, 1}), 1);
    EXPECT_EQ(k.eval({0, 0}), 0);
    EXPECT_EQ(k.eval({1, 0}), 0);
    EXPECT_THROW(k.eval({1, 0, 0}), std::invalid_argument);
}

TEST(QuadForm, FromTorusExamples) {
    // trivial q, identity involution
    auto zero = quadform_from_torus({{1}}, {1});
    EXPECT_EQ(zero.eval({1}), 0);
    // n=1, e = (-1): iota(x1) = -x1 forces b1 = 1
    auto lin = quadform_from_torus({{1}}, {-1});
    EXPECT_EQ(lin.eval({1}), 1);
    // n=2, q12 = -1, e = (1,1): kappa = l1 l2
    auto k = quadform_from_torus({{1, -1}, {-1, 1}}, {1, 1});
    EXPECT_EQ(k, form_l1l2());
    EXPECT_EQ(k.eval({1, 0}), 0);
    EXPECT_EQ(k.eval({1, 1}), 1);
}

TEST(QuadForm, FromTorusRejectsGeneralRoots) {
    EXPECT_THROW(quadform_from_torus({{1, 2}, {2, 1}}, {1, 1}), std::domain_error);
    EXPECT_THROW(quadform_from_torus({{1, -1}, {1, 1}}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(quadform_from_torus({{1, -1}, {-1, 1}}, {1, 2}), std::invalid_argument);
}

TEST(QuadForm, RoundTrip) {
    Rng rng(17);
    for (int n : {1, 2, 3, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            QuadFormF2 k = random_form(rng, n);
            auto [q, e] = torus_from_quadform(k);
            EXPECT_EQ(quadform_from_torus(q, e), k);
        }
    }
}

TEST(QuadForm, Polarization) {
    QuadFormF2 zero(2);
    EXPECT_EQ(zero.polarization(), (BitMat{{0, 0}, {0, 0}}));
    EXPECT_EQ(form_l1l2().polarization(), (BitMat{{0, 1}, {1, 0}}));
    QuadFormF2 linear(2, {1, 0}, BitMat{{0, 0}, {0, 0}});
    EXPECT_EQ(linear.polarization(), (BitMat{{0, 0}, {0, 0}}));
    // polarization identity on samples
    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        QuadFormF2 k = random_form(rng, 3);
        BitVec u{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2)),
                 static_cast<int>(rng.below(2))};
        BitVec v{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2)),
                 static_cast<int>(rng.below(2))};
        BitMat p = k.polarization();
        int bilinear = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                bilinear ^= p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &
                            u[static_cast<std::size_t>(i)] & v[static_cast<std::size_t>(j)];
        EXPECT_EQ(k.polar_pair(u, v), bilinear);
    }
}

TEST(QuadForm, AgreesWithInvolutionOnWindow) {
    // iota(a_l) = (-1)^{kappa(l)} a_l and commutation exponents match the
    // polarization, swept over the window
    std::vector<std::vector<Cyc>> q(2, std::vector<Cyc>(2, Cyc::one(2)));
    q[0][1] = q[1][0] = -Cyc::one(2);
    Torus t = Torus::quantum(2, q, 2);
    Involution iota(t, {1, -1});
    QuadFormF2 k = quadform_from_torus({{1, -1}, {-1, 1}}, {1, -1});
    for (const auto& v : window_box(2, 2)) {
        EXPECT_EQ(iota.kappa_bit(v), k.eval(bitvec_of(v)));
        TorusElem av = t.basis_elem(v);
        EXPECT_EQ(iota.apply(av), k.eval(bitvec_of(v)) ? -av : av);
        for (const auto& w : window_box(2, 2)) {
            TorusElem aw = t.basis_elem(w);
            int commuted = k.polar_pair(bitvec_of(v), bitvec_of(w));
            EXPECT_EQ(av * aw, commuted ? -(aw * av) : aw * av);
        }
    }
}

TEST(QuadForm, IsometricSelf) {
    QuadFormF2 k = form_l1l2();
    auto tau = is_isometric(k, k);
    ASSERT_TRUE(tau.has_value());
    EXPECT_EQ(*tau, bit_identity(2));
}

TEST(QuadForm, IsometricExamples) {
    // l1 ~ l2 via the swap
    QuadFormF2 l1(2, {1, 0}, BitMat{{0, 0}, {0, 0}});
    QuadFormF2 l2(2, {0, 1}, BitMat{{0, 0}, {0, 0}});
    auto tau = is_isometric(l1, l2);
    ASSERT_TRUE(tau.has_value());
    EXPECT_TRUE(is_isometry_witness(l1, l2, *tau));

    // l1l2 has one value 1, l1+l2+l1l2 has three: not isometric
    QuadFormF2 arf0 = form_l1l2();
    QuadFormF2 arf1(2, {1, 1}, BitMat{{0, 1}, {0, 0}});
    EXPECT_EQ(arf0.value_count(), 1);
    EXPECT_EQ(arf1.value_count(), 3);
    EXPECT_FALSE(is_isometric(arf0, arf1).has_value());
}

TEST(QuadForm, EquivalenceRelationOnSamples) {
    Rng rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        QuadFormF2 k = random_form(rng, 3);
        // reflexive
        auto self_tau = is_isometric(k, k);
        ASSERT_TRUE(self_tau.has_value());
        // symmetric via matrix inversion
        QuadFormF2 k2 = k.pullback(*is_isometric(k, k)); // identity move keeps it k
        BitMat g = bit_identity(3);
        g[0][1] = 1; // a transvection
        QuadFormF2 moved = k.pullback(g);
        auto tau = is_isometric(k, moved);
        ASSERT_TRUE(tau.has_value());
        EXPECT_TRUE(is_isometry_witness(k, moved, *tau));
        auto back = is_isometric(moved, k);
        ASSERT_TRUE(back.has_value());
        EXPECT_TRUE(is_isometry_witness(moved, k, *back));
        auto inv = bit_inverse(*tau);
        ASSERT_TRUE(inv.has_value());
        EXPECT_TRUE(is_isometry_witness(moved, k, *inv));
        // transitive via composition
        QuadFormF2 k3 = moved.pullback(g);
        auto tau2 = is_isometric(moved, k3);
        ASSERT_TRUE(tau2.has_value());
        EXPECT_TRUE(is_isometry_witness(k, k3, bit_mul(*tau2, *tau)));
        (void)k2;
    }
}

TEST(QuadForm, ClassifyRankOneAndTwo) {
    auto c1 = classify_quadforms(1);
    EXPECT_EQ(c1.size(), 2u); // 0 and l1
    std::size_t total1 = 0;
    for (const auto& cls : c1) total1 += cls.orbit_size;
    EXPECT_EQ(total1, 2u);

    auto c2 = classify_quadforms(2);
    EXPECT_EQ(c2.size(), 4u);
    std::vector<std::size_t> sizes;
    for (const auto& cls : c2) sizes.push_back(cls.orbit_size);
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 3, 3}));
    std::size_t total2 = 0;
    for (const auto& cls : c2) total2 += cls.orbit_size;
    EXPECT_EQ(total2, 8u); // 2^(n + n(n-1)/2)
}

TEST(QuadForm, ClassifyRankThreeOrbitSizesSum) {
    auto c3 = classify_quadforms(3);
    std::size_t total = 0;
    for (const auto& cls : c3) total += cls.orbit_size;
    EXPECT_EQ(total, 64u);
    // representatives are pairwise non-isometric
    for (std::size_t i = 0; i < c3.size(); ++i)
        for (std::size_t j = i + 1; j < c3.size(); ++j)
            EXPECT_FALSE(is_isometric(c3[i].representative, c3[j].representative).has_value());
}

TEST(QuadForm, ClassCountsUpToRankFive) {
    // 0, a linear form, a rank-2r part with either Arf invariant, and a
    // rank-2r part plus a linear tail: 2, 4, 5, 7, 8 classes for n = 1..5
    std::vector<std::size_t> expected{2, 4, 5, 7, 8};
    for (int n = 1; n <= 5; ++n) {
        auto classes = classify_quadforms(n);
        EXPECT_EQ(classes.size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
        std::size_t total = 0;
        for (const auto& c : classes) total += c.orbit_size;
        EXPECT_EQ(total, 1ULL << (n + n * (n - 1) / 2)) << "n=" << n;
    }
}

TEST(QuadForm, CapacityBound) {
    EXPECT_THROW(classify_quadforms(6), std::length_error);
    QuadFormF2 big(6);
    EXPECT_THROW(is_isometric(big, big), std::length_error);
}

TEST(QuadForm, IsotopeShiftWitness) {
    // kappa^(h) = kappa + kappa_p(., mu) with kappa(mu) = 0 is isometric to
    // kappa via tau(l) = l + kappa_p(mu,l) mu
    Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.below(3));
        QuadFormF2 k = random_form(rng, n);
        BitVec mu(static_cast<std::size_t>(n), 0);
        for (auto& x : mu) x = static_cast<int>(rng.below(2));
        if (k.eval(mu) != 0) continue; // witness requires a hermitian degree
        // shifted form kappa + kappa_p(., mu)
        BitVec b2 = k.linear_part();
        BitMat p = k.polarization();
        for (int i = 0; i < n; ++i) {
            BitVec ei(static_cast<std::size_t>(n), 0);
            ei[static_cast<std::size_t>(i)] = 1;
            b2[static_cast<std::size_t>(i)] ^= k.polar_pair(ei, mu);
        }
        QuadFormF2 shifted(n, b2, k.upper_part());
        BitMat tau = isotope_shift_witness(k, mu);
        EXPECT_TRUE(is_isometry_witness(shifted, k, tau));
        EXPECT_TRUE(is_isometric(shifted, k).has_value());
        (void)p;
    }
}

TEST(QuadForm, JsonRoundTrip) {
    QuadFormF2 k = form_l1l2();
    auto j = k.to_json();
    EXPECT_EQ(QuadFormF2::from_json(j), k);
    EXPECT_EQ(j["n"], 2);
}
