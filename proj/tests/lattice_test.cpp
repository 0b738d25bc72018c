#include <gtest/gtest.h>

#include "lietorus/lattice.hpp"
#include "lietorus/rng.hpp"

using namespace lietorus;

namespace {

LatticeVec random_q_vector(Rng& rng, const RootDatum& datum) {
    // random element of the root lattice as a base combination
    LatticeVec v = zero_vec(datum.ambient_dim());
    for (int i = 1; i <= datum.rank(); ++i)
        v = vec_add(v, vec_scale(rng.range(-3, 3), datum.base_root(i)));
    return v;
}

} // namespace

TEST(RootDatum, BaseAndPairingA2) {
    RootDatum a2 = RootDatum::type_a(2);
    EXPECT_EQ(a2.base_root(1), (LatticeVec{1, -1, 0}));
    EXPECT_EQ(a2.base_root(2), (LatticeVec{0, 1, -1}));
    EXPECT_EQ(a2.coroot_pair(a2.base_root(1), a2.base_root(2)), -1);
    EXPECT_EQ(a2.nonzero_roots().size(), 6u);
    for (const auto& alpha : a2.nonzero_roots()) EXPECT_EQ(a2.coroot_pair(alpha, alpha), 2);
}

TEST(RootDatum, BaseAndPairingC4) {
    RootDatum c4 = RootDatum::type_c(4);
    EXPECT_EQ(c4.base_root(4), (LatticeVec{0, 0, 0, 2}));
    // epsilon-coordinate computation with alpha_r = 2 eps_r
    EXPECT_EQ(c4.coroot_pair(c4.base_root(3), c4.base_root(4)), -1);
    EXPECT_EQ(c4.coroot_pair(c4.base_root(4), c4.base_root(3)), -2);
    EXPECT_EQ(c4.nonzero_roots().size(), 32u);
    for (const auto& alpha : c4.nonzero_roots()) EXPECT_EQ(c4.coroot_pair(alpha, alpha), 2);
}

TEST(RootDatum, RootsClosedUnderNegationAndReflections) {
    for (RootDatum datum : {RootDatum::type_a(3), RootDatum::type_c(3)}) {
        auto roots = datum.nonzero_roots();
        for (const auto& beta : roots) {
            EXPECT_TRUE(datum.is_nonzero_root(vec_neg(beta)));
            for (int i = 1; i <= datum.rank(); ++i)
                EXPECT_TRUE(datum.is_nonzero_root(datum.reflect(beta, datum.base_root(i))));
        }
    }
}

TEST(RootDatum, BaseCoordsRoundTrip) {
    for (RootDatum datum : {RootDatum::type_a(2), RootDatum::type_a(4), RootDatum::type_c(4)}) {
        Rng rng(7);
        for (int trial = 0; trial < 30; ++trial) {
            LatticeVec beta = random_q_vector(rng, datum);
            auto coords = datum.base_coords(beta);
            LatticeVec back = zero_vec(datum.ambient_dim());
            for (int i = 1; i <= datum.rank(); ++i)
                back = vec_add(back, vec_scale(coords[static_cast<std::size_t>(i - 1)], datum.base_root(i)));
            EXPECT_EQ(back, beta);
        }
    }
}

TEST(RootDatum, NotInLatticeThrows) {
    RootDatum a2 = RootDatum::type_a(2);
    EXPECT_THROW(a2.base_coords(LatticeVec{1, 0, 0}), std::domain_error);
    RootDatum c2 = RootDatum::type_c(2);
    EXPECT_THROW(c2.base_coords(LatticeVec{1, 0}), std::domain_error);
    EXPECT_THROW(a2.coroot_pair(a2.base_root(1), zero_vec(3)), std::domain_error);
}

TEST(ShiftHom, ApplyExamples) {
    RootDatum a2 = RootDatum::type_a(2);
    ShiftHom s({{1, 0}, {0, 1}}, 2);
    EXPECT_EQ(s.apply(a2, a2.base_root(1)), (LatticeVec{1, 0}));
    ShiftHom z = ShiftHom::zero(2, 2);
    EXPECT_EQ(z.apply(a2, a2.base_root(2)), (LatticeVec{0, 0}));
    // eps1 - eps3 = alpha1 + alpha2
    LatticeVec beta{1, 0, -1};
    EXPECT_EQ(s.apply(a2, beta), (LatticeVec{1, 1}));
}

TEST(ShiftHom, Additivity) {
    RootDatum c3 = RootDatum::type_c(3);
    Rng rng(11);
    ShiftHom s({{1, -2}, {0, 3}, {2, 2}}, 2);
    for (int trial = 0; trial < 40; ++trial) {
        LatticeVec b1 = random_q_vector(rng, c3), b2 = random_q_vector(rng, c3);
        EXPECT_EQ(s.apply(c3, vec_add(b1, b2)), vec_add(s.apply(c3, b1), s.apply(c3, b2)));
    }
}

TEST(LatticeQuotient, TwoLambdaInRankThree) {
    std::vector<LatticeVec> gens{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    LatticeQuotient q(3, gens);
    EXPECT_TRUE(q.finite_index());
    EXPECT_EQ(q.index(), 8u);
    EXPECT_EQ(q.cosets().size(), 8u);
    EXPECT_TRUE(q.contains(LatticeVec{4, -2, 0}));
    EXPECT_FALSE(q.contains(LatticeVec{1, 0, 0}));
    EXPECT_TRUE(q.equivalent(LatticeVec{1, 2, 3}, LatticeVec{-1, 0, 1}));
}

TEST(LatticeQuotient, NonDiagonalGenerators) {
    // subgroup spanned by (1,1) and (1,-1) has index 2 in Z^2
    LatticeQuotient q(2, {{1, 1}, {1, -1}});
    EXPECT_TRUE(q.finite_index());
    EXPECT_EQ(q.index(), 2u);
    EXPECT_TRUE(q.contains(LatticeVec{2, 0}));
    EXPECT_FALSE(q.contains(LatticeVec{1, 0}));
    EXPECT_TRUE(q.equivalent(LatticeVec{1, 0}, LatticeVec{0, 1}));
}

TEST(LatticeQuotient, InfiniteIndex) {
    LatticeQuotient q(2, {{2, 0}});
    EXPECT_FALSE(q.finite_index());
    EXPECT_THROW(q.index(), std::domain_error);
    EXPECT_TRUE(q.contains(LatticeVec{4, 0}));
    EXPECT_FALSE(q.contains(LatticeVec{0, 1}));
}

TEST(LatticeQuotient, CanonIsCanonical) {
    Rng rng(23);
    std::vector<LatticeVec> gens{{2, 4, 0}, {0, 6, 2}, {0, 0, 4}};
    LatticeQuotient q(3, gens);
    for (int trial = 0; trial < 60; ++trial) {
        LatticeVec v{rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9)};
        LatticeVec c = q.canon(v);
        EXPECT_EQ(q.canon(c), c);
        // shifting by random subgroup elements does not move the class
        LatticeVec g = zero_vec(3);
        for (const auto& gen : gens) g = vec_add(g, vec_scale(rng.range(-2, 2), gen));
        EXPECT_EQ(q.canon(vec_add(v, g)), c);
    }
}

TEST(CosetSet, SumExamples) {
    LatticeQuotient two_lambda(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CosetSet trivial(two_lambda, {zero_vec(3)});
    EXPECT_TRUE(vec_is_zero(trivial.sum()));

    // spin-factor support: {0, l1, l2, l3, l4} with l4 = l1+l2+l3
    std::vector<LatticeVec> reps{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    CosetSet spin(two_lambda, reps);
    EXPECT_EQ(spin.size(), 5u);
    EXPECT_TRUE(vec_is_zero(spin.sum()));

    // shifted support (S - l1)/Gamma sums to l1-bar:
    // sum of reps - 5*l1 = (2,2,2) - (5,0,0) = (-3,2,2) == (1,0,0) mod 2
    std::vector<LatticeVec> shifted;
    for (const auto& r : reps) shifted.push_back(vec_sub(r, LatticeVec{1, 0, 0}));
    CosetSet spin_shifted(two_lambda, shifted);
    EXPECT_EQ(spin_shifted.sum(), (LatticeVec{1, 0, 0}));
}

TEST(CosetSet, RejectsDuplicateClasses) {
    LatticeQuotient q(2, {{2, 0}, {0, 2}});
    EXPECT_THROW(CosetSet(q, {{0, 0}, {2, 2}}), std::invalid_argument);
}

TEST(CosetSet, SumInvariantUnderRepresentativeChange) {
    Rng rng(5);
    std::vector<LatticeVec> gens{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    LatticeQuotient q(3, gens);
    std::vector<LatticeVec> reps{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CosetSet base(q, reps);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LatticeVec> moved;
        for (const auto& r : reps) {
            LatticeVec g = zero_vec(3);
            for (const auto& gen : gens) g = vec_add(g, vec_scale(rng.range(-2, 2), gen));
            moved.push_back(vec_add(r, g));
        }
        CosetSet other(q, moved);
        EXPECT_EQ(other.sum(), base.sum());
    }
}

TEST(Lattice, GeneratesFullLattice) {
    EXPECT_TRUE(generates_full_lattice({{1, 0}, {0, 1}}, 2));
    EXPECT_TRUE(generates_full_lattice({{1, 1}, {1, 0}, {3, 3}}, 2));
    EXPECT_FALSE(generates_full_lattice({{2, 0}, {0, 1}}, 2));
    EXPECT_FALSE(generates_full_lattice({{1, 0, 0}, {0, 1, 0}}, 3));
    // spin-factor window support generates Z^3
    EXPECT_TRUE(generates_full_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3));
}

TEST(Lattice, WindowBox) {
    auto box = window_box(2, 1);
    EXPECT_EQ(box.size(), 9u);
    EXPECT_EQ(box.front(), (LatticeVec{-1, -1}));
    EXPECT_EQ(box.back(), (LatticeVec{1, 1}));
}
