#include <gtest/gtest.h>

#include "lietorus/chi.hpp"

using namespace lietorus;

namespace {

SlModel untwisted_sl2() { return SlModel(Torus::laurent(1), 1); }

EalaSpace sl2_space() { return EalaSpace(untwisted_sl2()); }

} // namespace

TEST(DerBasis, HyperplaneDimensions) {
    auto b0 = der_basis(zero_vec(3));
    EXPECT_EQ(b0.dim(), 3u);
    auto b1 = der_basis(LatticeVec{2, 4, 0});
    EXPECT_EQ(b1.dim(), 2u);
    for (const auto& th : b1.thetas) EXPECT_EQ(theta_eval(th, LatticeVec{2, 4, 0}), 0);
    // n = 1 forces theta = 0 on gamma != 0, so D_gamma = 0
    EXPECT_EQ(der_basis(LatticeVec{3}).dim(), 0u);
}

TEST(DegreeDerivation, Examples) {
    EalaSpace e = sl2_space();
    const SlModel& sl = e.model();
    MatElem x = sl.unit_matrix(0, 1, sl.coord().basis_elem({5}));
    // theta = 0 kills everything
    EXPECT_TRUE(e.degree_derivation_apply({Rat(0)}, x).is_zero());
    // theta(1) = 1 multiplies by the degree
    EXPECT_EQ(e.degree_derivation_apply({Rat(1)}, x), x.scaled(rat_of(5)));
    // Leibniz on window pairs
    auto basis = window_basis(sl, 2);
    std::vector<Rat> theta{Rat(1)};
    for (std::size_t i = 0; i < basis.size(); i += 3)
        for (std::size_t j = 0; j < basis.size(); j += 3) {
            MatElem lhs = e.degree_derivation_apply(theta, sl.bracket(basis[i].elem, basis[j].elem));
            MatElem rhs = sl.bracket(e.degree_derivation_apply(theta, basis[i].elem), basis[j].elem) +
                          sl.bracket(basis[i].elem, e.degree_derivation_apply(theta, basis[j].elem));
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(ScderBracket, RankOneIsAbelian) {
    EalaSpace e = sl2_space();
    auto d1 = e.d_elem(zero_vec(1), 0, Cyc::one(2));
    auto d2 = e.d_elem(zero_vec(1), 0, Cyc::of_long(3));
    EXPECT_TRUE(e.is_zero(e.bracket(d1, d2)));
    // gamma != 0 slots carry no skew derivations when n = 1
    EXPECT_EQ(e.der_dim(LatticeVec{2}), 0u);
}

TEST(ScderBracket, SkewnessClosure) {
    // n = 2 over the Laurent torus: brackets stay skew and degrees add
    EalaSpace e(SlModel(Torus::laurent(2), 2));
    LatticeVec g1{1, 0}, g2{0, 1};
    auto d1 = e.d_elem(g1, 0, Cyc::one(2));
    auto d2 = e.d_elem(g2, 0, Cyc::one(2));
    auto br = e.bracket(d1, d2);
    EXPECT_TRUE(br.l.is_zero());
    ASSERT_EQ(br.d.size(), 1u);
    EXPECT_EQ(br.d.begin()->first, vec_add(g1, g2));
    // reconstruct the covector and test skewness at g1+g2
    auto basis = der_basis(vec_add(g1, g2));
    std::vector<Rat> combo(2, Rat(0));
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        Cyc c = br.d.begin()->second[k];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < 2; ++j) combo[j] += c.rational_value() * basis.thetas[k][j];
    }
    EXPECT_EQ(theta_eval(combo, vec_add(g1, g2)), 0);
}

TEST(GradedForm, Sl2Examples) {
    SlModel sl = untwisted_sl2();
    // (e (x) t | f (x) t^{-1}) = 1, (e (x) t | f (x) t) = 0
    MatElem et = sl.unit_matrix(0, 1, sl.coord().basis_elem({1}));
    MatElem ft_inv = sl.unit_matrix(1, 0, sl.coord().basis_elem({-1}));
    MatElem ft = sl.unit_matrix(1, 0, sl.coord().basis_elem({1}));
    EXPECT_EQ(sl.graded_form(et, ft_inv), Cyc::one(2));
    EXPECT_TRUE(sl.graded_form(et, ft).is_zero());
    // invariance on window triples
    auto basis = window_basis(sl, 2);
    for (std::size_t i = 0; i < basis.size(); i += 2)
        for (std::size_t j = 0; j < basis.size(); j += 3)
            for (std::size_t k = 0; k < basis.size(); k += 3)
                EXPECT_EQ(sl.graded_form(sl.bracket(basis[i].elem, basis[j].elem), basis[k].elem),
                          sl.graded_form(basis[i].elem, sl.bracket(basis[j].elem, basis[k].elem)));
}

TEST(Sigma, AlternatingAndAffineValue) {
    EalaSpace e = sl2_space();
    const SlModel& sl = e.model();
    MatElem et = sl.unit_matrix(0, 1, sl.coord().basis_elem({1}));
    MatElem ft_inv = sl.unit_matrix(1, 0, sl.coord().basis_elem({-1}));
    // sigma(x,x) = 0
    EXPECT_TRUE(e.sigma(et, et).empty());
    // sigma(e(x)t, f(x)t^{-1})(d) = 1*(e|f) = 1
    auto c = e.sigma(et, ft_inv);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.begin()->first, zero_vec(1)); // C_0 slot
    ASSERT_EQ(c.begin()->second.size(), 1u);
    EXPECT_EQ(c.begin()->second[0], Cyc::one(2));
    // grading bookkeeping: slots vanish unless lambda + mu + gamma = 0
    auto c2 = e.sigma(et, sl.unit_matrix(1, 0, sl.coord().basis_elem({1})));
    for (const auto& [delta, v] : c2) EXPECT_EQ(delta, (LatticeVec{2}));
    // pointwise evaluation form of the cocycle
    EXPECT_EQ(e.sigma_value(et, ft_inv, zero_vec(1), 0), Cyc::one(2));
    EXPECT_TRUE(e.sigma_value(et, ft_inv, zero_vec(1), 5).is_zero());
}

TEST(EalaBracket, MixedAndCentralTerms) {
    EalaSpace e = sl2_space();
    const SlModel& sl = e.model();
    // [d, l] lands in the L-part only
    auto d = e.d_elem(zero_vec(1), 0, Cyc::one(2));
    MatElem et = sl.unit_matrix(0, 1, sl.coord().basis_elem({1}));
    auto br = e.bracket(d, e.l_elem(et));
    EXPECT_TRUE(br.d.empty());
    EXPECT_TRUE(br.c.empty());
    EXPECT_EQ(br.l, et); // theta(1)*e(x)t with theta = dual basis

    // pure central term: [h(x)t, h(x)t^{-1}] has zero L-bracket but sigma != 0
    MatElem ht = (sl.unit_matrix(0, 0, sl.coord().basis_elem({1})) -
                  sl.unit_matrix(1, 1, sl.coord().basis_elem({1})));
    MatElem ht_inv = (sl.unit_matrix(0, 0, sl.coord().basis_elem({-1})) -
                      sl.unit_matrix(1, 1, sl.coord().basis_elem({-1})));
    EXPECT_TRUE(sl.bracket(ht, ht_inv).is_zero());
    auto central = e.bracket(e.l_elem(ht), e.l_elem(ht_inv));
    EXPECT_TRUE(central.l.is_zero());
    EXPECT_TRUE(central.d.empty());
    ASSERT_EQ(central.c.size(), 1u);
    EXPECT_EQ(central.c.begin()->second[0], Cyc::of_long(2)); // trace(h^2) = 2
}

TEST(EalaSpace, FormOnPureParts) {
    EalaSpace e = sl2_space();
    auto d = e.d_elem(zero_vec(1), 0, Cyc::one(2));
    auto f = e.c_elem(zero_vec(1), 0, Cyc::of_long(3));
    // (d | f) = f(d), (D | D) = 0, (C | C) = 0
    EXPECT_EQ(e.form(d, f), Cyc::of_long(3));
    EXPECT_EQ(e.form(f, d), Cyc::of_long(3));
    EXPECT_TRUE(e.form(d, d).is_zero());
    EXPECT_TRUE(e.form(f, f).is_zero());
}

TEST(EalaSpace, DimensionsMatchConstruction) {
    EalaSpace e = sl2_space();
    auto basis = e.window(2);
    // degree-0 dimension: D_0 + (sl_2 tensor 1) + C_0 = 1 + 3 + 1
    std::size_t deg0 = 0;
    for (const auto& b : basis)
        if (vec_is_zero(b.lambda)) ++deg0;
    EXPECT_EQ(deg0, 5u);
    EXPECT_EQ(e.h_space().size(), 3u);
    // E_{lambda+alpha} = L_alpha^lambda is 1-dimensional
    EXPECT_EQ(e.root_space(LatticeVec{2}, LatticeVec{1, -1}).dim, 1u);
    EXPECT_EQ(e.root_space(zero_vec(1), zero_vec(2)).dim, 3u);
}

TEST(EalaSpace, CoreMembership) {
    EalaSpace e = sl2_space();
    const SlModel& sl = e.model();
    auto f = e.c_elem(zero_vec(1), 0, Cyc::one(2));
    EXPECT_TRUE(e.core_membership(f));
    // central in the core: brackets to zero against all window L + C elements
    for (const auto& b : e.window(1))
        if (b.part != 'd') { EXPECT_TRUE(e.is_zero(e.bracket(f, b.elem))); }
    auto d = e.d_elem(zero_vec(1), 0, Cyc::one(2));
    EXPECT_FALSE(e.core_membership(d));
    EXPECT_TRUE(e.core_membership(
        e.add(e.l_elem(sl.unit_matrix(0, 1, sl.coord().unit())), f)));
}

TEST(EalaSpace, FullChecksPass) {
    EalaSpace e = sl2_space();
    auto rep = check_eala(e, {.window = 2, .triple_cap = 5500, .pair_cap = 2000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(EalaSpace, QuantumCoordinates) {
    // SL(3) over the quantum torus with q12 = -1 also carries the
    // construction (Gamma = 2Z x 2Z)
    std::vector<std::vector<Cyc>> q(2, std::vector<Cyc>(2, Cyc::one(2)));
    q[0][1] = q[1][0] = -Cyc::one(2);
    SlModel sl(Torus::quantum(2, q, 2), 2);
    EalaSpace e(sl);
    EXPECT_TRUE(e.in_gamma(LatticeVec{2, 0}));
    EXPECT_FALSE(e.in_gamma(LatticeVec{1, 0}));
    auto rep = check_eala(e, {.window = 1, .triple_cap = 400, .pair_cap = 900});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(EalaSpace, NonNormalizableCentroidRejected) {
    // q all -1 in rank 3: (1,1,1) is a central degree with
    // x^(1,1,1) x^(1,1,1) = -x^(2,2,2), so no canonical k[Gamma] basis
    std::vector<std::vector<Cyc>> q(3, std::vector<Cyc>(3, -Cyc::one(2)));
    for (int i = 0; i < 3; ++i) q[i][i] = Cyc::one(2);
    Torus t = Torus::quantum(3, q, 2);
    EXPECT_FALSE(t.structure({1, 1, 1}, {1, 1, 1}).is_one());
    EXPECT_THROW(EalaSpace(SlModel(t, 2)), std::domain_error);
}

TEST(EalaSpace, ShiftedModelPassesChecks) {
    // E over L^(s): the same construction against the shifted grading
    SlModel shifted = untwisted_sl2().shifted(ShiftHom({{1}}, 1));
    EalaSpace e(shifted);
    auto rep = check_eala(e, {.window = 1, .triple_cap = 800, .pair_cap = 900});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(Chi, ZeroShiftIsIdentity) {
    SlModel sl = untwisted_sl2();
    ChiMap chi(sl, ShiftHom::zero(1, 1));
    EalaSpace e = chi.source();
    for (const auto& b : e.window(1)) {
        auto img = chi.apply(b.elem);
        EXPECT_TRUE(e.equal(img, b.elem));
    }
    EXPECT_TRUE(chi.h_theta({Rat(1)}).is_zero()); // omega = 0 when s = 0
}

TEST(Chi, HThetaSolvesCartanSystem) {
    // alpha(h_theta) = theta(s(alpha)) with alpha(h) = 2 gives theta(1)/2 * h
    SlModel sl = untwisted_sl2();
    ChiMap chi(sl, ShiftHom({{1}}, 1));
    MatElem ht = chi.h_theta({Rat(1)});
    MatElem expected = sl.h_basis()[0].scaled(rat_of(1, 2));
    EXPECT_EQ(ht, expected);
}

TEST(Chi, VerifiedWitness) {
    SlModel sl = untwisted_sl2();
    ChiMap chi(sl, ShiftHom({{1}}, 1));
    auto rep = verify_chi(chi, {.window = 2, .pair_cap = 2000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(Chi, CorruptedOmegaIsCaught) {
    SlModel sl = untwisted_sl2();
    ChiMap chi(sl, ShiftHom({{1}}, 1), /*corrupt_omega=*/true);
    auto rep = verify_chi(chi, {.window = 1, .pair_cap = 2000});
    EXPECT_FALSE(rep.all_pass());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    EXPECT_TRUE(witnessed) << rep.text();
}

TEST(Chi, InadmissibleShiftRejected) {
    std::vector<std::vector<Cyc>> q(2, std::vector<Cyc>(2, Cyc::one(2)));
    q[0][1] = q[1][0] = -Cyc::one(2);
    SlModel sl(Torus::quantum(2, q, 2), 2);
    // any shift is admissible for SL; wrong shape is not
    EXPECT_THROW(ChiMap(sl, ShiftHom({{1}}, 1)), std::domain_error);
}
