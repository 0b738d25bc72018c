#include <gtest/gtest.h>

#include "lietorus/graded_map.hpp"

using namespace lietorus;

namespace {

Torus quantum_q12_minus() {
    std::vector<std::vector<Cyc>> q(2, std::vector<Cyc>(2, Cyc::one(2)));
    q[0][1] = q[1][0] = -Cyc::one(2);
    return Torus::quantum(2, q, 2);
}

} // namespace

TEST(OppositeIso, TransposeBookkeeping) {
    SlModel sl(quantum_q12_minus(), 2);
    auto map = opposite_iso(sl);
    // e_ij(x) -> -e_ji(x) lands in degree (eps_j - eps_i, deg x)
    LatticeVec mu{1, 0};
    MatElem e12 = sl.unit_matrix(0, 1, sl.coord().basis_elem(mu));
    MatElem img = map.apply(e12);
    EXPECT_EQ(img, MatElem::single(map.target.coord(), 3, 1, 0,
                                   map.target.coord().basis_elem(mu).scaled(rat_of(-1))));
    EXPECT_EQ(map.root_map(LatticeVec{1, -1, 0}), (LatticeVec{-1, 1, 0}));
    auto rep = verify_graded_map(map, {.window = 1, .pair_cap = 4000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(DiagConjugation, IdentityAtZeroShift) {
    SlModel sl(Torus::laurent(1), 2);
    auto map = diag_conjugation_iso(sl, ShiftHom::zero(2, 1));
    for (const auto& b : window_basis(sl, 1)) EXPECT_EQ(map.apply(b.elem), b.elem);
}

TEST(DiagConjugation, FrozenExample) {
    // SL(3, Laurent n=1), s(a1) = 1, s(a2) = 0: d = diag(1, t^{-1}, t^{-1})
    SlModel sl(Torus::laurent(1), 2);
    ShiftHom s({{1}, {0}}, 1);
    auto map = diag_conjugation_iso(sl, s);
    for (long long lam = -2; lam <= 2; ++lam) {
        MatElem x = sl.unit_matrix(0, 1, sl.coord().basis_elem({lam}));
        EXPECT_EQ(map.apply(x), sl.unit_matrix(0, 1, sl.coord().basis_elem({lam + 1})));
    }
    auto rep = verify_graded_map(map, {.window = 2, .pair_cap = 6000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(DiagConjugation, QuantumCoordinates) {
    SlModel sl(quantum_q12_minus(), 2);
    ShiftHom s({{1, 0}, {0, 1}}, 2);
    auto map = diag_conjugation_iso(sl, s);
    auto rep = verify_graded_map(map, {.window = 1, .pair_cap = 6000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
    // trace condition is preserved: images stay in the model
    for (const auto& b : window_basis(sl, 1)) EXPECT_TRUE(sl.in_model(map.apply(b.elem)));
}

TEST(TkkIsotopeIso, IdentityAtZeroShift) {
    // u = 1: the map is the canonical identification of TKK(A^(1)) with TKK(A)
    TkkModel tkk(Torus::spin(3), 1);
    auto map = tkk_isotope_iso(tkk, ShiftHom::zero(1, 3));
    for (const auto& b : window_basis(map.source, 1)) {
        auto img = map.apply(b.elem);
        if (vec_is_zero(b.alpha)) {
            ASSERT_EQ(b.elem.inner.size(), 1u);
            auto key = b.elem.inner.begin()->first;
            EXPECT_TRUE(map.target.elem_equal(
                img, map.target.inner_elem(key.first, key.second, Cyc::one(2))));
        } else {
            auto expected = map.target.basis_at(b.alpha, b.lambda);
            ASSERT_EQ(expected.size(), 1u);
            EXPECT_TRUE(map.target.elem_equal(img, expected.front())) << b.label;
        }
    }
}

TEST(TkkIsotopeIso, SpinFactorWitness) {
    TkkModel tkk(Torus::spin(3), 1);
    ShiftHom s({{1, 0, 0}}, 3);
    auto map = tkk_isotope_iso(tkk, s);
    auto rep = verify_graded_map(map, {.window = 1, .pair_cap = 4000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
    // grading audit: y in (A^(u))^lambda maps into (TKK(A)^(s))_{-alpha}^lambda
    LatticeVec lam{1, 0, 0};
    ASSERT_TRUE(map.source.lambda_support_contains(map.source.minus_root(), lam));
    auto y = map.source.basis_at(map.source.minus_root(), lam);
    ASSERT_EQ(y.size(), 1u);
    auto img = map.apply(y.front());
    EXPECT_TRUE(map.target.elem_equal(
        map.target.graded_component(img, map.target.minus_root(), lam), img));
}

TEST(TkkIsotopeIso, InadmissibleShiftRejected) {
    TkkModel tkk(Torus::spin(3), 1);
    EXPECT_THROW(tkk_isotope_iso(tkk, ShiftHom({{1, 1, 0}}, 3)), std::domain_error);
}

TEST(SspIsotopeIso, CommutativeWitness) {
    Involution iota(Torus::laurent(2), {1, -1});
    SspModel ssp(iota, 2);
    ShiftHom s({{1, 0}, {0, 2}}, 2); // long-root image (0,2) is hermitian
    ASSERT_TRUE(ssp.admissible(s));
    auto map = ssp_isotope_iso(ssp, s);
    auto rep = verify_graded_map(map, {.window = 1, .pair_cap = 6000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
    // involution bookkeeping: images are iota^(h)-shaped
    for (const auto& b : window_basis(map.source, 1))
        EXPECT_TRUE(map.target.in_model(map.apply(b.elem))) << b.label;
}

TEST(SspIsotopeIso, IdentityAtZeroShift) {
    // s = 0, h = 1: every basis element maps to itself
    Involution iota(Torus::laurent(2), {1, -1});
    SspModel ssp(iota, 2);
    auto map = ssp_isotope_iso(ssp, ShiftHom::zero(2, 2));
    for (const auto& b : window_basis(map.source, 1))
        EXPECT_EQ(map.apply(b.elem), b.elem) << b.label;
}

TEST(SspIsotopeIso, RankFourTrivialInvolution) {
    // SSP(r=4, q trivial): any hermitian long-root image
    Involution iota(Torus::laurent(1), {1});
    SspModel ssp(iota, 4);
    ShiftHom s({{1}, {0}, {0}, {2}}, 1);
    ASSERT_TRUE(ssp.admissible(s));
    auto map = ssp_isotope_iso(ssp, s);
    auto rep = verify_graded_map(map, {.window = 1, .pair_cap = 4000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(SspIsotopeIso, InadmissibleShiftRejected) {
    Involution iota(Torus::laurent(2), {1, -1});
    SspModel ssp(iota, 2);
    EXPECT_THROW(ssp_isotope_iso(ssp, ShiftHom({{0, 0}, {0, 1}}, 2)), std::domain_error);
}

TEST(VerifyGradedMap, NegativeControl) {
    // a wrong sign on one generator produces a bracket failure with witness
    SlModel sl(Torus::laurent(1), 2);
    auto map = diag_conjugation_iso(sl, ShiftHom({{1}, {0}}, 1));
    auto broken = map;
    auto inner = map.apply;
    broken.apply = [inner](const MatElem& x) {
        MatElem img = inner(x);
        TorusElem e01 = img.entry(0, 1);
        if (!e01.is_zero()) img.set(0, 1, e01.scaled(rat_of(-1)));
        return img;
    };
    broken.name = "broken(" + map.name + ")";
    auto rep = verify_graded_map(broken, {.window = 1, .pair_cap = 4000});
    EXPECT_FALSE(rep.all_pass());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && c.name == "bracket-preservation" && !c.witness.empty()) witnessed = true;
    EXPECT_TRUE(witnessed) << rep.text();
}

TEST(VerifyGradedMap, IdentityMapPasses) {
    SlModel sl(quantum_q12_minus(), 2);
    GradedMap<SlModel, SlModel> id{
        sl, sl, [](const LatticeVec& a) { return a; }, [](const LatticeVec& l) { return l; },
        [](const MatElem& x) { return x; }, "identity"};
    auto rep = verify_graded_map(id, {.window = 1, .pair_cap = 4000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}
