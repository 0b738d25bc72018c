#include <gtest/gtest.h>

#include "lietorus/axioms.hpp"
#include "lietorus/sl_model.hpp"
#include "lietorus/ssp_model.hpp"
#include "lietorus/tkk_model.hpp"

using namespace lietorus;

namespace {

Torus quantum_q12_minus() {
    std::vector<std::vector<Cyc>> q(2, std::vector<Cyc>(2, Cyc::one(2)));
    q[0][1] = q[1][0] = -Cyc::one(2);
    return Torus::quantum(2, q, 2);
}

Involution quantum_involution() { return Involution(quantum_q12_minus(), {1, 1}); }

// independent oracle: dense matrix commutator over the torus
MatElem dense_commutator(const MatElem& a, const MatElem& b) {
    const Torus& t = a.torus();
    const int n = a.size();
    std::vector<std::vector<TorusElem>> da(static_cast<std::size_t>(n),
                                           std::vector<TorusElem>(static_cast<std::size_t>(n),
                                                                  t.zero_elem()));
    auto db = da, prod = da;
    for (const auto& [ij, x] : a.entries()) da[ij.first][ij.second] = x;
    for (const auto& [ij, x] : b.entries()) db[ij.first][ij.second] = x;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                prod[i][j] = prod[i][j] + da[i][k] * db[k][j] - db[i][k] * da[k][j];
    MatElem out(t, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.add_to(i, j, prod[i][j]);
    return out;
}

} // namespace

TEST(SlModel, BracketAgainstDenseOracle) {
    SlModel sl(Torus::laurent(1), 3);
    // [e12(t), e23(t^2)] = e13(t^3)
    MatElem a = sl.unit_matrix(0, 1, sl.coord().basis_elem({1}));
    MatElem b = sl.unit_matrix(1, 2, sl.coord().basis_elem({2}));
    EXPECT_EQ(sl.bracket(a, b), sl.unit_matrix(0, 2, sl.coord().basis_elem({3})));
    EXPECT_EQ(sl.bracket(a, b), dense_commutator(a, b));

    SlModel slq(quantum_q12_minus(), 2);
    auto basis = window_basis(slq, 1);
    for (std::size_t i = 0; i < basis.size(); i += 7)
        for (std::size_t j = 0; j < basis.size(); j += 5)
            EXPECT_EQ(slq.bracket(basis[i].elem, basis[j].elem),
                      dense_commutator(basis[i].elem, basis[j].elem));
}

TEST(SlModel, GradedComponents) {
    SlModel sl(quantum_q12_minus(), 2);
    LatticeVec mu{1, -1};
    LatticeVec alpha{1, -1, 0}; // eps1 - eps2
    MatElem e12 = sl.unit_matrix(0, 1, sl.coord().basis_elem(mu));
    EXPECT_EQ(sl.graded_component(e12, alpha, mu), e12);
    EXPECT_TRUE(sl.graded_component(e12, alpha, LatticeVec{0, 0}).is_zero());
    EXPECT_TRUE(sl.graded_component(e12, LatticeVec{0, 1, -1}, mu).is_zero());
    EXPECT_TRUE(sl.graded_component(e12, zero_vec(3), mu).is_zero());
}

TEST(SlModel, TraceCondition) {
    SlModel sl(quantum_q12_minus(), 2);
    const Torus& a = sl.coord();
    // diag(a_l, 0, 0) with a_l central is not in sl; non-central is
    MatElem central = sl.unit_matrix(0, 0, a.basis_elem({2, 0}));
    EXPECT_FALSE(sl.in_model(central));
    MatElem noncentral = sl.unit_matrix(0, 0, a.basis_elem({1, 0}));
    EXPECT_TRUE(sl.in_model(noncentral));
    EXPECT_EQ(sl.basis_at(zero_vec(3), LatticeVec{2, 0}).size(), 2u);
    EXPECT_EQ(sl.basis_at(zero_vec(3), LatticeVec{1, 0}).size(), 3u);
    // rank 1 requires commutative coordinates
    EXPECT_THROW(SlModel(quantum_q12_minus(), 1), std::invalid_argument);
    EXPECT_THROW(SlModel(Torus::spin(3), 2), std::invalid_argument);
}

TEST(TkkModel, ProductTable) {
    TkkModel tkk(Torus::jordan_plus(1, {{Cyc::one(2)}}, 2), 2);
    const Torus& a = tkk.coord();
    TkkElem one_plus = tkk.plus_elem(a.unit());
    TkkElem one_minus = tkk.minus_elem(a.unit());
    // [1_1, 1_-1] = V_{1,1}, and V_{1,1} z = {1,1,z} = 2z
    TkkElem v = tkk.bracket(one_plus, one_minus);
    ASSERT_EQ(v.inner.size(), 1u);
    for (const auto& mu : a.support_window(2)) {
        TorusElem z = a.basis_elem(mu);
        EXPECT_EQ(tkk.apply_inner(v.inner, z), z.scaled(rat_of(2)));
    }
    // [x_1, y_1] = 0 and [x_-1, y_-1] = 0
    EXPECT_TRUE(tkk.elem_is_zero(tkk.bracket(one_plus, tkk.plus_elem(a.basis_elem({3})))));
    EXPECT_TRUE(tkk.elem_is_zero(tkk.bracket(one_minus, tkk.minus_elem(a.basis_elem({2})))));
}

TEST(TkkModel, GradedComponentsAndSupport) {
    TkkModel tkk(Torus::spin(3), 1);
    LatticeVec mu{1, 0, 0};
    TkkElem minus = tkk.minus_elem(tkk.coord().basis_elem(mu));
    EXPECT_TRUE(tkk.elem_equal(tkk.graded_component(minus, tkk.minus_root(), mu), minus));
    EXPECT_TRUE(tkk.elem_is_zero(tkk.graded_component(minus, tkk.plus_root(), mu)));
    // Lambda-support at the root is the coordinate support S
    EXPECT_TRUE(tkk.lambda_support_contains(tkk.plus_root(), mu));
    EXPECT_FALSE(tkk.lambda_support_contains(tkk.plus_root(), LatticeVec{1, 1, 0}));
}

TEST(TkkModel, WindowActionEquality) {
    // V_{a_l, a_{-l}} acts as 2*id on the spin factor, so the formal
    // difference of two such operators is window-action zero
    TkkModel tkk(Torus::spin(3), 1);
    TkkElem v1 = tkk.inner_elem({1, 0, 0}, {-1, 0, 0}, Cyc::one(2));
    TkkElem v2 = tkk.inner_elem({0, 1, 0}, {0, -1, 0}, Cyc::one(2));
    EXPECT_FALSE(v1.formally_zero());
    EXPECT_TRUE(tkk.elem_equal(v1, v2));
    EXPECT_FALSE(tkk.elem_equal(v1, v2.scaled(Cyc::of_long(2))));
}

TEST(TkkModel, InnerBracketActsAsCommutator) {
    // the formal rule [V_{x,y}, V_{z,w}] = V_{{x,y,z},w} - V_{z,{y,x,w}} must
    // act as the commutator of the V operators on the spin factor
    TkkModel tkk(Torus::spin(3), 1);
    const Torus& a = tkk.coord();
    auto supp = a.support_window(1);
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        TkkElem v = tkk.inner_elem(supp[rng.below(supp.size())], supp[rng.below(supp.size())],
                                   Cyc::one(2));
        TkkElem w = tkk.inner_elem(supp[rng.below(supp.size())], supp[rng.below(supp.size())],
                                   Cyc::one(2));
        TkkElem br = tkk.bracket(v, w);
        for (const auto& mu : supp) {
            TorusElem z = a.basis_elem(mu);
            TorusElem lhs = tkk.apply_inner(br.inner, z);
            TorusElem rhs = tkk.apply_inner(v.inner, tkk.apply_inner(w.inner, z)) -
                            tkk.apply_inner(w.inner, tkk.apply_inner(v.inner, z));
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(SlModel, LambdaDecomposeSumsBack) {
    SlModel sl(quantum_q12_minus(), 2);
    MatElem mixed = sl.unit_matrix(0, 1, sl.coord().basis_elem({1, 0})) +
                    sl.unit_matrix(0, 1, sl.coord().basis_elem({0, 2})) +
                    sl.unit_matrix(2, 0, sl.coord().basis_elem({-1, 1})) +
                    (sl.unit_matrix(0, 0, sl.coord().basis_elem({1, 1})) -
                     sl.unit_matrix(1, 1, sl.coord().basis_elem({1, 1})));
    MatElem sum = sl.zero_elem();
    for (const auto& [lam, comp] : sl.lambda_decompose(mixed)) {
        (void)lam;
        sum = sum + comp;
    }
    EXPECT_EQ(sum, mixed);
}

TEST(SspModel, BlocksAndSupports) {
    SspModel ssp(quantum_involution(), 2);
    const Torus& a = ssp.coord();
    // m_ii lives only over hermitian degrees: kappa = l1 l2
    LatticeVec long_root{2, 0};
    EXPECT_TRUE(ssp.lambda_support_contains(long_root, LatticeVec{1, 0}));
    EXPECT_FALSE(ssp.lambda_support_contains(long_root, LatticeVec{1, 1}));
    EXPECT_EQ(ssp.basis_at(long_root, LatticeVec{1, 1}).size(), 0u);
    ASSERT_EQ(ssp.basis_at(long_root, LatticeVec{1, 0}).size(), 1u);
    // short roots see all of Lambda
    EXPECT_TRUE(ssp.lambda_support_contains(LatticeVec{1, -1}, LatticeVec{1, 1}));

    // every basis element lies in the model and brackets stay inside
    auto basis = window_basis(ssp, 1);
    for (const auto& b : basis) EXPECT_TRUE(ssp.in_model(b.elem)) << b.label;
    for (std::size_t i = 0; i < basis.size(); i += 11)
        for (std::size_t j = 0; j < basis.size(); j += 13) {
            auto br = ssp.bracket(basis[i].elem, basis[j].elem);
            EXPECT_TRUE(ssp.in_model(br));
            EXPECT_EQ(br, dense_commutator(basis[i].elem, basis[j].elem));
        }
    (void)a;
}

TEST(SspModel, Admissibility) {
    SspModel ssp(quantum_involution(), 2);
    EXPECT_TRUE(ssp.admissible(ShiftHom::zero(2, 2)));
    // s(alpha_r) must be hermitian: kappa((1,1)) = 1 rejects it
    EXPECT_FALSE(ssp.admissible(ShiftHom({{0, 0}, {1, 1}}, 2)));
    EXPECT_TRUE(ssp.admissible(ShiftHom({{1, 1}, {1, 0}}, 2)));
}

TEST(TkkModel, Admissibility) {
    TkkModel tkk(Torus::spin(3), 1);
    EXPECT_TRUE(tkk.admissible(ShiftHom::zero(1, 3)));
    EXPECT_TRUE(tkk.admissible(ShiftHom({{1, 0, 0}}, 3)));
    EXPECT_FALSE(tkk.admissible(ShiftHom({{1, 1, 0}}, 3)));
    // shifting by an inadmissible hom is a named precondition error
    EXPECT_THROW(tkk.shifted(ShiftHom({{1, 1, 0}}, 3)), std::domain_error);
    SspModel ssp(quantum_involution(), 2);
    EXPECT_THROW(ssp.shifted(ShiftHom({{0, 0}, {1, 1}}, 2)), std::domain_error);
}

TEST(ShiftIsotope, GroupLaw) {
    SlModel sl(quantum_q12_minus(), 2);
    ShiftHom s({{1, 0}, {0, 0}}, 2), t({{0, 1}, {1, 1}}, 2);
    SlModel lhs = sl.shifted(s).shifted(t);
    SlModel rhs = sl.shifted(s + t);
    SlModel back = sl.shifted(s).shifted(-s);
    for (const auto& alpha : sl.datum().nonzero_roots())
        for (const auto& lam : window_box(2, 1)) {
            EXPECT_EQ(lhs.basis_at(alpha, lam), rhs.basis_at(alpha, lam));
            EXPECT_EQ(back.basis_at(alpha, lam), sl.basis_at(alpha, lam));
        }
}

TEST(ShiftIsotope, ShiftedModelPassesAxioms) {
    SlModel sl(quantum_q12_minus(), 2);
    SlModel shifted = sl.shifted(ShiftHom({{1, 0}, {0, 1}}, 2));
    auto rep = check_axioms(shifted, {.window = 1, .jacobi_samples = 60, .pair_cap = 4000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();

    TkkModel tkk(Torus::spin(3), 1);
    ASSERT_TRUE(tkk.admissible(ShiftHom({{1, 0, 0}}, 3)));
    auto rep2 = check_axioms(tkk.shifted(ShiftHom({{1, 0, 0}}, 3)),
                             {.window = 1, .jacobi_samples = 30, .pair_cap = 1500});
    EXPECT_TRUE(rep2.all_pass()) << rep2.text();
}

TEST(Axioms, UntwistedSl2PassesOnWiderWindow) {
    SlModel sl(Torus::laurent(1), 1);
    auto rep = check_axioms(sl, {.window = 2, .jacobi_samples = 200, .pair_cap = 8000});
    EXPECT_TRUE(rep.all_pass()) << rep.text();
}

TEST(Axioms, ShippedModelsPass) {
    {
        SlModel sl(quantum_q12_minus(), 3);
        auto rep = check_axioms(sl, {.window = 1, .jacobi_samples = 80, .pair_cap = 6000});
        EXPECT_TRUE(rep.all_pass()) << rep.text();
    }
    {
        TkkModel tkk(Torus::spin(3), 1);
        auto rep = check_axioms(tkk, {.window = 1, .jacobi_samples = 40, .pair_cap = 1500});
        EXPECT_TRUE(rep.all_pass()) << rep.text();
    }
    {
        SspModel ssp(quantum_involution(), 2);
        auto rep = check_axioms(ssp, {.window = 1, .jacobi_samples = 60, .pair_cap = 4000});
        EXPECT_TRUE(rep.all_pass()) << rep.text();
    }
}

TEST(Axioms, CorruptedStructureIsReported) {
    Torus bad = quantum_q12_minus().corrupted({1, 0}, {0, 1});
    SlModel sl(bad, 2);
    auto rep = check_axioms(sl, {.window = 1, .jacobi_samples = 120, .pair_cap = 6000});
    EXPECT_FALSE(rep.all_pass());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    EXPECT_TRUE(witnessed) << rep.text();
}

TEST(Axioms, TkkLt2iNeedsZeroInSupport) {
    // the spin factor has 0 in S, so (A^0)_1 != 0
    TkkModel tkk(Torus::spin(3), 1);
    EXPECT_FALSE(tkk.basis_at(tkk.plus_root(), zero_vec(3)).empty());
}
