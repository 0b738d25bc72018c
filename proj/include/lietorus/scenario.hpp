#pragma once

#include <chrono>
#include <functional>

#include "chi.hpp"
#include "graded_map.hpp"
#include "io.hpp"
#include "quadform.hpp"

namespace lietorus {

struct RunOptions {
    std::uint64_t seed = 0;
    long long window = -1; // -1: per-scenario default
};

struct Scenario {
    std::string name;
    std::string description;
    std::function<Report(const RunOptions&)> run;
};

namespace scenarios {

inline Torus quantum_n2() {
    std::vector<std::vector<Cyc>> q(2, std::vector<Cyc>(2, Cyc::one(2)));
    q[0][1] = q[1][0] = -Cyc::one(2);
    return Torus::quantum(2, q, 2);
}

inline CheckResult expect_failure(const Report& failing, const std::string& name) {
    bool witnessed = false;
    for (const auto& c : failing.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    if (!failing.all_pass() && witnessed) return CheckResult::ok(name);
    return CheckResult::fail(name, "corruption was not detected with a witness");
}

inline Report quantum_associative(const RunOptions& opts) {
    long long w = opts.window < 0 ? 2 : opts.window;
    Report rep = check_flavor_laws(quantum_n2(), w);
    rep.name = "quantum-associative";
    return rep;
}

inline Report octonion_alternative(const RunOptions& opts) {
    long long w = opts.window < 0 ? 2 : opts.window;
    Torus oct = Torus::octonion();
    Report rep = check_flavor_laws(oct, w);
    rep.name = "octonion-alternative";
    auto x = [&oct](int i) { return oct.basis_elem(unit_vec(3, i)); };
    TorusElem lhs = (x(0) * x(1)) * x(2);
    TorusElem rhs = x(0) * (x(1) * x(2));
    bool witness = lhs == oct.basis_elem({1, 1, 1}) && rhs == -lhs;
    rep.add(witness ? CheckResult::ok("non-associativity-witness")
                    : CheckResult::fail("non-associativity-witness",
                                        "(x1 x2) x3 = " + lhs.str() + ", x1 (x2 x3) = " + rhs.str()));
    return rep;
}

inline Report jordan_identity(const RunOptions& opts) {
    long long w = opts.window < 0 ? 2 : opts.window;
    Report rep;
    rep.name = "jordan-identity";
    rep.merge(check_flavor_laws(Torus::spin(3), w), "spin");
    rep.merge(check_flavor_laws(Torus::jordan_plus(2, {{Cyc::one(2), -Cyc::one(2)},
                                                       {-Cyc::one(2), Cyc::one(2)}},
                                                   2),
                                w),
              "kq-plus");
    return rep;
}

inline Report axioms_tkk_spin(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    TkkModel tkk(Torus::spin(3), w);
    Report rep = check_axioms(tkk, {.window = w, .seed = opts.seed, .jacobi_samples = 150,
                                    .pair_cap = 6000});
    rep.name = "axioms-tkk-spin";
    return rep;
}

inline Report axioms_sl3_quantum(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    SlModel sl(quantum_n2(), 3);
    Report rep = check_axioms(sl, {.window = w, .seed = opts.seed, .jacobi_samples = 300,
                                   .pair_cap = 20000});
    rep.name = "axioms-sl3-quantum";
    return rep;
}

inline Report axioms_ssp8_quantum(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    SspModel ssp(Involution(quantum_n2(), {1, 1}), 4);
    Report rep = check_axioms(ssp, {.window = w, .seed = opts.seed, .jacobi_samples = 300,
                                    .pair_cap = 20000});
    rep.name = "axioms-ssp8-quantum";
    return rep;
}

inline Report iso_diag_sl3(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    SlModel sl(quantum_n2(), 3);
    ShiftHom s({{1, 0}, {0, 0}, {0, 1}}, 2);
    Report rep;
    rep.name = "iso-diag-sl3";
    rep.merge(verify_graded_map(diag_conjugation_iso(sl, s),
                                {.window = w, .seed = opts.seed, .pair_cap = 20000}),
              "diag");
    rep.merge(verify_graded_map(opposite_iso(sl), {.window = w, .seed = opts.seed, .pair_cap = 20000}),
              "opposite");
    return rep;
}

inline Report iso_tkk_spin(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    TkkModel tkk(Torus::spin(3), w);
    auto map = tkk_isotope_iso(tkk, ShiftHom({{1, 0, 0}}, 3));
    Report rep = verify_graded_map(map, {.window = w, .seed = opts.seed, .pair_cap = 12000});
    rep.name = "iso-tkk-spin";
    return rep;
}

inline Report iso_ssp8(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    SspModel ssp(Involution(Torus::laurent(2), {1, -1}), 4);
    ShiftHom s({{1, 0}, {0, 0}, {0, 1}, {0, 2}}, 2); // s(alpha_r) hermitian
    auto map = ssp_isotope_iso(ssp, s);
    Report rep = verify_graded_map(map, {.window = w, .seed = opts.seed, .pair_cap = 20000});
    rep.name = "iso-ssp8";
    return rep;
}

inline Report spin_sigma_obstruction(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    Report rep;
    rep.name = "spin-sigma-obstruction";
    Torus spin = Torus::spin(3);
    auto base = invariants(spin, w);
    rep.merge(base.crosscheck, "base");
    rep.add(base.finite && base.coset_count == 5 ? CheckResult::ok("support-five-cosets")
                                                 : CheckResult::fail("support-five-cosets", "S/Gamma"));
    rep.add(vec_is_zero(base.sigma)
                ? CheckResult::ok("sigma-sum-zero")
                : CheckResult::fail("sigma-sum-zero", "Sigma(S/Gamma) = " + vec_str(base.sigma)));

    Torus iso = jordan_isotope(spin, LatticeVec{-1, 0, 0}); // rho = l1
    auto shifted = invariants(iso, w);
    rep.merge(shifted.crosscheck, "isotope");
    rep.add(shifted.sigma == LatticeVec{1, 0, 0}
                ? CheckResult::ok("sigma-shifted-nonzero")
                : CheckResult::fail("sigma-shifted-nonzero",
                                    "Sigma((S-l1)/Gamma) = " + vec_str(shifted.sigma)));
    // the same shift gives a verified Lie-level isomorphism: isotopic but
    // not isograded-isomorphic
    TkkModel tkk(spin, w);
    auto map = tkk_isotope_iso(tkk, ShiftHom({{1, 0, 0}}, 3));
    rep.merge(verify_graded_map(map, {.window = w, .seed = opts.seed, .pair_cap = 8000}),
              "lie-level-witness");
    return rep;
}

inline Report quadform_classify_n2(const RunOptions&) {
    Report rep;
    rep.name = "quadform-classify-n2";
    auto classes = classify_quadforms(2);
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (const auto& c : classes) {
        sizes.push_back(c.orbit_size);
        total += c.orbit_size;
    }
    std::sort(sizes.begin(), sizes.end());
    rep.add(classes.size() == 4 ? CheckResult::ok("four-classes")
                                : CheckResult::fail("four-classes", std::to_string(classes.size())));
    rep.add(sizes == std::vector<std::size_t>{1, 1, 3, 3}
                ? CheckResult::ok("orbit-sizes-1-3-3-1")
                : CheckResult::fail("orbit-sizes-1-3-3-1", "orbit sizes differ"));
    rep.add(total == 8 ? CheckResult::ok("orbit-sizes-sum")
                       : CheckResult::fail("orbit-sizes-sum", std::to_string(total)));
    bool distinct = true;
    for (std::size_t i = 0; i < classes.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (is_isometric(classes[i].representative, classes[j].representative)) {
                distinct = false;
                break;
            }
    rep.add(distinct ? CheckResult::ok("representatives-pairwise-distinct")
                     : CheckResult::fail("representatives-pairwise-distinct", ""));
    return rep;
}

inline Report quadform_roundtrip(const RunOptions& opts) {
    Report rep;
    rep.name = "quadform-roundtrip";
    bool ok = true;
    std::string wit;
    Rng rng(opts.seed);
    for (int n = 1; n <= 4 && ok; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            std::uint64_t bits = n + n * (n - 1) / 2;
            QuadFormF2 k = QuadFormF2::decode(n, rng.below(1ULL << bits));
            auto [q, evec] = torus_from_quadform(k);
            if (quadform_from_torus(q, evec) != k) {
                ok = false;
                wit = "round trip differs at n = " + std::to_string(n);
                break;
            }
        }
    rep.add(ok ? CheckResult::ok("q-e-roundtrip") : CheckResult::fail("q-e-roundtrip", wit));
    // frozen recipe values
    auto k = quadform_from_torus({{1, -1}, {-1, 1}}, {1, 1});
    rep.add(k.eval({1, 0}) == 0 && k.eval({1, 1}) == 1
                ? CheckResult::ok("kappa-l1l2-recipe")
                : CheckResult::fail("kappa-l1l2-recipe", ""));
    // the involution sign and commutation exponents match on the window
    Torus t = quantum_n2();
    Involution iota(t, {1, 1});
    bool agree = true;
    for (const auto& v : window_box(2, 2)) {
        if (iota.kappa_bit(v) != k.eval(bitvec_of(v))) agree = false;
        for (const auto& u : window_box(2, 2)) {
            TorusElem av = t.basis_elem(v), au = t.basis_elem(u);
            int commuted = k.polar_pair(bitvec_of(v), bitvec_of(u));
            if ((av * au) != (commuted ? -(au * av) : au * av)) agree = false;
        }
    }
    rep.add(agree ? CheckResult::ok("kappa-matches-torus")
                  : CheckResult::fail("kappa-matches-torus", ""));
    return rep;
}

inline Report quadform_involution_isotope(const RunOptions& opts) {
    long long w = opts.window < 0 ? 2 : opts.window;
    Report rep;
    rep.name = "quadform-involution-isotope";
    Torus t = quantum_n2();
    Involution iota(t, {1, -1});
    QuadFormF2 k = quadform_from_torus({{1, -1}, {-1, 1}}, {1, -1});
    bool ok = true;
    std::string wit;
    for (const auto& mu : window_box(2, w)) {
        if (!iota.hermitian(mu)) continue;
        Involution moved = iota.isotope(mu);
        QuadFormF2 kh = quadform_from_torus({{1, -1}, {-1, 1}}, moved.gen_signs());
        BitMat tau = isotope_shift_witness(k, bitvec_of(mu));
        if (!is_isometry_witness(kh, k, tau)) {
            ok = false;
            wit = "explicit witness rejected at h degree " + vec_str(mu);
            break;
        }
        if (!is_isometric(kh, k)) {
            ok = false;
            wit = "search finds no isometry at h degree " + vec_str(mu);
            break;
        }
    }
    rep.add(ok ? CheckResult::ok("isotope-forms-isometric")
               : CheckResult::fail("isotope-forms-isometric", wit));
    (void)opts;
    return rep;
}

inline Report eala_sl2_n1(const RunOptions& opts) {
    long long w = opts.window < 0 ? 2 : opts.window;
    Report rep;
    rep.name = "eala-sl2-n1";
    EalaSpace e(SlModel(Torus::laurent(1), 1));
    std::size_t deg0 = 0;
    for (const auto& b : e.window(w))
        if (vec_is_zero(b.lambda)) ++deg0;
    rep.add(deg0 == 5 ? CheckResult::ok("degree-zero-dimension-5")
                      : CheckResult::fail("degree-zero-dimension-5", std::to_string(deg0)));
    rep.add(e.h_space().size() == 3
                ? CheckResult::ok("H-dimension-3")
                : CheckResult::fail("H-dimension-3", std::to_string(e.h_space().size())));
    rep.merge(check_eala(e, {.window = w, .seed = opts.seed, .triple_cap = 5500, .pair_cap = 2500}));
    return rep;
}

inline Report thm6_chi_sl2_n1(const RunOptions& opts) {
    long long w = opts.window < 0 ? 2 : opts.window;
    ChiMap chi(SlModel(Torus::laurent(1), 1), ShiftHom({{1}}, 1));
    Report rep = verify_chi(chi, {.window = w, .seed = opts.seed, .pair_cap = 20000});
    rep.name = "thm-6-chi-sl2-n1";
    return rep;
}

inline Report negative_controls(const RunOptions& opts) {
    long long w = opts.window < 0 ? 1 : opts.window;
    Report rep;
    rep.name = "negative-controls";
    // flavor laws (criterion 1)
    rep.add(expect_failure(check_flavor_laws(quantum_n2().corrupted({1, 0}, {0, 1}), w),
                           "corrupted-structure-flavor"));
    // Lie torus axioms (criterion 2)
    rep.add(expect_failure(
        check_axioms(SlModel(quantum_n2().corrupted({1, 0}, {0, 1}), 2),
                     {.window = w, .seed = opts.seed, .jacobi_samples = 200, .pair_cap = 8000}),
        "corrupted-structure-axioms"));
    // graded maps (criterion 3)
    {
        SlModel sl(Torus::laurent(1), 2);
        auto map = diag_conjugation_iso(sl, ShiftHom({{1}, {0}}, 1));
        auto inner = map.apply;
        map.apply = [inner](const MatElem& x) {
            MatElem img = inner(x);
            TorusElem e01 = img.entry(0, 1);
            if (!e01.is_zero()) img.set(0, 1, e01.scaled(rat_of(-1)));
            return img;
        };
        rep.add(expect_failure(verify_graded_map(map, {.window = w, .seed = opts.seed,
                                                       .pair_cap = 8000}),
                               "corrupted-map-entry"));
    }
    // EALA layer (criterion 6)
    rep.add(expect_failure(
        check_eala(EalaSpace(SlModel(Torus::laurent(1).corrupted({1}, {-1}), 1)),
                   {.window = w, .seed = opts.seed, .triple_cap = 700, .pair_cap = 900}),
        "corrupted-structure-eala"));
    // chi (criterion 7)
    rep.add(expect_failure(
        verify_chi(ChiMap(SlModel(Torus::laurent(1), 1), ShiftHom({{1}}, 1), true),
                   {.window = w, .seed = opts.seed, .pair_cap = 4000}),
        "corrupted-omega-chi"));
    return rep;
}

} // namespace scenarios

inline const std::vector<Scenario>& scenario_catalogue() {
    static const std::vector<Scenario> catalogue = {
        {"quantum-associative", "associativity sweep for the rank-2 quantum torus",
         scenarios::quantum_associative},
        {"octonion-alternative", "alternative laws and the non-associativity witness",
         scenarios::octonion_alternative},
        {"jordan-identity", "Jordan identity for the spin factor and k_q^+",
         scenarios::jordan_identity},
        {"axioms-tkk-spin", "Lie torus axioms for TKK over the spin factor",
         scenarios::axioms_tkk_spin},
        {"axioms-sl3-quantum", "Lie torus axioms for sl_4 over the quantum torus",
         scenarios::axioms_sl3_quantum},
        {"axioms-ssp8-quantum", "Lie torus axioms for ssp_8 over the quantum torus",
         scenarios::axioms_ssp8_quantum},
        {"iso-diag-sl3", "diagonal conjugation and transpose isomorphisms for sl_4",
         scenarios::iso_diag_sl3},
        {"iso-tkk-spin", "verified TKK isotope isomorphism over the spin factor",
         scenarios::iso_tkk_spin},
        {"iso-ssp8", "verified ssp_8 involution-isotope isomorphism", scenarios::iso_ssp8},
        {"spin-sigma-obstruction",
         "coset-sum invariant separates the spin factor from its isotope",
         scenarios::spin_sigma_obstruction},
        {"quadform-classify-n2", "rank-2 quadratic form classification", scenarios::quadform_classify_n2},
        {"quadform-roundtrip", "(q,e) <-> kappa round trip and torus compatibility",
         scenarios::quadform_roundtrip},
        {"quadform-involution-isotope", "involution isotopes give isometric forms",
         scenarios::quadform_involution_isotope},
        {"eala-sl2-n1", "E(L, SCDer, 0) checks for untwisted sl_2 in nullity 1",
         scenarios::eala_sl2_n1},
        {"thm-6-chi-sl2-n1", "the explicit isomorphism chi for untwisted sl_2",
         scenarios::thm6_chi_sl2_n1},
        {"negative-controls", "corrupted data must be caught with witnesses",
         scenarios::negative_controls},
    };
    return catalogue;
}

inline const Scenario* find_scenario(const std::string& name) {
    for (const auto& s : scenario_catalogue())
        if (s.name == name) return &s;
    return nullptr;
}

inline Report run_scenario(const Scenario& s, const RunOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    Report rep = s.run(opts);
    rep.name = s.name;
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return rep;
}

} // namespace lietorus
