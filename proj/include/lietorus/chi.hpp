#pragma once

#include "eala.hpp"

namespace lietorus {

/// The explicit isomorphism chi: E(L, SCDer, 0) -> E(L^(s), SCDer^(s), 0) in
/// the matrix form [[psi,0,0],[omega,Id,0],[-1/2 om# om, -om#, psi-hat]].
/// psi and psi-hat are coordinate identities in the der-basis slots, so the
/// d- and c-parts keep their coordinates; omega(t^g d_theta) = t^g h_theta
/// with alpha(h_theta) = theta(s(alpha)).
class ChiMap {
public:
    ChiMap(const SlModel& model, const ShiftHom& s, bool corrupt_omega = false)
        : source_(model), target_(shifted_checked(model, s)), s_(s), corrupt_(corrupt_omega) {
        // Cartan matrix C_ij = alpha_i(h_j) for the base of A_r
        const auto& datum = model.datum();
        h_basis_ = model.h_basis();
        const int r = model.rank();
        cartan_.assign(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r), Rat(0)));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    model.root_on_diagonal(datum.base_root(i), h_basis_[static_cast<std::size_t>(j - 1)]);
    }

    const EalaSpace& source() const { return source_; }
    const EalaSpace& target() const { return target_; }
    const ShiftHom& shift() const { return s_; }

    /// h_theta in the Cartan subalgebra with alpha(h_theta) = theta(s(alpha)).
    MatElem h_theta(const std::vector<Rat>& theta) const {
        const auto& model = source_.model();
        const int r = model.rank();
        std::vector<Rat> rhs;
        for (int i = 1; i <= r; ++i)
            rhs.push_back(theta_eval(theta, s_.apply(model.datum(), model.datum().base_root(i))));
        std::vector<Rat> t = solve_rational(cartan_, rhs);
        MatElem out = model.zero_elem();
        for (int j = 0; j < r; ++j)
            if (t[static_cast<std::size_t>(j)] != 0)
                out = out + h_basis_[static_cast<std::size_t>(j)].scaled(t[static_cast<std::size_t>(j)]);
        if (corrupt_) out = out.scaled(Rat(2)); // negative-control hook
        return out;
    }

    /// omega(sum coeff t^gamma d_theta) = sum coeff t^gamma h_theta.
    MatElem omega(const std::map<LatticeVec, std::vector<Cyc>>& d) const {
        const auto& model = source_.model();
        MatElem out = model.zero_elem();
        for (const auto& [gamma, coeffs] : d) {
            auto basis = der_basis(gamma);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                if (coeffs[k].is_zero()) continue;
                MatElem ht = h_theta(basis.thetas[k]);
                if (!ht.is_zero()) out = out + model.centroid_mul(gamma, ht).scaled(coeffs[k]);
            }
        }
        return out;
    }

    /// omega#(l)(d) = (l | omega(d)), as a C-element.
    std::map<LatticeVec, std::vector<Cyc>> omega_sharp(const MatElem& l) const {
        const auto& model = source_.model();
        std::map<LatticeVec, std::vector<Cyc>> out;
        for (const auto& [lam, comp] : model.lambda_decompose(l)) {
            LatticeVec gamma = vec_neg(lam);
            if (!source_.in_gamma(gamma)) continue;
            auto basis = der_basis(gamma);
            std::vector<Cyc> vals(source_.der_dim(gamma), Cyc::zero(source_.m_order()));
            bool nonzero = false;
            for (std::size_t k = 0; k < basis.dim(); ++k) {
                MatElem ht = h_theta(basis.thetas[k]);
                if (ht.is_zero()) continue;
                Cyc v = model.graded_form(comp, model.centroid_mul(gamma, ht));
                if (!v.is_zero()) {
                    vals[k] = v;
                    nonzero = true;
                }
            }
            if (nonzero) {
                auto it = out.find(lam);
                if (it == out.end())
                    out.emplace(lam, std::move(vals));
                else
                    for (std::size_t k = 0; k < vals.size(); ++k) it->second[k] += vals[k];
            }
        }
        return out;
    }

    /// kappa(d+l) = 1/2 om#(om(d)) + om#(l), the connecting 1-cochain.
    std::map<LatticeVec, std::vector<Cyc>> kappa(const EalaElem& m) const {
        MatElem half_omega = omega(m.d).scaled(Rat(1, 2));
        EalaElem acc = source_.zero_elem();
        acc.c = omega_sharp(half_omega + m.l);
        return acc.c;
    }

    EalaElem apply(const EalaElem& x) const {
        EalaElem out = target_.zero_elem();
        out.d = x.d; // psi is the coordinate identity
        out.l = x.l + omega(x.d);
        // eta(x) = psi-hat(f) - psi-hat om#(l) - 1/2 psi-hat om# om(d)
        EalaElem tmp = source_.zero_elem();
        tmp.c = x.c;
        EalaElem sharp = source_.zero_elem();
        sharp.c = omega_sharp(x.l + omega(x.d).scaled(Rat(1, 2)));
        out.c = source_.sub(tmp, sharp).c;
        return out;
    }

private:
    static SlModel shifted_checked(const SlModel& model, const ShiftHom& s) {
        if (!model.admissible(s)) throw std::domain_error("chi: shift is not admissible");
        return model.shifted(s);
    }

    static std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
        const std::size_t r = a.size();
        for (std::size_t c = 0; c < r; ++c) {
            std::size_t p = c;
            while (p < r && a[p][c] == 0) ++p;
            if (p == r) throw std::logic_error("chi: singular Cartan system");
            std::swap(a[p], a[c]);
            std::swap(b[p], b[c]);
            Rat inv = Rat(1) / a[c][c];
            for (auto& x : a[c]) x *= inv;
            b[c] *= inv;
            for (std::size_t q = 0; q < r; ++q) {
                if (q == c || a[q][c] == 0) continue;
                Rat f = a[q][c];
                for (std::size_t j = 0; j < r; ++j) a[q][j] -= f * a[c][j];
                b[q] -= f * b[c];
            }
        }
        return b;
    }

    EalaSpace source_;
    EalaSpace target_;
    ShiftHom s_;
    bool corrupt_;
    std::vector<MatElem> h_basis_;
    std::vector<std::vector<Rat>> cartan_;
};

struct EalaCheckOptions {
    long long window = 2;
    std::uint64_t seed = 0;
    std::size_t triple_cap = 6000; // full triple sweep below this, sampled above
    std::size_t pair_cap = 20000;
};

/// Antisymmetry, Jacobi, form symmetry/invariance/gradedness, D-C pairing,
/// evaluation-map injectivity, the extended 2-cocycle identity for sigma_D
/// and the root-space comparison, all on the degree window.
inline Report check_eala(const EalaSpace& e, const EalaCheckOptions& opts = {}) {
    Report rep;
    rep.name = "eala(" + e.model().name() + ", w=" + std::to_string(opts.window) + ")";
    auto basis = e.window(opts.window);
    const std::size_t nb = basis.size();

    { // bracket sweeps
        bool anti = true, jac = true;
        std::string wit_a, wit_j;
        auto pairs = detail::sample_pairs(nb, opts.pair_cap, opts.seed);
        for (const auto& [i, j] : pairs) {
            auto ab = e.bracket(basis[i].elem, basis[j].elem);
            auto ba = e.bracket(basis[j].elem, basis[i].elem);
            if (!e.is_zero(e.add(ab, ba))) {
                anti = false;
                wit_a = "[a,b]+[b,a] != 0 at a = " + basis[i].label + ", b = " + basis[j].label;
                break;
            }
        }
        std::vector<std::array<std::size_t, 3>> triples;
        if (nb * nb * nb <= opts.triple_cap) {
            for (std::size_t i = 0; i < nb; ++i)
                for (std::size_t j = 0; j < nb; ++j)
                    for (std::size_t k = 0; k < nb; ++k) triples.push_back({i, j, k});
        } else {
            Rng rng(opts.seed + 2);
            for (std::size_t k = 0; k < opts.triple_cap; ++k)
                triples.push_back({rng.below(nb), rng.below(nb), rng.below(nb)});
        }
        for (const auto& [i, j, k] : triples) {
            auto jacsum = e.add(
                e.add(e.bracket(e.bracket(basis[i].elem, basis[j].elem), basis[k].elem),
                      e.bracket(e.bracket(basis[j].elem, basis[k].elem), basis[i].elem)),
                e.bracket(e.bracket(basis[k].elem, basis[i].elem), basis[j].elem));
            if (!e.is_zero(jacsum)) {
                jac = false;
                wit_j = "Jacobi fails on (" + basis[i].label + ", " + basis[j].label + ", " +
                        basis[k].label + ")";
                break;
            }
        }
        rep.add(anti ? CheckResult::ok("antisymmetry") : CheckResult::fail("antisymmetry", wit_a));
        rep.add(jac ? CheckResult::ok("jacobi") : CheckResult::fail("jacobi", wit_j));
    }

    { // form: symmetric, graded, invariant
        bool sym = true, graded = true, inv = true;
        std::string wit_s, wit_g, wit_i;
        for (std::size_t i = 0; i < nb && (sym || graded); ++i)
            for (std::size_t j = 0; j < nb; ++j) {
                Cyc f = e.form(basis[i].elem, basis[j].elem);
                if (sym && f != e.form(basis[j].elem, basis[i].elem)) {
                    sym = false;
                    wit_s = "form asymmetric at " + basis[i].label + ", " + basis[j].label;
                }
                if (graded && !f.is_zero() &&
                    !vec_is_zero(vec_add(basis[i].lambda, basis[j].lambda))) {
                    graded = false;
                    wit_g = "graded orthogonality fails at " + basis[i].label + ", " + basis[j].label;
                }
                if (!sym && !graded) break;
            }
        std::vector<std::array<std::size_t, 3>> form_triples;
        if (nb > 0 && nb * nb * nb <= opts.triple_cap) {
            for (std::size_t i = 0; i < nb; ++i)
                for (std::size_t j = 0; j < nb; ++j)
                    for (std::size_t k = 0; k < nb; ++k) form_triples.push_back({i, j, k});
        } else {
            Rng rng(opts.seed + 3);
            for (std::size_t k = 0; k < opts.triple_cap && nb > 0; ++k)
                form_triples.push_back({rng.below(nb), rng.below(nb), rng.below(nb)});
        }
        for (const auto& [i, j, k] : form_triples) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            const auto& c = basis[k];
            if (e.form(e.bracket(a.elem, b.elem), c.elem) !=
                e.form(a.elem, e.bracket(b.elem, c.elem))) {
                inv = false;
                wit_i = "([a,b]|c) != (a|[b,c]) at (" + a.label + ", " + b.label + ", " + c.label + ")";
                break;
            }
        }
        rep.add(sym ? CheckResult::ok("form-symmetric") : CheckResult::fail("form-symmetric", wit_s));
        rep.add(graded ? CheckResult::ok("form-graded") : CheckResult::fail("form-graded", wit_g));
        rep.add(inv ? CheckResult::ok("form-invariant") : CheckResult::fail("form-invariant", wit_i));
    }

    { // D_gamma pairs nondegenerately with C_{-gamma}
        bool ok = true;
        std::string wit;
        for (const auto& g : e.gamma_window(opts.window)) {
            std::size_t dim = e.der_dim(g);
            for (std::size_t k = 0; k < dim && ok; ++k) {
                auto dk = e.d_elem(g, k, Cyc::one(e.m_order()));
                bool paired = false;
                for (std::size_t k2 = 0; k2 < dim; ++k2)
                    if (!e.form(dk, e.c_elem(vec_neg(g), k2, Cyc::one(e.m_order()))).is_zero())
                        paired = true;
                if (!paired) {
                    ok = false;
                    wit = "D at " + vec_str(g) + " index " + std::to_string(k) +
                          " pairs to zero with C";
                }
            }
        }
        rep.add(ok ? CheckResult::ok("D-C-pairing") : CheckResult::fail("D-C-pairing", wit));
    }

    { // evaluation map injectivity on a generating set
        bool ok = true;
        IntMat rows;
        for (int i = 0; i < e.n(); ++i) {
            auto v = e.ev(unit_vec(e.n(), i));
            LatticeVec row;
            for (const auto& x : v) {
                if (x.get_den() != 1) throw std::logic_error("ev: non-integer value on generators");
                row.push_back(x.get_num().get_si());
            }
            rows.push_back(row);
        }
        ok = static_cast<int>(integer_row_echelon(rows).size()) == e.n();
        rep.add(ok ? CheckResult::ok("ev-injective")
                   : CheckResult::fail("ev-injective", "ev has a kernel on Lambda generators"));
    }

    { // extended 2-cocycle identity for sigma_D over M = D (+) L
        bool ok = true;
        std::string wit;
        std::vector<std::size_t> mIdx;
        for (std::size_t i = 0; i < nb; ++i)
            if (basis[i].part != 'c') mIdx.push_back(i);
        auto sigma_m = [&e](const EalaElem& x, const EalaElem& y) {
            return e.sigma(x.l, y.l); // sigma(D,M) = sigma(M,D) = 0
        };
        auto act = [&e](const EalaElem& x, const std::map<LatticeVec, std::vector<Cyc>>& f) {
            return e.contragredient(x.d, f);
        };
        const std::size_t nm = mIdx.size();
        std::vector<std::array<std::size_t, 3>> m_triples;
        if (nm > 0 && nm * nm * nm <= opts.triple_cap) {
            for (std::size_t i = 0; i < nm; ++i)
                for (std::size_t j = 0; j < nm; ++j)
                    for (std::size_t k = 0; k < nm; ++k) m_triples.push_back({i, j, k});
        } else {
            Rng rng(opts.seed + 4);
            for (std::size_t t = 0; t < std::min<std::size_t>(opts.triple_cap, 2000) && nm > 0; ++t)
                m_triples.push_back({rng.below(nm), rng.below(nm), rng.below(nm)});
        }
        for (const auto& [i1, i2, i3] : m_triples) {
            const auto& m1 = basis[mIdx[i1]];
            const auto& m2 = basis[mIdx[i2]];
            const auto& m3 = basis[mIdx[i3]];
            EalaElem acc = e.zero_elem();
            const EalaElem* ms[3] = {&m1.elem, &m2.elem, &m3.elem};
            for (int rot = 0; rot < 3; ++rot) {
                const EalaElem& a = *ms[rot];
                const EalaElem& b = *ms[(rot + 1) % 3];
                const EalaElem& c = *ms[(rot + 2) % 3];
                EalaElem br = e.bracket(a, b); // stays in M for M-inputs
                EalaElem term = e.zero_elem();
                term.c = sigma_m(br, c);
                EalaElem action = e.zero_elem();
                action.c = act(a, sigma_m(b, c));
                acc = e.add(acc, e.sub(term, action));
            }
            if (!e.is_zero(acc)) {
                ok = false;
                wit = "cocycle identity fails on (" + m1.label + ", " + m2.label + ", " + m3.label + ")";
                break;
            }
        }
        rep.add(ok ? CheckResult::ok("sigma-2-cocycle") : CheckResult::fail("sigma-2-cocycle", wit));
    }

    { // root spaces: each window basis vector is an ad(H)-eigenvector with
      // the nominal weight, and dim E_{lambda+alpha} = dim L_alpha^lambda
        bool ok = true;
        std::string wit;
        auto hs = e.h_space();
        for (const auto& b : basis) {
            for (std::size_t ti = 0; ti < hs.size() && ok; ++ti) {
                const auto& t = hs[ti];
                Rat weight(0);
                if (t.part == 'd') {
                    auto theta = der_basis(zero_vec(e.n())).thetas[ti];
                    weight = theta_eval(theta, b.lambda);
                } else if (t.part == 'l') {
                    weight = e.model().root_on_diagonal(b.alpha, t.elem.l);
                }
                auto lhs = e.bracket(t.elem, b.elem);
                auto rhs = e.scale(b.elem, Cyc::of_rat(weight, e.m_order()));
                if (!e.equal(lhs, rhs)) {
                    ok = false;
                    wit = "ad(" + t.label + ") on " + b.label + " is not the weight " + rat_str(weight);
                }
            }
            if (!ok) break;
        }
        rep.add(ok ? CheckResult::ok("root-space-weights")
                   : CheckResult::fail("root-space-weights", wit));

        bool dims_ok = true;
        std::string wit_d;
        for (const auto& alpha : e.model().datum().nonzero_roots()) {
            for (const auto& lam : window_box(e.n(), opts.window)) {
                std::size_t expect = e.model().basis_at(alpha, lam).size();
                std::size_t got = e.root_space(lam, alpha).dim;
                bool support = e.model().lambda_support_contains(alpha, lam);
                if (got != expect || (support != (got == 1))) {
                    dims_ok = false;
                    wit_d = "root space at (" + vec_str(lam) + ", " + vec_str(alpha) + "): dim " +
                            std::to_string(got) + ", coordinate dim " + std::to_string(expect);
                    break;
                }
            }
            if (!dims_ok) break;
        }
        rep.add(dims_ok ? CheckResult::ok("root-spaces-match-coordinates")
                        : CheckResult::fail("root-spaces-match-coordinates", wit_d));
    }

    return rep;
}

struct ChiCheckOptions {
    long long window = 2;
    std::uint64_t seed = 0;
    std::size_t pair_cap = 20000;
};

/// Verifies chi as a Lie homomorphism and isometry that preserves the
/// Lambda-grading, maps H onto H^(s) basis-wise, and satisfies the
/// transported-cocycle identity sigma' = sigma_D + delta(kappa).
inline Report verify_chi(const ChiMap& chi, const ChiCheckOptions& opts = {}) {
    Report rep;
    rep.name = "chi(w=" + std::to_string(opts.window) + ")";
    const EalaSpace& e = chi.source();
    const EalaSpace& es = chi.target();
    auto basis = e.window(opts.window);
    const std::size_t nb = basis.size();

    std::vector<EalaElem> images;
    images.reserve(nb);
    for (const auto& b : basis) images.push_back(chi.apply(b.elem));

    { // Lie homomorphism
        bool ok = true;
        std::string wit;
        auto pairs = detail::sample_pairs(nb, opts.pair_cap, opts.seed);
        for (const auto& [i, j] : pairs) {
            auto lhs = chi.apply(e.bracket(basis[i].elem, basis[j].elem));
            auto rhs = es.bracket(images[i], images[j]);
            if (!es.equal(lhs, rhs)) {
                ok = false;
                wit = "chi[a,b] != [chi a, chi b] at a = " + basis[i].label + ", b = " +
                      basis[j].label;
                break;
            }
        }
        rep.add(ok ? CheckResult::ok("lie-homomorphism")
                   : CheckResult::fail("lie-homomorphism", wit));
    }

    { // isometry with global scalar exactly 1
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < nb && ok; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (e.form(basis[i].elem, basis[j].elem) != es.form(images[i], images[j])) {
                    ok = false;
                    wit = "form not preserved at " + basis[i].label + ", " + basis[j].label;
                    break;
                }
        rep.add(ok ? CheckResult::ok("isometry") : CheckResult::fail("isometry", wit));
    }

    { // grading: the (alpha,lambda) piece lands in the (alpha, lambda - s(alpha))
      // piece of E^(s); on D + L_0 + C the Lambda-degree is preserved on the nose
        bool ok = true;
        std::string wit;
        const auto& datum = e.model().datum();
        for (std::size_t i = 0; i < nb; ++i) {
            LatticeVec expected = vec_sub(basis[i].lambda, chi.shift().apply(datum, basis[i].alpha));
            auto decomp = es.lambda_decompose(images[i]);
            if (es.is_zero(images[i]) || decomp.size() != 1 || decomp.begin()->first != expected) {
                ok = false;
                wit = "image of " + basis[i].label + " is not homogeneous of degree " +
                      vec_str(expected);
                break;
            }
        }
        rep.add(ok ? CheckResult::ok("lambda-grading") : CheckResult::fail("lambda-grading", wit));
    }

    { // chi(H) = H^(s) basis-wise
        bool ok = true;
        std::string wit;
        auto hb = e.h_space();
        detail::CycSpan span;
        std::size_t rank = 0;
        for (const auto& t : hb) {
            EalaElem img = chi.apply(t.elem);
            // membership in H^s: d and c parts at degree 0, l part in h
            bool in_h = true;
            for (const auto& [g, v] : img.d)
                if (!vec_is_zero(g) &&
                    !std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); }))
                    in_h = false;
            for (const auto& [g, v] : img.c)
                if (!vec_is_zero(g) &&
                    !std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); }))
                    in_h = false;
            auto comp = es.model().graded_component(
                img.l, zero_vec(es.model().datum().ambient_dim()), zero_vec(e.n()));
            if (!(comp == img.l)) in_h = false;
            for (const auto& [ij, en] : img.l.entries())
                if (ij.first != ij.second) in_h = false;
                else if (!en.is_homogeneous() || (!en.is_zero() && !vec_is_zero(en.degree()))) in_h = false;
            if (!in_h) {
                ok = false;
                wit = "chi(" + t.label + ") leaves H^(s)";
                break;
            }
            // coordinates: D0 (n) + first r diagonal entries + C0 (n)
            std::vector<Cyc> coords;
            LatticeVec zero = zero_vec(e.n());
            auto dit = img.d.find(zero);
            for (std::size_t k = 0; k < e.der_dim(zero); ++k)
                coords.push_back(dit == img.d.end() ? Cyc::zero(e.m_order()) : dit->second[k]);
            for (int i = 0; i + 1 < es.model().matrix_size(); ++i)
                coords.push_back(img.l.entry(i, i).coeff(zero));
            auto cit = img.c.find(zero);
            for (std::size_t k = 0; k < e.der_dim(zero); ++k)
                coords.push_back(cit == img.c.end() ? Cyc::zero(e.m_order()) : cit->second[k]);
            if (!span.contains(coords)) {
                span.add(coords);
                ++rank;
            }
        }
        if (ok && rank != hb.size()) {
            ok = false;
            wit = "chi(H) has rank " + std::to_string(rank) + " < " + std::to_string(hb.size());
        }
        rep.add(ok ? CheckResult::ok("H-to-H") : CheckResult::fail("H-to-H", wit));
    }

    { // sigma' = sigma_D + delta(kappa) on window pairs of M = D (+) L
        bool ok = true;
        std::string wit;
        std::vector<std::size_t> mIdx;
        for (std::size_t i = 0; i < nb; ++i)
            if (basis[i].part != 'c') mIdx.push_back(i);
        for (std::size_t a = 0; a < mIdx.size() && ok; ++a)
            for (std::size_t b = 0; b < mIdx.size(); ++b) {
                const auto& m1 = basis[mIdx[a]];
                const auto& m2 = basis[mIdx[b]];
                // lhs: sigma_{D^s}(xi m1, xi m2) read back through psi-hat
                MatElem l1 = m1.elem.l + chi.omega(m1.elem.d);
                MatElem l2 = m2.elem.l + chi.omega(m2.elem.d);
                auto lhs = es.sigma(l1, l2);
                // rhs: sigma_D(l1,l2) + m2.kappa(m1) - m1.kappa(m2) - kappa([m1,m2])
                auto rhs = e.sigma(m1.elem.l, m2.elem.l);
                EalaElem acc = e.zero_elem();
                acc.c = rhs;
                EalaElem term = e.zero_elem();
                term.c = e.contragredient(m2.elem.d, chi.kappa(m1.elem));
                acc = e.add(acc, term);
                term.c = e.contragredient(m1.elem.d, chi.kappa(m2.elem));
                acc = e.sub(acc, term);
                EalaElem br = e.bracket(m1.elem, m2.elem);
                term.c = chi.kappa(br);
                acc = e.sub(acc, term);
                EalaElem lhs_elem = e.zero_elem();
                lhs_elem.c = lhs;
                if (!e.equal(lhs_elem, acc)) {
                    ok = false;
                    wit = "sigma' != sigma + delta(kappa) at " + m1.label + ", " + m2.label;
                    break;
                }
            }
        rep.add(ok ? CheckResult::ok("transported-cocycle")
                   : CheckResult::fail("transported-cocycle", wit));
    }

    return rep;
}

} // namespace lietorus
