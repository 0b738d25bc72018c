#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "torus.hpp"

namespace lietorus {

struct AxiomOptions {
    long long window = 1;
    std::uint64_t seed = 0;
    std::size_t jacobi_samples = 300;
    std::size_t pair_cap = 20000; // full pair sweep below this, seeded sample above
};

template <class Model>
struct BasisEntry {
    LatticeVec alpha;
    LatticeVec lambda;
    typename Model::Element elem;
    std::string label;
};

/// All homogeneous basis (or spanning) elements with Lambda-degree in the
/// window box.
template <class Model>
std::vector<BasisEntry<Model>> window_basis(const Model& m, long long w) {
    std::vector<BasisEntry<Model>> out;
    std::vector<LatticeVec> alphas;
    alphas.push_back(zero_vec(m.datum().ambient_dim()));
    for (const auto& a : m.datum().nonzero_roots()) alphas.push_back(a);
    for (const auto& alpha : alphas)
        for (const auto& lam : window_box(m.lambda_rank(), w)) {
            auto basis = m.basis_at(alpha, lam);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                std::string label = "L[" + vec_str(alpha) + "]^" + vec_str(lam);
                if (basis.size() > 1) label += "#" + std::to_string(k);
                out.push_back({alpha, lam, std::move(basis[k]), std::move(label)});
            }
        }
    return out;
}

namespace detail {

/// Row space over the cyclotomic field, kept in reduced echelon form.
class CycSpan {
public:
    void add(std::vector<Cyc> v) {
        reduce(v);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                Cyc inv = v[i].inv();
                for (auto& x : v) x = inv * x;
                rows_.emplace_back(i, std::move(v));
                std::sort(rows_.begin(), rows_.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                return;
            }
    }

    bool contains(std::vector<Cyc> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); });
    }

private:
    void reduce(std::vector<Cyc>& v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            Cyc c = v[pivot];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - c * row[i];
        }
    }

    std::vector<std::pair<std::size_t, std::vector<Cyc>>> rows_;
};

inline std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n,
                                                                     std::size_t cap,
                                                                     std::uint64_t seed) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n == 0) return out;
    if (n * n <= cap) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
    } else {
        Rng rng(seed);
        out.reserve(cap);
        for (std::size_t k = 0; k < cap; ++k) out.emplace_back(rng.below(n), rng.below(n));
    }
    return out;
}

} // namespace detail

/// Window verification of the Lie torus axioms: root support, nonzero pieces
/// over 0, sl_2 pairs with the coroot-pairing action, generation, full
/// Lambda-support, plus antisymmetry / grading / Jacobi sweeps and a
/// centrelessness spot check.
template <class Model>
Report check_axioms(const Model& m, const AxiomOptions& opts = {}) {
    Report rep;
    rep.name = "axioms(" + m.name() + ", w=" + std::to_string(opts.window) + ")";
    const auto& datum = m.datum();
    auto basis = window_basis(m, opts.window);

    { // LT1: nothing lives over non-roots
        bool ok = true;
        std::string wit;
        LatticeVec nonroot = vec_scale(2, datum.base_root(1));
        for (const auto& lam : window_box(m.lambda_rank(), opts.window))
            if (!m.basis_at(nonroot, lam).empty()) {
                ok = false;
                wit = "nonzero piece at non-root " + vec_str(nonroot) + ", lambda " + vec_str(lam);
                break;
            }
        rep.add(ok ? CheckResult::ok("LT1-support-in-roots")
                   : CheckResult::fail("LT1-support-in-roots", wit));
    }

    { // LT2(i): L_alpha^0 != 0 for nonzero roots
        bool ok = true;
        std::string wit;
        for (const auto& alpha : datum.nonzero_roots())
            if (m.basis_at(alpha, zero_vec(m.lambda_rank())).empty()) {
                ok = false;
                wit = "L_alpha^0 = 0 at alpha = " + vec_str(alpha);
                break;
            }
        rep.add(ok ? CheckResult::ok("LT2i-zero-degree-pieces")
                   : CheckResult::fail("LT2i-zero-degree-pieces", wit));
    }

    { // LT2(ii) and eq. [[e,f],x] = <beta,alpha^vee> x
        bool ok = true;
        std::string wit;
        for (const auto& alpha : datum.nonzero_roots()) {
            for (const auto& lam : window_box(m.lambda_rank(), opts.window)) {
                auto es = m.basis_at(alpha, lam);
                if (es.empty()) continue;
                auto fs = m.basis_at(vec_neg(alpha), vec_neg(lam));
                if (fs.empty()) {
                    ok = false;
                    wit = "L_{-alpha}^{-lambda} empty opposite " + vec_str(alpha) + "," + vec_str(lam);
                    break;
                }
                const auto& e = es.front();
                const auto& f0 = fs.front();
                auto g = m.bracket(m.bracket(e, f0), e);
                auto ratio = m.elem_ratio(g, e);
                if (!ratio || ratio->is_zero()) {
                    ok = false;
                    wit = "[[e,f0],e] not a nonzero multiple of e at " + vec_str(alpha) + "," +
                          vec_str(lam);
                    break;
                }
                auto f = f0.scaled(Cyc::of_long(2, m.scalar_order()) * ratio->inv());
                auto h = m.bracket(e, f);
                for (const auto& x : basis) {
                    long long pairing = datum.coroot_pair(x.alpha, alpha);
                    auto lhs = m.bracket(h, x.elem);
                    auto rhs = x.elem.scaled(Cyc::of_long(pairing, m.scalar_order()));
                    if (!m.elem_equal(lhs, rhs)) {
                        ok = false;
                        wit = "pairing action fails: e at (" + vec_str(alpha) + "," + vec_str(lam) +
                              "), x = " + x.label + ", expected " + std::to_string(pairing) +
                              "*x, got " + m.elem_str(lhs);
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add(ok ? CheckResult::ok("LT2ii-sl2-pairs") : CheckResult::fail("LT2ii-sl2-pairs", wit));
    }

    { // LT3: the zero-root part is spanned by brackets of root spaces
        bool ok = true, decidable = true;
        std::string wit;
        for (const auto& lam : window_box(m.lambda_rank(), opts.window)) {
            auto targets = m.basis_at(zero_vec(datum.ambient_dim()), lam);
            if (targets.empty()) continue;
            auto coords0 = m.zero_part_coords(targets.front(), lam);
            if (!coords0) {
                decidable = false;
                break;
            }
            detail::CycSpan span;
            for (const auto& alpha : datum.nonzero_roots())
                for (const auto& mu : window_box(m.lambda_rank(), opts.window)) {
                    auto b1 = m.basis_at(alpha, mu);
                    auto b2 = m.basis_at(vec_neg(alpha), vec_sub(lam, mu));
                    if (b1.empty() || b2.empty()) continue;
                    auto br = m.bracket(b1.front(), b2.front());
                    auto proj = m.graded_component(br, zero_vec(datum.ambient_dim()), lam);
                    auto coords = m.zero_part_coords(proj, lam);
                    if (coords) span.add(std::move(*coords));
                }
            for (const auto& t : targets) {
                auto coords = m.zero_part_coords(t, lam);
                if (!span.contains(std::move(*coords))) {
                    ok = false;
                    wit = "zero-root piece at " + vec_str(lam) + " is not spanned by window brackets";
                    break;
                }
            }
            if (!ok) break;
        }
        if (!decidable)
            rep.add(CheckResult::ok("LT3-generation (structural: inner part consists of brackets)"));
        else
            rep.add(ok ? CheckResult::ok("LT3-generation") : CheckResult::fail("LT3-generation", wit));
    }

    { // LT4: the Lambda-support generates Lambda
        std::vector<LatticeVec> degrees;
        for (const auto& b : basis) degrees.push_back(b.lambda);
        bool ok = generates_full_lattice(degrees, m.lambda_rank());
        rep.add(ok ? CheckResult::ok("LT4-lambda-support-generates")
                   : CheckResult::fail("LT4-lambda-support-generates",
                                       "window support does not generate Lambda"));
    }

    { // LT5: every root of Delta is seen on the window
        bool ok = true;
        std::string wit;
        for (const auto& alpha : datum.nonzero_roots()) {
            bool seen = false;
            for (const auto& b : basis)
                if (b.alpha == alpha) {
                    seen = true;
                    break;
                }
            if (!seen) {
                ok = false;
                wit = "no window piece at root " + vec_str(alpha);
                break;
            }
        }
        rep.add(ok ? CheckResult::ok("LT5-full-root-support")
                   : CheckResult::fail("LT5-full-root-support", wit));
    }

    { // antisymmetry, grading compatibility and model closure on pairs
        bool anti = true, grading = true, closure = true;
        std::string wit_a, wit_g, wit_c;
        auto pairs = detail::sample_pairs(basis.size(), opts.pair_cap, opts.seed);
        for (const auto& [i, j] : pairs) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            auto ab = m.bracket(a.elem, b.elem);
            if (anti) {
                auto ba = m.bracket(b.elem, a.elem);
                if (!m.elem_is_zero(ab + ba)) {
                    anti = false;
                    wit_a = "[a,b] + [b,a] != 0 for a = " + a.label + ", b = " + b.label;
                }
            }
            if (grading) {
                LatticeVec alpha = vec_add(a.alpha, b.alpha);
                LatticeVec lam = vec_add(a.lambda, b.lambda);
                bool alpha_in_delta = vec_is_zero(alpha) || datum.is_nonzero_root(alpha);
                if (!alpha_in_delta) {
                    if (!m.elem_is_zero(ab)) {
                        grading = false;
                        wit_g = "bracket escapes Delta: a = " + a.label + ", b = " + b.label;
                    }
                } else if (!m.elem_equal(m.graded_component(ab, alpha, lam), ab)) {
                    grading = false;
                    wit_g = "bracket not homogeneous of degree (" + vec_str(alpha) + "," +
                            vec_str(lam) + "): a = " + a.label + ", b = " + b.label;
                }
            }
            if (closure && !m.in_model(ab)) {
                closure = false;
                wit_c = "bracket leaves the model: a = " + a.label + ", b = " + b.label;
            }
            if (!anti && !grading && !closure) break;
        }
        rep.add(anti ? CheckResult::ok("antisymmetry") : CheckResult::fail("antisymmetry", wit_a));
        rep.add(grading ? CheckResult::ok("grading-compatibility")
                        : CheckResult::fail("grading-compatibility", wit_g));
        rep.add(closure ? CheckResult::ok("model-closure") : CheckResult::fail("model-closure", wit_c));
    }

    { // Jacobi on seeded homogeneous triples
        bool ok = true;
        std::string wit;
        Rng rng(opts.seed + 1);
        for (std::size_t k = 0; k < opts.jacobi_samples && ok && !basis.empty(); ++k) {
            const auto& a = basis[rng.below(basis.size())];
            const auto& b = basis[rng.below(basis.size())];
            const auto& c = basis[rng.below(basis.size())];
            auto jac = m.bracket(m.bracket(a.elem, b.elem), c.elem) +
                       m.bracket(m.bracket(b.elem, c.elem), a.elem) +
                       m.bracket(m.bracket(c.elem, a.elem), b.elem);
            if (!m.elem_is_zero(jac)) {
                ok = false;
                wit = "Jacobi fails on (" + a.label + ", " + b.label + ", " + c.label +
                      "): sum = " + m.elem_str(jac);
            }
        }
        rep.add(ok ? CheckResult::ok("jacobi") : CheckResult::fail("jacobi", wit));
    }

    { // centrelessness spot check on the window
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            bool moves = false;
            for (const auto& g : basis)
                if (!m.elem_is_zero(m.bracket(a.elem, g.elem))) {
                    moves = true;
                    break;
                }
            if (!moves) {
                ok = false;
                wit = a.label + " brackets to zero with every window generator";
                break;
            }
        }
        rep.add(ok ? CheckResult::ok("centreless-window")
                   : CheckResult::fail("centreless-window", wit));
    }

    return rep;
}

} // namespace lietorus
