#pragma once

#include <numeric>

#include "axioms.hpp"
#include "sl_model.hpp"

namespace lietorus {

/// Basis of the theta-slot of SCDer(L)^gamma: all of Hom(Lambda,k) for
/// gamma = 0, the hyperplane {theta : theta(gamma) = 0} otherwise.  The
/// hyperplane basis is the deterministic primitive choice
/// gamma_i e_j - gamma_j e_i (at the first index i with gamma_i != 0).
struct DerBasis {
    LatticeVec gamma;
    std::vector<std::vector<Rat>> thetas;

    std::size_t dim() const { return thetas.size(); }
};

inline Rat theta_eval(const std::vector<Rat>& theta, const LatticeVec& v) {
    Rat acc(0);
    for (std::size_t i = 0; i < theta.size(); ++i) acc += theta[i] * rat_of_ll(v[i]);
    return acc;
}

inline DerBasis der_basis(const LatticeVec& gamma) {
    const int n = static_cast<int>(gamma.size());
    DerBasis out{gamma, {}};
    if (vec_is_zero(gamma)) {
        for (int k = 0; k < n; ++k) {
            std::vector<Rat> theta(static_cast<std::size_t>(n), Rat(0));
            theta[static_cast<std::size_t>(k)] = 1;
            out.thetas.push_back(std::move(theta));
        }
        return out;
    }
    int i = 0;
    while (gamma[static_cast<std::size_t>(i)] == 0) ++i;
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        long long g = std::gcd(std::llabs(gamma[static_cast<std::size_t>(i)]),
                               std::llabs(gamma[static_cast<std::size_t>(j)]));
        if (g == 0) g = std::llabs(gamma[static_cast<std::size_t>(i)]);
        std::vector<Rat> theta(static_cast<std::size_t>(n), Rat(0));
        theta[static_cast<std::size_t>(j)] = rat_of_ll(gamma[static_cast<std::size_t>(i)] / g);
        theta[static_cast<std::size_t>(i)] = -rat_of_ll(gamma[static_cast<std::size_t>(j)] / g);
        out.thetas.push_back(std::move(theta));
    }
    return out;
}

/// Element of E = D (+) L (+) C in coordinates: the D-part maps a degree
/// gamma to coefficients over der_basis(gamma), the C-part maps a degree
/// delta to covector coordinates over der_basis(-delta).
struct EalaElem {
    std::map<LatticeVec, std::vector<Cyc>> d;
    MatElem l;
    std::map<LatticeVec, std::vector<Cyc>> c;
};

/// The extended affine Lie algebra E(L, SCDer(L), 0) = D (+) L (+) C over a
/// Lie torus model with an invariant graded form (sl_{r+1} over a group
/// algebra or a quantum torus), evaluated on bounded degree windows.
class EalaSpace {
public:
    explicit EalaSpace(SlModel model) : model_(std::move(model)) {
        const Torus& a = model_.coord();
        gamma_ = std::make_shared<const LatticeQuotient>(a.centroid_quotient());
        // the centroid basis must satisfy t^gamma t^delta = t^{gamma+delta};
        // for the shipped coordinate tori the canonical monomials do
        for (const auto& g1 : a.centroid_generators())
            for (const auto& g2 : a.centroid_generators())
                if (!a.structure(g1, g2).is_one())
                    throw std::domain_error(
                        "EalaSpace: centroid structure constants are not normalizable on "
                        "generators; no canonical k[Gamma] basis");
    }

    const SlModel& model() const { return model_; }
    int n() const { return model_.lambda_rank(); }
    int m_order() const { return model_.scalar_order(); }

    bool in_gamma(const LatticeVec& v) const { return gamma_->contains(v); }

    std::size_t der_dim(const LatticeVec& gamma) const {
        return vec_is_zero(gamma) ? static_cast<std::size_t>(n())
                                  : static_cast<std::size_t>(n() - 1);
    }

    // ---- element constructors ----

    EalaElem zero_elem() const { return {{}, model_.zero_elem(), {}}; }

    EalaElem d_elem(const LatticeVec& gamma, std::size_t k, const Cyc& coeff) const {
        check_gamma(gamma);
        EalaElem e = zero_elem();
        if (!coeff.is_zero() && k < der_dim(gamma)) {
            std::vector<Cyc> v(der_dim(gamma), Cyc::zero(m_order()));
            v[k] = coeff;
            e.d.emplace(gamma, std::move(v));
        }
        return e;
    }

    EalaElem l_elem(MatElem x) const {
        EalaElem e = zero_elem();
        e.l = std::move(x);
        return e;
    }

    EalaElem c_elem(const LatticeVec& delta, std::size_t k, const Cyc& coeff) const {
        check_gamma(vec_neg(delta));
        EalaElem e = zero_elem();
        if (!coeff.is_zero() && k < der_dim(vec_neg(delta))) {
            std::vector<Cyc> v(der_dim(vec_neg(delta)), Cyc::zero(m_order()));
            v[k] = coeff;
            e.c.emplace(delta, std::move(v));
        }
        return e;
    }

    // ---- linear structure ----

    EalaElem add(const EalaElem& a, const EalaElem& b) const {
        EalaElem r{a.d, a.l + b.l, a.c};
        merge_into(r.d, b.d, Cyc::one(m_order()));
        merge_into(r.c, b.c, Cyc::one(m_order()));
        return r;
    }
    EalaElem negate(const EalaElem& a) const { return scale(a, -Cyc::one(m_order())); }
    EalaElem sub(const EalaElem& a, const EalaElem& b) const { return add(a, negate(b)); }
    EalaElem scale(const EalaElem& a, const Cyc& s) const {
        EalaElem r = zero_elem();
        r.l = a.l.scaled(s);
        merge_into(r.d, a.d, s);
        merge_into(r.c, a.c, s);
        return r;
    }

    bool is_zero(const EalaElem& a) const {
        return a.l.is_zero() && coords_zero(a.d) && coords_zero(a.c);
    }
    bool equal(const EalaElem& a, const EalaElem& b) const { return is_zero(sub(a, b)); }

    std::string str(const EalaElem& a) const {
        std::string out;
        for (const auto& [g, v] : a.d)
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    out += (out.empty() ? "" : " + ") + ("(" + v[k].str() + ")*t^" + vec_str(g) +
                                                         "der[" + std::to_string(k) + "]");
        if (!a.l.is_zero()) out += (out.empty() ? "" : " + ") + a.l.str();
        for (const auto& [g, v] : a.c)
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    out += (out.empty() ? "" : " + ") + ("(" + v[k].str() + ")*c^" + vec_str(g) +
                                                         "[" + std::to_string(k) + "]");
        return out.empty() ? "0" : out;
    }

    // ---- degree derivations and the D-algebra ----

    /// partial_theta on a Lie torus element: theta(lambda) x on each
    /// Lambda-homogeneous component.
    MatElem degree_derivation_apply(const std::vector<Rat>& theta, const MatElem& x) const {
        MatElem out = model_.zero_elem();
        for (const auto& [lam, comp] : model_.lambda_decompose(x)) {
            Rat v = theta_eval(theta, lam);
            if (v != 0) out = out + comp.scaled(v);
        }
        return out;
    }

    /// Action of a D-part on a Lie torus element: sum of
    /// theta(lambda) t^gamma x^lambda.
    MatElem d_apply(const std::map<LatticeVec, std::vector<Cyc>>& d, const MatElem& x) const {
        MatElem out = model_.zero_elem();
        for (const auto& [gamma, coeffs] : d) {
            auto basis = der_basis(gamma);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                if (coeffs[k].is_zero()) continue;
                MatElem dx = degree_derivation_apply(basis.thetas[k], x);
                if (!dx.is_zero()) out = out + model_.centroid_mul(gamma, dx).scaled(coeffs[k]);
            }
        }
        return out;
    }

    /// Coordinates of a rational covector in der_basis(gamma); throws if the
    /// covector does not annihilate gamma.
    std::vector<Rat> theta_coords(const LatticeVec& gamma, const std::vector<Rat>& theta) const {
        auto basis = der_basis(gamma);
        if (theta_eval(theta, gamma) != 0)
            throw std::logic_error("theta_coords: covector is not skew at gamma");
        // solve sum_k x_k basis_k = theta: unknowns x_k, one equation per
        // coordinate
        const std::size_t rows = basis.dim(), cols = theta.size();
        std::vector<std::vector<Rat>> sys(cols, std::vector<Rat>(rows + 1, Rat(0)));
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t k = 0; k < rows; ++k) sys[j][k] = basis.thetas[k][j];
            sys[j][rows] = theta[j];
        }
        std::vector<Rat> x(rows, Rat(0));
        std::size_t row = 0;
        std::vector<long long> pivot_col(rows, -1);
        for (std::size_t k = 0; k < rows && row < cols; ++k) {
            std::size_t p = row;
            while (p < cols && sys[p][k] == 0) ++p;
            if (p == cols) continue;
            std::swap(sys[p], sys[row]);
            Rat inv = Rat(1) / sys[row][k];
            for (auto& v : sys[row]) v *= inv;
            for (std::size_t q = 0; q < cols; ++q) {
                if (q == row || sys[q][k] == 0) continue;
                Rat c = sys[q][k];
                for (std::size_t jj = 0; jj <= rows; ++jj) sys[q][jj] -= c * sys[row][jj];
            }
            pivot_col[k] = static_cast<long long>(row);
            ++row;
        }
        for (std::size_t k = 0; k < rows; ++k)
            if (pivot_col[k] >= 0) x[k] = sys[static_cast<std::size_t>(pivot_col[k])][rows];
        // consistency: residual rows must vanish
        for (std::size_t q = row; q < cols; ++q)
            if (sys[q][rows] != 0) throw std::logic_error("theta_coords: inconsistent system");
        return x;
    }

    /// eq. [t^{g1} d_{t1}, t^{g2} d_{t2}] = t^{g1+g2}(t1(g2) d_{t2} - t2(g1) d_{t1}),
    /// re-expressed in the der basis at g1+g2.
    std::map<LatticeVec, std::vector<Cyc>> bracket_dd(
        const std::map<LatticeVec, std::vector<Cyc>>& d1,
        const std::map<LatticeVec, std::vector<Cyc>>& d2) const {
        std::map<LatticeVec, std::vector<Cyc>> out;
        for (const auto& [g1, v1] : d1) {
            auto b1 = der_basis(g1);
            for (const auto& [g2, v2] : d2) {
                auto b2 = der_basis(g2);
                LatticeVec g = vec_add(g1, g2);
                for (std::size_t k1 = 0; k1 < v1.size(); ++k1) {
                    if (v1[k1].is_zero()) continue;
                    for (std::size_t k2 = 0; k2 < v2.size(); ++k2) {
                        if (v2[k2].is_zero()) continue;
                        Rat a = theta_eval(b1.thetas[k1], g2);  // theta1(gamma2)
                        Rat b = theta_eval(b2.thetas[k2], g1);  // theta2(gamma1)
                        std::vector<Rat> combo(static_cast<std::size_t>(n()), Rat(0));
                        for (std::size_t j = 0; j < combo.size(); ++j)
                            combo[j] = a * b2.thetas[k2][j] - b * b1.thetas[k1][j];
                        bool all_zero = std::all_of(combo.begin(), combo.end(),
                                                    [](const Rat& r) { return r == 0; });
                        if (all_zero) continue;
                        auto coords = theta_coords(g, combo);
                        add_coords(out, g, coords, v1[k1] * v2[k2]);
                    }
                }
            }
        }
        prune(out);
        return out;
    }

    /// Contragredient action (d.f)(e) = -f([d,e]).
    std::map<LatticeVec, std::vector<Cyc>> contragredient(
        const std::map<LatticeVec, std::vector<Cyc>>& d,
        const std::map<LatticeVec, std::vector<Cyc>>& c) const {
        std::map<LatticeVec, std::vector<Cyc>> out;
        for (const auto& [g1, v1] : d) {
            auto b1 = der_basis(g1);
            for (const auto& [delta, f] : c) {
                LatticeVec delta_out = vec_add(delta, g1);
                LatticeVec ge = vec_neg(delta_out); // degree of the test slot
                if (!in_gamma(ge)) continue;
                auto be = der_basis(ge);
                auto bfslot = der_basis(vec_neg(delta));
                for (std::size_t k1 = 0; k1 < v1.size(); ++k1) {
                    if (v1[k1].is_zero()) continue;
                    std::vector<Cyc> vals(der_dim(ge), Cyc::zero(m_order()));
                    bool nonzero = false;
                    for (std::size_t ke = 0; ke < be.dim(); ++ke) {
                        // [d, e] = t^{g1+ge}(theta(ge) theta_e - theta_e(g1) theta)
                        Rat a = theta_eval(b1.thetas[k1], ge);
                        Rat b = theta_eval(be.thetas[ke], g1);
                        std::vector<Rat> combo(static_cast<std::size_t>(n()), Rat(0));
                        for (std::size_t j = 0; j < combo.size(); ++j)
                            combo[j] = a * be.thetas[ke][j] - b * b1.thetas[k1][j];
                        bool all_zero = std::all_of(combo.begin(), combo.end(),
                                                    [](const Rat& r) { return r == 0; });
                        if (all_zero) continue;
                        auto coords = theta_coords(vec_neg(delta), combo);
                        Cyc acc = Cyc::zero(m_order());
                        for (std::size_t kf = 0; kf < f.size() && kf < coords.size(); ++kf)
                            if (!f[kf].is_zero() && coords[kf] != 0)
                                acc += Cyc::of_rat(coords[kf], m_order()) * f[kf];
                        if (!acc.is_zero()) {
                            vals[ke] = -(v1[k1] * acc);
                            nonzero = true;
                        }
                    }
                    if (nonzero) add_vector(out, delta_out, vals);
                }
            }
        }
        prune(out);
        return out;
    }

    /// sigma_D(x,y)(d) = (dx | y), as a C-element.
    std::map<LatticeVec, std::vector<Cyc>> sigma(const MatElem& x, const MatElem& y) const {
        std::map<LatticeVec, std::vector<Cyc>> out;
        auto xs = model_.lambda_decompose(x);
        auto ys = model_.lambda_decompose(y);
        for (const auto& [l1, xc] : xs)
            for (const auto& [l2, yc] : ys) {
                LatticeVec delta = vec_add(l1, l2);
                LatticeVec gamma = vec_neg(delta); // slot degree of the paired D-piece
                if (!in_gamma(gamma)) continue;
                auto basis = der_basis(gamma);
                std::vector<Cyc> vals(der_dim(gamma), Cyc::zero(m_order()));
                bool nonzero = false;
                for (std::size_t k = 0; k < basis.dim(); ++k) {
                    Rat tv = theta_eval(basis.thetas[k], l1);
                    if (tv == 0) continue;
                    Cyc v = model_.graded_form(model_.centroid_mul(gamma, xc), yc);
                    v = Cyc::of_rat(tv, m_order()) * v;
                    if (!v.is_zero()) {
                        vals[k] = v;
                        nonzero = true;
                    }
                }
                if (nonzero) add_vector(out, delta, vals);
            }
        prune(out);
        return out;
    }

    // ---- the algebra ----

    EalaElem bracket(const EalaElem& a, const EalaElem& b) const {
        EalaElem out = zero_elem();
        out.d = bracket_dd(a.d, b.d);
        out.l = model_.bracket(a.l, b.l) + d_apply(a.d, b.l) - d_apply(b.d, a.l);
        out.c = sigma(a.l, b.l);
        merge_map(out.c, contragredient(a.d, b.c), Cyc::one(m_order()));
        merge_map(out.c, contragredient(b.d, a.c), -Cyc::one(m_order()));
        return out;
    }

    Cyc form(const EalaElem& a, const EalaElem& b) const {
        Cyc out = model_.graded_form(a.l, b.l);
        out += pair_cd(a.c, b.d);
        out += pair_cd(b.c, a.d);
        return out;
    }

    /// sigma_D(x,y)(t^gamma der_k) as a scalar.
    Cyc sigma_value(const MatElem& x, const MatElem& y, const LatticeVec& gamma,
                    std::size_t k) const {
        auto c = sigma(x, y);
        auto it = c.find(vec_neg(gamma));
        if (it == c.end() || k >= it->second.size()) return Cyc::zero(m_order());
        return it->second[k];
    }

    /// The evaluation map ev(lambda)(d_theta) = theta(lambda) on the
    /// standard D_0 basis.
    std::vector<Rat> ev(const LatticeVec& lambda) const {
        auto basis = der_basis(zero_vec(n()));
        std::vector<Rat> out;
        for (const auto& th : basis.thetas) out.push_back(theta_eval(th, lambda));
        return out;
    }

    // ---- windows, spaces, reports ----

    struct WindowEntry {
        EalaElem elem;
        LatticeVec lambda;  // Lambda-degree in the model grading
        LatticeVec alpha;   // root (zero for D and C parts)
        char part;          // 'd', 'l' or 'c'
        std::string label;
    };

    std::vector<LatticeVec> gamma_window(long long w) const {
        std::vector<LatticeVec> out;
        for (const auto& v : window_box(n(), w))
            if (in_gamma(v)) out.push_back(v);
        return out;
    }

    std::vector<WindowEntry> window(long long w) const {
        std::vector<WindowEntry> out;
        for (const auto& g : gamma_window(w)) {
            for (std::size_t k = 0; k < der_dim(g); ++k)
                out.push_back({d_elem(g, k, Cyc::one(m_order())), g, zero_vec(model_.datum().ambient_dim()),
                               'd', "D^" + vec_str(g) + "[" + std::to_string(k) + "]"});
        }
        for (auto& b : window_basis(model_, w))
            out.push_back({l_elem(b.elem), b.lambda, b.alpha, 'l', b.label});
        for (const auto& g : gamma_window(w)) {
            LatticeVec delta = vec_neg(g);
            for (std::size_t k = 0; k < der_dim(g); ++k)
                out.push_back({c_elem(delta, k, Cyc::one(m_order())), delta,
                               zero_vec(model_.datum().ambient_dim()), 'c',
                               "C^" + vec_str(delta) + "[" + std::to_string(k) + "]"});
        }
        return out;
    }

    struct RootSpace {
        std::size_t dim = 0;
        std::vector<std::string> labels;
    };

    /// E_{lambda+alpha} = L_alpha^lambda for alpha != 0; for alpha = 0 the
    /// space D_lambda (+) L_0^lambda (+) C_lambda (H itself at lambda = 0).
    RootSpace root_space(const LatticeVec& lambda, const LatticeVec& alpha) const {
        RootSpace out;
        if (!vec_is_zero(alpha)) {
            auto basis = model_.basis_at(alpha, lambda);
            out.dim = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k)
                out.labels.push_back("L[" + vec_str(alpha) + "]^" + vec_str(lambda));
            return out;
        }
        if (in_gamma(lambda)) {
            for (std::size_t k = 0; k < der_dim(lambda); ++k) out.labels.push_back("D");
            for (std::size_t k = 0; k < der_dim(vec_neg(lambda)); ++k) out.labels.push_back("C");
            out.dim += der_dim(lambda) + der_dim(vec_neg(lambda));
        }
        auto zero_basis = model_.basis_at(zero_vec(model_.datum().ambient_dim()), lambda);
        out.dim += zero_basis.size();
        for (std::size_t k = 0; k < zero_basis.size(); ++k) out.labels.push_back("L0");
        return out;
    }

    /// H = D_0 (+) h (+) C_0 as window entries.
    std::vector<WindowEntry> h_space() const {
        std::vector<WindowEntry> out;
        LatticeVec zero = zero_vec(n());
        LatticeVec zroot = zero_vec(model_.datum().ambient_dim());
        for (std::size_t k = 0; k < der_dim(zero); ++k)
            out.push_back({d_elem(zero, k, Cyc::one(m_order())), zero, zroot, 'd',
                           "D0[" + std::to_string(k) + "]"});
        auto hb = model_.h_basis();
        for (std::size_t k = 0; k < hb.size(); ++k)
            out.push_back({l_elem(hb[k]), zero, zroot, 'l', "h[" + std::to_string(k) + "]"});
        for (std::size_t k = 0; k < der_dim(zero); ++k)
            out.push_back({c_elem(zero, k, Cyc::one(m_order())), zero, zroot, 'c',
                           "C0[" + std::to_string(k) + "]"});
        return out;
    }

    /// The core of E is L (+) C; membership means no D-part.
    bool core_membership(const EalaElem& e) const { return coords_zero(e.d); }

    std::map<LatticeVec, EalaElem> lambda_decompose(const EalaElem& e) const {
        std::map<LatticeVec, EalaElem> out;
        auto slot = [this, &out](const LatticeVec& lam) -> EalaElem& {
            auto [it, fresh] = out.try_emplace(lam, zero_elem());
            (void)fresh;
            return it->second;
        };
        for (const auto& [g, v] : e.d) slot(g).d.emplace(g, v);
        for (const auto& [lam, comp] : model_.lambda_decompose(e.l)) slot(lam).l = comp;
        for (const auto& [delta, v] : e.c) slot(delta).c.emplace(delta, v);
        return out;
    }

private:
    void check_gamma(const LatticeVec& g) const {
        if (!in_gamma(g))
            throw std::domain_error("EalaSpace: degree " + vec_str(g) +
                                    " is not in the centroidal grading group");
    }

    static void merge_into(std::map<LatticeVec, std::vector<Cyc>>& dst,
                           const std::map<LatticeVec, std::vector<Cyc>>& src, const Cyc& s) {
        for (const auto& [g, v] : src) {
            auto it = dst.find(g);
            if (it == dst.end()) {
                std::vector<Cyc> scaled;
                for (const auto& x : v) scaled.push_back(s * x);
                dst.emplace(g, std::move(scaled));
            } else {
                for (std::size_t k = 0; k < v.size(); ++k) it->second[k] += s * v[k];
            }
        }
        prune(dst);
    }
    void merge_map(std::map<LatticeVec, std::vector<Cyc>>& dst,
                   const std::map<LatticeVec, std::vector<Cyc>>& src, const Cyc& s) const {
        merge_into(dst, src, s);
    }

    static void prune(std::map<LatticeVec, std::vector<Cyc>>& m) {
        for (auto it = m.begin(); it != m.end();) {
            bool zero = std::all_of(it->second.begin(), it->second.end(),
                                    [](const Cyc& c) { return c.is_zero(); });
            it = zero ? m.erase(it) : std::next(it);
        }
    }

    static bool coords_zero(const std::map<LatticeVec, std::vector<Cyc>>& m) {
        for (const auto& [g, v] : m) {
            (void)g;
            for (const auto& c : v)
                if (!c.is_zero()) return false;
        }
        return true;
    }

    void add_coords(std::map<LatticeVec, std::vector<Cyc>>& dst, const LatticeVec& g,
                    const std::vector<Rat>& coords, const Cyc& scale) const {
        std::vector<Cyc> v(der_dim(g), Cyc::zero(m_order()));
        bool nonzero = false;
        for (std::size_t k = 0; k < coords.size() && k < v.size(); ++k)
            if (coords[k] != 0) {
                v[k] = Cyc::of_rat(coords[k], m_order()) * scale;
                nonzero = true;
            }
        if (nonzero) add_vector(dst, g, v);
    }

    static void add_vector(std::map<LatticeVec, std::vector<Cyc>>& dst, const LatticeVec& g,
                           const std::vector<Cyc>& v) {
        auto it = dst.find(g);
        if (it == dst.end())
            dst.emplace(g, v);
        else
            for (std::size_t k = 0; k < v.size(); ++k) it->second[k] += v[k];
    }

    Cyc pair_cd(const std::map<LatticeVec, std::vector<Cyc>>& c,
                const std::map<LatticeVec, std::vector<Cyc>>& d) const {
        Cyc out = Cyc::zero(m_order());
        for (const auto& [delta, f] : c) {
            auto it = d.find(vec_neg(delta));
            if (it == d.end()) continue;
            for (std::size_t k = 0; k < f.size() && k < it->second.size(); ++k)
                out += f[k] * it->second[k];
        }
        return out;
    }

    SlModel model_;
    std::shared_ptr<const LatticeQuotient> gamma_;
};

} // namespace lietorus
