#pragma once

#include <optional>

#include "torus.hpp"

namespace lietorus {

/// Element of TKK(A) = A_1 (+) V_{A,A} (+) A_{-1}: plus and minus parts are
/// torus elements, the inner part is a formal sum of operators V_{a_l, a_m}.
/// Inner sums have no canonical normal form; equality is decided by action
/// on a window of basis elements (see TkkModel::elem_is_zero).
struct TkkElem {
    using InnerMap = std::map<std::pair<LatticeVec, LatticeVec>, Cyc>;

    TorusElem plus;
    TorusElem minus;
    InnerMap inner;

    bool formally_zero() const { return plus.is_zero() && minus.is_zero() && inner.empty(); }

    void prune_inner() {
        for (auto it = inner.begin(); it != inner.end();)
            it = it->second.is_zero() ? inner.erase(it) : std::next(it);
    }

    friend TkkElem operator+(const TkkElem& a, const TkkElem& b) {
        TkkElem r{a.plus + b.plus, a.minus + b.minus, a.inner};
        for (const auto& [key, c] : b.inner) {
            auto it = r.inner.find(key);
            if (it == r.inner.end())
                r.inner.emplace(key, c);
            else
                it->second += c;
        }
        r.prune_inner();
        return r;
    }
    TkkElem operator-() const {
        TkkElem r{-plus, -minus, inner};
        for (auto& [key, c] : r.inner) c = -c;
        return r;
    }
    friend TkkElem operator-(const TkkElem& a, const TkkElem& b) { return a + (-b); }

    TkkElem scaled(const Cyc& s) const {
        TkkElem r{plus.scaled(s), minus.scaled(s), {}};
        if (!s.is_zero())
            for (const auto& [key, c] : inner) r.inner.emplace(key, s * c);
        return r;
    }

    std::string str() const {
        std::string out;
        if (!plus.is_zero()) out += "(" + plus.str() + ")_+";
        if (!inner.empty()) {
            for (const auto& [key, c] : inner) {
                if (!out.empty()) out += " + ";
                out += "(" + c.str() + ")*V[a" + vec_str(key.first) + ",a" + vec_str(key.second) + "]";
            }
        }
        if (!minus.is_zero()) {
            if (!out.empty()) out += " + ";
            out += "(" + minus.str() + ")_-";
        }
        return out.empty() ? "0" : out;
    }
};

/// TKK(A) for a Jordan torus A, a centreless Lie torus of type A_1.
class TkkModel {
public:
    using Element = TkkElem;

    explicit TkkModel(Torus coord, long long action_window = 1)
        : TkkModel(coord, ShiftHom::zero(1, coord.rank()), action_window) {}

    TkkModel(Torus coord, ShiftHom shift, long long action_window = 1)
        : coord_(std::move(coord)), datum_(RootDatum::type_a(1)), shift_(std::move(shift)),
          action_window_(action_window) {
        if (coord_.flavor() != Flavor::jordan)
            throw std::invalid_argument("TkkModel: coordinates must be a Jordan torus");
        if (shift_.base_rank() != 1 || shift_.lambda_rank() != coord_.rank())
            throw std::invalid_argument("TkkModel: shift has wrong shape");
        action_basis_ = coord_.support_window(action_window_);
    }

    std::string name() const {
        return "tkk(" + coord_.kind() + ")" + (shift_.is_zero() ? "" : "^(s)");
    }

    const Torus& coord() const { return coord_; }
    int lambda_rank() const { return coord_.rank(); }
    int scalar_order() const { return coord_.scalar_order(); }
    const RootDatum& datum() const { return datum_; }
    const ShiftHom& shift() const { return shift_; }
    long long action_window() const { return action_window_; }

    LatticeVec plus_root() const { return LatticeVec{1, -1}; }
    LatticeVec minus_root() const { return LatticeVec{-1, 1}; }

    TkkModel shifted(const ShiftHom& s) const {
        if (!admissible(s))
            throw std::domain_error("TkkModel: inadmissible shift at alpha_1: s(alpha_1) = " +
                                    vec_str(s.image(1)) + " is outside the coordinate support");
        return TkkModel(coord_, shift_ + s, action_window_);
    }

    bool lambda_support_contains(const LatticeVec& alpha, const LatticeVec& lambda) const {
        if (!datum_.is_nonzero_root(alpha))
            throw std::domain_error("TkkModel: lambda support asks for a nonzero root");
        return coord_.in_support(vec_add(lambda, shift_.apply(datum_, alpha)));
    }
    std::string lambda_support_desc(const LatticeVec&) const {
        return "S = " + coord_.support_desc();
    }

    bool admissible(const ShiftHom& s) const {
        if (s.base_rank() != 1 || s.lambda_rank() != lambda_rank()) return false;
        return lambda_support_contains(plus_root(), s.image(1));
    }

    Element zero_elem() const { return TkkElem{coord_.zero_elem(), coord_.zero_elem(), {}}; }
    Element plus_elem(TorusElem x) const { return TkkElem{std::move(x), coord_.zero_elem(), {}}; }
    Element minus_elem(TorusElem y) const { return TkkElem{coord_.zero_elem(), std::move(y), {}}; }
    Element inner_elem(const LatticeVec& l, const LatticeVec& m, const Cyc& c) const {
        TkkElem e = zero_elem();
        if (!c.is_zero()) e.inner.emplace(std::make_pair(l, m), c);
        return e;
    }

    /// (sum c V_{a_l,a_m}) x = sum c {a_l, a_m, x}.
    TorusElem apply_inner(const TkkElem::InnerMap& inner, const TorusElem& x) const {
        TorusElem out = coord_.zero_elem();
        for (const auto& [key, c] : inner)
            out = out +
                  jordan_triple(coord_.basis_elem(key.first), coord_.basis_elem(key.second), x).scaled(c);
        return out;
    }

    /// The involution V_{x,y} -> -V_{y,x} applied before acting.
    TorusElem apply_inner_star(const TkkElem::InnerMap& inner, const TorusElem& y) const {
        TorusElem out = coord_.zero_elem();
        for (const auto& [key, c] : inner)
            out = out -
                  jordan_triple(coord_.basis_elem(key.second), coord_.basis_elem(key.first), y).scaled(c);
        return out;
    }

    Element bracket(const Element& a, const Element& b) const {
        Element out = zero_elem();
        out.plus = apply_inner(a.inner, b.plus) - apply_inner(b.inner, a.plus);
        out.minus = apply_inner_star(a.inner, b.minus) - apply_inner_star(b.inner, a.minus);
        add_pairs(out.inner, a.plus, b.minus, Cyc::one(scalar_order()));
        add_pairs(out.inner, b.plus, a.minus, -Cyc::one(scalar_order()));
        // [V_{x,y}, V_{z,w}] = V_{{x,y,z},w} - V_{z,{y,x,w}}
        for (const auto& [k1, c1] : a.inner)
            for (const auto& [k2, c2] : b.inner) {
                Cyc c = c1 * c2;
                TorusElem t1 = jordan_triple(coord_.basis_elem(k1.first), coord_.basis_elem(k1.second),
                                             coord_.basis_elem(k2.first));
                for (const auto& [d, cd] : t1.terms()) add_pair(out.inner, d, k2.second, c * cd);
                TorusElem t2 = jordan_triple(coord_.basis_elem(k1.second), coord_.basis_elem(k1.first),
                                             coord_.basis_elem(k2.second));
                for (const auto& [d, cd] : t2.terms()) add_pair(out.inner, k2.first, d, -(c * cd));
            }
        out.prune_inner();
        return out;
    }

    /// Zero test; the inner part is compared by its action (and star action)
    /// on all basis elements in the action window.
    bool elem_is_zero(const Element& e) const {
        if (!e.plus.is_zero() || !e.minus.is_zero()) return false;
        if (e.inner.empty()) return true;
        for (const auto& mu : action_basis_) {
            TorusElem x = coord_.basis_elem(mu);
            if (!apply_inner(e.inner, x).is_zero()) return false;
            if (!apply_inner_star(e.inner, x).is_zero()) return false;
        }
        return true;
    }

    bool elem_equal(const Element& a, const Element& b) const { return elem_is_zero(a - b); }
    bool in_model(const Element&) const { return true; }
    std::string elem_str(const Element& e) const { return e.str(); }

    std::optional<Cyc> elem_ratio(const Element& x, const Element& y) const {
        Cyc c = Cyc::zero(scalar_order());
        if (!y.plus.is_zero()) {
            const auto& [d, cy] = *y.plus.terms().begin();
            c = x.plus.coeff(d) * cy.inv();
        } else if (!y.minus.is_zero()) {
            const auto& [d, cy] = *y.minus.terms().begin();
            c = x.minus.coeff(d) * cy.inv();
        } else if (!y.inner.empty()) {
            const auto& [key, cy] = *y.inner.begin();
            auto it = x.inner.find(key);
            if (it == x.inner.end()) return std::nullopt;
            c = it->second * cy.inv();
        } else {
            return elem_is_zero(x) ? std::optional<Cyc>(Cyc::one(scalar_order())) : std::nullopt;
        }
        return elem_equal(x, y.scaled(c)) ? std::optional<Cyc>(c) : std::nullopt;
    }

    std::vector<Element> basis_at(const LatticeVec& alpha, const LatticeVec& lambda) const {
        std::vector<Element> out;
        if (vec_is_zero(alpha)) {
            // spanning set of the window-visible part of L_0^lambda
            for (const auto& mu : action_basis_) {
                LatticeVec nu = vec_sub(lambda, mu);
                if (!coord_.in_support(nu)) continue;
                Element cand = inner_elem(mu, nu, Cyc::one(scalar_order()));
                if (!elem_is_zero(cand)) out.push_back(std::move(cand));
            }
            return out;
        }
        if (!datum_.is_nonzero_root(alpha)) return out;
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        if (!coord_.in_support(raw)) return out;
        if (alpha == plus_root()) out.push_back(plus_elem(coord_.basis_elem(raw)));
        else out.push_back(minus_elem(coord_.basis_elem(raw)));
        return out;
    }

    Element graded_component(const Element& e, const LatticeVec& alpha,
                             const LatticeVec& lambda) const {
        Element out = zero_elem();
        if (vec_is_zero(alpha)) {
            for (const auto& [key, c] : e.inner)
                if (vec_add(key.first, key.second) == lambda) out.inner.emplace(key, c);
            return out;
        }
        if (!datum_.is_nonzero_root(alpha)) return out;
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        if (alpha == plus_root()) {
            Cyc c = e.plus.coeff(raw);
            if (!c.is_zero()) out.plus = coord_.basis_elem(raw).scaled(c);
        } else {
            Cyc c = e.minus.coeff(raw);
            if (!c.is_zero()) out.minus = coord_.basis_elem(raw).scaled(c);
        }
        return out;
    }

    std::optional<std::vector<Cyc>> zero_part_coords(const Element&, const LatticeVec&) const {
        // no canonical coordinates on the inner part
        return std::nullopt;
    }

    std::map<LatticeVec, Element> lambda_decompose(const Element& e) const {
        std::map<LatticeVec, Element> out;
        auto slot = [this, &out](const LatticeVec& lam) -> Element& {
            auto [it, fresh] = out.try_emplace(lam, zero_elem());
            (void)fresh;
            return it->second;
        };
        LatticeVec s = shift_.apply(datum_, plus_root());
        for (const auto& [d, c] : e.plus.terms())
            slot(vec_sub(d, s)).plus = slot(vec_sub(d, s)).plus + coord_.basis_elem(d).scaled(c);
        for (const auto& [d, c] : e.minus.terms())
            slot(vec_add(d, s)).minus = slot(vec_add(d, s)).minus + coord_.basis_elem(d).scaled(c);
        for (const auto& [key, c] : e.inner)
            slot(vec_add(key.first, key.second)).inner.emplace(key, c);
        return out;
    }

private:
    static void add_pair(TkkElem::InnerMap& inner, const LatticeVec& l, const LatticeVec& m,
                         const Cyc& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(l, m);
        auto it = inner.find(key);
        if (it == inner.end())
            inner.emplace(std::move(key), c);
        else
            it->second += c;
    }

    void add_pairs(TkkElem::InnerMap& inner, const TorusElem& x, const TorusElem& y,
                   const Cyc& scale) const {
        for (const auto& [dx, cx] : x.terms())
            for (const auto& [dy, cy] : y.terms()) add_pair(inner, dx, dy, scale * cx * cy);
    }

    Torus coord_;
    RootDatum datum_;
    ShiftHom shift_;
    long long action_window_;
    std::vector<LatticeVec> action_basis_;
};

} // namespace lietorus
