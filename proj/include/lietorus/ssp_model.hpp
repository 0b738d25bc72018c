#pragma once

#include <optional>

#include "matrix_elem.hpp"

namespace lietorus {

/// ssp_{2r}(A,iota) for an associative torus with involution: block matrices
/// [[X,Y],[Z,-Xbar^t]] with Ybar^t = Y, Zbar^t = Z and
/// trace(X) in A_+ + [A,A], graded by Q(C_r) x Lambda.
class SspModel {
public:
    using Element = MatElem;

    SspModel(Involution inv, int r)
        : SspModel(inv, r, ShiftHom::zero(r, inv.torus().rank())) {}

    SspModel(Involution inv, int r, ShiftHom shift)
        : inv_(std::move(inv)), r_(r), datum_(RootDatum::type_c(r)), shift_(std::move(shift)) {
        if (r_ < 2) throw std::invalid_argument("SspModel: rank must be >= 2");
        if (shift_.base_rank() != r_ || shift_.lambda_rank() != lambda_rank())
            throw std::invalid_argument("SspModel: shift has wrong shape");
    }

    std::string name() const {
        return "ssp_" + std::to_string(2 * r_) + "(" + coord().kind() + ")" +
               (shift_.is_zero() ? "" : "^(s)");
    }

    const Torus& coord() const { return inv_.torus(); }
    const Involution& involution() const { return inv_; }
    int rank() const { return r_; }
    int matrix_size() const { return 2 * r_; }
    int lambda_rank() const { return coord().rank(); }
    int scalar_order() const { return coord().scalar_order(); }
    const RootDatum& datum() const { return datum_; }
    const ShiftHom& shift() const { return shift_; }

    SspModel shifted(const ShiftHom& s) const {
        if (!admissible(s))
            throw std::domain_error("SspModel: inadmissible shift at alpha_" + std::to_string(r_) +
                                    ": s(alpha_r) = " + vec_str(s.image(r_)) +
                                    " is not a hermitian degree");
        return SspModel(inv_, r_, shift_ + s);
    }

    bool lambda_support_contains(const LatticeVec& alpha, const LatticeVec& lambda) const {
        if (!datum_.is_nonzero_root(alpha))
            throw std::domain_error("SspModel: lambda support asks for a nonzero root");
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        if (datum_.is_long_root(alpha)) return inv_.hermitian(raw);
        return true;
    }
    std::string lambda_support_desc(const LatticeVec& alpha) const {
        return datum_.is_long_root(alpha) ? "hermitian degrees Lambda_+" : "all of Lambda";
    }

    /// s is admissible iff the long base root lands on a hermitian degree.
    bool admissible(const ShiftHom& s) const {
        if (s.base_rank() != r_ || s.lambda_rank() != lambda_rank()) return false;
        LatticeVec long_image = vec_add(s.image(r_), shift_.apply(datum_, datum_.base_root(r_)));
        return inv_.hermitian(long_image);
    }

    Element zero_elem() const { return MatElem(coord(), matrix_size()); }

    std::vector<Element> basis_at(const LatticeVec& alpha, const LatticeVec& lambda) const {
        std::vector<Element> out;
        if (vec_is_zero(alpha)) {
            TorusElem a = coord().basis_elem(lambda);
            bool binding = central_degree(lambda) && !inv_.hermitian(lambda);
            if (binding) {
                for (int i = 0; i + 1 < r_; ++i) out.push_back(ell(i, i, a) - ell(i + 1, i + 1, a));
            } else {
                for (int i = 0; i < r_; ++i) out.push_back(ell(i, i, a));
            }
            return out;
        }
        if (!datum_.is_nonzero_root(alpha)) return out;
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        auto pos = classify_root(alpha);
        switch (pos.kind) {
            case RootKind::Short:
                out.push_back(ell(pos.i, pos.j, coord().basis_elem(raw)));
                break;
            case RootKind::PlusPair:
                out.push_back(m_elem(pos.i, pos.j, coord().basis_elem(raw)));
                break;
            case RootKind::MinusPair:
                out.push_back(n_elem(pos.i, pos.j, coord().basis_elem(raw)));
                break;
            case RootKind::PlusLong:
                if (inv_.hermitian(raw))
                    out.push_back(
                        MatElem::single(coord(), matrix_size(), pos.i, pos.i + r_, coord().basis_elem(raw)));
                break;
            case RootKind::MinusLong:
                if (inv_.hermitian(raw))
                    out.push_back(
                        MatElem::single(coord(), matrix_size(), pos.i + r_, pos.i, coord().basis_elem(raw)));
                break;
        }
        return out;
    }

    Element graded_component(const Element& x, const LatticeVec& alpha,
                             const LatticeVec& lambda) const {
        Element out = zero_elem();
        if (!vec_is_zero(alpha) && !datum_.is_nonzero_root(alpha)) return out;
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        if (!coord().in_support(raw)) return out;
        for (const auto& [ij, e] : x.entries()) {
            if (position_root(ij.first, ij.second) != alpha) continue;
            Cyc c = e.coeff(raw);
            if (!c.is_zero()) out.add_to(ij.first, ij.second, coord().basis_elem(raw).scaled(c));
        }
        return out;
    }

    Element bracket(const Element& a, const Element& b) const { return commutator(a, b); }

    bool elem_is_zero(const Element& x) const { return x.is_zero(); }
    bool elem_equal(const Element& a, const Element& b) const { return a == b; }
    std::string elem_str(const Element& x) const { return x.str(); }

    std::optional<Cyc> elem_ratio(const Element& x, const Element& y) const {
        if (y.is_zero()) return x.is_zero() ? std::optional<Cyc>(Cyc::one(scalar_order())) : std::nullopt;
        const auto& [ij, e] = *y.entries().begin();
        const auto& [d, cy] = *e.terms().begin();
        Cyc cx = x.entry(ij.first, ij.second).coeff(d);
        Cyc c = cx * cy.inv();
        return x == y.scaled(c) ? std::optional<Cyc>(c) : std::nullopt;
    }

    bool central_degree(const LatticeVec& raw) const { return !commutator_degree_test(coord(), raw); }

    bool in_model(const Element& x) const {
        if (x.size() != matrix_size()) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j) {
                // W = -Xbar^t, Ybar^t = Y, Zbar^t = Z
                if (x.entry(i + r_, j + r_) != -inv_.apply(x.entry(j, i))) return false;
                if (x.entry(i, j + r_) != inv_.apply(x.entry(j, i + r_))) return false;
                if (x.entry(i + r_, j) != inv_.apply(x.entry(j + r_, i))) return false;
            }
        // trace(X) in A_+ + [A,A]
        TorusElem tr = coord().zero_elem();
        for (int i = 0; i < r_; ++i) tr = tr + x.entry(i, i);
        for (const auto& [d, c] : tr.terms()) {
            (void)c;
            if (central_degree(d) && !inv_.hermitian(d)) return false;
        }
        return true;
    }

    std::optional<std::vector<Cyc>> zero_part_coords(const Element& x, const LatticeVec& lambda) const {
        // upper-left diagonal determines the lower-right one
        std::vector<Cyc> out;
        for (int i = 0; i < r_; ++i) out.push_back(x.entry(i, i).coeff(lambda));
        return out;
    }

    std::map<LatticeVec, Element> lambda_decompose(const Element& x) const {
        std::map<LatticeVec, Element> out;
        for (const auto& [ij, e] : x.entries()) {
            LatticeVec alpha = position_root(ij.first, ij.second);
            LatticeVec s = vec_is_zero(alpha) ? zero_vec(lambda_rank()) : shift_.apply(datum_, alpha);
            for (const auto& [d, c] : e.terms()) {
                LatticeVec lam = vec_sub(d, s);
                auto [it, fresh] = out.try_emplace(lam, zero_elem());
                (void)fresh;
                it->second.add_to(ij.first, ij.second, coord().basis_elem(d).scaled(c));
            }
        }
        return out;
    }

    // building blocks: l_ij(x) = x e_ij - xbar e_{j+r,i+r},
    // m_ij(x) = x e_{i,j+r} + xbar e_{j,i+r}, n_ij(x) = x e_{i+r,j} + xbar e_{j+r,i}
    Element ell(int i, int j, const TorusElem& x) const {
        Element out = zero_elem();
        out.add_to(i, j, x);
        out.add_to(j + r_, i + r_, -inv_.apply(x));
        return out;
    }
    Element m_elem(int i, int j, const TorusElem& x) const {
        Element out = zero_elem();
        out.add_to(i, j + r_, x);
        out.add_to(j, i + r_, inv_.apply(x));
        return out;
    }
    Element n_elem(int i, int j, const TorusElem& x) const {
        Element out = zero_elem();
        out.add_to(i + r_, j, x);
        out.add_to(j + r_, i, inv_.apply(x));
        return out;
    }

    LatticeVec position_root(int i, int j) const {
        LatticeVec v = zero_vec(r_);
        if (i < r_ && j < r_) {
            if (i != j) {
                v[static_cast<std::size_t>(i)] = 1;
                v[static_cast<std::size_t>(j)] -= 1;
            }
        } else if (i < r_ && j >= r_) {
            v[static_cast<std::size_t>(i)] += 1;
            v[static_cast<std::size_t>(j - r_)] += 1;
        } else if (i >= r_ && j < r_) {
            v[static_cast<std::size_t>(i - r_)] -= 1;
            v[static_cast<std::size_t>(j)] -= 1;
        } else {
            if (i != j) {
                v[static_cast<std::size_t>(j - r_)] = 1;
                v[static_cast<std::size_t>(i - r_)] -= 1;
            }
        }
        return v;
    }

private:
    enum class RootKind { Short, PlusPair, MinusPair, PlusLong, MinusLong };
    struct RootPos {
        RootKind kind;
        int i;
        int j;
    };

    RootPos classify_root(const LatticeVec& alpha) const {
        int plus2 = -1, minus2 = -1;
        std::vector<int> plus1, minus1;
        for (int k = 0; k < r_; ++k) {
            long long v = alpha[static_cast<std::size_t>(k)];
            if (v == 2) plus2 = k;
            if (v == -2) minus2 = k;
            if (v == 1) plus1.push_back(k);
            if (v == -1) minus1.push_back(k);
        }
        if (plus2 >= 0) return {RootKind::PlusLong, plus2, plus2};
        if (minus2 >= 0) return {RootKind::MinusLong, minus2, minus2};
        if (plus1.size() == 1 && minus1.size() == 1)
            return {RootKind::Short, plus1[0], minus1[0]};
        if (plus1.size() == 2) return {RootKind::PlusPair, plus1[0], plus1[1]};
        return {RootKind::MinusPair, minus1[0], minus1[1]};
    }

    Involution inv_;
    int r_;
    RootDatum datum_;
    ShiftHom shift_;
};

} // namespace lietorus
