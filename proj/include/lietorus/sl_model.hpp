#pragma once

#include <optional>

#include "matrix_elem.hpp"

namespace lietorus {

/// sl_{r+1}(A) for an associative torus A: matrices over A with trace in
/// [A,A], graded by Q(A_r) x Lambda via L_{eps_i-eps_j}^lambda = e_ij(A^lambda).
/// r = 1 is admitted for commutative A (the untwisted case g (x) k[Lambda]).
class SlModel {
public:
    using Element = MatElem;

    SlModel(Torus coord, int r) : SlModel(coord, r, ShiftHom::zero(r, coord.rank())) {}

    SlModel(Torus coord, int r, ShiftHom shift)
        : coord_(std::move(coord)), r_(r), datum_(RootDatum::type_a(r)), shift_(std::move(shift)) {
        if (r_ < 1) throw std::invalid_argument("SlModel: rank must be >= 1");
        if (coord_.flavor() != Flavor::associative)
            throw std::invalid_argument("SlModel: coordinates must be associative");
        if (!coord_.theta())
            throw std::invalid_argument("SlModel: coordinates need a quantum presentation");
        if (r_ == 1 && !coord_.commutative())
            throw std::invalid_argument("SlModel: rank 1 needs commutative coordinates");
        if (shift_.base_rank() != r_ || shift_.lambda_rank() != coord_.rank())
            throw std::invalid_argument("SlModel: shift has wrong shape");
    }

    std::string name() const {
        return "sl_" + std::to_string(r_ + 1) + "(" + coord_.kind() + ")" +
               (shift_.is_zero() ? "" : "^(s)");
    }

    const Torus& coord() const { return coord_; }
    int rank() const { return r_; }
    int matrix_size() const { return r_ + 1; }
    int lambda_rank() const { return coord_.rank(); }
    int scalar_order() const { return coord_.scalar_order(); }
    const RootDatum& datum() const { return datum_; }
    const ShiftHom& shift() const { return shift_; }

    SlModel shifted(const ShiftHom& s) const { return SlModel(coord_, r_, shift_ + s); }

    bool admissible(const ShiftHom& s) const {
        // Lambda_alpha = Lambda for every root of type A_r
        return s.base_rank() == r_ && s.lambda_rank() == lambda_rank();
    }

    bool lambda_support_contains(const LatticeVec& alpha, const LatticeVec&) const {
        if (!datum_.is_nonzero_root(alpha))
            throw std::domain_error("SlModel: lambda support asks for a nonzero root");
        return true;
    }
    std::string lambda_support_desc(const LatticeVec&) const { return "all of Lambda"; }

    bool central_degree(const LatticeVec& raw) const { return !commutator_degree_test(coord_, raw); }

    Element zero_elem() const { return MatElem(coord_, matrix_size()); }

    Element unit_matrix(int i, int j, const TorusElem& x) const {
        return MatElem::single(coord_, matrix_size(), i, j, x);
    }

    std::vector<Element> basis_at(const LatticeVec& alpha, const LatticeVec& lambda) const {
        std::vector<Element> out;
        if (vec_is_zero(alpha)) {
            TorusElem a = coord_.basis_elem(lambda);
            for (int i = 0; i + 1 < matrix_size(); ++i)
                out.push_back(unit_matrix(i, i, a) - unit_matrix(i + 1, i + 1, a));
            if (!central_degree(lambda)) out.push_back(unit_matrix(0, 0, a));
            return out;
        }
        if (!datum_.is_nonzero_root(alpha)) return out;
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        auto [i, j] = root_position(alpha);
        out.push_back(unit_matrix(i, j, coord_.basis_elem(raw)));
        return out;
    }

    Element graded_component(const Element& x, const LatticeVec& alpha,
                             const LatticeVec& lambda) const {
        Element out = zero_elem();
        if (vec_is_zero(alpha)) {
            for (const auto& [ij, e] : x.entries())
                if (ij.first == ij.second) {
                    Cyc c = e.coeff(lambda);
                    if (!c.is_zero())
                        out.add_to(ij.first, ij.second, coord_.basis_elem(lambda).scaled(c));
                }
            return out;
        }
        if (!datum_.is_nonzero_root(alpha)) return out;
        LatticeVec raw = vec_add(lambda, shift_.apply(datum_, alpha));
        if (!coord_.in_support(raw)) return out;
        auto [i, j] = root_position(alpha);
        Cyc c = x.entry(i, j).coeff(raw);
        if (!c.is_zero()) out.add_to(i, j, coord_.basis_elem(raw).scaled(c));
        return out;
    }

    Element bracket(const Element& a, const Element& b) const { return commutator(a, b); }

    bool elem_is_zero(const Element& x) const { return x.is_zero(); }
    bool elem_equal(const Element& a, const Element& b) const { return a == b; }
    std::string elem_str(const Element& x) const { return x.str(); }

    std::optional<Cyc> elem_ratio(const Element& x, const Element& y) const {
        // c with x = c*y, if any
        if (y.is_zero()) return x.is_zero() ? std::optional<Cyc>(Cyc::one(scalar_order())) : std::nullopt;
        const auto& [ij, e] = *y.entries().begin();
        const auto& [d, cy] = *e.terms().begin();
        Cyc cx = x.entry(ij.first, ij.second).coeff(d);
        Cyc c = cx * cy.inv();
        return x == y.scaled(c) ? std::optional<Cyc>(c) : std::nullopt;
    }

    bool in_model(const Element& x) const {
        if (x.size() != matrix_size()) return false;
        return trace_condition(x.trace());
    }

    /// trace(X) must lie in [A,A]: every central-degree component vanishes.
    bool trace_condition(const TorusElem& tr) const {
        for (const auto& [d, c] : tr.terms()) {
            (void)c;
            if (central_degree(d)) return false;
        }
        return true;
    }

    std::map<LatticeVec, Element> lambda_decompose(const Element& x) const {
        std::map<LatticeVec, Element> out;
        for (const auto& [ij, e] : x.entries()) {
            LatticeVec s = ij.first == ij.second
                               ? zero_vec(lambda_rank())
                               : shift_.apply(datum_, position_root(ij.first, ij.second));
            for (const auto& [d, c] : e.terms()) {
                LatticeVec lam = vec_sub(d, s);
                auto [it, fresh] = out.try_emplace(lam, zero_elem());
                (void)fresh;
                it->second.add_to(ij.first, ij.second, coord_.basis_elem(d).scaled(c));
            }
        }
        return out;
    }

    /// Coordinates of a (0,lambda)-homogeneous element: the diagonal
    /// coefficients at lambda.
    std::optional<std::vector<Cyc>> zero_part_coords(const Element& x, const LatticeVec& lambda) const {
        std::vector<Cyc> out;
        for (int i = 0; i < matrix_size(); ++i) out.push_back(x.entry(i, i).coeff(lambda));
        return out;
    }

    /// Centroid action of a_gamma (gamma a central degree): entrywise left
    /// multiplication.
    Element centroid_mul(const LatticeVec& gamma, const Element& x) const {
        TorusElem a = coord_.basis_elem(gamma);
        return x.map_entries([&a](const TorusElem& e) { return a * e; });
    }

    // ---- grading pair and invariant form ----

    /// Basis h_1, ..., h_r of the splitting Cartan subalgebra of g = L^0.
    std::vector<Element> h_basis() const {
        std::vector<Element> out;
        TorusElem one = coord_.unit();
        for (int i = 0; i + 1 < matrix_size(); ++i)
            out.push_back(unit_matrix(i, i, one) - unit_matrix(i + 1, i + 1, one));
        return out;
    }

    /// alpha(h) for h a scalar diagonal matrix, alpha in epsilon coordinates.
    Rat root_on_diagonal(const LatticeVec& alpha, const Element& h) const {
        Rat acc(0);
        LatticeVec zero = zero_vec(lambda_rank());
        for (int i = 0; i < matrix_size(); ++i) {
            Cyc c = h.entry(i, i).coeff(zero);
            if (!c.is_zero()) acc += rat_of_ll(alpha[static_cast<std::size_t>(i)]) * c.rational_value();
        }
        return acc;
    }

    /// Nondegenerate invariant graded form: the degree-0 coefficient of
    /// trace(XY).
    Cyc graded_form(const Element& x, const Element& y) const {
        return (x * y).trace().coeff(zero_vec(lambda_rank()));
    }

private:
    std::pair<int, int> root_position(const LatticeVec& alpha) const {
        int i = -1, j = -1;
        for (int k = 0; k < matrix_size(); ++k) {
            if (alpha[static_cast<std::size_t>(k)] == 1) i = k;
            if (alpha[static_cast<std::size_t>(k)] == -1) j = k;
        }
        return {i, j};
    }
    LatticeVec position_root(int i, int j) const {
        LatticeVec v = zero_vec(matrix_size());
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = -1;
        return v;
    }

    Torus coord_;
    int r_;
    RootDatum datum_;
    ShiftHom shift_;
};

} // namespace lietorus
