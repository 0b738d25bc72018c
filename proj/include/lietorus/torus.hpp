#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "cyclotomic.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace lietorus {

enum class Flavor { associative, alternative, jordan };

inline std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::associative: return "associative";
        case Flavor::alternative: return "alternative";
        case Flavor::jordan: return "jordan";
    }
    return "?";
}

class TorusElem;

/// A Lambda-graded coordinate algebra with one-dimensional homogeneous
/// pieces: the product is determined by a structure function on the support,
/// a_lambda a_mu = c(lambda,mu) a_{lambda+mu}  (zero when lambda+mu is
/// outside the support).
class Torus {
public:
    struct Core {
        std::string kind;
        int n = 0;
        int m = 2;
        Flavor flavor = Flavor::associative;
        bool commutative = false;
        std::function<bool(const LatticeVec&)> in_support;
        std::function<Cyc(const LatticeVec&, const LatticeVec&)> structure;
        std::vector<LatticeVec> centroid_gens;
        std::string support_desc;
        // quantum-like kinds: exponent matrix theta with q_ij = zeta_m^theta_ij
        std::optional<IntMat> theta;
        std::shared_ptr<const Core> parent;
    };

    Torus() = default;
    explicit Torus(std::shared_ptr<const Core> core) : core_(std::move(core)) {}

    static Torus laurent(int n, int m = 2);
    static Torus quantum(int n, const std::vector<std::vector<Cyc>>& q, int m = 2);
    static Torus octonion(int extra_laurent = 0);
    static Torus spin(int n = 3);
    static Torus jordan_plus(int n, const std::vector<std::vector<Cyc>>& q, int m = 2);

    bool valid() const { return static_cast<bool>(core_); }
    int rank() const { return core_->n; }
    int scalar_order() const { return core_->m; }
    Flavor flavor() const { return core_->flavor; }
    bool commutative() const { return core_->commutative; }
    const std::string& kind() const { return core_->kind; }
    const std::string& support_desc() const { return core_->support_desc; }
    const std::vector<LatticeVec>& centroid_generators() const { return core_->centroid_gens; }
    const std::optional<IntMat>& theta() const { return core_->theta; }

    bool same(const Torus& o) const { return core_ == o.core_; }

    bool in_support(const LatticeVec& v) const {
        require_rank(v);
        return core_->in_support(v);
    }

    /// c(lambda,mu); zero when lambda+mu leaves the support.  Both arguments
    /// must lie in the support.
    Cyc structure(const LatticeVec& a, const LatticeVec& b) const {
        if (!in_support(a) || !in_support(b))
            throw std::domain_error("Torus: structure function argument outside the support");
        if (!core_->in_support(vec_add(a, b))) return Cyc::zero(core_->m);
        return core_->structure(a, b);
    }

    TorusElem basis_elem(const LatticeVec& v) const;
    TorusElem unit() const;
    TorusElem zero_elem() const;
    TorusElem elem(std::map<LatticeVec, Cyc> terms) const;

    /// a_lambda^{-1} in an associative or alternative torus.
    TorusElem basis_inverse(const LatticeVec& v) const;

    std::vector<LatticeVec> support_window(long long w) const {
        std::vector<LatticeVec> out;
        for (auto& v : window_box(core_->n, w))
            if (core_->in_support(v)) out.push_back(std::move(v));
        return out;
    }

    LatticeQuotient centroid_quotient() const {
        return LatticeQuotient(core_->n, core_->centroid_gens);
    }

    Torus opposite() const;
    /// Testing hook: negates the structure constant at exactly (a,b)
    /// (sets it to 1 if it was zero).
    Torus corrupted(const LatticeVec& a, const LatticeVec& b) const;

    const std::shared_ptr<const Core>& core() const { return core_; }

private:
    void require_rank(const LatticeVec& v) const {
        if (static_cast<int>(v.size()) != core_->n)
            throw std::invalid_argument("Torus: degree vector has wrong length");
    }

    std::shared_ptr<const Core> core_;
};

/// Element of a torus: a finite map degree -> scalar over the canonical
/// basis.  Zero coefficients are never stored.
class TorusElem {
public:
    TorusElem() = default;
    TorusElem(Torus parent, std::map<LatticeVec, Cyc> terms)
        : parent_(std::move(parent)), terms_(std::move(terms)) {
        prune();
    }

    const Torus& parent() const { return parent_; }
    const std::map<LatticeVec, Cyc>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const { return terms_.size() <= 1; }
    /// Degree of a nonzero homogeneous element.
    const LatticeVec& degree() const {
        if (terms_.size() != 1) throw std::domain_error("TorusElem: not homogeneous nonzero");
        return terms_.begin()->first;
    }
    Cyc leading_coeff() const {
        if (terms_.empty()) return Cyc::zero(parent_.scalar_order());
        return terms_.begin()->second;
    }

    Cyc coeff(const LatticeVec& v) const {
        auto it = terms_.find(v);
        return it == terms_.end() ? Cyc::zero(parent_.scalar_order()) : it->second;
    }

    friend bool operator==(const TorusElem& a, const TorusElem& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TorusElem& a, const TorusElem& b) { return !(a == b); }

    friend TorusElem operator+(const TorusElem& a, const TorusElem& b) {
        a.check_same_parent(b);
        auto terms = a.terms_;
        for (const auto& [d, c] : b.terms_) {
            auto it = terms.find(d);
            if (it == terms.end())
                terms.emplace(d, c);
            else
                it->second += c;
        }
        return TorusElem(a.parent_, std::move(terms));
    }

    TorusElem operator-() const {
        auto terms = terms_;
        for (auto& [d, c] : terms) c = -c;
        return TorusElem(parent_, std::move(terms));
    }
    friend TorusElem operator-(const TorusElem& a, const TorusElem& b) { return a + (-b); }

    TorusElem scaled(const Cyc& s) const {
        std::map<LatticeVec, Cyc> terms;
        for (const auto& [d, c] : terms_) terms.emplace(d, s * c);
        return TorusElem(parent_, std::move(terms));
    }
    TorusElem scaled(const Rat& s) const { return scaled(Cyc::of_rat(s, parent_.scalar_order())); }

    /// Bilinear extension of the basis law.
    friend TorusElem operator*(const TorusElem& a, const TorusElem& b) {
        a.check_same_parent(b);
        std::map<LatticeVec, Cyc> terms;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                Cyc s = a.parent_.structure(da, db);
                if (s.is_zero()) continue;
                LatticeVec d = vec_add(da, db);
                Cyc v = ca * cb * s;
                auto it = terms.find(d);
                if (it == terms.end())
                    terms.emplace(std::move(d), std::move(v));
                else
                    it->second += v;
            }
        return TorusElem(a.parent_, std::move(terms));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*a" << vec_str(d);
        }
        return os.str();
    }

private:
    void check_same_parent(const TorusElem& o) const {
        if (!parent_.same(o.parent_))
            throw std::domain_error("TorusElem: elements of incompatible tori");
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    Torus parent_;
    std::map<LatticeVec, Cyc> terms_;
};

inline TorusElem Torus::basis_elem(const LatticeVec& v) const {
    require_rank(v);
    if (!core_->in_support(v))
        throw std::domain_error("Torus: degree " + vec_str(v) + " is outside the support");
    std::map<LatticeVec, Cyc> t;
    t.emplace(v, Cyc::one(core_->m));
    return TorusElem(*this, std::move(t));
}

inline TorusElem Torus::unit() const { return basis_elem(zero_vec(core_->n)); }
inline TorusElem Torus::zero_elem() const { return TorusElem(*this, {}); }

inline TorusElem Torus::elem(std::map<LatticeVec, Cyc> terms) const {
    for (const auto& [d, c] : terms) {
        require_rank(d);
        (void)c;
        if (!core_->in_support(d))
            throw std::domain_error("Torus: degree " + vec_str(d) + " is outside the support");
    }
    return TorusElem(*this, std::move(terms));
}

inline TorusElem Torus::basis_inverse(const LatticeVec& v) const {
    if (core_->flavor == Flavor::jordan)
        throw std::domain_error("Torus: basis_inverse needs an associative or alternative torus");
    Cyc c = structure(v, vec_neg(v));
    if (c.is_zero()) throw std::domain_error("Torus: basis element is not invertible");
    return basis_elem(vec_neg(v)).scaled(c.inv());
}

// ---------------------------------------------------------------------------
// Shipped kinds

namespace detail {

inline std::vector<Cyc> zeta_powers(int m) {
    std::vector<Cyc> zp;
    Cyc z = Cyc::zeta(m), acc = Cyc::one(m);
    for (int i = 0; i < m; ++i) {
        zp.push_back(acc);
        acc *= z;
    }
    return zp;
}

inline long long mod_ll(long long x, long long m) { return ((x % m) + m) % m; }

/// Exponent matrix theta with q_ij = zeta_m^theta_ij; validates the quantum
/// matrix constraints.
inline IntMat quantum_exponents(int n, const std::vector<std::vector<Cyc>>& q, int m) {
    if (static_cast<int>(q.size()) != n)
        throw std::invalid_argument("quantum torus: q must be n x n");
    auto zp = zeta_powers(m);
    IntMat theta(static_cast<std::size_t>(n), LatticeVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(q[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("quantum torus: q must be n x n");
        for (int j = 0; j < n; ++j) {
            const Cyc& entry = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            long long e = -1;
            for (int k = 0; k < m; ++k)
                if (entry == zp[static_cast<std::size_t>(k)]) {
                    e = k;
                    break;
                }
            if (e < 0)
                throw std::invalid_argument(
                    "quantum torus: entry q[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] is not a root of unity of order dividing " + std::to_string(m));
            theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("quantum torus: q_ii must be 1");
        for (int j = 0; j < n; ++j)
            if (mod_ll(theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                           theta[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                       m) != 0)
                throw std::invalid_argument("quantum torus: q_ij must equal q_ji^{-1}");
    }
    return theta;
}

/// Central degrees of a quantum torus: the kernel lattice of
/// lambda -> theta * lambda (mod m).
inline std::vector<LatticeVec> quantum_central_degrees(const IntMat& theta, int n, int m) {
    // lambda in Gamma  iff  theta*lambda + m*mu = 0 has an integer solution mu.
    // Diagonalize the n x 2n system [theta | mI] with column transforms and
    // read the kernel off the free columns.
    const std::size_t rows = static_cast<std::size_t>(n), cols = 2 * rows;
    IntMat a(rows, LatticeVec(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < rows; ++j) a[i][j] = theta[i][j];
        a[i][rows + i] = m;
    }
    IntMat q(cols, LatticeVec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) q[i][i] = 1;
    std::vector<long long> diag(cols, 0);
    std::size_t t = 0;
    for (; t < cols && t < rows; ++t) {
        while (true) {
            std::size_t pi = t, pj = t;
            long long best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                        best = std::llabs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (best == 0) break;
            std::swap(a[t], a[pi]);
            if (pj != t) {
                for (auto& row : a) std::swap(row[t], row[pj]);
                for (auto& row : q) std::swap(row[t], row[pj]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                long long c = a[i][t] / a[t][t];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= c * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                long long c = a[t][j] / a[t][t];
                for (auto& row : a) row[j] -= c * row[t];
                for (auto& row : q) row[j] -= c * row[t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[t][t] == 0) break;
        diag[t] = a[t][t];
    }
    std::vector<LatticeVec> gens;
    for (std::size_t j = 0; j < cols; ++j) {
        if (j < rows && diag[j] != 0) continue;
        LatticeVec lambda(rows, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < rows; ++i) {
            lambda[i] = q[i][j];
            nonzero = nonzero || lambda[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(lambda));
    }
    return gens;
}

inline long long octonion_sign_exponent(const LatticeVec& a, const LatticeVec& b) {
    // kappa(i,j) = i3 j1 + i2 j1 + i3 j2 + i1 j2 j3 + i2 j1 j3 + i3 j1 j2 (mod 2)
    long long i1 = a[0] & 1, i2 = a[1] & 1, i3 = a[2] & 1;
    long long j1 = b[0] & 1, j2 = b[1] & 1, j3 = b[2] & 1;
    return (i3 * j1 + i2 * j1 + i3 * j2 + i1 * j2 * j3 + i2 * j1 * j3 + i3 * j1 * j2) & 1;
}

} // namespace detail

inline Torus Torus::quantum(int n, const std::vector<std::vector<Cyc>>& q, int m) {
    auto core = std::make_shared<Core>();
    core->kind = "quantum";
    core->n = n;
    core->m = m;
    core->flavor = Flavor::associative;
    auto theta = detail::quantum_exponents(n, q, m);
    core->commutative = true;
    for (const auto& row : theta)
        for (long long e : row)
            if (detail::mod_ll(e, m) != 0) core->commutative = false;
    core->in_support = [](const LatticeVec&) { return true; };
    auto zp = detail::zeta_powers(m);
    core->structure = [theta, zp, n, m](const LatticeVec& b, const LatticeVec& c) {
        // x^b x^c = prod_{i<j} q_ij^{b_j c_i} x^{b+c} in the normal order
        // x_1^{a_1} ... x_n^{a_n}.
        long long e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e += theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i)];
        return zp[static_cast<std::size_t>(detail::mod_ll(e, m))];
    };
    core->centroid_gens = detail::quantum_central_degrees(theta, n, m);
    core->theta = std::move(theta);
    core->support_desc = "all of Z^" + std::to_string(n);
    return Torus(std::move(core));
}

inline Torus Torus::laurent(int n, int m) {
    std::vector<std::vector<Cyc>> q(static_cast<std::size_t>(n),
                                    std::vector<Cyc>(static_cast<std::size_t>(n), Cyc::one(m)));
    auto t = quantum(n, q, m);
    auto core = std::make_shared<Core>(*t.core());
    core->kind = "laurent";
    return Torus(std::move(core));
}

inline Torus Torus::octonion(int extra_laurent) {
    if (extra_laurent < 0) throw std::invalid_argument("octonion torus: negative Laurent rank");
    const int n = 3 + extra_laurent;
    auto core = std::make_shared<Core>();
    core->kind = "octonion";
    core->n = n;
    core->m = 2;
    core->flavor = Flavor::alternative;
    core->commutative = false;
    core->in_support = [](const LatticeVec&) { return true; };
    core->structure = [](const LatticeVec& a, const LatticeVec& b) {
        return detail::octonion_sign_exponent(a, b) ? -Cyc::one(2) : Cyc::one(2);
    };
    // centre of the octonion part sits in even degrees; the Laurent part is
    // fully central
    for (int i = 0; i < 3; ++i) core->centroid_gens.push_back(vec_scale(2, unit_vec(n, i)));
    for (int i = 3; i < n; ++i) core->centroid_gens.push_back(unit_vec(n, i));
    core->support_desc = "all of Z^" + std::to_string(n);
    return Torus(std::move(core));
}

inline Torus Torus::spin(int n) {
    if (n < 2) throw std::invalid_argument("spin factor: rank must be >= 2");
    auto core = std::make_shared<Core>();
    core->kind = "spin";
    core->n = n;
    core->m = 2;
    core->flavor = Flavor::jordan;
    core->commutative = true;
    // vector-part degrees mod 2: e_1, ..., e_n and e_1 + ... + e_n
    auto vclass = [n](const LatticeVec& v) -> int {
        // -1: not in the support; 0: R part; 1..n+1: V part index
        int odd = 0, where = -1;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] & 1) {
                ++odd;
                where = i;
            }
        if (odd == 0) return 0;
        if (odd == 1) return where + 1;
        if (odd == n) return n + 1;
        return -1;
    };
    core->in_support = [vclass](const LatticeVec& v) { return vclass(v) >= 0; };
    core->structure = [vclass](const LatticeVec& a, const LatticeVec& b) {
        int ca = vclass(a), cb = vclass(b);
        // R.R, R.V, V.R and f(x_i,x_i) all carry coefficient 1; V_i.V_j for
        // i != j leaves the support and is handled by the support rule.
        if (ca > 0 && cb > 0 && ca != cb) return Cyc::zero(2);
        return Cyc::one(2);
    };
    for (int i = 0; i < n; ++i) core->centroid_gens.push_back(vec_scale(2, unit_vec(n, i)));
    core->support_desc = "2L u (2L+e_i, i=1..n) u (2L+e_1+...+e_n)";
    return Torus(std::move(core));
}

inline Torus Torus::jordan_plus(int n, const std::vector<std::vector<Cyc>>& q, int m) {
    Torus assoc = quantum(n, q, m);
    auto core = std::make_shared<Core>();
    core->kind = "jordan_plus";
    core->n = n;
    core->m = m;
    core->flavor = Flavor::jordan;
    core->commutative = true;
    core->in_support = [](const LatticeVec&) { return true; };
    auto base = assoc.core();
    Rat half(1, 2);
    core->structure = [base, half, m](const LatticeVec& a, const LatticeVec& b) {
        return Cyc::of_rat(half, m) * (base->structure(a, b) + base->structure(b, a));
    };
    core->centroid_gens = assoc.centroid_generators();
    core->theta = assoc.theta();
    core->support_desc = "all of Z^" + std::to_string(n);
    core->parent = base;
    return Torus(std::move(core));
}

inline Torus Torus::opposite() const {
    auto base = core_;
    auto core = std::make_shared<Core>(*base);
    core->kind = base->kind + "^op";
    core->structure = [base](const LatticeVec& a, const LatticeVec& b) {
        return base->structure(b, a);
    };
    core->parent = base;
    return Torus(std::move(core));
}

inline Torus Torus::corrupted(const LatticeVec& a, const LatticeVec& b) const {
    auto base = core_;
    auto core = std::make_shared<Core>(*base);
    core->kind = base->kind + "/corrupted";
    LatticeVec ca = a, cb = b;
    core->structure = [base, ca, cb](const LatticeVec& x, const LatticeVec& y) {
        Cyc v = base->structure(x, y);
        if (x == ca && y == cb) return v.is_zero() ? Cyc::one(base->m) : -v;
        return v;
    };
    core->parent = base;
    return Torus(std::move(core));
}

// ---------------------------------------------------------------------------
// Jordan operations and isotopes

/// {x,y,z} = 2((xy)z + (zy)x - (zx)y).
inline TorusElem jordan_triple(const TorusElem& x, const TorusElem& y, const TorusElem& z) {
    if (x.parent().flavor() != Flavor::jordan)
        throw std::domain_error("jordan_triple: parent torus is not Jordan");
    return ((x * y) * z + (z * y) * x - (z * x) * y).scaled(Rat(2));
}

/// U_u v = (1/2){u,v,u}.
inline TorusElem u_operator(const TorusElem& u, const TorusElem& v) {
    return jordan_triple(u, v, u).scaled(Rat(1, 2));
}

namespace detail {

/// Rescales the degree-0 basis vector of a derived torus so that a_0 is the
/// exact identity (the raw structure of an isotope has constant
/// c(0,.) = c(.,0) = c(0,0), a basis-choice artifact).
inline std::function<Cyc(const LatticeVec&, const LatticeVec&)> normalize_unit(
    std::function<Cyc(const LatticeVec&, const LatticeVec&)> raw, int n, int m) {
    Cyc c00 = raw(zero_vec(n), zero_vec(n));
    if (c00.is_zero())
        throw std::domain_error("isotope: degree-0 structure constant vanishes");
    (void)m;
    if (c00.is_one()) return raw;
    Cyc s0 = c00.inv();
    return [raw = std::move(raw), c00, s0](const LatticeVec& a, const LatticeVec& b) {
        Cyc v = raw(a, b);
        if (vec_is_zero(a)) v = s0 * v;
        if (vec_is_zero(b)) v = s0 * v;
        if (vec_is_zero(vec_add(a, b))) v = c00 * v;
        return v;
    };
}

} // namespace detail

/// u-isotope of a Jordan torus by a homogeneous element u (grading shifts by
/// rho = -deg u; the product becomes x . y = (1/2){x,u,y}).
inline Torus jordan_isotope(const Torus& t, const TorusElem& u) {
    if (t.flavor() != Flavor::jordan)
        throw std::domain_error("jordan_isotope: parent torus is not Jordan");
    if (u.is_zero() || !u.is_homogeneous())
        throw std::domain_error("jordan_isotope: u must be nonzero homogeneous");
    LatticeVec rho = vec_neg(u.degree());
    auto base = t.core();
    auto core = std::make_shared<Torus::Core>(*base);
    core->kind = base->kind + "^(u)";
    core->parent = base;
    Torus parent = t;
    TorusElem ucopy = u;
    core->in_support = [base, rho](const LatticeVec& v) {
        return base->in_support(vec_add(v, rho));
    };
    core->structure = detail::normalize_unit(
        [parent, ucopy, rho](const LatticeVec& a, const LatticeVec& b) {
            TorusElem x = parent.basis_elem(vec_add(a, rho));
            TorusElem y = parent.basis_elem(vec_add(b, rho));
            TorusElem z = jordan_triple(x, ucopy, y).scaled(Rat(1, 2));
            return z.coeff(vec_add(vec_add(a, b), rho));
        },
        base->n, base->m);
    core->support_desc = "(" + base->support_desc + ") - " + vec_str(rho);
    return Torus(std::move(core));
}

inline Torus jordan_isotope(const Torus& t, const LatticeVec& u_degree) {
    if (!t.in_support(u_degree))
        throw std::domain_error("jordan_isotope: u degree " + vec_str(u_degree) +
                                " is not invertible (outside the support)");
    return jordan_isotope(t, t.basis_elem(u_degree));
}

/// (u1,u2)-isotope of an alternative (or associative) torus:
/// x . y = (x u1)(u2 y), grading shifted by rho1 + rho2.
inline Torus alternative_isotope(const Torus& t, const LatticeVec& u1_degree,
                                 const LatticeVec& u2_degree) {
    if (t.flavor() == Flavor::jordan)
        throw std::domain_error("alternative_isotope: parent torus must be alternative or associative");
    TorusElem u1 = t.basis_elem(u1_degree), u2 = t.basis_elem(u2_degree);
    LatticeVec shift = vec_neg(vec_add(u1_degree, u2_degree)); // rho1 + rho2
    auto base = t.core();
    auto core = std::make_shared<Torus::Core>(*base);
    core->kind = base->kind + "^(u1,u2)";
    core->parent = base;
    Torus parent = t;
    core->in_support = [base, shift](const LatticeVec& v) {
        return base->in_support(vec_add(v, shift));
    };
    core->structure = detail::normalize_unit(
        [parent, u1, u2, shift](const LatticeVec& a, const LatticeVec& b) {
            TorusElem x = parent.basis_elem(vec_add(a, shift));
            TorusElem y = parent.basis_elem(vec_add(b, shift));
            TorusElem z = (x * u1) * (u2 * y);
            return z.coeff(vec_add(vec_add(a, b), shift));
        },
        base->n, base->m);
    return Torus(std::move(core));
}

// ---------------------------------------------------------------------------
// Involutions of associative tori with +-1 commutation signs

/// Graded involution iota(a_lambda) = e(lambda) a_lambda of a quantum torus
/// with q_ij = +-1; the sign function is the mod-2 quadratic form attached
/// to (q, e).
class Involution {
public:
    Involution(Torus t, std::vector<int> gen_signs) : t_(std::move(t)), e_(std::move(gen_signs)) {
        if (t_.flavor() != Flavor::associative)
            throw std::domain_error("Involution: torus must be associative");
        if (!t_.theta())
            throw std::domain_error("Involution: torus has no quantum presentation");
        const int n = t_.rank(), m = t_.scalar_order();
        if (static_cast<int>(e_.size()) != n)
            throw std::invalid_argument("Involution: sign vector has wrong length");
        for (int s : e_)
            if (s != 1 && s != -1) throw std::invalid_argument("Involution: signs must be +-1");
        const IntMat& th = *t_.theta();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long par = detail::mod_ll(th[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], m);
                if (par != 0 && 2 * par != m)
                    throw std::domain_error("Involution: q entries must be +-1");
                a_par_.push_back(par == 0 ? 0 : 1);
            }
    }

    const Torus& torus() const { return t_; }
    const std::vector<int>& gen_signs() const { return e_; }

    /// kappa(lambda mod 2) as a bit.
    int kappa_bit(const LatticeVec& v) const {
        const int n = t_.rank();
        long long acc = 0;
        for (int i = 0; i < n; ++i) {
            long long li = v[static_cast<std::size_t>(i)] & 1;
            if (e_[static_cast<std::size_t>(i)] == -1) acc += li;
            for (int j = i + 1; j < n; ++j)
                acc += li * (v[static_cast<std::size_t>(j)] & 1) * a_par(i, j);
        }
        return static_cast<int>(acc & 1);
    }

    int sign(const LatticeVec& v) const { return kappa_bit(v) ? -1 : 1; }
    bool hermitian(const LatticeVec& v) const { return sign(v) == 1; }

    /// Commutation parity: x_lambda x_mu = (-1)^{pairing} x_mu x_lambda.
    int commutation_bit(const LatticeVec& a, const LatticeVec& b) const {
        const int n = t_.rank();
        long long acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    acc += (a[static_cast<std::size_t>(i)] & 1) * (b[static_cast<std::size_t>(j)] & 1) *
                           a_par(i, j);
        return static_cast<int>(acc & 1);
    }

    TorusElem apply(const TorusElem& x) const {
        std::map<LatticeVec, Cyc> terms;
        for (const auto& [d, c] : x.terms())
            terms.emplace(d, sign(d) == 1 ? c : -c);
        return TorusElem(t_, std::move(terms));
    }

    /// iota^(h)(x) = h xbar h^{-1} for a hermitian homogeneous h; realized as
    /// the sign-vector update e_i -> e_i * (-1)^{kappa_p(e_i, mu)}.
    Involution isotope(const LatticeVec& h_degree) const {
        if (!hermitian(h_degree))
            throw std::domain_error("Involution: isotope element " + vec_str(h_degree) +
                                    " is not hermitian");
        std::vector<int> e2 = e_;
        const int n = t_.rank();
        for (int i = 0; i < n; ++i) {
            long long acc = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) acc += (h_degree[static_cast<std::size_t>(j)] & 1) * a_par(i, j);
            if (acc & 1) e2[static_cast<std::size_t>(i)] = -e2[static_cast<std::size_t>(i)];
        }
        return Involution(t_, std::move(e2));
    }

private:
    int a_par(int i, int j) const {
        return a_par_[static_cast<std::size_t>(i) * static_cast<std::size_t>(t_.rank()) +
                      static_cast<std::size_t>(j)];
    }

    Torus t_;
    std::vector<int> e_;
    std::vector<int> a_par_;
};

// ---------------------------------------------------------------------------
// Window checks

/// Flavor laws, unit law, support symmetry and invertibility, swept over the
/// degree box [-w,w]^n.
inline Report check_flavor_laws(const Torus& t, long long w) {
    Report rep;
    rep.name = "flavor-laws(" + t.kind() + ", w=" + std::to_string(w) + ")";
    auto supp = t.support_window(w);

    {
        bool ok = true;
        std::string wit;
        LatticeVec zero = zero_vec(t.rank());
        for (const auto& v : supp) {
            if (!t.in_support(vec_neg(v))) {
                ok = false;
                wit = "-S != S at " + vec_str(v);
                break;
            }
            if (!(t.structure(zero, v).is_one() && t.structure(v, zero).is_one())) {
                ok = false;
                wit = "unit law fails at " + vec_str(v);
                break;
            }
        }
        rep.add(ok ? CheckResult::ok("unit-and-symmetry") : CheckResult::fail("unit-and-symmetry", wit));
    }

    {
        bool ok = true;
        std::string wit;
        if (t.flavor() == Flavor::jordan) {
            for (const auto& v : supp) {
                TorusElem a = t.basis_elem(v);
                bool inv_ok = true;
                for (const auto& u : supp) {
                    LatticeVec target = vec_add(vec_add(v, v), u);
                    if (!t.in_support(target)) continue;
                    if (u_operator(a, t.basis_elem(u)).is_zero()) {
                        inv_ok = false;
                        wit = "U_{a" + vec_str(v) + "} kills a" + vec_str(u);
                        break;
                    }
                }
                if (!inv_ok) {
                    ok = false;
                    break;
                }
            }
        } else {
            for (const auto& v : supp)
                if (t.structure(v, vec_neg(v)).is_zero()) {
                    ok = false;
                    wit = "c(lambda,-lambda) = 0 at " + vec_str(v);
                    break;
                }
        }
        rep.add(ok ? CheckResult::ok("invertibility") : CheckResult::fail("invertibility", wit));
    }

    {
        bool ok = true;
        std::string wit;
        switch (t.flavor()) {
            case Flavor::associative: {
                for (const auto& a : supp) {
                    TorusElem xa = t.basis_elem(a);
                    for (const auto& b : supp) {
                        TorusElem xb = t.basis_elem(b);
                        TorusElem ab = xa * xb;
                        for (const auto& c : supp) {
                            TorusElem xc = t.basis_elem(c);
                            if (ab * xc != xa * (xb * xc)) {
                                ok = false;
                                wit = "associativity fails at " + vec_str(a) + "," + vec_str(b) + "," +
                                      vec_str(c);
                                break;
                            }
                        }
                        if (!ok) break;
                    }
                    if (!ok) break;
                }
                break;
            }
            case Flavor::alternative: {
                for (const auto& a : supp) {
                    TorusElem xa = t.basis_elem(a);
                    TorusElem aa = xa * xa;
                    for (const auto& b : supp) {
                        TorusElem xb = t.basis_elem(b);
                        if (xa * (xa * xb) != aa * xb) {
                            ok = false;
                            wit = "left alternative law fails at " + vec_str(a) + "," + vec_str(b);
                            break;
                        }
                        if ((xb * xa) * xa != xb * aa) {
                            ok = false;
                            wit = "right alternative law fails at " + vec_str(a) + "," + vec_str(b);
                            break;
                        }
                    }
                    if (!ok) break;
                }
                break;
            }
            case Flavor::jordan: {
                for (const auto& a : supp) {
                    TorusElem xa = t.basis_elem(a);
                    TorusElem aa = xa * xa;
                    for (const auto& b : supp) {
                        TorusElem xb = t.basis_elem(b);
                        if (xa * xb != xb * xa) {
                            ok = false;
                            wit = "commutativity fails at " + vec_str(a) + "," + vec_str(b);
                            break;
                        }
                        if (aa * (xa * xb) != xa * (aa * xb)) {
                            ok = false;
                            wit = "Jordan identity fails at " + vec_str(a) + "," + vec_str(b);
                            break;
                        }
                    }
                    if (!ok) break;
                }
                break;
            }
        }
        rep.add(ok ? CheckResult::ok(flavor_name(t.flavor()) + "-law")
                   : CheckResult::fail(flavor_name(t.flavor()) + "-law", wit));
    }

    {
        bool gen = generates_full_lattice(supp, t.rank());
        rep.add(gen ? CheckResult::ok("support-generates-lattice")
                    : CheckResult::fail("support-generates-lattice",
                                        "window support does not generate Z^n"));
    }

    return rep;
}

/// Antiautomorphism, period 2 and grading preservation on all window pairs.
inline Report check_involution(const Involution& inv, long long w) {
    Report rep;
    rep.name = "involution(w=" + std::to_string(w) + ")";
    const Torus& t = inv.torus();
    auto supp = t.support_window(w);
    bool anti = true, period = true;
    std::string wit_a, wit_p;
    for (const auto& a : supp) {
        TorusElem xa = t.basis_elem(a);
        if (inv.apply(inv.apply(xa)) != xa) {
            period = false;
            wit_p = "iota^2 != id at " + vec_str(a);
        }
        for (const auto& b : supp) {
            TorusElem xb = t.basis_elem(b);
            if (inv.apply(xa * xb) != inv.apply(xb) * inv.apply(xa)) {
                anti = false;
                wit_a = "iota(xy) != iota(y)iota(x) at " + vec_str(a) + "," + vec_str(b);
                break;
            }
        }
        if (!anti) break;
    }
    rep.add(anti ? CheckResult::ok("antiautomorphism") : CheckResult::fail("antiautomorphism", wit_a));
    rep.add(period ? CheckResult::ok("period-2") : CheckResult::fail("period-2", wit_p));
    return rep;
}

// ---------------------------------------------------------------------------
// Isotopy invariants

/// Is left multiplication by a_lambda a centroid element, judged on the
/// window: a_l (xy) = (a_l x) y = x (a_l y) for all window basis pairs.
inline bool centroidal_on_window(const Torus& t, const LatticeVec& lambda, long long w) {
    TorusElem al = t.basis_elem(lambda);
    auto supp = t.support_window(w);
    for (const auto& a : supp) {
        TorusElem xa = t.basis_elem(a);
        for (const auto& b : supp) {
            TorusElem xb = t.basis_elem(b);
            TorusElem lhs = al * (xa * xb);
            if (lhs != (al * xa) * xb) return false;
            if (lhs != xa * (al * xb)) return false;
        }
    }
    return true;
}

/// True iff A^lambda lies in [A,A]; for tori with 1-dimensional pieces this
/// holds exactly when a_lambda is non-central, decided against the
/// generators.
inline bool commutator_degree_test(const Torus& t, const LatticeVec& lambda) {
    if (t.flavor() != Flavor::associative)
        throw std::domain_error("commutator_degree_test: torus is not associative");
    const int n = t.rank();
    for (int i = 0; i < n; ++i) {
        LatticeVec ei = unit_vec(n, i);
        if (t.structure(lambda, ei) != t.structure(ei, lambda)) return true;
    }
    return false;
}

struct TorusInvariants {
    std::string support_desc;
    std::vector<LatticeVec> gamma_generators;
    bool finite = false;
    std::size_t coset_count = 0;
    LatticeVec sigma;                                    // Sigma(S/Gamma), canonical rep
    std::vector<std::pair<LatticeVec, bool>> centrality; // window degree -> centroidal
    Report crosscheck;                                   // closed form vs window sampling
};

inline TorusInvariants invariants(const Torus& t, long long w = 1) {
    TorusInvariants out;
    out.support_desc = t.support_desc();
    out.gamma_generators = t.centroid_generators();
    auto quot = t.centroid_quotient();
    out.crosscheck.name = "invariants(" + t.kind() + ")";

    if (quot.finite_index()) {
        std::vector<LatticeVec> in_s;
        for (const auto& rep : quot.cosets())
            if (t.in_support(rep)) in_s.push_back(rep);
        CosetSet cs(quot, in_s);
        out.finite = true;
        out.coset_count = cs.size();
        out.sigma = cs.sum();
    }

    bool agree = true;
    std::string wit;
    for (const auto& lambda : t.support_window(w)) {
        bool window_says = centroidal_on_window(t, lambda, w);
        bool closed_form = quot.contains(lambda);
        out.centrality.emplace_back(lambda, window_says);
        if (window_says != closed_form) {
            agree = false;
            wit = "degree " + vec_str(lambda) + ": closed form says " +
                  (closed_form ? "central" : "non-central") + ", window sampling disagrees";
        }
    }
    out.crosscheck.add(agree ? CheckResult::ok("centrality-closed-form-vs-window")
                             : CheckResult::fail("centrality-closed-form-vs-window", wit));
    return out;
}

/// Graded-algebra equality of two tori on a window: same support box and
/// identical structure coefficients.
inline Report compare_structures(const Torus& t1, const Torus& t2, long long w) {
    Report rep;
    rep.name = "structure-equality(w=" + std::to_string(w) + ")";
    if (t1.rank() != t2.rank() || t1.scalar_order() != t2.scalar_order()) {
        rep.add(CheckResult::fail("shape", "rank or scalar order differs"));
        return rep;
    }
    bool supp_ok = true, coeff_ok = true;
    std::string wit_s, wit_c;
    auto box = window_box(t1.rank(), w);
    for (const auto& v : box)
        if (t1.in_support(v) != t2.in_support(v)) {
            supp_ok = false;
            wit_s = "supports differ at " + vec_str(v);
            break;
        }
    if (supp_ok) {
        for (const auto& a : box) {
            if (!t1.in_support(a)) continue;
            for (const auto& b : box) {
                if (!t1.in_support(b)) continue;
                if (t1.structure(a, b) != t2.structure(a, b)) {
                    coeff_ok = false;
                    wit_c = "structure constants differ at (" + vec_str(a) + ", " + vec_str(b) +
                            "): " + t1.structure(a, b).str() + " vs " + t2.structure(a, b).str();
                    break;
                }
            }
            if (!coeff_ok) break;
        }
    }
    rep.add(supp_ok ? CheckResult::ok("support") : CheckResult::fail("support", wit_s));
    rep.add(coeff_ok ? CheckResult::ok("structure-constants")
                     : CheckResult::fail("structure-constants", wit_c));
    return rep;
}

} // namespace lietorus
