#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietorus {

using LatticeVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

inline LatticeVec vec_add(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline LatticeVec vec_sub(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline LatticeVec vec_neg(const LatticeVec& a) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline LatticeVec vec_scale(long long c, const LatticeVec& a) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline bool vec_is_zero(const LatticeVec& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}
inline long long vec_dot(const LatticeVec& a, const LatticeVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline LatticeVec zero_vec(int n) { return LatticeVec(static_cast<std::size_t>(n), 0); }
inline LatticeVec unit_vec(int n, int i) {
    LatticeVec v = zero_vec(n);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline std::string vec_str(const LatticeVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

/// Degree box [-w,w]^n in lexicographic order.
inline std::vector<LatticeVec> window_box(int n, long long w) {
    std::vector<LatticeVec> out;
    LatticeVec cur(static_cast<std::size_t>(n), -w);
    if (n == 0) return {LatticeVec{}};
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == w) {
            cur[static_cast<std::size_t>(i)] = -w;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Row echelon form over Z (Euclidean elimination); used for rank and
/// full-lattice generation tests.
inline IntMat integer_row_echelon(IntMat m) {
    const std::size_t rows = m.size();
    if (rows == 0) return m;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        while (true) {
            std::size_t piv = rank;
            long long best = 0;
            for (std::size_t i = rank; i < rows; ++i)
                if (m[i][c] != 0 && (best == 0 || std::llabs(m[i][c]) < best)) {
                    best = std::llabs(m[i][c]);
                    piv = i;
                }
            if (best == 0) break;
            std::swap(m[rank], m[piv]);
            bool reduced = true;
            for (std::size_t i = rank + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                long long q = m[i][c] / m[rank][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[rank][j];
                if (m[i][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        bool has_pivot = m[rank][c] != 0;
        if (has_pivot) {
            if (m[rank][c] < 0)
                for (std::size_t j = 0; j < cols; ++j) m[rank][j] = -m[rank][j];
            ++rank;
        }
    }
    m.resize(rank);
    return m;
}

/// True iff the given vectors generate all of Z^n as a group.
inline bool generates_full_lattice(const std::vector<LatticeVec>& vecs, int n) {
    if (n == 0) return true;
    IntMat m(vecs.begin(), vecs.end());
    auto ech = integer_row_echelon(std::move(m));
    if (static_cast<int>(ech.size()) != n) return false;
    long long det = 1;
    std::size_t col = 0;
    for (const auto& row : ech) {
        while (col < row.size() && row[col] == 0) ++col;
        if (col >= row.size()) return false;
        det *= row[col];
        ++col;
    }
    return det == 1 || det == -1;
}

/// Canonical representatives of Z^n modulo the subgroup spanned by `gens`,
/// via Smith-style diagonalization with tracked column transforms.
class LatticeQuotient {
public:
    LatticeQuotient(int n, std::vector<LatticeVec> gens) : n_(n), gens_(std::move(gens)) {
        for (const auto& g : gens_)
            if (static_cast<int>(g.size()) != n_)
                throw std::invalid_argument("LatticeQuotient: generator has wrong length");
        compute();
    }

    int rank() const { return n_; }
    const std::vector<LatticeVec>& generators() const { return gens_; }
    const std::vector<long long>& diagonal() const { return diag_; }

    /// Canonical representative of v + subgroup.
    LatticeVec canon(const LatticeVec& v) const {
        LatticeVec w = apply(q_, v);
        for (int i = 0; i < n_; ++i) {
            long long d = diag_[static_cast<std::size_t>(i)];
            if (d != 0) {
                long long& x = w[static_cast<std::size_t>(i)];
                x = ((x % d) + d) % d;
            }
        }
        return apply(qinv_, w);
    }

    bool contains(const LatticeVec& v) const { return vec_is_zero(canon(v)); }
    bool equivalent(const LatticeVec& a, const LatticeVec& b) const {
        return canon(a) == canon(b);
    }

    bool finite_index() const {
        return std::all_of(diag_.begin(), diag_.end(), [](long long d) { return d != 0; });
    }

    unsigned long long index() const {
        if (!finite_index()) throw std::domain_error("LatticeQuotient: infinite index");
        unsigned long long idx = 1;
        for (long long d : diag_) idx *= static_cast<unsigned long long>(d);
        return idx;
    }

    /// All coset representatives (finite index only), in canonical form.
    std::vector<LatticeVec> cosets() const {
        if (!finite_index()) throw std::domain_error("LatticeQuotient: infinite index");
        std::vector<LatticeVec> out;
        LatticeVec w = zero_vec(n_);
        while (true) {
            out.push_back(apply(qinv_, w));
            int i = n_ - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] + 1 >= diag_[static_cast<std::size_t>(i)]) {
                w[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
        return out;
    }

private:
    static LatticeVec apply(const IntMat& m, const LatticeVec& v) {
        const std::size_t n = m.size();
        LatticeVec r(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) r[j] += v[i] * m[i][j];
        return r;
    }

    void col_swap(IntMat& a, std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : q_) std::swap(row[i], row[j]);
        std::swap(qinv_[i], qinv_[j]);
    }
    void col_add(IntMat& a, std::size_t src, long long c, std::size_t dst) {
        // col_dst += c * col_src; inverse acts on rows of qinv_.
        for (auto& row : a) row[dst] += c * row[src];
        for (auto& row : q_) row[dst] += c * row[src];
        for (std::size_t j = 0; j < qinv_[src].size(); ++j) qinv_[src][j] -= c * qinv_[dst][j];
    }
    void col_negate(IntMat& a, std::size_t i) {
        for (auto& row : a) row[i] = -row[i];
        for (auto& row : q_) row[i] = -row[i];
        for (auto& x : qinv_[i]) x = -x;
    }

    void compute() {
        const std::size_t n = static_cast<std::size_t>(n_);
        IntMat a(gens_.begin(), gens_.end());
        q_.assign(n, LatticeVec(n, 0));
        qinv_.assign(n, LatticeVec(n, 0));
        for (std::size_t i = 0; i < n; ++i) q_[i][i] = qinv_[i][i] = 1;
        diag_.assign(n, 0);
        const std::size_t rows = a.size();
        std::size_t t = 0;
        for (; t < n && t < rows; ++t) {
            while (true) {
                // pivot = smallest nonzero entry of the trailing block
                std::size_t pi = t, pj = t;
                long long best = 0;
                for (std::size_t i = t; i < rows; ++i)
                    for (std::size_t j = t; j < n; ++j)
                        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                            best = std::llabs(a[i][j]);
                            pi = i;
                            pj = j;
                        }
                if (best == 0) break;
                std::swap(a[t], a[pi]);
                if (pj != t) col_swap(a, t, pj);
                bool clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (a[i][t] == 0) continue;
                    long long c = a[i][t] / a[t][t];
                    for (std::size_t j = 0; j < n; ++j) a[i][j] -= c * a[t][j];
                    if (a[i][t] != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a[t][j] == 0) continue;
                    long long c = a[t][j] / a[t][t];
                    col_add(a, t, -c, j);
                    if (a[t][j] != 0) clean = false;
                }
                if (clean) break;
            }
            if (a[t][t] == 0) break;
            if (a[t][t] < 0) col_negate(a, t);
            diag_[t] = a[t][t];
        }
        // remaining diagonal entries stay 0 (free directions)
    }

    int n_;
    std::vector<LatticeVec> gens_;
    IntMat q_, qinv_;
    std::vector<long long> diag_;
};

enum class RootType { A, C };

/// Root systems of types A_r and C_r in epsilon coordinates
/// (A_r inside Z^{r+1} sum-zero, C_r inside Z^r).
class RootDatum {
public:
    RootDatum(RootType type, int r) : type_(type), r_(r) {
        if (r < 1) throw std::invalid_argument("RootDatum: rank must be positive");
        if (type_ == RootType::C && r < 2)
            throw std::invalid_argument("RootDatum: type C needs rank >= 2");
    }

    static RootDatum type_a(int r) { return RootDatum(RootType::A, r); }
    static RootDatum type_c(int r) { return RootDatum(RootType::C, r); }

    RootType type() const { return type_; }
    int rank() const { return r_; }
    int ambient_dim() const { return type_ == RootType::A ? r_ + 1 : r_; }

    /// alpha_i = eps_i - eps_{i+1}; for C_r additionally alpha_r = 2 eps_r.
    LatticeVec base_root(int i) const {
        const int d = ambient_dim();
        if (i < 1 || i > r_) throw std::out_of_range("RootDatum: base index");
        LatticeVec v = zero_vec(d);
        if (type_ == RootType::C && i == r_) {
            v[static_cast<std::size_t>(r_ - 1)] = 2;
        } else {
            v[static_cast<std::size_t>(i - 1)] = 1;
            v[static_cast<std::size_t>(i)] = -1;
        }
        return v;
    }

    std::vector<LatticeVec> base() const {
        std::vector<LatticeVec> b;
        for (int i = 1; i <= r_; ++i) b.push_back(base_root(i));
        return b;
    }

    /// All nonzero roots.
    std::vector<LatticeVec> nonzero_roots() const {
        std::vector<LatticeVec> out;
        const int d = ambient_dim();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j) {
                    LatticeVec v = zero_vec(d);
                    v[static_cast<std::size_t>(i)] = 1;
                    v[static_cast<std::size_t>(j)] = -1;
                    out.push_back(v);
                }
        if (type_ == RootType::C) {
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) {
                    LatticeVec v = zero_vec(d);
                    v[static_cast<std::size_t>(i)] += 1;
                    v[static_cast<std::size_t>(j)] += 1;
                    out.push_back(v);
                    out.push_back(vec_neg(v));
                }
        }
        return out;
    }

    bool is_nonzero_root(const LatticeVec& v) const {
        if (static_cast<int>(v.size()) != ambient_dim()) return false;
        auto roots = nonzero_roots();
        return std::find(roots.begin(), roots.end(), v) != roots.end();
    }

    bool is_long_root(const LatticeVec& v) const {
        return type_ == RootType::C && is_nonzero_root(v) && vec_dot(v, v) == 4;
    }

    bool in_root_lattice(const LatticeVec& v) const {
        if (static_cast<int>(v.size()) != ambient_dim()) return false;
        long long s = std::accumulate(v.begin(), v.end(), 0LL);
        if (type_ == RootType::A) return s == 0;
        return s % 2 == 0;
    }

    /// Coordinates of beta in the base {alpha_1,...,alpha_r}.
    std::vector<long long> base_coords(const LatticeVec& beta) const {
        if (!in_root_lattice(beta))
            throw std::domain_error("RootDatum: vector not in the root lattice Q");
        std::vector<long long> c(static_cast<std::size_t>(r_), 0);
        long long acc = 0;
        if (type_ == RootType::A) {
            for (int i = 0; i < r_; ++i) {
                acc += beta[static_cast<std::size_t>(i)];
                c[static_cast<std::size_t>(i)] = acc;
            }
        } else {
            for (int i = 0; i < r_ - 1; ++i) {
                acc += beta[static_cast<std::size_t>(i)];
                c[static_cast<std::size_t>(i)] = acc;
            }
            acc += beta[static_cast<std::size_t>(r_ - 1)];
            c[static_cast<std::size_t>(r_ - 1)] = acc / 2;
        }
        return c;
    }

    /// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha).
    long long coroot_pair(const LatticeVec& beta, const LatticeVec& alpha) const {
        if (vec_is_zero(alpha)) throw std::domain_error("RootDatum: coroot of the zero root");
        long long num = 2 * vec_dot(beta, alpha);
        long long den = vec_dot(alpha, alpha);
        if (num % den != 0) throw std::domain_error("RootDatum: non-integral coroot pairing");
        return num / den;
    }

    LatticeVec reflect(const LatticeVec& beta, const LatticeVec& alpha) const {
        return vec_sub(beta, vec_scale(coroot_pair(beta, alpha), alpha));
    }

private:
    RootType type_;
    int r_;
};

/// Group homomorphism Q -> Lambda given by its values on the base.
class ShiftHom {
public:
    ShiftHom(std::vector<LatticeVec> images, int lambda_rank)
        : images_(std::move(images)), n_(lambda_rank) {
        for (const auto& v : images_)
            if (static_cast<int>(v.size()) != n_)
                throw std::invalid_argument("ShiftHom: image has wrong length");
    }

    static ShiftHom zero(int base_rank, int lambda_rank) {
        return ShiftHom(std::vector<LatticeVec>(static_cast<std::size_t>(base_rank),
                                                zero_vec(lambda_rank)),
                        lambda_rank);
    }

    int base_rank() const { return static_cast<int>(images_.size()); }
    int lambda_rank() const { return n_; }
    const LatticeVec& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<LatticeVec>& images() const { return images_; }

    bool is_zero() const {
        return std::all_of(images_.begin(), images_.end(), vec_is_zero);
    }

    /// Z-linear extension of the base values.
    LatticeVec apply(const RootDatum& datum, const LatticeVec& beta) const {
        if (datum.rank() != base_rank())
            throw std::invalid_argument("ShiftHom: rank mismatch with root datum");
        auto coords = datum.base_coords(beta);
        LatticeVec out = zero_vec(n_);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) out = vec_add(out, vec_scale(coords[i], images_[i]));
        return out;
    }

    ShiftHom operator+(const ShiftHom& o) const {
        check_compatible(o);
        std::vector<LatticeVec> im;
        for (std::size_t i = 0; i < images_.size(); ++i) im.push_back(vec_add(images_[i], o.images_[i]));
        return ShiftHom(std::move(im), n_);
    }
    ShiftHom operator-() const {
        std::vector<LatticeVec> im;
        for (const auto& v : images_) im.push_back(vec_neg(v));
        return ShiftHom(std::move(im), n_);
    }
    ShiftHom operator-(const ShiftHom& o) const { return *this + (-o); }

    friend bool operator==(const ShiftHom& a, const ShiftHom& b) {
        return a.n_ == b.n_ && a.images_ == b.images_;
    }

private:
    void check_compatible(const ShiftHom& o) const {
        if (o.n_ != n_ || o.images_.size() != images_.size())
            throw std::invalid_argument("ShiftHom: incompatible shapes");
    }

    std::vector<LatticeVec> images_;
    int n_;
};

/// Finite set of cosets modulo a subgroup, with the coset-sum invariant.
class CosetSet {
public:
    CosetSet(LatticeQuotient quotient, const std::vector<LatticeVec>& reps)
        : quotient_(std::move(quotient)) {
        for (const auto& r : reps) {
            LatticeVec c = quotient_.canon(r);
            if (std::find(reps_.begin(), reps_.end(), c) != reps_.end())
                throw std::invalid_argument("CosetSet: representatives not distinct mod subgroup");
            reps_.push_back(std::move(c));
        }
    }

    const LatticeQuotient& quotient() const { return quotient_; }
    const std::vector<LatticeVec>& representatives() const { return reps_; }
    std::size_t size() const { return reps_.size(); }

    /// Sum of all cosets, as a canonical representative.
    LatticeVec sum() const {
        LatticeVec s = zero_vec(quotient_.rank());
        for (const auto& r : reps_) s = vec_add(s, r);
        return quotient_.canon(s);
    }

private:
    LatticeQuotient quotient_;
    std::vector<LatticeVec> reps_;
};

} // namespace lietorus
