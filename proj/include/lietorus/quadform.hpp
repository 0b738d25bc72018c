#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "lattice.hpp"

namespace lietorus {

using BitVec = std::vector<int>;
using BitMat = std::vector<std::vector<int>>;

inline int quadform_capacity_bound() { return 5; }

inline BitVec bitvec_of(const LatticeVec& v) {
    BitVec b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = static_cast<int>(((v[i] % 2) + 2) % 2);
    return b;
}

inline BitVec bit_apply(const BitMat& m, const BitVec& v) {
    BitVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc ^= m[i][j] & v[j];
        r[i] = acc;
    }
    return r;
}

inline BitMat bit_identity(int n) {
    BitMat m(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

inline BitMat bit_mul(const BitMat& a, const BitMat& b) {
    const std::size_t n = a.size();
    BitMat r(n, BitVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) r[i][j] ^= b[k][j];
    return r;
}

inline std::optional<BitMat> bit_inverse(const BitMat& m) {
    const std::size_t n = m.size();
    BitMat a = m, inv = bit_identity(static_cast<int>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !a[piv][c]) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != c && a[i][c])
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] ^= a[c][j];
                    inv[i][j] ^= inv[c][j];
                }
    }
    return inv;
}

/// Quadratic form on (Z/2)^n: kappa(sum l_i e_i) = sum l_i b_i +
/// sum_{i<j} l_i l_j a_ij.
class QuadFormF2 {
public:
    explicit QuadFormF2(int n)
        : n_(n), b_(static_cast<std::size_t>(n), 0),
          a_(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n), 0)) {
        if (n < 0) throw std::invalid_argument("QuadFormF2: negative rank");
    }

    QuadFormF2(int n, BitVec b, BitMat a) : QuadFormF2(n) {
        if (static_cast<int>(b.size()) != n || static_cast<int>(a.size()) != n)
            throw std::invalid_argument("QuadFormF2: shape mismatch");
        for (int i = 0; i < n; ++i) {
            b_[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] & 1;
            if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n)
                throw std::invalid_argument("QuadFormF2: shape mismatch");
            for (int j = 0; j < n; ++j) {
                int bit = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1;
                if (j <= i && bit)
                    throw std::invalid_argument("QuadFormF2: matrix part must be strictly upper triangular");
                if (j > i) a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bit;
            }
        }
    }

    int rank() const { return n_; }
    const BitVec& linear_part() const { return b_; }
    const BitMat& upper_part() const { return a_; }

    int eval(const BitVec& v) const {
        if (static_cast<int>(v.size()) != n_)
            throw std::invalid_argument("QuadFormF2: vector length mismatch");
        int acc = 0;
        for (int i = 0; i < n_; ++i) {
            int li = v[static_cast<std::size_t>(i)] & 1;
            if (!li) continue;
            acc ^= b_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n_; ++j)
                acc ^= a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &
                       v[static_cast<std::size_t>(j)];
        }
        return acc;
    }

    /// kappa_p(u,v) = kappa(u+v) + kappa(u) + kappa(v); symmetric with zero
    /// diagonal, equal to the alternating part.
    BitMat polarization() const {
        BitMat p(static_cast<std::size_t>(n_), BitVec(static_cast<std::size_t>(n_), 0));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                int bit = a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bit;
                p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bit;
            }
        return p;
    }

    int polar_pair(const BitVec& u, const BitVec& v) const {
        BitVec sum(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) sum[i] = (u[i] ^ v[i]) & 1;
        return eval(sum) ^ eval(u) ^ eval(v);
    }

    /// Substituted form kappa(M v).
    QuadFormF2 pullback(const BitMat& m) const {
        QuadFormF2 out(n_);
        std::vector<BitVec> cols(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            BitVec ej(static_cast<std::size_t>(n_), 0);
            ej[static_cast<std::size_t>(j)] = 1;
            cols[static_cast<std::size_t>(j)] = bit_apply(m, ej);
        }
        for (int i = 0; i < n_; ++i)
            out.b_[static_cast<std::size_t>(i)] = eval(cols[static_cast<std::size_t>(i)]);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                BitVec s(static_cast<std::size_t>(n_));
                for (int k = 0; k < n_; ++k)
                    s[static_cast<std::size_t>(k)] = cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ^
                                                     cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                out.a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    eval(s) ^ out.b_[static_cast<std::size_t>(i)] ^ out.b_[static_cast<std::size_t>(j)];
            }
        return out;
    }

    friend bool operator==(const QuadFormF2& x, const QuadFormF2& y) {
        return x.n_ == y.n_ && x.b_ == y.b_ && x.a_ == y.a_;
    }
    friend bool operator!=(const QuadFormF2& x, const QuadFormF2& y) { return !(x == y); }

    std::uint64_t encode() const {
        std::uint64_t key = 0;
        int bit = 0;
        for (int i = 0; i < n_; ++i)
            key |= static_cast<std::uint64_t>(b_[static_cast<std::size_t>(i)]) << bit++;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                key |= static_cast<std::uint64_t>(a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                       << bit++;
        return key;
    }

    static QuadFormF2 decode(int n, std::uint64_t key) {
        QuadFormF2 f(n);
        int bit = 0;
        for (int i = 0; i < n; ++i) f.b_[static_cast<std::size_t>(i)] = (key >> bit++) & 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                f.a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (key >> bit++) & 1;
        return f;
    }

    /// Number of vectors with kappa(v) = 1; an isometry invariant used for
    /// search pruning.
    int value_count() const {
        int count = 0;
        for (std::uint64_t x = 0; x < (1ULL << n_); ++x) {
            BitVec v(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = (x >> i) & 1;
            count += eval(v);
        }
        return count;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["n"] = n_;
        j["b"] = b_;
        j["a"] = a_;
        return j;
    }

    static QuadFormF2 from_json(const nlohmann::json& j) {
        int n = j.at("n").get<int>();
        return QuadFormF2(n, j.at("b").get<BitVec>(), j.at("a").get<BitMat>());
    }

private:
    int n_;
    BitVec b_;
    BitMat a_;
};

/// kappa for (k_q, iota_e) with q_ij = +-1: b_i from e_i = (-1)^{b_i},
/// a_ij from q_ij = (-1)^{a_ij}.
inline QuadFormF2 quadform_from_torus(const std::vector<std::vector<int>>& q,
                                      const std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    if (static_cast<int>(q.size()) != n)
        throw std::invalid_argument("quadform_from_torus: shape mismatch");
    QuadFormF2 out(n);
    BitVec b(static_cast<std::size_t>(n), 0);
    BitMat a(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        if (e[static_cast<std::size_t>(i)] == -1)
            b[static_cast<std::size_t>(i)] = 1;
        else if (e[static_cast<std::size_t>(i)] != 1)
            throw std::invalid_argument("quadform_from_torus: e entries must be +-1");
        if (static_cast<int>(q[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("quadform_from_torus: shape mismatch");
        for (int j = 0; j < n; ++j) {
            int qij = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (qij != 1 && qij != -1)
                throw std::domain_error(
                    "quadform_from_torus: q entries must be +-1 (general roots of unity carry no "
                    "mod-2 form)");
            if (j > i && qij == -1) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw std::invalid_argument("quadform_from_torus: q must be symmetric");
            if (i == j && q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 1)
                throw std::invalid_argument("quadform_from_torus: q_ii must be 1");
        }
    return QuadFormF2(n, std::move(b), std::move(a));
}

/// Inverse of quadform_from_torus.
inline std::pair<std::vector<std::vector<int>>, std::vector<int>> torus_from_quadform(
    const QuadFormF2& k) {
    const int n = k.rank();
    std::vector<std::vector<int>> q(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 1));
    std::vector<int> e(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        if (k.linear_part()[static_cast<std::size_t>(i)]) e[static_cast<std::size_t>(i)] = -1;
        for (int j = i + 1; j < n; ++j)
            if (k.upper_part()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
                q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
            }
    }
    return {std::move(q), std::move(e)};
}

inline bool is_isometry_witness(const QuadFormF2& from, const QuadFormF2& to, const BitMat& tau) {
    // to(tau v) = from(v) for all v
    const int n = from.rank();
    if (to.rank() != n) return false;
    if (!bit_inverse(tau)) return false;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        BitVec v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (x >> i) & 1;
        if (to.eval(bit_apply(tau, v)) != from.eval(v)) return false;
    }
    return true;
}

namespace detail {

inline void check_quadform_capacity(int n) {
    if (n > quadform_capacity_bound())
        throw std::length_error(
            "quadform: rank " + std::to_string(n) + " exceeds the exhaustive-search bound " +
            std::to_string(quadform_capacity_bound()) +
            "; pre-filter by polarization rank and value distribution instead");
}

inline std::vector<BitMat> gl_generators(int n) {
    std::vector<BitMat> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            BitMat t = bit_identity(n);
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            gens.push_back(std::move(t));
        }
    return gens;
}

} // namespace detail

/// Decides isometry and returns a witness tau with kappa'(tau v) = kappa(v),
/// by exploring the GL_n(F_2) orbit of kappa (transvection generators,
/// value-distribution pre-filter).
inline std::optional<BitMat> is_isometric(const QuadFormF2& kappa, const QuadFormF2& kappa2) {
    const int n = kappa.rank();
    if (kappa2.rank() != n)
        throw std::invalid_argument("is_isometric: forms have different ranks");
    detail::check_quadform_capacity(n);
    if (kappa.value_count() != kappa2.value_count()) return std::nullopt;
    if (kappa == kappa2) return bit_identity(n);

    auto gens = detail::gl_generators(n);
    const std::uint64_t target = kappa2.encode();
    std::map<std::uint64_t, BitMat> seen; // form -> M with form = kappa o M
    std::queue<std::uint64_t> frontier;
    seen.emplace(kappa.encode(), bit_identity(n));
    frontier.push(kappa.encode());
    while (!frontier.empty()) {
        std::uint64_t key = frontier.front();
        frontier.pop();
        QuadFormF2 f = QuadFormF2::decode(n, key);
        const BitMat& m = seen.at(key);
        for (const auto& g : gens) {
            QuadFormF2 f2 = f.pullback(g);
            std::uint64_t key2 = f2.encode();
            if (seen.count(key2)) continue;
            BitMat m2 = bit_mul(m, g); // f2 = kappa o (m g)
            if (key2 == target) {
                auto inv = bit_inverse(m2);
                return inv; // kappa2(v) = kappa(m2 v) => tau = m2^{-1}
            }
            seen.emplace(key2, std::move(m2));
            frontier.push(key2);
        }
    }
    return std::nullopt;
}

struct QuadFormClass {
    QuadFormF2 representative;
    std::size_t orbit_size;
};

/// Complete isometry classification in rank n: orbit representatives
/// (lexicographically least encoding) with orbit sizes.
inline std::vector<QuadFormClass> classify_quadforms(int n) {
    detail::check_quadform_capacity(n);
    const int bits = n + n * (n - 1) / 2;
    const std::uint64_t total = 1ULL << bits;
    auto gens = detail::gl_generators(n);
    std::vector<char> visited(total, 0);
    std::vector<QuadFormClass> classes;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        std::queue<std::uint64_t> frontier;
        frontier.push(start);
        visited[start] = 1;
        std::size_t size = 0;
        while (!frontier.empty()) {
            std::uint64_t key = frontier.front();
            frontier.pop();
            ++size;
            QuadFormF2 f = QuadFormF2::decode(n, key);
            for (const auto& g : gens) {
                std::uint64_t key2 = f.pullback(g).encode();
                if (!visited[key2]) {
                    visited[key2] = 1;
                    frontier.push(key2);
                }
            }
        }
        classes.push_back({QuadFormF2::decode(n, start), size});
    }
    return classes;
}

/// The explicit involution-isotope witness tau(v) = v + kappa_p(mu,v) mu.
inline BitMat isotope_shift_witness(const QuadFormF2& kappa, const BitVec& mu) {
    const int n = kappa.rank();
    BitMat p = kappa.polarization();
    BitVec pmu = bit_apply(p, mu);
    BitMat t = bit_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^=
                (mu[static_cast<std::size_t>(i)] & pmu[static_cast<std::size_t>(j)]);
    return t;
}

} // namespace lietorus
