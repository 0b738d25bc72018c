#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace lietorus {

inline int euler_phi(int m) {
    if (m < 1) throw std::domain_error("euler_phi: order must be positive");
    int result = m, k = m;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

namespace detail {

// Exact division of integer polynomials; divisor monic. Coefficient index = degree.
inline std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (int k = dn - dd; k >= 0; --k) {
        Int c = num[k + dd];
        quot[k] = c;
        if (c != 0)
            for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

inline std::vector<Int> compute_cyclotomic(int m, std::map<int, std::vector<Int>>& cache);

inline const std::vector<Int>& cyclotomic_cached(int m, std::map<int, std::vector<Int>>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto poly = compute_cyclotomic(m, cache);
    return cache.emplace(m, std::move(poly)).first->second;
}

inline std::vector<Int> compute_cyclotomic(int m, std::map<int, std::vector<Int>>& cache) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div_exact(std::move(num), cyclotomic_cached(d, cache));
    return num;
}

} // namespace detail

/// Integer coefficients of the m-th cyclotomic polynomial, index = degree.
inline const std::vector<Int>& cyclotomic_poly(int m) {
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return detail::cyclotomic_cached(m, cache);
}

/// Exact element of Q(zeta_m), stored as the reduced residue mod Phi_m.
/// Field operations never touch floating point.
class Cyc {
public:
    Cyc() : m_(2), c_(1, Rat(0)) {}

    explicit Cyc(int m) : m_(m), c_(check_order(m), Rat(0)) {}

    Cyc(int m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != euler_phi(m_))
            throw std::invalid_argument("Cyc: coefficient vector has wrong length");
    }

    static Cyc of_rat(const Rat& r, int m = 2) {
        Cyc x(m);
        x.c_[0] = r;
        return x;
    }
    static Cyc of_long(long v, int m = 2) { return of_rat(rat_of(v), m); }
    static Cyc zero(int m = 2) { return Cyc(m); }
    static Cyc one(int m = 2) { return of_long(1, m); }

    /// The residue class of x, i.e. a primitive m-th root of unity.
    static Cyc zeta(int m) {
        if (m == 1) return one(1);
        std::vector<Rat> poly(2, Rat(0));
        poly[1] = 1;
        return from_poly(m, poly);
    }

    int order() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(m_); }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    /// Throws unless the value lies in Q.
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyc: value is irrational");
        return c_[0];
    }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        same_field(a, b);
        Cyc r(a.m_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        same_field(a, b);
        Cyc r(a.m_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Cyc operator-() const {
        Cyc r(m_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        same_field(a, b);
        const std::size_t na = a.c_.size(), nb = b.c_.size();
        std::vector<Rat> prod(na + nb - 1, Rat(0));
        for (std::size_t i = 0; i < na; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < nb; ++j)
                if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return from_poly(a.m_, prod);
    }

    friend Cyc operator*(const Rat& s, const Cyc& a) {
        Cyc r(a.m_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

    /// Exact inverse via the extended Euclidean algorithm against Phi_m.
    Cyc inv() const {
        if (is_zero()) throw std::domain_error("Cyc: division by zero");
        if (is_rational()) return of_rat(Rat(1) / c_[0], m_);
        // r0 = Phi_m, r1 = this; maintain t with t*this = r (mod Phi_m).
        std::vector<Rat> r0 = phi_as_rat(), r1(c_.begin(), c_.end());
        std::vector<Rat> t0, t1{Rat(1)};
        trim(r1);
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            auto t2 = poly_sub(t0, poly_mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant: Phi_m is irreducible over Q.
        if (r0.size() != 1) throw std::logic_error("Cyc: gcd with cyclotomic polynomial not constant");
        Rat scale = Rat(1) / r0[0];
        for (auto& x : t0) x *= scale;
        return from_poly(m_, t0);
    }

    Cyc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyc acc = one(m_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat a = c_[i];
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (i == 0) {
                os << rat_str(a);
            } else {
                if (a != 1) os << rat_str(a) << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    static int check_order(int m) { return euler_phi(m); }

    static void same_field(const Cyc& a, const Cyc& b) {
        if (a.m_ != b.m_)
            throw std::domain_error("Cyc: incompatible cyclotomic orders " + std::to_string(a.m_) +
                                    " and " + std::to_string(b.m_));
    }

    std::vector<Rat> phi_as_rat() const {
        const auto& phi = cyclotomic_poly(m_);
        std::vector<Rat> r(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) r[i] = Rat(phi[i]);
        return r;
    }

    static void trim(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }

    static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        trim(r);
        return r;
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        if (den.empty()) throw std::logic_error("poly_divmod: zero divisor");
        if (num.size() < den.size()) return {{}, std::move(num)};
        std::vector<Rat> quot(num.size() - den.size() + 1, Rat(0));
        const Rat lead = den.back();
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            Rat c = num[k + den.size() - 1] / lead;
            quot[k] = c;
            if (c != 0)
                for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
        }
        trim(num);
        return {std::move(quot), std::move(num)};
    }

    /// Reduce a polynomial in z modulo Phi_m down to degree < phi(m).
    static Cyc from_poly(int m, std::vector<Rat> p) {
        const auto& phi = cyclotomic_poly(m);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = p.size(); k-- > deg;) {
            Rat c = p[k];
            if (c == 0) continue;
            p[k] = 0;
            for (std::size_t j = 0; j < deg; ++j) p[k - deg + j] -= c * Rat(phi[j]);
        }
        Cyc r(m);
        for (std::size_t i = 0; i < deg && i < p.size(); ++i) r.c_[i] = p[i];
        return r;
    }

    int m_;
    std::vector<Rat> c_;
};

} // namespace lietorus
