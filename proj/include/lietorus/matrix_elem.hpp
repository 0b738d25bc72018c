#pragma once

#include <map>
#include <sstream>
#include <utility>

#include "torus.hpp"

namespace lietorus {

/// Rebuilds an element over another torus with the same degree/coefficient
/// data (used when a map changes the coordinate algebra, e.g. to A^op).
inline TorusElem retorus(const Torus& target, const TorusElem& x) {
    return target.elem(x.terms());
}

/// Inverse of a nonzero homogeneous element of an associative or
/// alternative torus.
inline TorusElem homog_inverse(const TorusElem& x) {
    if (x.is_zero() || !x.is_homogeneous())
        throw std::domain_error("homog_inverse: element must be nonzero homogeneous");
    return x.parent().basis_inverse(x.degree()).scaled(x.leading_coeff().inv());
}

/// Sparse square matrix over a coordinate torus.
class MatElem {
public:
    MatElem() = default;
    MatElem(Torus torus, int size) : torus_(std::move(torus)), size_(size) {}

    static MatElem single(const Torus& t, int size, int i, int j, TorusElem x) {
        MatElem m(t, size);
        m.set(i, j, std::move(x));
        return m;
    }

    const Torus& torus() const { return torus_; }
    int size() const { return size_; }
    const std::map<std::pair<int, int>, TorusElem>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    TorusElem entry(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? torus_.zero_elem() : it->second;
    }

    void set(int i, int j, TorusElem x) {
        check_index(i);
        check_index(j);
        if (x.is_zero())
            entries_.erase({i, j});
        else
            entries_.insert_or_assign({i, j}, std::move(x));
    }

    void add_to(int i, int j, const TorusElem& x) { set(i, j, entry(i, j) + x); }

    friend bool operator==(const MatElem& a, const MatElem& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const MatElem& a, const MatElem& b) { return !(a == b); }

    friend MatElem operator+(const MatElem& a, const MatElem& b) {
        a.check_compatible(b);
        MatElem r = a;
        for (const auto& [ij, x] : b.entries_) r.add_to(ij.first, ij.second, x);
        return r;
    }
    MatElem operator-() const {
        MatElem r(torus_, size_);
        for (const auto& [ij, x] : entries_) r.entries_.emplace(ij, -x);
        return r;
    }
    friend MatElem operator-(const MatElem& a, const MatElem& b) { return a + (-b); }

    MatElem scaled(const Cyc& s) const {
        MatElem r(torus_, size_);
        if (s.is_zero()) return r;
        for (const auto& [ij, x] : entries_) r.set(ij.first, ij.second, x.scaled(s));
        return r;
    }
    MatElem scaled(const Rat& s) const { return scaled(Cyc::of_rat(s, torus_.scalar_order())); }

    friend MatElem operator*(const MatElem& a, const MatElem& b) {
        a.check_compatible(b);
        MatElem r(a.torus_, a.size_);
        for (const auto& [ij, x] : a.entries_)
            for (const auto& [kl, y] : b.entries_)
                if (ij.second == kl.first) r.add_to(ij.first, kl.second, x * y);
        return r;
    }

    friend MatElem commutator(const MatElem& a, const MatElem& b) { return a * b - b * a; }

    MatElem transpose() const {
        MatElem r(torus_, size_);
        for (const auto& [ij, x] : entries_) r.entries_.emplace(std::make_pair(ij.second, ij.first), x);
        return r;
    }

    MatElem map_entries(const std::function<TorusElem(const TorusElem&)>& f) const {
        MatElem r(torus_, size_);
        for (const auto& [ij, x] : entries_) r.set(ij.first, ij.second, f(x));
        return r;
    }

    TorusElem trace() const {
        TorusElem t = torus_.zero_elem();
        for (const auto& [ij, x] : entries_)
            if (ij.first == ij.second) t = t + x;
        return t;
    }

    std::string str() const {
        if (entries_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [ij, x] : entries_) {
            if (!first) os << " + ";
            first = false;
            os << "E[" << ij.first + 1 << "," << ij.second + 1 << "](" << x.str() << ")";
        }
        return os.str();
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= size_) throw std::out_of_range("MatElem: index out of range");
    }
    void check_compatible(const MatElem& o) const {
        if (size_ != o.size_ || !torus_.same(o.torus_))
            throw std::domain_error("MatElem: incompatible matrices");
    }

    Torus torus_;
    int size_ = 0;
    std::map<std::pair<int, int>, TorusElem> entries_;
};

} // namespace lietorus
