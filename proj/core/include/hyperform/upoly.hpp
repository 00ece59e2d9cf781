#pragma once

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperform/error.hpp"
#include "hyperform/rational.hpp"

namespace hyperform {

// Dense univariate polynomial over a field K. K must provide +,-,*,/,
// unary -, and is_zero(k). Coefficient index = exponent; normalized form
// has a nonzero leading coefficient (empty vector = zero polynomial).
template <class K>
struct UPoly {
    std::vector<K> c;

    UPoly() = default;
    explicit UPoly(std::vector<K> cc) : c(std::move(cc)) { trim(); }

    static UPoly zero() { return UPoly{}; }
    static UPoly constant(K k) {
        UPoly p;
        if (!is_zero(k)) p.c.push_back(std::move(k));
        return p;
    }
    /// c1*x + c0
    static UPoly linear(K c0, K c1) {
        UPoly p;
        p.c.push_back(std::move(c0));
        p.c.push_back(std::move(c1));
        p.trim();
        return p;
    }

    bool is_zero_poly() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const K& lc() const {
        if (c.empty()) throw internal_error("lc of zero polynomial");
        return c.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return K{};
        return c[i];
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K{});
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
            else if (i < a.c.size()) r.c[i] = a.c[i];
            else r.c[i] = b.c[i];
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K{});
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] - b.c[i];
            else if (i < a.c.size()) r.c[i] = a.c[i];
            else r.c[i] = -b.c[i];
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a) {
        UPoly r = a;
        for (auto& k : r.c) k = -k;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.c.empty() || b.c.empty()) return UPoly{};
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K{});
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                if (is_zero(b.c[j])) continue;
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
            }
        }
        r.trim();
        return r;
    }
    UPoly operator*(const K& k) const {
        if (is_zero(k)) return UPoly{};
        UPoly r = *this;
        for (auto& a : r.c) a = a * k;
        r.trim();
        return r;
    }
    bool operator==(const UPoly& o) const {
        if (c.size() != o.c.size()) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!is_zero(c[i] - o.c[i])) return false;
        return true;
    }

    UPoly shifted(int k) const { // multiply by x^k
        if (c.empty()) return UPoly{};
        UPoly r;
        r.c.assign(c.size() + k, K{});
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    UPoly derivative() const {
        UPoly r;
        for (std::size_t i = 1; i < c.size(); ++i) {
            K k = c[i];
            for (std::size_t j = 1; j < i; ++j) k = k + c[i];
            r.c.push_back(k);
        }
        r.trim();
        return r;
    }

    /// Horner evaluation in any ring V with V*V, V+V and V(K) available.
    template <class V>
    V eval(const V& x, const V& zero) const {
        V r = zero;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + V(*it);
        return r;
    }

    UPoly monic() const {
        if (c.empty()) return *this;
        UPoly r = *this;
        K inv = r.c.back();
        for (auto& a : r.c) a = a / inv;
        return r;
    }
};

using QPoly = UPoly<Rational>;

/// Division with remainder over a field. Returns {quotient, remainder}.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero_poly()) throw error("division by zero polynomial");
    UPoly<K> q, r = a;
    int db = b.degree();
    if (a.degree() < db) return {q, r};
    q.c.assign(a.degree() - db + 1, K{});
    while (!r.is_zero_poly() && r.degree() >= db) {
        K f = r.lc() / b.lc();
        int k = r.degree() - db;
        q.c[k] = f;
        for (int i = 0; i <= db; ++i)
            r.c[i + k] = r.c[i + k] - f * b.c[i];
        r.c.resize(k + db); // leading term cancels exactly
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero_poly()) throw internal_error("exact_div: nonzero remainder");
    return q;
}

/// Monic gcd by the Euclidean algorithm.
template <class K>
UPoly<K> gcd_upoly(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero_poly()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd_upoly(UPoly<K> a, UPoly<K> b) {
    K one = [&] {
        if (!a.is_zero_poly()) return a.lc() / a.lc();
        if (!b.is_zero_poly()) return b.lc() / b.lc();
        throw internal_error("xgcd of two zero polynomials");
    }();
    UPoly<K> s0 = UPoly<K>::constant(one), s1;
    UPoly<K> t0, t1 = s0;
    while (!b.is_zero_poly()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
        UPoly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UPoly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero_poly()) return {a, s0, t0};
    K inv = a.lc();
    for (auto& k : a.c) k = k / inv;
    for (auto& k : s0.c) k = k / inv;
    for (auto& k : t0.c) k = k / inv;
    return {a, s0, t0};
}

/// Squarefree part p / gcd(p, p'), made monic.
template <class K>
UPoly<K> squarefree_part_upoly(const UPoly<K>& p) {
    if (p.is_zero_poly()) throw error("squarefree part of zero");
    auto g = gcd_upoly(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return exact_div(p, g).monic();
}

/// Yun's squarefree decomposition of a nonconstant polynomial:
/// p = lc * prod parts[i].first ^ parts[i].second with the parts monic,
/// squarefree and pairwise coprime.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decomposition(const UPoly<K>& p) {
    std::vector<std::pair<UPoly<K>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<K> f = p.monic();
    UPoly<K> g = gcd_upoly(f, f.derivative());
    if (g.degree() <= 0) {
        out.push_back({f, 1});
        return out;
    }
    UPoly<K> w = exact_div(f, g);
    UPoly<K> y = exact_div(f.derivative(), g);
    UPoly<K> z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UPoly<K> h = gcd_upoly(w, z);
        if (h.degree() > 0) out.push_back({h, i});
        w = exact_div(w, h.degree() > 0 ? h : UPoly<K>::constant(w.lc() / w.lc()));
        y = h.degree() > 0 ? exact_div(z, h) : z;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

} // namespace hyperform
