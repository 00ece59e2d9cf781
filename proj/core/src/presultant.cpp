#include "hyperform/presultant.hpp"

namespace hyperform {
namespace {

MPoly mpow(const MPoly& b, int e) {
    MPoly r = MPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// variables present with positive degree
std::array<bool, kNumVars> vars_of(const MPoly& p) {
    std::array<bool, kNumVars> r{false, false, false, false};
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] > 0) r[i] = true;
    return r;
}

} // namespace

MPoly pseudo_rem(const MPoly& a, const MPoly& b, Var v, int* kout) {
    int db = b.degree(v);
    if (db == 0) throw internal_error("pseudo_rem: divisor constant in variable");
    int da = a.degree(v);
    if (kout) *kout = 0;
    if (da < db || a.is_zero_poly()) return a;
    UPoly<MPoly> au = a.as_upoly(v), bu = b.as_upoly(v);
    MPoly lb = bu.lc();
    int e = da - db + 1;
    while (!au.is_zero_poly() && au.degree() >= db) {
        int k = au.degree() - db;
        MPoly la = au.lc();
        // au = lb*au - la*x^k*bu
        UPoly<MPoly> shifted = bu.shifted(k);
        UPoly<MPoly> t1, t2;
        t1.c.reserve(au.c.size());
        for (const auto& c : au.c) t1.c.push_back(c * lb);
        t1.trim();
        t2.c.reserve(shifted.c.size());
        for (const auto& c : shifted.c) t2.c.push_back(c * la);
        t2.trim();
        au = t1 - t2;
        --e;
    }
    if (kout) *kout = da - db + 1;
    if (e > 0) {
        MPoly scale = mpow(lb, e);
        for (auto& c : au.c) c = c * scale;
    }
    return MPoly::from_upoly(au, v);
}

MPoly content_wrt(const MPoly& p, Var v) {
    MPoly g;
    UPoly<MPoly> u = p.as_upoly(v);
    for (const auto& c : u.c) {
        if (c.is_zero_poly()) continue;
        g = g.is_zero_poly() ? c.normalized() : mgcd(g, c);
        if (g.is_constant()) break;
    }
    if (g.is_zero_poly()) return g;
    return g.normalized();
}

MPoly primitive_part_wrt(const MPoly& p, Var v) {
    if (p.is_zero_poly()) return p;
    MPoly c = content_wrt(p, v);
    if (c.is_constant()) {
        if (is_one(c.constant_value())) return p;
        return p * c.constant_value().inverse();
    }
    return MPoly::exact_div(p, c);
}

MPoly mgcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero_poly()) return b.normalized();
    if (b.is_zero_poly()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(1);
    auto va = vars_of(a), vb = vars_of(b);
    int v = -1, best = -1;
    for (int i = 0; i < kNumVars; ++i) {
        if (!va[i] || !vb[i]) continue;
        int d = std::max(a.degree(static_cast<Var>(i)), b.degree(static_cast<Var>(i)));
        if (best < 0 || d < best) {
            best = d;
            v = i;
        }
    }
    if (v < 0) return MPoly::constant(1); // no common variable
    Var mv = static_cast<Var>(v);
    MPoly ca = content_wrt(a, mv), cb = content_wrt(b, mv);
    MPoly cont = mgcd(ca, cb);
    MPoly A = MPoly::exact_div(a, ca), B = MPoly::exact_div(b, cb);
    if (A.degree(mv) < B.degree(mv)) std::swap(A, B);
    MPoly result;
    while (true) {
        MPoly R = pseudo_rem(A, B, mv);
        if (R.is_zero_poly()) {
            result = B;
            break;
        }
        if (R.degree(mv) == 0) {
            result = MPoly::constant(1);
            break;
        }
        A = std::move(B);
        B = primitive_part_wrt(R, mv);
    }
    result = primitive_part_wrt(result, mv);
    return (cont * result).normalized();
}

MPoly resultant(const MPoly& a, const MPoly& b, Var v) {
    if (a.is_zero_poly() || b.is_zero_poly())
        throw error("resultant of zero polynomial");
    int da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0) return MPoly::constant(1);
    if (db == 0) return mpow(b, da);
    if (da == 0) return mpow(a, db);

    // contents out first (Cohen, Alg. 3.3.7)
    MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
    MPoly A = MPoly::exact_div(a, ca), B = MPoly::exact_div(b, cb);
    MPoly t = mpow(ca, db) * mpow(cb, da);
    int s = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) s = -s;
    }
    MPoly g = MPoly::constant(1), h = MPoly::constant(1);
    while (true) {
        int dA = A.degree(v), dB = B.degree(v);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        MPoly R = pseudo_rem(A, B, v);
        if (R.is_zero_poly()) return MPoly{}; // positive-degree common factor
        A = std::move(B);
        B = MPoly::exact_div(R, g * mpow(h, delta));
        g = A.lc_wrt(v);
        if (delta > 0) {
            // h = g^delta / h^(delta-1)
            h = delta == 1 ? g : MPoly::exact_div(mpow(g, delta), mpow(h, delta - 1));
        }
        if (B.degree(v) == 0) {
            int vdeg = A.degree(v);
            MPoly num = mpow(B, vdeg);
            MPoly res = vdeg >= 1 ? MPoly::exact_div(num, mpow(h, vdeg - 1)) : num;
            res = t * res;
            return s < 0 ? -res : res;
        }
    }
}

MPoly squarefree_part(const MPoly& p, Var v) {
    if (p.is_zero_poly()) throw error("squarefree part of zero");
    if (p.degree(v) == 0) return p.normalized();
    MPoly g = mgcd(p, p.derivative(v));
    if (g.is_constant()) return p.monic();
    return MPoly::exact_div(p, g).monic();
}

MPoly reduce_mod_curve(const MPoly& p, const MPoly& f, int* kout) {
    if (f.degree(VY) < 1)
        throw internal_error("reduce_mod_curve: curve constant in y");
    return pseudo_rem(p, f, VY, kout);
}

} // namespace hyperform
