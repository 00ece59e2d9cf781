#include "hyperform/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "hyperform/error.hpp"

namespace hyperform {
namespace {

// ---------------------------------------------------------------------
// GF(p)[x] arithmetic for word-sized p (internal to Zassenhaus).
// ---------------------------------------------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (u64)((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

using PPoly = std::vector<u64>; // dense, trimmed

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int pdeg(const PPoly& f) { return (int)f.size() - 1; }

PPoly pmul(const Fp& F, const PPoly& a, const PPoly& b) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ptrim(r);
    return r;
}

PPoly psub(const Fp& F, PPoly a, const PPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    ptrim(a);
    return a;
}

// division with remainder; returns quotient, `a` becomes the remainder
PPoly pdivrem(const Fp& F, PPoly& a, const PPoly& b) {
    PPoly q(std::max<int>(pdeg(a) - pdeg(b) + 1, 0), 0);
    u64 li = F.inv(b.back());
    while (pdeg(a) >= pdeg(b)) {
        u64 c = F.mul(a.back(), li);
        int k = pdeg(a) - pdeg(b);
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + k] = F.sub(a[i + k], F.mul(c, b[i]));
        ptrim(a);
        if (a.empty()) break;
    }
    ptrim(q);
    return q;
}

PPoly pmod(const Fp& F, PPoly a, const PPoly& b) {
    pdivrem(F, a, b);
    return a;
}

PPoly pdiv(const Fp& F, PPoly a, const PPoly& b) { return pdivrem(F, a, b); }

PPoly pgcd(const Fp& F, PPoly a, PPoly b) {
    while (!b.empty()) {
        PPoly r = pmod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 li = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, li);
    }
    return a;
}

PPoly pmonic(const Fp& F, PPoly a) {
    if (a.empty()) return a;
    u64 li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
    return a;
}

PPoly pderiv(const Fp& F, const PPoly& a) {
    PPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(F.mul(a[i], i % F.p));
    ptrim(r);
    return r;
}

PPoly ppowmod(const Fp& F, PPoly base, const Integer& e, const PPoly& m) {
    PPoly r{1};
    base = pmod(F, std::move(base), m);
    Integer k = e;
    while (sgn(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = pmod(F, pmul(F, r, base), m);
        base = pmod(F, pmul(F, base, base), m);
        k >>= 1;
    }
    return r;
}

// s*a + t*b = 1 for coprime a, b over GF(p)
void pxgcd(const Fp& F, PPoly a, PPoly b, PPoly& s, PPoly& t) {
    PPoly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        PPoly q = pdivrem(F, a, b); // a becomes the remainder
        std::swap(a, b);            // a = old b, b = remainder
        PPoly s2 = psub(F, s0, pmul(F, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        PPoly t2 = psub(F, t0, pmul(F, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty() || pdeg(a) != 0)
        throw internal_error("pxgcd: inputs not coprime");
    u64 li = F.inv(a.back());
    s = s0;
    t = t0;
    for (auto& c : s) c = F.mul(c, li);
    for (auto& c : t) c = F.mul(c, li);
}

// equal-degree splitting (Cantor-Zassenhaus), f squarefree monic with all
// irreducible factors of degree d
void edf(const Fp& F, const PPoly& f, int d, std::mt19937_64& rng,
         std::vector<PPoly>& out) {
    if (pdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)F.p, (unsigned long)d);
    e = (e - 1) / 2;
    while (true) {
        PPoly r(pdeg(f), 0);
        for (auto& c : r) c = rng() % F.p;
        ptrim(r);
        if (pdeg(r) < 1) continue;
        PPoly t = ppowmod(F, r, e, f);
        if (t.empty()) continue;
        t[0] = F.sub(t[0], 1);
        ptrim(t);
        PPoly g = pgcd(F, t, f);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            edf(F, g, d, rng, out);
            edf(F, pdiv(F, f, g), d, rng, out);
            return;
        }
    }
}

std::vector<PPoly> factor_mod_p(const Fp& F, PPoly f) {
    std::vector<PPoly> out;
    f = pmonic(F, std::move(f));
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull); // fixed seed: deterministic
    PPoly x{0, 1};
    PPoly h = x;
    int d = 0;
    while (pdeg(f) > 0) {
        ++d;
        if (pdeg(f) < 2 * d) {
            out.push_back(f);
            break;
        }
        h = ppowmod(F, h, Integer((unsigned long)F.p), f);
        PPoly g = pgcd(F, psub(F, h, x), f);
        if (pdeg(g) > 0) {
            edf(F, g, d, rng, out);
            f = pdiv(F, f, g);
            if (pdeg(f) > 0) h = pmod(F, h, f);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Z[x] helpers and quadratic Hensel lifting
// ---------------------------------------------------------------------

using ZPoly = std::vector<Integer>; // trimmed

void ztrim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}
int zdeg(const ZPoly& f) { return (int)f.size() - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ztrim(a);
    return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

void zmod_sym(ZPoly& f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(f);
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r = zmul(a, b);
    zmod_sym(r, m);
    return r;
}

// divide a by monic b mod m; returns quotient, a becomes remainder
ZPoly zdivrem_monic(ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly q(std::max<int>(zdeg(a) - zdeg(b) + 1, 0), Integer(0));
    while (zdeg(a) >= zdeg(b)) {
        Integer c = a.back();
        int k = zdeg(a) - zdeg(b);
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
        zmod_sym(a, m);
        ztrim(a);
        if (a.empty()) break;
    }
    zmod_sym(q, m);
    ztrim(q);
    return q;
}

Integer zcontent(const ZPoly& f) {
    Integer g(0);
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly r = a;
    q.assign(std::max<int>(zdeg(a) - zdeg(b) + 1, 0), Integer(0));
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        Integer c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (sgn(rem) != 0) return false;
        int k = zdeg(r) - zdeg(b);
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
        ztrim(r);
    }
    ztrim(q);
    return r.empty();
}

// One quadratic step m -> m^2 for f = g*h, s*g + t*h = 1, g and h monic,
// f monic mod m^2 (von zur Gathen & Gerhard, Alg. 15.10).
void lift_pair_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                    const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = zsub(f, zmul(g, h));
    zmod_sym(e, m2);
    ZPoly se = zmulmod(s, e, m2);
    ZPoly q = zdivrem_monic(se, h, m2); // se becomes the remainder
    ZPoly gstar = zadd(zadd(g, zmulmod(t, e, m2)), zmulmod(q, g, m2));
    zmod_sym(gstar, m2);
    ZPoly hstar = zadd(h, se);
    zmod_sym(hstar, m2);
    ZPoly b = zsub(zadd(zmulmod(s, gstar, m2), zmulmod(t, hstar, m2)),
                   ZPoly{Integer(1)});
    zmod_sym(b, m2);
    ZPoly sb = zmulmod(s, b, m2);
    ZPoly c = zdivrem_monic(sb, hstar, m2); // sb becomes the remainder d
    ZPoly sstar = zsub(s, sb);
    zmod_sym(sstar, m2);
    ZPoly tstar = zsub(zsub(t, zmulmod(t, b, m2)), zmulmod(c, gstar, m2));
    zmod_sym(tstar, m2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

ZPoly zpoly_of(const PPoly& a) {
    ZPoly r;
    for (u64 c : a) r.push_back(Integer(c));
    return r;
}

// Lift the coprime monic factorization f = prod(leaves) from mod p to a
// modulus >= target. f monic with integer coefficients reduced mod target.
std::vector<ZPoly> hensel_lift_list(const Fp& F, const ZPoly& f,
                                    std::vector<PPoly> leaves,
                                    const Integer& target) {
    std::vector<ZPoly> out;
    ZPoly cur = f;
    while (leaves.size() > 1) {
        PPoly g0 = leaves.front();
        PPoly h0{1};
        for (std::size_t i = 1; i < leaves.size(); ++i) h0 = pmul(F, h0, leaves[i]);
        PPoly sp, tp;
        pxgcd(F, g0, h0, sp, tp);
        ZPoly g = zpoly_of(g0), h = zpoly_of(h0), s = zpoly_of(sp), t = zpoly_of(tp);
        Integer m((unsigned long)F.p);
        while (m < target) {
            lift_pair_step(cur, g, h, s, t, m);
            m = m * m;
        }
        out.push_back(g);
        cur = h;
        leaves.erase(leaves.begin());
    }
    out.push_back(cur);
    return out;
}

QPoly qpoly_from_z(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& a : z) c.emplace_back(a);
    return QPoly(std::move(c));
}

ZPoly zpoly_from_q(const QPoly& q) {
    Integer den(1);
    for (const auto& c : q.c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    for (const auto& c : q.c) {
        Rational v = c * Rational(den);
        z.push_back(v.get_num());
    }
    ztrim(z);
    return z;
}

/// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    if (zdeg(f) == 1) return {f};
    static const u64 kPrimes[] = {1073741827ull, 1073741831ull, 1073741833ull,
                                  1073741839ull, 1073741843ull, 1073741857ull,
                                  1073741891ull, 1073741909ull, 1073741939ull,
                                  1073741953ull};
    std::vector<PPoly> best;
    Fp bestF{0};
    int usable = 0;
    for (u64 p : kPrimes) {
        Fp F{p};
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        PPoly fp;
        for (const auto& c : f)
            fp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
        ptrim(fp);
        if (pdeg(pgcd(F, fp, pderiv(F, fp))) != 0) continue;
        auto fac = factor_mod_p(F, fp);
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            bestF = F;
        }
        if (++usable >= 3 || best.size() == 1) break;
    }
    if (best.empty())
        throw internal_error("factorization: no usable prime found");
    if (best.size() == 1) return {f};
    Fp F = bestF;

    // Landau-Mignotte: any factor of f has coefficients bounded by
    // 2^(n+1) * |f|_2 * |lc(f)| in absolute value.
    Integer norm2(0);
    for (const auto& c : f) norm2 += c * c;
    mpz_sqrt(norm2.get_mpz_t(), norm2.get_mpz_t());
    norm2 += 1;
    Integer bound = norm2 * abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), zdeg(f) + 1);
    Integer target = 2 * bound + 1;

    // lift the monic factorization of lc^-1 * f
    Integer modulus((unsigned long)F.p);
    while (modulus < target) modulus = modulus * modulus;
    Integer lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), f.back().get_mpz_t(),
                   modulus.get_mpz_t()) == 0)
        throw internal_error("lc not invertible mod p^k");
    ZPoly fmonic = f;
    for (auto& c : fmonic) c *= lcinv;
    zmod_sym(fmonic, modulus);
    std::sort(best.begin(), best.end());
    auto lifted = hensel_lift_list(F, fmonic, best, target);

    // Zassenhaus recombination over subsets of lifted factors
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly rem = f;
    std::vector<ZPoly> out;
    for (int take = 1; (int)alive.size() >= 2 * take;) {
        bool hit = false;
        std::vector<int> comb(take);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            ZPoly cand{rem.back()};
            for (int i : comb) cand = zmulmod(cand, lifted[alive[i]], modulus);
            Integer ct = zcontent(cand);
            ZPoly pp = cand;
            if (sgn(ct) != 0 && ct != 1)
                for (auto& c : pp) c /= ct;
            if (!pp.empty() && sgn(pp.back()) < 0)
                for (auto& c : pp) c = -c;
            ZPoly lcrem = rem;
            for (auto& c : lcrem) c *= rem.back();
            ZPoly q;
            if (zdivides(lcrem, pp, q)) {
                out.push_back(pp);
                ZPoly q2;
                if (!zdivides(rem, pp, q2)) {
                    Integer c2 = zcontent(q);
                    q2 = q;
                    if (c2 != 1)
                        for (auto& c : q2) c /= c2;
                }
                rem = q2;
                if (!rem.empty() && sgn(rem.back()) < 0)
                    for (auto& c : rem) c = -c;
                std::vector<int> na;
                for (std::size_t i = 0, k = 0; i < alive.size(); ++i) {
                    if (k < comb.size() && (int)i == comb[k]) { ++k; continue; }
                    na.push_back(alive[(int)i]);
                }
                alive = std::move(na);
                hit = true;
                break;
            }
            int i = take - 1;
            while (i >= 0 && comb[i] == (int)alive.size() - take + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!hit) ++take; // all subsets of this size exhausted
    }
    if (zdeg(rem) > 0) out.push_back(rem);
    return out;
}

} // namespace

std::vector<std::pair<QPoly, int>> factor_rational_poly(const QPoly& p) {
    if (p.is_zero_poly()) throw error("factorization of zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        ZPoly z = zpoly_from_q(part);
        Integer ct = zcontent(z);
        if (ct != 1)
            for (auto& c : z) c /= ct;
        for (const auto& zf : factor_squarefree_z(z))
            out.push_back({qpoly_from_z(zf).monic(), mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            int c = cmp(a.first.coeff(i), b.first.coeff(i));
            if (c != 0) return c < 0;
        }
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_q(const QPoly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    auto f = factor_rational_poly(p);
    return f.size() == 1 && f[0].second == 1;
}

std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> out;
    for (const auto& [q, m] : factor_rational_poly(p))
        if (q.degree() == 1) out.push_back(-q.coeff(0) / q.coeff(1));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hyperform
