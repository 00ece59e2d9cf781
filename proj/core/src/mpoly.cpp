#include "hyperform/mpoly.hpp"

#include <sstream>

namespace hyperform {

const char* var_name(Var v) {
    switch (v) {
        case VX: return "x";
        case VY: return "y";
        case VX0: return "x0";
        case VY0: return "y0";
    }
    return "?";
}

void MPoly::add_term(const Mono& m, const AlgNum& a) {
    if (is_zero(a)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, a);
        return;
    }
    it->second = it->second + a;
    if (is_zero(it->second)) t_.erase(it);
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.e[v]);
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg());
    return d;
}

int MPoly::low_total_degree() const {
    if (t_.empty()) return -1;
    int d = t_.begin()->first.deg();
    for (const auto& [m, c] : t_) d = std::min(d, m.deg());
    return d;
}

const std::pair<const Mono, AlgNum>& MPoly::lead() const {
    if (t_.empty()) throw internal_error("lead term of zero polynomial");
    return *t_.rbegin();
}

MPoly MPoly::coeff_of(Var v, int k) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        if (m.e[v] != k) continue;
        Mono n = m;
        n.e[v] = 0;
        r.t_.emplace(n, c);
    }
    return r;
}

UPoly<MPoly> MPoly::as_upoly(Var v) const {
    UPoly<MPoly> u;
    u.c.assign(degree(v) + 1, MPoly{});
    for (const auto& [m, c] : t_) {
        Mono n = m;
        n.e[v] = 0;
        u.c[m.e[v]].t_.emplace(n, c);
    }
    u.trim();
    return u;
}

MPoly MPoly::from_upoly(const UPoly<MPoly>& u, Var v) {
    MPoly r;
    for (std::size_t k = 0; k < u.c.size(); ++k) {
        for (const auto& [m, c] : u.c[k].t_) {
            Mono n = m;
            n.e[v] += static_cast<int>(k);
            r.add_term(n, c);
        }
    }
    return r;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        if (m.e[v] == 0) continue;
        Mono n = m;
        n.e[v] -= 1;
        r.add_term(n, c * AlgNum(m.e[v]));
    }
    return r;
}

MPoly MPoly::subst(Var v, const MPoly& value) const {
    // Horner over powers of v
    UPoly<MPoly> u = as_upoly(v);
    MPoly r;
    for (auto it = u.c.rbegin(); it != u.c.rend(); ++it) r = r * value + *it;
    return r;
}

MPoly MPoly::eval_var(Var v, const AlgNum& value) const {
    UPoly<MPoly> u = as_upoly(v);
    MPoly r;
    MPoly val = MPoly::constant(value);
    for (auto it = u.c.rbegin(); it != u.c.rend(); ++it) r = r * val + *it;
    return r;
}

MPoly MPoly::swap_vars(Var a, Var b) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        Mono n = m;
        std::swap(n.e[a], n.e[b]);
        r.t_.emplace(n, c);
    }
    return r;
}

MPoly MPoly::rename(Var a, Var b) const {
    if (depends_on(b)) throw internal_error("rename: target variable occurs");
    return swap_vars(a, b);
}

MPoly MPoly::stretch(Var v, int k) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        Mono n = m;
        n.e[v] *= k;
        r.t_.emplace(n, c);
    }
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
}

MPoly operator-(const MPoly& a) {
    MPoly r;
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.t_.empty() || b.t_.empty()) return r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const AlgNum& k) const {
    MPoly r;
    if (is_zero(k)) return r;
    for (const auto& [m, c] : t_) {
        AlgNum v = c * k;
        if (!is_zero(v)) r.t_.emplace(m, std::move(v));
    }
    return r;
}

MPoly MPoly::exact_div(const MPoly& a, const MPoly& b) {
    MPoly q;
    if (!try_divide(a, b, q))
        throw internal_error("exact_div: not divisible");
    return q;
}

bool MPoly::try_divide(const MPoly& a, const MPoly& b, MPoly& q) {
    if (b.is_zero_poly()) throw error("division by zero polynomial");
    q = MPoly{};
    MPoly r = a;
    const auto& bl = b.lead();
    while (!r.is_zero_poly()) {
        const auto& rl = r.lead();
        if (!bl.first.divides(rl.first)) return false;
        Mono m = rl.first / bl.first;
        AlgNum c = rl.second / bl.second;
        MPoly t = MPoly::monomial(m, c);
        q = q + t;
        r = r - t * b;
    }
    return true;
}

bool MPoly::rational_coeffs() const {
    for (const auto& [m, c] : t_) {
        Rational r;
        if (!c.try_rational(r)) return false;
    }
    return true;
}

FieldPtr MPoly::coeff_field() const {
    for (const auto& [m, c] : t_)
        if (c.field()) return c.field();
    return nullptr;
}

MPoly MPoly::map_coeffs(const FieldPtr& target, const AlgNum& gen_image) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        AlgNum v = map_into(c, target, gen_image);
        if (!is_zero(v)) r.t_.emplace(m, std::move(v));
    }
    return r;
}

MPoly MPoly::normalized() const {
    if (t_.empty()) return *this;
    if (!rational_coeffs()) return monic();
    // integer-primitive with positive leading coefficient
    Integer den(1), num(0);
    for (const auto& [m, c] : t_) {
        Rational r;
        c.try_rational(r);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    }
    for (const auto& [m, c] : t_) {
        Rational r;
        c.try_rational(r);
        Integer z = Rational(r * Rational(den)).get_num();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
    }
    Rational scale = Rational(den) / Rational(num);
    Rational rl;
    lead().second.try_rational(rl);
    if (sgn(rl * scale) < 0) scale = -scale;
    return *this * AlgNum(scale);
}

MPoly MPoly::monic() const {
    if (t_.empty()) return *this;
    return *this * lead().second.inverse();
}

bool MPoly::is_univariate(Var v) const {
    for (const auto& [m, c] : t_)
        for (int i = 0; i < kNumVars; ++i)
            if (i != v && m.e[i] != 0) return false;
    return true;
}

UPoly<AlgNum> MPoly::to_univariate(Var v) const {
    if (!is_univariate(v)) throw internal_error("to_univariate: extra variables");
    UPoly<AlgNum> u;
    u.c.assign(degree(v) + 1, AlgNum(0));
    for (const auto& [m, c] : t_) u.c[m.e[v]] = c;
    u.trim();
    return u;
}

MPoly MPoly::from_univariate(const UPoly<AlgNum>& u, Var v) {
    MPoly r;
    for (std::size_t k = 0; k < u.c.size(); ++k) {
        if (is_zero(u.c[k])) continue;
        Mono m;
        m.e[v] = static_cast<int>(k);
        r.t_.emplace(m, u.c[k]);
    }
    return r;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending term order
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (first) {
            first = false;
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        bool need_coeff = (m.deg() == 0) || cs != "1";
        bool coeff_composite = cs.find_first_of("+-*^ ") != std::string::npos;
        if (need_coeff) {
            if (coeff_composite && m.deg() > 0)
                os << "(" << cs << ")";
            else
                os << cs;
        }
        bool first_var = !need_coeff;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!first_var || need_coeff) os << "*";
            first_var = false;
            os << var_name(static_cast<Var>(i));
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
        if (m.deg() == 0 && !need_coeff) os << cs;
    }
    return os.str();
}

AlgNum eval_xy(const MPoly& p, const AlgNum& vx, const AlgNum& vy) {
    AlgNum r(0);
    for (const auto& [m, c] : p.terms()) {
        if (m.e[VX0] || m.e[VY0])
            throw internal_error("eval_xy: polynomial involves x0/y0");
        AlgNum t = c;
        for (int i = 0; i < m.e[VX]; ++i) t = t * vx;
        for (int i = 0; i < m.e[VY]; ++i) t = t * vy;
        r = r + t;
    }
    return r;
}

} // namespace hyperform
