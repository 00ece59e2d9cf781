#pragma once

#include <array>
#include <map>
#include <string>

#include "hyperform/number_field.hpp"

namespace hyperform {

/// The fixed variable universe. Term order is graded lexicographic with
/// x < y < x0 < y0.
enum Var : int { VX = 0, VY = 1, VX0 = 2, VY0 = 3 };
constexpr int kNumVars = 4;

const char* var_name(Var v);

struct Mono {
    std::array<int, kNumVars> e{0, 0, 0, 0};

    int deg() const { return e[0] + e[1] + e[2] + e[3]; }
    bool divides(const Mono& m) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend Mono operator/(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator<(const Mono& a, const Mono& b) {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db;
        for (int i = kNumVars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// Sparse exact multivariate polynomial over Q or a number field.
/// No zero coefficients are ever stored; the zero polynomial has an
/// empty term map. Values are immutable-by-convention and thread-safe
/// to share.
class MPoly {
public:
    MPoly() = default;

    static MPoly constant(AlgNum a) {
        MPoly p;
        if (!is_zero(a)) p.t_.emplace(Mono{}, std::move(a));
        return p;
    }
    static MPoly constant(const Rational& r) { return constant(AlgNum(r)); }
    static MPoly constant(int n) { return constant(AlgNum(n)); }
    static MPoly variable(Var v, int pow = 1) {
        MPoly p;
        Mono m;
        m.e[v] = pow;
        p.t_.emplace(m, AlgNum(1));
        return p;
    }
    static MPoly monomial(Mono m, AlgNum a) {
        MPoly p;
        if (!is_zero(a)) p.t_.emplace(m, std::move(a));
        return p;
    }

    bool is_zero_poly() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.deg() == 0);
    }
    AlgNum constant_value() const {
        if (t_.empty()) return AlgNum(0);
        return t_.begin()->second;
    }
    const std::map<Mono, AlgNum>& terms() const { return t_; }

    AlgNum coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? AlgNum(0) : it->second;
    }
    void add_term(const Mono& m, const AlgNum& a);

    int degree(Var v) const;
    int total_degree() const; // -1 for the zero polynomial
    int low_total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    /// Leading term under the graded-lex order.
    const std::pair<const Mono, AlgNum>& lead() const;

    MPoly coeff_of(Var v, int k) const;
    MPoly lc_wrt(Var v) const { return coeff_of(v, degree(v)); }
    UPoly<MPoly> as_upoly(Var v) const;
    static MPoly from_upoly(const UPoly<MPoly>& u, Var v);

    MPoly derivative(Var v) const;
    MPoly subst(Var v, const MPoly& value) const;
    MPoly eval_var(Var v, const AlgNum& value) const;
    MPoly swap_vars(Var a, Var b) const;
    /// Rename variable a to b (b must not occur).
    MPoly rename(Var a, Var b) const;
    /// Substitute v -> v^k (k >= 1) or scale exponents.
    MPoly stretch(Var v, int k) const;

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const AlgNum& k) const;
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return (a - b).is_zero_poly();
    }

    /// Exact division; throws internal_error if not divisible.
    static MPoly exact_div(const MPoly& a, const MPoly& b);
    /// Division test without throwing.
    static bool try_divide(const MPoly& a, const MPoly& b, MPoly& q);

    bool rational_coeffs() const;
    FieldPtr coeff_field() const; // null if all rational
    /// Apply an embedding to every coefficient.
    MPoly map_coeffs(const FieldPtr& target, const AlgNum& gen_image) const;

    /// Canonical scaling: rational-coefficient polynomials become
    /// integer-primitive with positive leading coefficient; otherwise
    /// monic under graded-lex.
    MPoly normalized() const;
    /// Monic under graded-lex (divide by leading coefficient).
    MPoly monic() const;

    bool is_univariate(Var v) const;
    UPoly<AlgNum> to_univariate(Var v) const;
    static MPoly from_univariate(const UPoly<AlgNum>& u, Var v);

    std::string str() const;

private:
    std::map<Mono, AlgNum> t_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero_poly(); }

/// p evaluated at x=vx, y=vy (remaining vars must not occur).
AlgNum eval_xy(const MPoly& p, const AlgNum& vx, const AlgNum& vy);

} // namespace hyperform
