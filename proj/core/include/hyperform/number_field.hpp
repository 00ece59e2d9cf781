#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperform/rational.hpp"
#include "hyperform/upoly.hpp"

namespace hyperform {

/// A simple extension Q(a) given by the monic irreducible minimal
/// polynomial of its generator. Degree 1 is represented by a null
/// FieldPtr everywhere, never by a NumberField object.
struct NumberField {
    QPoly min_poly; // monic, irreducible over Q, degree >= 2
    int degree() const { return min_poly.degree(); }

    explicit NumberField(QPoly mp) : min_poly(std::move(mp)) {}
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// An exact algebraic number: either a plain rational (field == nullptr)
/// or an element of a NumberField written on the power basis of the
/// generator. Values are immutable in spirit: every operation returns a
/// fresh value, so sharing across threads is safe.
class AlgNum {
public:
    AlgNum() : c_{Rational(0)} {}
    AlgNum(Rational r) : c_{std::move(r)} {}
    AlgNum(int n) : c_{Rational(n)} {}
    AlgNum(FieldPtr f, std::vector<Rational> coords)
        : f_(std::move(f)), c_(std::move(coords)) {
        if (f_) {
            c_.resize(f_->degree(), Rational(0));
            reduce_trivial_field();
        } else if (c_.size() != 1) {
            throw internal_error("rational AlgNum needs exactly one coordinate");
        }
    }

    /// The generator of F as an element of F.
    static AlgNum generator(const FieldPtr& f);
    /// Embed a rational into a specific field (power basis (r, 0, ..., 0)).
    static AlgNum in_field(const FieldPtr& f, const Rational& r);

    bool is_rational() const { return f_ == nullptr; }
    const Rational& rat() const {
        if (f_) throw internal_error("AlgNum::rat on a non-rational value");
        return c_[0];
    }
    /// Rational if the value happens to lie in Q, even inside a field.
    bool try_rational(Rational& out) const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        out = c_[0];
        return true;
    }
    const FieldPtr& field() const { return f_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero_val() const {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }
    bool is_one_val() const {
        if (c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a);
    friend bool operator==(const AlgNum& a, const AlgNum& b);

    AlgNum inverse() const;

    /// Total order used only for deterministic normalization choices.
    static int cmp(const AlgNum& a, const AlgNum& b);

    std::string to_string(const std::string& gen = "a") const;

private:
    FieldPtr f_; // nullptr = Q
    std::vector<Rational> c_;

    void reduce_trivial_field() {
        // keep representations canonical: never carry a field pointer
        // for a degree-1 "extension" (extend() never creates those).
    }
    friend struct FieldOps;
};

inline bool is_zero(const AlgNum& a) { return a.is_zero_val(); }
inline bool is_one(const AlgNum& a) { return a.is_one_val(); }
inline bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

using APoly = UPoly<AlgNum>;

/// Bring a polynomial with rational coefficients into AlgNum form.
APoly lift_qpoly(const QPoly& p);
/// The reverse (throws if any coefficient is not rational).
QPoly lower_qpoly(const APoly& p);
/// Map coefficients into a target field through an embedding image of
/// the current generator: a |-> image, rationals unchanged.
AlgNum map_into(const AlgNum& v, const FieldPtr& target, const AlgNum& gen_image);
APoly map_into(const APoly& p, const FieldPtr& target, const AlgNum& gen_image);

/// Result of extending a field by a root of p: the flattened field, the
/// image of the previous generator, and the adjoined root.
struct Extension {
    FieldPtr field;       // nullptr when everything stayed rational
    AlgNum base_gen;      // image of base's generator in `field`
    AlgNum root;          // the adjoined root of p in `field`
};

/// Adjoin a root of squarefree p over base. Chooses the irreducible
/// factor of lowest degree (ties: smallest coefficient sequence), then
/// flattens the tower to a single primitive extension of Q.
Extension extend_field(const FieldPtr& base, const APoly& p);

/// Monic minimal polynomial of a over Q; its degree divides the field degree.
QPoly minimal_polynomial(const AlgNum& a);

} // namespace hyperform
