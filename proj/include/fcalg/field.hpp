#ifndef FCALG_FIELD_HPP
#define FCALG_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "fcalg/errors.hpp"

namespace fcalg {

enum class FieldKind { rationals, prime_field, extension_field };

/// Coefficient vector of a GF(p^k) representative, lowest degree first,
/// always of length k with entries in [0, p).
using GFCoeffs = std::vector<std::int64_t>;

/// Exact value of a field element. Which alternative is active is
/// determined by the owning FieldSpec: rationals hold a canonical
/// mpq_class, prime fields a residue in [0, p), extension fields a
/// reduced coefficient vector.
using ScalarValue = std::variant<mpq_class, std::int64_t, GFCoeffs>;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// An exact base field: Q, GF(p), or GF(p^k) presented as GF(p)[t]/(modulus).
///
/// All arithmetic routines operate on ScalarValue and assume both operands
/// belong to this field; FieldScalar adds the checked, owning wrapper.
class FieldSpec {
  public:
    static FieldPtr rationals();
    static FieldPtr prime(std::int64_t p);
    /// modulus: monic irreducible polynomial over GF(p), lowest degree
    /// first, length k+1. Irreducibility is verified at construction.
    static FieldPtr extension(std::int64_t p, const std::vector<std::int64_t>& modulus);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    bool is_finite() const { return kind_ != FieldKind::rationals; }
    /// q = p^k for finite fields, nullopt for the rationals.
    std::optional<std::uint64_t> order() const;
    bool same(const FieldSpec& other) const;
    std::string name() const;  // "QQ", "GF(2)", "GF(2^2)"

    // constants and conversions
    ScalarValue zero() const;
    ScalarValue one() const;
    ScalarValue from_integer(std::int64_t n) const;
    ScalarValue from_mpq(const mpq_class& q) const;  // rationals only
    /// Parse "p/q" (rationals), a decimal integer (prime field), or fail.
    ScalarValue parse(const std::string& text) const;

    // arithmetic
    ScalarValue add(const ScalarValue& a, const ScalarValue& b) const;
    ScalarValue sub(const ScalarValue& a, const ScalarValue& b) const;
    ScalarValue mul(const ScalarValue& a, const ScalarValue& b) const;
    ScalarValue neg(const ScalarValue& a) const;
    ScalarValue inv(const ScalarValue& a) const;  // DivisionByZero on 0
    ScalarValue div(const ScalarValue& a, const ScalarValue& b) const;
    ScalarValue pow(const ScalarValue& a, std::int64_t e) const;  // negative e inverts

    // predicates and canonical order
    bool is_zero(const ScalarValue& a) const;
    bool is_one(const ScalarValue& a) const;
    bool eq(const ScalarValue& a, const ScalarValue& b) const;
    /// Total order used wherever deterministic output matters:
    /// numeric for Q, enumeration index for finite fields.
    int cmp(const ScalarValue& a, const ScalarValue& b) const;

    // finite-field enumeration, index in [0, q); element_at(0) = 0, element_at(1) = 1
    std::uint64_t index_of(const ScalarValue& a) const;
    ScalarValue element_at(std::uint64_t index) const;

    std::string str(const ScalarValue& a) const;

    /// Scalars with the sign pattern 0, 1, -1, 2, -2, ... for Q; for finite
    /// fields the image of that integer sequence while fresh, then stop.
    /// Returns nullopt once the field is exhausted.
    class ShiftEnumerator {
      public:
        explicit ShiftEnumerator(FieldPtr field);
        std::optional<ScalarValue> next();

      private:
        FieldPtr field_;
        std::int64_t step_ = 0;
        std::uint64_t emitted_ = 0;
    };

  private:
    FieldSpec() = default;

    FieldKind kind_ = FieldKind::rationals;
    std::int64_t p_ = 0;  // characteristic, 0 for Q
    int k_ = 1;
    std::vector<std::int64_t> modulus_;  // extension case, length k+1, monic

    std::int64_t residue(std::int64_t v) const;
    const GFCoeffs& coeffs(const ScalarValue& a) const;
    GFCoeffs ext_mul(const GFCoeffs& a, const GFCoeffs& b) const;
    GFCoeffs ext_inv(const GFCoeffs& a) const;
};

/// Checked value type pairing a scalar with its owning field.
class FieldScalar {
  public:
    FieldScalar(FieldPtr field, ScalarValue value) : field_(std::move(field)), v_(std::move(value)) {}
    static FieldScalar integer(const FieldPtr& field, std::int64_t n) {
        return FieldScalar(field, field->from_integer(n));
    }

    const FieldPtr& field() const { return field_; }
    const ScalarValue& value() const { return v_; }

    bool is_zero() const { return field_->is_zero(v_); }
    bool is_one() const { return field_->is_one(v_); }
    FieldScalar inverse() const { return FieldScalar(field_, field_->inv(v_)); }
    FieldScalar pow(std::int64_t e) const { return FieldScalar(field_, field_->pow(v_, e)); }
    std::string str() const { return field_->str(v_); }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        check_fields(a, b);
        return FieldScalar(a.field_, a.field_->add(a.v_, b.v_));
    }
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
        check_fields(a, b);
        return FieldScalar(a.field_, a.field_->sub(a.v_, b.v_));
    }
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        check_fields(a, b);
        return FieldScalar(a.field_, a.field_->mul(a.v_, b.v_));
    }
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
        check_fields(a, b);
        return FieldScalar(a.field_, a.field_->div(a.v_, b.v_));
    }
    FieldScalar operator-() const { return FieldScalar(field_, field_->neg(v_)); }
    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        check_fields(a, b);
        return a.field_->eq(a.v_, b.v_);
    }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

  private:
    static void check_fields(const FieldScalar& a, const FieldScalar& b) {
        if (!a.field_->same(*b.field_))
            fail(ErrorCode::field_mismatch,
                 "scalars from " + a.field_->name() + " and " + b.field_->name());
    }

    FieldPtr field_;
    ScalarValue v_;
};

}  // namespace fcalg

#endif
