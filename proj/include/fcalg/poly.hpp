#ifndef FCALG_POLY_HPP
#define FCALG_POLY_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fcalg/field.hpp"

namespace fcalg {

/// Dense univariate polynomial over a FieldSpec, coefficients lowest
/// degree first and trimmed: the zero polynomial has no coefficients.
class Poly {
  public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<ScalarValue> coeffs);

    static Poly zero(const FieldPtr& field) { return Poly(field); }
    static Poly constant(const FieldPtr& field, const ScalarValue& c);
    static Poly one(const FieldPtr& field) { return constant(field, field->one()); }
    static Poly x(const FieldPtr& field);
    /// x - r
    static Poly linear_root(const FieldPtr& field, const ScalarValue& r);
    /// x^n - 1
    static Poly xn_minus_one(const FieldPtr& field, std::int64_t n);

    const FieldPtr& field() const { return field_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    const std::vector<ScalarValue>& coeffs() const { return c_; }
    /// Coefficient of x^i, zero beyond the degree.
    ScalarValue coeff(int i) const;
    const ScalarValue& lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const ScalarValue& s) const;
    Poly shifted(int n) const;  // multiply by x^n
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// (quotient, remainder); DivisionByZero when d is zero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly quo(const Poly& d) const { return divmod(d).first; }
    Poly rem(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& f) const;  // this | f
    /// Quotient when the division is known exact; error otherwise.
    Poly divexact(const Poly& d) const;

    Poly monic() const;
    Poly derivative() const;
    ScalarValue eval(const ScalarValue& x) const;
    Poly pow(std::int64_t e) const;
    static Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod);

    static Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)
    /// Monic g plus s, t with s*a + t*b = g.
    static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);

    /// degree first, then coefficient order lowest degree first.
    static int compare(const Poly& a, const Poly& b);

    std::string str() const;

  private:
    void trim();
    void check_same_field(const Poly& o) const;

    FieldPtr field_;
    std::vector<ScalarValue> c_;
};

struct FactorTerm {
    Poly factor;  // monic irreducible
    int multiplicity;
};

/// f = unit * prod(factor_i ^ multiplicity_i), factors sorted by
/// Poly::compare. Exact over finite fields; over Q, degrees past the
/// configured caps raise UnsupportedFactorization.
struct Factorization {
    ScalarValue unit;
    std::vector<FactorTerm> factors;
};

struct FactorOptions {
    int max_degree_rationals = 12;
    std::uint64_t max_candidates = 2'000'000;   // Kronecker tuple budget per stage
    std::int64_t trial_division_bound = 1'000'000;
    std::uint64_t seed = 0x5eedf00dULL;         // equal-degree splitting RNG
};

Factorization factor_poly(const Poly& f, const FactorOptions& opt = {});

/// Squarefree part of f (product of its distinct irreducible factors).
Poly squarefree_part(const Poly& f, const FactorOptions& opt = {});

}  // namespace fcalg

#endif
