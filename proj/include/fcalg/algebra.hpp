#ifndef FCALG_ALGEBRA_HPP
#define FCALG_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcalg/field.hpp"
#include "fcalg/matrix.hpp"
#include "fcalg/poly.hpp"

namespace fcalg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct FiniteGroupTable;

/// Construction recipe an algebra was built from, kept for reporting and
/// for group-specific operations (the basis of a group algebra is the
/// group itself).
struct AlgebraOrigin {
    enum class Kind {
        structure_constants,
        group_algebra,
        twisted_group_algebra,
        matrix,
        triangular,
        direct_sum
    };
    Kind kind = Kind::structure_constants;
    std::shared_ptr<const FiniteGroupTable> group;  // group-algebra kinds only
};

/// Element of an Algebra: a coordinate vector over the defining basis.
class AlgElement {
  public:
    AlgElement(AlgebraPtr algebra, std::vector<ScalarValue> coords);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<ScalarValue>& coords() const { return c_; }
    const ScalarValue& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const AlgElement& o) const;  // algebra product
    AlgElement operator-() const;
    AlgElement scaled(const ScalarValue& s) const;
    bool operator==(const AlgElement& o) const;
    bool operator!=(const AlgElement& o) const { return !(*this == o); }
    AlgElement pow(std::int64_t e) const;  // negative e via try_invert, NotAUnit on failure

    std::string str() const;

  private:
    void check_same(const AlgElement& o) const;

    AlgebraPtr alg_;
    std::vector<ScalarValue> c_;
};

/// Subspace of an algebra stored as a canonical RREF basis matrix,
/// so equal subspaces have identical representations.
class Subspace {
  public:
    static Subspace span(AlgebraPtr algebra, const std::vector<std::vector<ScalarValue>>& vectors);
    static Subspace span_elements(const std::vector<AlgElement>& elements, AlgebraPtr algebra);
    static Subspace zero(AlgebraPtr algebra);
    static Subspace full(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<AlgElement> basis_elements() const;
    bool contains(const AlgElement& x) const;
    bool contains_vector(const std::vector<ScalarValue>& v) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    static Subspace sum(const Subspace& a, const Subspace& b);
    /// Coordinates of x in this basis; nullopt if x is outside.
    std::optional<std::vector<ScalarValue>> coordinates_of(const AlgElement& x) const;

  private:
    Subspace(AlgebraPtr algebra, Matrix basis) : alg_(std::move(algebra)), basis_(std::move(basis)) {}

    AlgebraPtr alg_;
    Matrix basis_;  // RREF, no zero rows
};

/// Finite-dimensional unital associative algebra presented by structure
/// constants over an exact field.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    /// structure[i][j] holds the coordinates of b_i * b_j. When trusted is
    /// false, associativity is checked on all basis triples and unity on
    /// all basis elements; constructor-built algebras pass trusted = true.
    static AlgebraPtr create(FieldPtr field, std::vector<std::string> basis_names,
                             std::vector<std::vector<std::vector<ScalarValue>>> structure,
                             std::vector<ScalarValue> unity, std::string name,
                             bool trusted = false, AlgebraOrigin origin = {});

    const FieldPtr& field() const { return field_; }
    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const AlgebraOrigin& origin() const { return origin_; }
    /// Total number of elements q^dim, nullopt over the rationals or on overflow past 2^63.
    std::optional<std::uint64_t> element_count() const;

    /// Coordinates of b_i * b_j (length dim).
    const ScalarValue* product_coords(int i, int j) const {
        return &sc_[(static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)) * n_];
    }

    AlgElement element(std::vector<ScalarValue> coords) const;
    AlgElement zero() const;
    AlgElement one() const;
    AlgElement basis_element(int i) const;
    AlgElement from_integer(std::int64_t v) const;  // v * 1

    std::vector<ScalarValue> multiply_coords(const std::vector<ScalarValue>& x,
                                             const std::vector<ScalarValue>& y) const;
    /// Matrix of left multiplication by x on the algebra (columns are x*b_j).
    Matrix left_mult_matrix(const std::vector<ScalarValue>& x) const;
    Matrix right_mult_matrix(const std::vector<ScalarValue>& x) const;

  private:
    Algebra() = default;
    void validate_unity() const;
    void validate_associativity() const;

    FieldPtr field_;
    int n_ = 0;
    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<ScalarValue> sc_;  // structure constants, [(i*n+j)*n+k]
    std::vector<ScalarValue> one_;
    AlgebraOrigin origin_;
};

// --- operations -------------------------------------------------------------

AlgElement multiply(const AlgElement& a, const AlgElement& b);
AlgElement lie_commutator(const AlgElement& x, const AlgElement& y);
/// Exact two-sided inverse, or nullopt when the left-regular matrix is singular.
std::optional<AlgElement> try_invert(const AlgElement& u);
/// try_invert that fails with NotAUnit instead of returning nullopt.
AlgElement invert(const AlgElement& u);

Subspace centralizer(const std::vector<AlgElement>& sample);
Subspace center(const AlgebraPtr& algebra);
Subspace left_annihilator(const AlgElement& z);

struct RadicalOptions {
    int iterated_trace_cap = 64;             // cap on the prime-restricted dimension
    std::uint64_t enumeration_cap = 1u << 24;  // brute-force fallback cap on q^dim
};
/// Jacobson radical: Dickson trace form in characteristic 0; iterated
/// characteristic-polynomial-coefficient chain in characteristic p with a
/// brute-force quasi-regularity fallback below the enumeration cap.
Subspace jacobson_radical(const AlgebraPtr& algebra, const RadicalOptions& opt = {});
/// Definition-level oracle: x is radical iff 1 + ax is a unit for every a.
/// Requires a finite algebra with q^dim <= cap.
Subspace jacobson_radical_bruteforce(const AlgebraPtr& algebra, std::uint64_t cap = 1u << 24);
/// Which method jacobson_radical would pick for this algebra ("none" when
/// it would fail with UnsupportedCharacteristic).
const char* radical_method(const AlgebraPtr& algebra, const RadicalOptions& opt = {});

bool is_ideal(const Subspace& s);

struct QuotientResult {
    AlgebraPtr algebra;
    Matrix projection;  // (dim A/I) x (dim A): coordinates of each basis image
    Matrix section;     // (dim A) x (dim A/I): representative coordinates per quotient basis vector
};
/// Quotient by a verified two-sided ideal; NotAnIdeal otherwise.
QuotientResult quotient(const AlgebraPtr& algebra, const Subspace& ideal);

Subspace generated_subalgebra(const AlgebraPtr& algebra, const std::vector<AlgElement>& gens);

struct CommutativityResult {
    bool commutative;
    std::optional<std::pair<AlgElement, AlgElement>> witness;
};
CommutativityResult is_commutative(const AlgebraPtr& algebra);
CommutativityResult is_commutative(const Subspace& subspace);

/// f(g) by Horner's rule inside the algebra.
AlgElement eval_poly(const Poly& f, const AlgElement& g);

}  // namespace fcalg

#endif
