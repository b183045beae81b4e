#ifndef FCALG_ELEMENT_HPP
#define FCALG_ELEMENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fcalg/algebra.hpp"

namespace fcalg {

struct ClassifyOptions {
    std::int64_t torsion_cap = 1'000'000;  // orders above this report absent
};

struct ElementProfile {
    Poly minimal_polynomial;
    bool is_nilpotent = false;
    int nilpotency_index = 0;  // minimal k with g^k = 0, meaningful when nilpotent
    bool is_unipotent = false;
    bool is_unit = false;
    std::optional<std::int64_t> torsion_order;  // smallest m >= 1 with g^m = 1
    std::int64_t torsion_bound = 0;             // cap in effect during the search
    bool is_algebraic = true;                   // always, in finite dimension
};

/// Monic generator of the kernel of F[x] -> F[g], from the Krylov sequence
/// 1, g, g^2, ...
Poly minimal_polynomial(const AlgElement& g);

ElementProfile classify(const AlgElement& g, const ClassifyOptions& opt = {});

/// Unipotence test alone: minimal polynomial of g - 1 is a power of x.
/// Cheaper than classify (no torsion search, no factorization).
bool is_unipotent_element(const AlgElement& g);

/// Closed-form inverse of g - alpha for torsion g of order m:
/// (1 - alpha^m)^{-1} * sum_{i<m} alpha^{m-1-i} g^i. Verified before returning.
/// NotTorsion when g has no finite order; ShiftNotUnit when alpha^m = 1.
AlgElement torsion_shift_inverse(const AlgElement& g, const ScalarValue& alpha);

/// First `count` scalars alpha, in the order 0, 1, -1, 2, -2, ..., with
/// mu_g(alpha) != 0, so that g - alpha is a unit. ExhaustedField when the
/// field has fewer valid shifts.
std::vector<ScalarValue> unit_shifts(const AlgElement& g, int count);

struct LocalComponent {
    AlgElement idempotent;
    Poly prime;          // irreducible factor of the minimal polynomial
    int multiplicity;    // its exponent
    Subspace component;  // F[g] e_i
    Subspace radical;    // T e_i, the nilpotent part of the component
    int residue_degree;  // degree of the residue field over F
};

struct LocalDecomposition {
    Poly minimal_polynomial;
    std::vector<LocalComponent> components;
};

/// Primary decomposition of F[g]: orthogonal idempotents from the
/// Chinese-remainder identity over the primary factors of mu_g.
LocalDecomposition local_decomposition(const AlgElement& g, const FactorOptions& opt = {});

/// Inverse of 1 + x f for nilpotent x commuting with f, by the alternating
/// geometric series. NotNilpotent / NotCommuting on bad inputs.
AlgElement unipotent_inverse(const AlgElement& x, const AlgElement& f);

}  // namespace fcalg

#endif
