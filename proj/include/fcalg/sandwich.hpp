#ifndef FCALG_SANDWICH_HPP
#define FCALG_SANDWICH_HPP

#include <string>
#include <vector>

#include "fcalg/algebra.hpp"

namespace fcalg {

enum class SandwichStatus { exact, interval };

/// Two-sided estimate of the finite-conjugate subring over an infinite base
/// field: the center from below, the centralizer of a sample of algebraic
/// units from above. Exact when the bounds coincide, in which case the
/// subring is the center.
struct NablaEstimate {
    Subspace lower;  // the center
    Subspace upper;  // centralizer of the sample
    SandwichStatus status;
    std::vector<AlgElement> certificate;  // the validated sample units
};

/// List of pairwise-distinct conjugates (g - a_i)^-1 a (g - a_i), the
/// finite certificate that a has at least k conjugates under units.
struct WitnessList {
    AlgElement a;
    AlgElement g;
    std::vector<ScalarValue> shifts;
    std::vector<AlgElement> conjugates;
    std::vector<std::vector<bool>> distinct;  // pairwise comparison, diagonal false
    bool all_distinct = false;
};

/// k conjugates of a by shifted copies of g, shifts drawn from the
/// deterministic field enumeration, each pairwise inequality checked
/// exactly. CommutingPair when [a, g] = 0; ExhaustedField when a finite
/// field runs out of valid shifts.
WitnessList conjugate_witnesses(const AlgElement& a, const AlgElement& g, int k);

/// Same with caller-chosen shifts; each must keep g - shift invertible
/// (ShiftNotUnit otherwise).
WitnessList conjugate_witnesses(const AlgElement& a, const AlgElement& g,
                                const std::vector<ScalarValue>& shifts);

/// Deterministic unit sample: 1 + b for each nilpotent basis element,
/// 1 + b for each idempotent one, b for each torsion-unit one, then the
/// caller's extras; deduplicated, order preserved.
std::vector<AlgElement> default_unit_sample(const AlgebraPtr& algebra,
                                            const std::vector<AlgElement>& extra = {});

/// The sandwich itself. Requires an infinite base field (UnsupportedField)
/// and validated units in the sample (NotAUnit).
NablaEstimate nabla_sandwich(const AlgebraPtr& algebra, const std::vector<AlgElement>& sample);

struct CorollaryReport {
    bool exact = false;
    std::uint64_t torsion_units_checked = 0;  // torsion members of the certificate
    bool torsion_commutes_with_bound = false;
    bool bound_is_central = false;  // lower-bound basis commutes with the whole algebra
    std::string statement;
};

/// Checks, at the algebra level, the assertable content of the torsion
/// conclusions: every sampled torsion unit commutes with the computed
/// subring bound. InconclusiveSandwich unless the estimate is exact.
CorollaryReport corollary_report(const AlgebraPtr& algebra, const NablaEstimate& estimate);

}  // namespace fcalg

#endif
