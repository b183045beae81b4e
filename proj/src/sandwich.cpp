#include "fcalg/sandwich.hpp"

#include <algorithm>

#include "fcalg/element.hpp"

namespace fcalg {

namespace {

WitnessList witnesses_for_shifts(const AlgElement& a, const AlgElement& g,
                                 std::vector<ScalarValue> shifts) {
    const AlgebraPtr& A = a.algebra();
    const FieldPtr& F = A->field();
    WitnessList out{a, g, std::move(shifts), {}, {}, false};
    for (const ScalarValue& alpha : out.shifts) {
        AlgElement shifted = g - A->one().scaled(alpha);
        auto inv = try_invert(shifted);
        if (!inv)
            fail(ErrorCode::shift_not_unit,
                 "g - " + F->str(alpha) + " is not invertible, so it cannot conjugate");
        out.conjugates.push_back((*inv * a) * shifted);
    }
    std::size_t k = out.conjugates.size();
    out.distinct.assign(k, std::vector<bool>(k, false));
    out.all_distinct = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool ne = out.conjugates[i] != out.conjugates[j];
            out.distinct[i][j] = ne;
            out.distinct[j][i] = ne;
            if (!ne) out.all_distinct = false;
        }
    return out;
}

}  // namespace

WitnessList conjugate_witnesses(const AlgElement& a, const AlgElement& g, int k) {
    if (k < 1) fail(ErrorCode::usage_error, "witness count must be at least 1");
    if (a.algebra().get() != g.algebra().get())
        fail(ErrorCode::algebra_mismatch, "elements from different algebras");
    if (lie_commutator(a, g).is_zero())
        fail(ErrorCode::commuting_pair,
             "a commutes with g, so every shifted conjugate returns a itself");
    const FieldPtr& F = a.algebra()->field();
    Poly mu = minimal_polynomial(g);
    std::vector<ScalarValue> shifts;
    FieldSpec::ShiftEnumerator en(F);
    while (static_cast<int>(shifts.size()) < k) {
        auto alpha = en.next();
        if (!alpha)
            fail(ErrorCode::exhausted_field,
                 "only " + std::to_string(shifts.size()) + " of " + std::to_string(k) +
                     " requested shifts keep g - shift invertible in this field");
        if (!F->is_zero(mu.eval(*alpha))) shifts.push_back(*alpha);
    }
    return witnesses_for_shifts(a, g, std::move(shifts));
}

WitnessList conjugate_witnesses(const AlgElement& a, const AlgElement& g,
                                const std::vector<ScalarValue>& shifts) {
    if (shifts.empty()) fail(ErrorCode::usage_error, "witness count must be at least 1");
    if (a.algebra().get() != g.algebra().get())
        fail(ErrorCode::algebra_mismatch, "elements from different algebras");
    if (lie_commutator(a, g).is_zero())
        fail(ErrorCode::commuting_pair,
             "a commutes with g, so every shifted conjugate returns a itself");
    return witnesses_for_shifts(a, g, shifts);
}

std::vector<AlgElement> default_unit_sample(const AlgebraPtr& algebra,
                                            const std::vector<AlgElement>& extra) {
    std::vector<AlgElement> sample;
    auto push_unique = [&](const AlgElement& e) {
        for (const AlgElement& s : sample)
            if (s == e) return;
        sample.push_back(e);
    };
    AlgElement one = algebra->one();
    std::vector<ElementProfile> profiles;
    profiles.reserve(static_cast<std::size_t>(algebra->dim()));
    for (int i = 0; i < algebra->dim(); ++i) profiles.push_back(classify(algebra->basis_element(i)));
    for (int i = 0; i < algebra->dim(); ++i)
        if (profiles[static_cast<std::size_t>(i)].is_nilpotent)
            push_unique(one + algebra->basis_element(i));
    for (int i = 0; i < algebra->dim(); ++i) {
        AlgElement b = algebra->basis_element(i);
        if (b * b == b) push_unique(one + b);
    }
    for (int i = 0; i < algebra->dim(); ++i) {
        const ElementProfile& p = profiles[static_cast<std::size_t>(i)];
        if (p.is_unit && p.torsion_order) push_unique(algebra->basis_element(i));
    }
    for (const AlgElement& e : extra) {
        if (e.algebra().get() != algebra.get())
            fail(ErrorCode::algebra_mismatch, "sample element from another algebra");
        push_unique(e);
    }
    return sample;
}

NablaEstimate nabla_sandwich(const AlgebraPtr& algebra, const std::vector<AlgElement>& sample) {
    if (algebra->field()->is_finite())
        fail(ErrorCode::unsupported_field,
             "the sandwich argument needs an infinite base field; over a finite field "
             "use the exhaustive unit-group scan instead");
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample[i].algebra().get() != algebra.get())
            fail(ErrorCode::algebra_mismatch, "sample element from another algebra");
        if (!try_invert(sample[i]))
            fail(ErrorCode::not_a_unit,
                 "sample entry " + std::to_string(i) + " (" + sample[i].str() + ") is not a unit");
    }
    Subspace lower = center(algebra);
    Subspace upper = sample.empty() ? Subspace::full(algebra) : centralizer(sample);
    for (const AlgElement& z : lower.basis_elements())
        if (!upper.contains(z))
            fail(ErrorCode::internal_error, "central element escaped a centralizer");
    SandwichStatus status = lower == upper ? SandwichStatus::exact : SandwichStatus::interval;
    return NablaEstimate{std::move(lower), std::move(upper), status, sample};
}

CorollaryReport corollary_report(const AlgebraPtr& algebra, const NablaEstimate& estimate) {
    if (estimate.status != SandwichStatus::exact)
        fail(ErrorCode::inconclusive_sandwich,
             "the bounds differ (lower dim " + std::to_string(estimate.lower.dim()) +
                 ", upper dim " + std::to_string(estimate.upper.dim()) +
                 "); enlarge the unit sample before drawing conclusions");
    CorollaryReport r;
    r.exact = true;
    std::vector<AlgElement> bound = estimate.lower.basis_elements();
    r.torsion_commutes_with_bound = true;
    for (const AlgElement& u : estimate.certificate) {
        ElementProfile p = classify(u);
        if (!p.torsion_order) continue;
        ++r.torsion_units_checked;
        for (const AlgElement& z : bound)
            if (!lie_commutator(u, z).is_zero()) r.torsion_commutes_with_bound = false;
    }
    r.bound_is_central = true;
    for (const AlgElement& z : bound)
        for (int i = 0; i < algebra->dim(); ++i)
            if (!lie_commutator(z, algebra->basis_element(i)).is_zero()) r.bound_is_central = false;
    r.statement =
        "the computed subring bound coincides with the center; every sampled torsion "
        "unit was checked to commute with it, the assertable finite-scale content of "
        "the torsion-centrality conclusion";
    return r;
}

}  // namespace fcalg
