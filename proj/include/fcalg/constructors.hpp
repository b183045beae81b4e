#ifndef FCALG_CONSTRUCTORS_HPP
#define FCALG_CONSTRUCTORS_HPP

#include <string>
#include <vector>

#include "fcalg/algebra.hpp"
#include "fcalg/groups.hpp"

namespace fcalg {

/// 2-cocycle on a finite group with values in the units of F. Validation
/// checks the cocycle identity lambda(g,h) lambda(gh,k) = lambda(h,k) lambda(g,hk)
/// on all triples and that every entry is nonzero.
struct Cocycle {
    FieldPtr field;
    std::vector<std::vector<ScalarValue>> table;  // table[i][j] = lambda(g_i, g_j)

    static Cocycle create(FieldPtr field, const FiniteGroupTable& group,
                          std::vector<std::vector<ScalarValue>> table);
    static Cocycle trivial(FieldPtr field, int order);

    /// Rescaled so that lambda(1,g) = lambda(g,1) = 1. Any valid cocycle has
    /// constant value on those pairs, so dividing by lambda(1,1) suffices.
    Cocycle normalized(const FiniteGroupTable& group) const;
};

/// Twisted group algebra together with the distinguished unit subset
/// {scalar * u_g}: the image of the basis under scaling by nonzero field
/// elements, the natural home of omega-subgroup experiments.
struct TwistedGroupAlgebra {
    AlgebraPtr algebra;
    Cocycle cocycle;  // normalized form actually used
    std::string distinguished_subset;
};

AlgebraPtr group_algebra(FieldPtr field, GroupPtr group);
TwistedGroupAlgebra twisted_group_algebra(FieldPtr field, GroupPtr group, const Cocycle& lambda);
AlgebraPtr matrix_algebra(FieldPtr field, int n);
AlgebraPtr triangular_algebra(FieldPtr field, int n);
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace fcalg

#endif
