#ifndef FCALG_UNITGROUP_HPP
#define FCALG_UNITGROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcalg/algebra.hpp"
#include "fcalg/fast.hpp"

namespace fcalg {

struct UnitGroupOptions {
    std::uint64_t cap = 1u << 24;  // on q^dim, the number of elements scanned
    int threads = 1;
};

/// Exhaustive table of U(R) for a finite algebra. Elements are stored as
/// field-index encodings in ascending (lexicographic coordinate) order;
/// positions in `encodes` are the element ids used everywhere else.
/// Conjugacy fields are empty until conjugacy_data fills them.
struct UnitGroupTable {
    AlgebraPtr algebra;
    std::shared_ptr<FastAlgebra> fast;
    std::vector<std::uint64_t> encodes;
    std::vector<std::uint32_t> inverse_of;

    std::vector<std::uint32_t> class_of;
    std::vector<std::uint32_t> class_reps;  // ascending; each is the least element of its class
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::uint64_t> centralizer_orders;  // by direct commuting count
    std::vector<std::uint64_t> element_orders;

    std::uint64_t order() const { return encodes.size(); }
    bool has_conjugacy() const { return !class_of.empty(); }
    std::vector<std::uint32_t> coords(std::uint32_t i) const {
        return fast->decode(encodes[static_cast<std::size_t>(i)]);
    }
    /// Position of an encoded element; element must be a unit in the table.
    std::uint32_t find(std::uint64_t encode) const;
    std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
    std::uint32_t inv(std::uint32_t i) const { return inverse_of[static_cast<std::size_t>(i)]; }
    /// (g, h) = g^-1 h^-1 g h
    std::uint32_t commutator(std::uint32_t g, std::uint32_t h) const;
    std::uint32_t one_index() const;
    AlgElement exact(std::uint32_t i) const { return fast->to_exact(coords(i)); }
};

/// Full-scan enumeration with the left-regular invertibility test.
/// EnumerationTooLarge when q^dim exceeds the cap.
UnitGroupTable enumerate_units(const AlgebraPtr& algebra, const UnitGroupOptions& opt = {});

/// Fills class_of / class_reps / class_sizes / centralizer_orders /
/// element_orders. Centralizer orders come from a direct commuting count,
/// independent of the orbit partition, so the class equation is a real check.
void conjugacy_data(UnitGroupTable& table, int threads = 1);

struct FCClassRow {
    std::uint32_t representative;  // element id, the least in its class
    std::uint64_t element_order;
    std::uint64_t class_size;
    std::uint64_t centralizer_order;
    std::uint64_t centralizer_index;
};

struct FCReport {
    std::uint64_t unit_order = 0;
    std::uint64_t delta_u_order = 0;  // every index is finite here, so = unit_order
    bool delta_u_equals_units = false;
    int nabla_dim = 0;
    bool nabla_equals_algebra = false;
    std::uint64_t nabla_elements_scanned = 0;  // ring elements checked literally
    std::uint64_t max_centralizer_index = 0;   // over the scanned ring elements
    std::uint64_t torsion_subgroup_order = 0;  // t(delta U)
    bool torsion_is_subgroup = false;          // product/inverse closure, verified
    bool quotient_abelian = false;             // delta U / t(delta U)
    bool class_equation_holds = false;         // per element: |class| * |centralizer| = |U|
    std::vector<FCClassRow> classes;
};

struct FCOptions {
    int threads = 1;
    std::uint64_t full_scan_limit = 4096;  // literal nabla scan when |R| is within this
};

/// Delta U, nabla, t(Delta U) computed literally from the definitions,
/// with the per-class index table carrying the content.
FCReport fc_report(UnitGroupTable& table, const FCOptions& opt = {});

struct SeriesReport {
    std::vector<std::uint64_t> derived_orders;  // |U|, |U'|, |U''|, ... until stable
    std::optional<int> derived_length;
    std::vector<std::uint64_t> lower_central_orders;
    std::optional<int> nilpotency_class;
    bool commutator_all_unipotent = false;
    bool commutator_central = false;  // commutator subgroup central in Delta U = U
    bool t_delta_abelian = false;
    bool commutator_two_ways_agree = false;
};

SeriesReport series_report(UnitGroupTable& table);

struct Theorem2Report {
    std::string hypothesis_status;
    bool hypothesis_satisfied = false;
    bool premise_all_algebraic = true;  // conclusion 2 premise; holds in finite dimension
    bool concl1_commutator_unipotent = false;
    bool concl1_commutator_central = false;
    std::optional<int> nilpotency_class;
    bool concl2_delta_nilpotent_class_le_2 = false;
    std::optional<int> derived_length;
    bool concl3_solvable_length_le_3 = false;
    bool concl3_t_delta_nilpotent_class_le_2 = false;
    std::string wording_note;
};

/// Evaluates the three conclusions with the hypothesis permanently gated:
/// no finite scale satisfies it, so failures are recorded, never asserted
/// as counterexamples.
Theorem2Report theorem2_report(UnitGroupTable& table);

struct OmegaReport {
    std::string mode;  // "units" or "group"
    std::uint64_t count = 0;
    bool includes_identity = false;
    std::vector<AlgElement> witnesses;  // the h with (1-h) z = 0, deterministic order
    std::uint64_t count_by_membership = 0;
    bool methods_agree = false;
};

/// Count of h in U with (1 - h) z = 0, computed by direct products and
/// again by membership of 1 - h in the left annihilator subspace.
/// ZeroCommutator when z = 0.
OmegaReport omega_annihilator_count(UnitGroupTable& table, const AlgElement& z);

/// Companion mode: h ranges over the group basis elements of a group or
/// twisted group algebra, so it works over the rationals too.
OmegaReport omega_annihilator_count_group(const AlgebraPtr& algebra, const AlgElement& z);

}  // namespace fcalg

#endif
