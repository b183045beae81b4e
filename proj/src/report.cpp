#include "fcalg/report.hpp"

#include "fcalg/element.hpp"
#include "fcalg/version.hpp"

namespace fcalg {

namespace {

ordered_json opt_int(const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

/// Span of all pairwise products of two subspace bases.
Subspace subspace_product(const Subspace& a, const Subspace& b) {
    std::vector<AlgElement> prods;
    for (const AlgElement& x : a.basis_elements())
        for (const AlgElement& y : b.basis_elements()) prods.push_back(x * y);
    return Subspace::span_elements(prods, a.algebra());
}

constexpr std::size_t kWitnessDisplayCap = 64;

}  // namespace

ordered_json make_report(const std::string& command, const LoadedDescription* input,
                         ordered_json results, ordered_json hypothesis_gates,
                         std::optional<double> seconds) {
    ordered_json r;
    r["tool"] = kToolName;
    r["version"] = kToolVersion;
    r["command"] = command;
    if (input) {
        ordered_json meta;
        meta["digest"] = "sha256:" + input->digest;
        if (!input->doc_name.empty()) meta["name"] = input->doc_name;
        meta["algebra"] = input->algebra->name();
        meta["dim"] = input->algebra->dim();
        meta["field"] = field_to_json(input->algebra->field());
        r["input"] = std::move(meta);
    }
    r["results"] = std::move(results);
    r["hypothesis_gates"] = std::move(hypothesis_gates);
    r["timing"] = seconds ? ordered_json(*seconds) : ordered_json(nullptr);
    return r;
}

std::string report_to_bytes(const ordered_json& report) {
    return report.dump(2) + "\n";
}

ordered_json validate_results(const LoadedDescription& input) {
    const AlgebraPtr& A = input.algebra;
    ordered_json out;
    out["valid"] = true;
    out["algebra"] = A->name();
    out["dim"] = A->dim();
    out["basis_names"] = A->basis_names();
    auto count = A->element_count();
    out["element_count"] = count ? ordered_json(*count) : ordered_json(nullptr);
    switch (A->origin().kind) {
        case AlgebraOrigin::Kind::structure_constants:
            out["construction"] = "structure_constants";
            break;
        case AlgebraOrigin::Kind::group_algebra:
            out["construction"] = "group_algebra";
            break;
        case AlgebraOrigin::Kind::twisted_group_algebra:
            out["construction"] = "twisted_group_algebra";
            break;
        case AlgebraOrigin::Kind::matrix:
            out["construction"] = "matrix";
            break;
        case AlgebraOrigin::Kind::triangular:
            out["construction"] = "triangular";
            break;
        case AlgebraOrigin::Kind::direct_sum:
            out["construction"] = "direct_sum";
            break;
    }
    ordered_json els;
    for (const auto& [name, el] : input.elements) els[name] = el.str();
    out["elements"] = std::move(els);
    return out;
}

ordered_json radical_results(const AlgebraPtr& algebra, const RadicalOptions& opt) {
    Subspace J = jacobson_radical(algebra, opt);
    ordered_json out;
    out["method"] = radical_method(algebra, opt);
    out["radical"] = subspace_to_json(J);
    ordered_json checks;
    checks["is_ideal"] = is_ideal(J);
    bool vanishes = true;
    if (J.dim() > 0) {
        Subspace power = J;
        int steps = 1;
        while (power.dim() > 0 && steps <= algebra->dim()) {
            power = subspace_product(power, J);
            ++steps;
        }
        vanishes = power.dim() == 0;
    }
    checks["power_vanishes"] = vanishes;
    checks["quotient_radical_dim"] = jacobson_radical(quotient(algebra, J).algebra, opt).dim();
    out["checks"] = std::move(checks);
    return out;
}

ordered_json center_results(const AlgebraPtr& algebra) {
    Subspace Z = center(algebra);
    ordered_json out;
    out["center"] = subspace_to_json(Z);
    CommutativityResult c = is_commutative(algebra);
    out["commutative"] = c.commutative;
    if (c.witness) {
        ordered_json w;
        w["x"] = c.witness->first.str();
        w["y"] = c.witness->second.str();
        out["noncommuting_witness"] = std::move(w);
    } else {
        out["noncommuting_witness"] = nullptr;
    }
    return out;
}

ordered_json classify_results(const std::string& name, const AlgElement& g) {
    ElementProfile p = classify(g);
    ordered_json out;
    out["element"] = name;
    out["value"] = element_to_json(g);
    out["minimal_polynomial"] = poly_to_json(p.minimal_polynomial);
    out["is_algebraic"] = p.is_algebraic;
    out["is_nilpotent"] = p.is_nilpotent;
    out["nilpotency_index"] = p.is_nilpotent ? ordered_json(p.nilpotency_index) : ordered_json(nullptr);
    out["is_unipotent"] = p.is_unipotent;
    out["is_unit"] = p.is_unit;
    out["torsion_order"] = p.torsion_order ? ordered_json(*p.torsion_order) : ordered_json(nullptr);
    out["torsion_bound"] = p.torsion_bound;
    return out;
}

ordered_json decompose_results(const std::string& name, const AlgElement& g,
                               const FactorOptions& opt) {
    LocalDecomposition d = local_decomposition(g, opt);
    const AlgebraPtr& A = g.algebra();
    ordered_json out;
    out["element"] = name;
    out["value"] = element_to_json(g);
    out["minimal_polynomial"] = poly_to_json(d.minimal_polynomial);
    out["component_count"] = d.components.size();
    ordered_json comps = ordered_json::array();
    for (const LocalComponent& c : d.components) {
        ordered_json cj;
        cj["prime"] = poly_to_json(c.prime);
        cj["multiplicity"] = c.multiplicity;
        cj["residue_degree"] = c.residue_degree;
        cj["idempotent"] = element_to_json(c.idempotent);
        cj["component_dim"] = c.component.dim();
        cj["radical_dim"] = c.radical.dim();
        comps.push_back(std::move(cj));
    }
    out["components"] = std::move(comps);
    ordered_json checks;
    AlgElement sum = A->zero();
    bool orthogonal = true;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        sum = sum + d.components[i].idempotent;
        for (std::size_t j = 0; j < d.components.size(); ++j)
            if (i != j && !(d.components[i].idempotent * d.components[j].idempotent).is_zero())
                orthogonal = false;
    }
    checks["idempotents_sum_to_one"] = sum == A->one();
    checks["idempotents_orthogonal"] = orthogonal;
    checks["component_dims_sum_to_minimal_degree"] = [&] {
        int total = 0;
        for (const LocalComponent& c : d.components) total += c.component.dim();
        return total == d.minimal_polynomial.degree();
    }();
    out["checks"] = std::move(checks);
    return out;
}

ordered_json units_results(UnitGroupTable& table, int threads) {
    if (!table.has_conjugacy()) conjugacy_data(table, threads);
    ordered_json out;
    out["order"] = table.order();
    out["class_count"] = table.class_reps.size();
    ordered_json rows = ordered_json::array();
    for (std::size_t c = 0; c < table.class_reps.size(); ++c) {
        std::uint32_t rep = table.class_reps[c];
        ordered_json row;
        row["representative"] = element_to_json(table.exact(rep));
        row["element_order"] = table.element_orders[rep];
        row["class_size"] = table.class_sizes[c];
        row["centralizer_order"] = table.centralizer_orders[rep];
        row["centralizer_index"] = table.order() / table.centralizer_orders[rep];
        rows.push_back(std::move(row));
    }
    out["classes"] = std::move(rows);
    return out;
}

ordered_json fc_results(UnitGroupTable& table, const FCOptions& opt) {
    FCReport r = fc_report(table, opt);
    ordered_json out;
    out["unit_order"] = r.unit_order;
    ordered_json fc;
    fc["order"] = r.delta_u_order;
    fc["equals_units"] = r.delta_u_equals_units;
    out["finite_conjugate_subgroup"] = std::move(fc);
    ordered_json nb;
    nb["dim"] = r.nabla_dim;
    nb["equals_algebra"] = r.nabla_equals_algebra;
    nb["elements_scanned"] = r.nabla_elements_scanned;
    nb["max_centralizer_index"] = r.max_centralizer_index;
    out["finite_conjugate_subring"] = std::move(nb);
    ordered_json ts;
    ts["order"] = r.torsion_subgroup_order;
    ts["is_subgroup"] = r.torsion_is_subgroup;
    ts["quotient_abelian"] = r.quotient_abelian;
    out["torsion_subgroup"] = std::move(ts);
    out["class_equation_holds"] = r.class_equation_holds;
    ordered_json rows = ordered_json::array();
    for (const FCClassRow& row : r.classes) {
        ordered_json rj;
        rj["representative"] = element_to_json(table.exact(row.representative));
        rj["element_order"] = row.element_order;
        rj["class_size"] = row.class_size;
        rj["centralizer_order"] = row.centralizer_order;
        rj["centralizer_index"] = row.centralizer_index;
        rows.push_back(std::move(rj));
    }
    out["classes"] = std::move(rows);
    return out;
}

ordered_json series_results(UnitGroupTable& table) {
    SeriesReport s = series_report(table);
    Theorem2Report t = theorem2_report(table);
    ordered_json out;
    out["derived_orders"] = s.derived_orders;
    out["derived_length"] = opt_int(s.derived_length);
    out["lower_central_orders"] = s.lower_central_orders;
    out["nilpotency_class"] = opt_int(s.nilpotency_class);
    ordered_json cs;
    cs["all_unipotent"] = s.commutator_all_unipotent;
    cs["central"] = s.commutator_central;
    cs["two_methods_agree"] = s.commutator_two_ways_agree;
    out["commutator_subgroup"] = std::move(cs);
    out["torsion_commutator_abelian"] = s.t_delta_abelian;
    ordered_json gate;
    gate["hypothesis"] = t.hypothesis_status;
    gate["satisfied"] = t.hypothesis_satisfied;
    gate["premise_all_algebraic"] = t.premise_all_algebraic;
    ordered_json concl;
    concl["commutator_unipotent"] = t.concl1_commutator_unipotent;
    concl["commutator_central"] = t.concl1_commutator_central;
    concl["nilpotency_class_le_2"] = t.concl2_delta_nilpotent_class_le_2;
    concl["solvable_length_le_3"] = t.concl3_solvable_length_le_3;
    concl["torsion_nilpotency_class_le_2"] = t.concl3_t_delta_nilpotent_class_le_2;
    gate["conclusions"] = std::move(concl);
    gate["wording_note"] = t.wording_note;
    out["theorem_gate"] = std::move(gate);
    return out;
}

ordered_json omega_results(const OmegaReport& r, const std::string& x_name,
                           const std::string& y_name, const AlgElement& z) {
    ordered_json out;
    out["mode"] = r.mode;
    out["commutator_of"] = ordered_json::array({x_name, y_name});
    out["commutator"] = element_to_json(z);
    out["count"] = r.count;
    out["includes_identity"] = r.includes_identity;
    out["identity_note"] = "1 - 1 = 0 annihilates everything, so the identity always counts";
    out["count_by_membership"] = r.count_by_membership;
    out["methods_agree"] = r.methods_agree;
    ordered_json ws = ordered_json::array();
    std::size_t shown = std::min(r.witnesses.size(), kWitnessDisplayCap);
    for (std::size_t i = 0; i < shown; ++i) ws.push_back(element_to_json(r.witnesses[i]));
    out["witnesses_shown"] = shown;
    out["witnesses_total"] = r.witnesses.size();
    out["witnesses"] = std::move(ws);
    return out;
}

ordered_json witnesses_results(const WitnessList& w) {
    const FieldPtr& F = w.a.algebra()->field();
    ordered_json out;
    out["a"] = element_to_json(w.a);
    out["g"] = element_to_json(w.g);
    ordered_json shifts = ordered_json::array();
    for (const ScalarValue& s : w.shifts) shifts.push_back(scalar_to_json(F, s));
    out["shifts"] = std::move(shifts);
    ordered_json conj = ordered_json::array();
    for (const AlgElement& c : w.conjugates) conj.push_back(element_to_json(c));
    out["conjugates"] = std::move(conj);
    out["pairwise_distinct"] = w.distinct;
    out["all_distinct"] = w.all_distinct;
    return out;
}

ordered_json sandwich_results(const AlgebraPtr& algebra, const NablaEstimate& est) {
    ordered_json out;
    out["status"] = est.status == SandwichStatus::exact ? "exact" : "interval";
    out["lower"] = subspace_to_json(est.lower);
    out["upper"] = subspace_to_json(est.upper);
    ordered_json cert = ordered_json::array();
    for (const AlgElement& u : est.certificate) cert.push_back(element_to_json(u));
    out["certificate"] = std::move(cert);
    if (est.status == SandwichStatus::exact) {
        out["conclusion"] =
            "the finite-conjugate subring equals the center: the sampled algebraic units "
            "pin the upper bound down to the lower one";
        out["suggestion"] = nullptr;
        CorollaryReport cr = corollary_report(algebra, est);
        ordered_json cj;
        cj["torsion_units_checked"] = cr.torsion_units_checked;
        cj["torsion_commutes_with_bound"] = cr.torsion_commutes_with_bound;
        cj["bound_is_central"] = cr.bound_is_central;
        cj["statement"] = cr.statement;
        out["corollary"] = std::move(cj);
    } else {
        out["conclusion"] = nullptr;
        out["suggestion"] =
            "the bounds differ; enlarge the unit sample to shrink the upper bound";
        out["corollary"] = nullptr;
    }
    return out;
}

}  // namespace fcalg
