#include "fcalg/constructors.hpp"

#include "fcalg/errors.hpp"

namespace fcalg {

Cocycle Cocycle::create(FieldPtr field, const FiniteGroupTable& group,
                        std::vector<std::vector<ScalarValue>> table) {
    int n = group.order;
    if (static_cast<int>(table.size()) != n)
        fail(ErrorCode::invalid_cocycle, "cocycle table must have " + std::to_string(n) + " rows");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n)
            fail(ErrorCode::invalid_cocycle, "cocycle row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (field->is_zero(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
                fail(ErrorCode::invalid_cocycle, "cocycle value at (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ") is zero");
    }
    auto at = [&](int i, int j) -> const ScalarValue& {
        return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                ScalarValue lhs = field->mul(at(g, h), at(group.multiply(g, h), k));
                ScalarValue rhs = field->mul(at(h, k), at(g, group.multiply(h, k)));
                if (!field->eq(lhs, rhs))
                    fail(ErrorCode::invalid_cocycle,
                         "cocycle identity fails on triple (" + std::to_string(g) + "," +
                             std::to_string(h) + "," + std::to_string(k) + ")");
            }
    Cocycle c;
    c.field = std::move(field);
    c.table = std::move(table);
    return c;
}

Cocycle Cocycle::trivial(FieldPtr field, int order) {
    Cocycle c;
    c.table.assign(static_cast<std::size_t>(order),
                   std::vector<ScalarValue>(static_cast<std::size_t>(order), field->one()));
    c.field = std::move(field);
    return c;
}

Cocycle Cocycle::normalized(const FiniteGroupTable& group) const {
    const ScalarValue& unit_value = table[static_cast<std::size_t>(group.identity)]
                                         [static_cast<std::size_t>(group.identity)];
    if (field->is_one(unit_value)) return *this;
    ScalarValue scale = field->inv(unit_value);
    Cocycle c;
    c.field = field;
    c.table = table;
    for (auto& row : c.table)
        for (auto& v : row) v = field->mul(v, scale);
    return c;
}

AlgebraPtr group_algebra(FieldPtr field, GroupPtr group) {
    int n = group->order;
    std::vector<std::vector<std::vector<ScalarValue>>> sc(
        static_cast<std::size_t>(n),
        std::vector<std::vector<ScalarValue>>(static_cast<std::size_t>(n),
                                              std::vector<ScalarValue>(static_cast<std::size_t>(n), field->zero())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
              [static_cast<std::size_t>(group->multiply(i, j))] = field->one();
    std::vector<ScalarValue> one(static_cast<std::size_t>(n), field->zero());
    one[static_cast<std::size_t>(group->identity)] = field->one();
    AlgebraOrigin origin{AlgebraOrigin::Kind::group_algebra, group};
    return Algebra::create(std::move(field), group->names, std::move(sc), std::move(one),
                           group->name.empty() ? "group algebra" : "F[" + group->name + "]", true,
                           std::move(origin));
}

TwistedGroupAlgebra twisted_group_algebra(FieldPtr field, GroupPtr group, const Cocycle& lambda) {
    if (!lambda.field->same(*field))
        fail(ErrorCode::field_mismatch, "cocycle field differs from coefficient field");
    Cocycle norm = lambda.normalized(*group);
    int n = group->order;
    std::vector<std::vector<std::vector<ScalarValue>>> sc(
        static_cast<std::size_t>(n),
        std::vector<std::vector<ScalarValue>>(static_cast<std::size_t>(n),
                                              std::vector<ScalarValue>(static_cast<std::size_t>(n), field->zero())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
              [static_cast<std::size_t>(group->multiply(i, j))] =
                norm.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<ScalarValue> one(static_cast<std::size_t>(n), field->zero());
    one[static_cast<std::size_t>(group->identity)] = field->one();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("u_" + group->names[static_cast<std::size_t>(i)]);
    AlgebraOrigin origin{AlgebraOrigin::Kind::twisted_group_algebra, group};
    TwistedGroupAlgebra out;
    out.algebra = Algebra::create(std::move(field), std::move(names), std::move(sc), std::move(one),
                                  "F_lambda[" + group->name + "]", true, std::move(origin));
    out.cocycle = std::move(norm);
    out.distinguished_subset =
        "all scalar multiples c*u_g with c a nonzero field element and g a group element";
    return out;
}

AlgebraPtr matrix_algebra(FieldPtr field, int n) {
    if (n < 1) fail(ErrorCode::invalid_algebra, "matrix algebra needs n >= 1");
    int d = n * n;
    std::vector<std::vector<std::vector<ScalarValue>>> sc(
        static_cast<std::size_t>(d),
        std::vector<std::vector<ScalarValue>>(static_cast<std::size_t>(d),
                                              std::vector<ScalarValue>(static_cast<std::size_t>(d), field->zero())));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    if (b == c)
                        sc[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(c * n + e)]
                          [static_cast<std::size_t>(a * n + e)] = field->one();
    std::vector<ScalarValue> one(static_cast<std::size_t>(d), field->zero());
    for (int a = 0; a < n; ++a) one[static_cast<std::size_t>(a * n + a)] = field->one();
    std::vector<std::string> names;
    const char* sep = n > 9 ? "_" : "";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            names.push_back("E" + std::to_string(a + 1) + sep + std::to_string(b + 1));
    AlgebraOrigin origin{AlgebraOrigin::Kind::matrix, nullptr};
    return Algebra::create(std::move(field), std::move(names), std::move(sc), std::move(one),
                           "M" + std::to_string(n), true, std::move(origin));
}

AlgebraPtr triangular_algebra(FieldPtr field, int n) {
    if (n < 1) fail(ErrorCode::invalid_algebra, "triangular algebra needs n >= 1");
    std::vector<std::pair<int, int>> idx;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) idx.emplace_back(a, b);
    int d = static_cast<int>(idx.size());
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < d; ++i)
        pos[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)].first)]
           [static_cast<std::size_t>(idx[static_cast<std::size_t>(i)].second)] = i;
    std::vector<std::vector<std::vector<ScalarValue>>> sc(
        static_cast<std::size_t>(d),
        std::vector<std::vector<ScalarValue>>(static_cast<std::size_t>(d),
                                              std::vector<ScalarValue>(static_cast<std::size_t>(d), field->zero())));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (idx[static_cast<std::size_t>(i)].second == idx[static_cast<std::size_t>(j)].first)
                sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(
                    pos[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)].first)]
                       [static_cast<std::size_t>(idx[static_cast<std::size_t>(j)].second)])] = field->one();
    std::vector<ScalarValue> one(static_cast<std::size_t>(d), field->zero());
    for (int a = 0; a < n; ++a)
        one[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)])] = field->one();
    std::vector<std::string> names;
    const char* sep = n > 9 ? "_" : "";
    for (auto [a, b] : idx) names.push_back("E" + std::to_string(a + 1) + sep + std::to_string(b + 1));
    AlgebraOrigin origin{AlgebraOrigin::Kind::triangular, nullptr};
    return Algebra::create(std::move(field), std::move(names), std::move(sc), std::move(one),
                           "T" + std::to_string(n), true, std::move(origin));
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a->field()->same(*b->field()))
        fail(ErrorCode::field_mismatch, "direct sum needs both summands over the same field");
    const FieldPtr& F = a->field();
    int na = a->dim(), nb = b->dim();
    int d = na + nb;
    std::vector<std::vector<std::vector<ScalarValue>>> sc(
        static_cast<std::size_t>(d),
        std::vector<std::vector<ScalarValue>>(static_cast<std::size_t>(d),
                                              std::vector<ScalarValue>(static_cast<std::size_t>(d), F->zero())));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const ScalarValue* c = a->product_coords(i, j);
            for (int k = 0; k < na; ++k)
                sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = c[k];
        }
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            const ScalarValue* c = b->product_coords(i, j);
            for (int k = 0; k < nb; ++k)
                sc[static_cast<std::size_t>(na + i)][static_cast<std::size_t>(na + j)]
                  [static_cast<std::size_t>(na + k)] = c[k];
        }
    std::vector<ScalarValue> one;
    one.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < na; ++i) one.push_back(a->one().coord(i));
    for (int i = 0; i < nb; ++i) one.push_back(b->one().coord(i));
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(d));
    for (auto& nm : a->basis_names()) names.push_back(nm + "+0");
    for (auto& nm : b->basis_names()) names.push_back("0+" + nm);
    AlgebraOrigin origin{AlgebraOrigin::Kind::direct_sum, nullptr};
    return Algebra::create(F, std::move(names), std::move(sc), std::move(one),
                           a->name() + "(+)" + b->name(), true, std::move(origin));
}

}  // namespace fcalg
