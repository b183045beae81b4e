#include "fcalg/groups.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fcalg/errors.hpp"

namespace fcalg {

namespace {

void check_triple(const std::vector<std::vector<int>>& t, int i, int j, int k) {
    std::size_t a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j), c = static_cast<std::size_t>(k);
    int left = t[static_cast<std::size_t>(t[a][b])][c];
    int right = t[a][static_cast<std::size_t>(t[b][c])];
    if (left != right)
        fail(ErrorCode::invalid_group_table,
             "associativity fails on triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")");
}

}  // namespace

std::shared_ptr<const FiniteGroupTable> FiniteGroupTable::create(std::string name,
                                                                 std::vector<std::string> element_names,
                                                                 std::vector<std::vector<int>> cayley) {
    int n = static_cast<int>(cayley.size());
    if (n < 1) fail(ErrorCode::invalid_group_table, "group order must be at least 1");
    if (element_names.empty())
        for (int i = 0; i < n; ++i) element_names.push_back("g" + std::to_string(i));
    if (static_cast<int>(element_names.size()) != n)
        fail(ErrorCode::invalid_group_table, "expected " + std::to_string(n) + " element names");
    {
        std::set<std::string> uniq(element_names.begin(), element_names.end());
        if (static_cast<int>(uniq.size()) != n)
            fail(ErrorCode::invalid_group_table, "element names are not distinct");
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(cayley[static_cast<std::size_t>(i)].size()) != n)
            fail(ErrorCode::invalid_group_table, "row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            int v = cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < 0 || v >= n)
                fail(ErrorCode::invalid_group_table, "entry (" + std::to_string(i) + "," +
                                                         std::to_string(j) + ") out of range");
        }
    }
    // Latin square: every row and column is a permutation
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row_seen(static_cast<std::size_t>(n), false), col_seen(static_cast<std::size_t>(n), false);
        for (int j = 0; j < n; ++j) {
            int r = cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            int c = cayley[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (row_seen[static_cast<std::size_t>(r)])
                fail(ErrorCode::invalid_group_table, "row " + std::to_string(i) + " repeats element " +
                                                         std::to_string(r));
            if (col_seen[static_cast<std::size_t>(c)])
                fail(ErrorCode::invalid_group_table, "column " + std::to_string(i) + " repeats element " +
                                                         std::to_string(c));
            row_seen[static_cast<std::size_t>(r)] = true;
            col_seen[static_cast<std::size_t>(c)] = true;
        }
    }
    // two-sided identity
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = cayley[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] == j &&
                 cayley[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] == j;
        if (ok) identity = e;
    }
    if (identity < 0) fail(ErrorCode::invalid_group_table, "no two-sided identity element");
    // inverses
    std::vector<int> inverses(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == identity &&
                cayley[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == identity) {
                inverses[static_cast<std::size_t>(i)] = j;
                break;
            }
        if (inverses[static_cast<std::size_t>(i)] < 0)
            fail(ErrorCode::invalid_group_table, "element " + std::to_string(i) + " has no two-sided inverse");
    }
    // associativity
    if (n <= 64) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) check_triple(cayley, i, j, k);
    } else {
        std::mt19937_64 rng(0x5eedf00dULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int s = 0; s < 262144; ++s) check_triple(cayley, pick(rng), pick(rng), pick(rng));
    }
    auto g = std::make_shared<FiniteGroupTable>();
    g->name = std::move(name);
    g->order = n;
    g->names = std::move(element_names);
    g->cayley = std::move(cayley);
    g->identity = identity;
    g->inverses = std::move(inverses);
    return g;
}

std::vector<std::vector<int>> FiniteGroupTable::conjugacy_classes() const {
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < order; ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::set<int> orbit;
        for (int g = 0; g < order; ++g)
            orbit.insert(multiply(multiply(g, x), inverses[static_cast<std::size_t>(g)]));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int y : cls) seen[static_cast<std::size_t>(y)] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace {

GroupPtr make_cyclic(int m) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % m;
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    return FiniteGroupTable::create("C" + std::to_string(m), names, t);
}

std::string cycle_notation(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::string out;
    for (int s = 0; s < n; ++s) {
        if (used[static_cast<std::size_t>(s)] || p[static_cast<std::size_t>(s)] == s) continue;
        out += "(";
        int c = s;
        bool first = true;
        while (!used[static_cast<std::size_t>(c)]) {
            used[static_cast<std::size_t>(c)] = true;
            if (!first) out += " ";
            out += std::to_string(c + 1);
            first = false;
            c = p[static_cast<std::size_t>(c)];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

GroupPtr make_permutation_group(const std::string& name, int n, bool even_only) {
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> elems;
    std::vector<int> p = base;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
            if (inversions % 2 != 0) continue;
        }
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[static_cast<std::size_t>(i)]] = i;
    int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // composition: (p_i p_j)(x) = p_i(p_j(x))
            std::vector<int> comp(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x)
                comp[static_cast<std::size_t>(x)] =
                    elems[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                        elems[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index.at(comp);
        }
    std::vector<std::string> names;
    for (auto& e : elems) names.push_back(cycle_notation(e));
    return FiniteGroupTable::create(name, names, t);
}

GroupPtr make_dihedral4() {
    // elements r^a s^b with r^4 = s^2 = 1, s r = r^-1 s; index = a + 4b
    auto idx = [](int a, int b) { return (a % 4 + 4) % 4 + 4 * (b % 2); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 2; ++d)
                    t[static_cast<std::size_t>(idx(a, b))][static_cast<std::size_t>(idx(c, d))] =
                        idx(a + (b == 0 ? c : -c), b + d);
    std::vector<std::string> names = {"1", "r", "r^2", "r^3", "s", "r*s", "r^2*s", "r^3*s"};
    return FiniteGroupTable::create("D4", names, t);
}

GroupPtr make_quaternion8() {
    // 1, -1, i, -i, j, -j, k, -k; sign in the low bit, axis in the high bits
    auto idx = [](int axis, int sign) { return axis * 2 + sign; };
    // axis products: table[a][b] = (axis, extra sign)
    // axes: 0 = 1, 1 = i, 2 = j, 3 = k
    static const int axis_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_prod[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 4; ++a)
        for (int sa = 0; sa < 2; ++sa)
            for (int b = 0; b < 4; ++b)
                for (int sb = 0; sb < 2; ++sb)
                    t[static_cast<std::size_t>(idx(a, sa))][static_cast<std::size_t>(idx(b, sb))] =
                        idx(axis_prod[a][b], (sa + sb + sign_prod[a][b]) % 2);
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroupTable::create("Q8", names, t);
}

}  // namespace

GroupPtr bundled_group(const std::string& name) {
    static const std::map<std::string, GroupPtr> registry = [] {
        std::map<std::string, GroupPtr> r;
        for (int m = 2; m <= 8; ++m) r["C" + std::to_string(m)] = make_cyclic(m);
        r["S3"] = make_permutation_group("S3", 3, false);
        r["D4"] = make_dihedral4();
        r["Q8"] = make_quaternion8();
        r["A4"] = make_permutation_group("A4", 4, true);
        return r;
    }();
    auto it = registry.find(name);
    if (it == registry.end())
        fail(ErrorCode::invalid_group_table, "unknown bundled group '" + name + "'");
    return it->second;
}

const std::vector<std::string>& bundled_group_names() {
    static const std::vector<std::string> names = {"C2", "C3", "C4", "C5", "C6", "C7", "C8",
                                                   "S3", "D4", "Q8", "A4"};
    return names;
}

}  // namespace fcalg
