#ifndef FCALG_GROUPS_HPP
#define FCALG_GROUPS_HPP

#include <memory>
#include <string>
#include <vector>

namespace fcalg {

/// Finite group given by an explicit Cayley table. Validation checks the
/// Latin-square property, a two-sided identity, inverses, and associativity
/// (every triple for order <= 64, deterministic random samples above).
struct FiniteGroupTable {
    std::string name;
    int order = 0;
    std::vector<std::string> names;        // element labels
    std::vector<std::vector<int>> cayley;  // cayley[i][j] = index of g_i g_j
    int identity = 0;
    std::vector<int> inverses;

    int multiply(int i, int j) const {
        return cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    /// Conjugacy classes by direct orbit computation, each sorted ascending,
    /// ordered by smallest member.
    std::vector<std::vector<int>> conjugacy_classes() const;

    /// Validates the table and fills identity/inverses. InvalidGroupTable
    /// names the first violation found.
    static std::shared_ptr<const FiniteGroupTable> create(std::string name,
                                                          std::vector<std::string> element_names,
                                                          std::vector<std::vector<int>> cayley);
};

using GroupPtr = std::shared_ptr<const FiniteGroupTable>;

/// Bundled Cayley tables: C2..C8, S3, D4, Q8, A4. Unknown names fail with
/// InvalidGroupTable.
GroupPtr bundled_group(const std::string& name);
const std::vector<std::string>& bundled_group_names();

}  // namespace fcalg

#endif
