#ifndef FCALG_IO_HPP
#define FCALG_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fcalg/algebra.hpp"

namespace fcalg {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// A fully validated algebra description: the algebra, its named analysis
/// targets (sorted by name), and the content digest of the source bytes.
struct LoadedDescription {
    AlgebraPtr algebra;
    std::vector<std::pair<std::string, AlgElement>> elements;
    std::string digest;    // sha256 hex of the raw document bytes
    std::string doc_name;  // the document's optional "name"
};

// --- scalars and fields -------------------------------------------------

/// Rationals serialize as exact strings ("3", "-5/7"); finite-field scalars
/// as coefficient arrays, lowest degree first ([1] in GF(p), [c0..c_{k-1}]
/// in GF(p^k)).
ordered_json scalar_to_json(const FieldPtr& field, const ScalarValue& v);
ScalarValue scalar_from_json(const FieldPtr& field, const json& j, const std::string& path);

ordered_json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const json& j, const std::string& path);

ordered_json coords_to_json(const FieldPtr& field, const std::vector<ScalarValue>& coords);
std::vector<ScalarValue> coords_from_json(const FieldPtr& field, const json& j, int expected_len,
                                          const std::string& path);

ordered_json poly_to_json(const Poly& f);
ordered_json subspace_to_json(const Subspace& s);
ordered_json element_to_json(const AlgElement& e);

// --- descriptions ---------------------------------------------------------

/// Parse and validate a description document. ParseError on malformed JSON;
/// SchemaError / InvalidGroupTable / InvalidCocycle with a location path on
/// anything structurally wrong.
LoadedDescription load_description_text(const std::string& text);
LoadedDescription load_description_file(const std::string& path);

/// Canonical description of an algebra (structure-constant form) with its
/// named elements; load_description_text on the dump reproduces the same
/// algebra and elements.
ordered_json serialize_description(const AlgebraPtr& algebra,
                                   const std::vector<std::pair<std::string, AlgElement>>& elements);

std::string sha256_hex(const std::string& bytes);

}  // namespace fcalg

#endif
