#ifndef FCALG_REPORT_HPP
#define FCALG_REPORT_HPP

#include <optional>
#include <string>

#include "fcalg/io.hpp"
#include "fcalg/sandwich.hpp"
#include "fcalg/unitgroup.hpp"

namespace fcalg {

/// Deterministic report envelope: tool identity, input digest, results,
/// hypothesis-gate annotations, and a timing slot that stays null unless
/// explicitly requested (timing would break byte-identity).
ordered_json make_report(const std::string& command, const LoadedDescription* input,
                         ordered_json results, ordered_json hypothesis_gates,
                         std::optional<double> seconds);

/// dump(2) plus trailing newline — the one serialization used everywhere.
std::string report_to_bytes(const ordered_json& report);

// Result-block builders, one per CLI command.
ordered_json validate_results(const LoadedDescription& input);
ordered_json radical_results(const AlgebraPtr& algebra, const RadicalOptions& opt);
ordered_json center_results(const AlgebraPtr& algebra);
ordered_json classify_results(const std::string& name, const AlgElement& g);
ordered_json decompose_results(const std::string& name, const AlgElement& g,
                               const FactorOptions& opt);
ordered_json units_results(UnitGroupTable& table, int threads);
ordered_json fc_results(UnitGroupTable& table, const FCOptions& opt);
ordered_json series_results(UnitGroupTable& table);
ordered_json omega_results(const OmegaReport& r, const std::string& x_name,
                           const std::string& y_name, const AlgElement& z);
ordered_json witnesses_results(const WitnessList& w);
ordered_json sandwich_results(const AlgebraPtr& algebra, const NablaEstimate& est);

}  // namespace fcalg

#endif
