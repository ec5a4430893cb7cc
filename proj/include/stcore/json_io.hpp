#pragma once

#include "stcore/bead.hpp"
#include "stcore/canonical.hpp"
#include "stcore/tcore.hpp"
#include "stcore/verify.hpp"

#include <json.hpp>

namespace stcore {

/// Version of every document-level JSON schema (reports, grids, cache files).
inline constexpr int kSchemaVersion = 1;

// Partitions and beta-sets encode as descending arrays of integers.
void to_json(nlohmann::json&, const Partition&);
void from_json(const nlohmann::json&, Partition&);
void to_json(nlohmann::json&, const BetaSet&);
void from_json(const nlohmann::json&, BetaSet&);

void to_json(nlohmann::json&, const HookRow&);    // {"row": i, "hooks": [...]}
void from_json(const nlohmann::json&, HookRow&);

void to_json(nlohmann::json&, const DeltaSet&);   // {"s","t","generator","elements"}
DeltaSet delta_set_from_json(const nlohmann::json&);

void to_json(nlohmann::json&, const Violation&);

// Versioned documents.
nlohmann::json report_to_json(const EnumerationReport&);
EnumerationReport report_from_json(const nlohmann::json&);
nlohmann::json maximal_report_to_json(const MaximalSetReport&);
nlohmann::json bead_to_json(const BeadDiagram&, const BetaSet& circled);

}  // namespace stcore
