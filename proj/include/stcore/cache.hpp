#pragma once

#include "stcore/verify.hpp"

#include <filesystem>
#include <iosfwd>

namespace stcore {

struct CacheResult {
    EnumerationReport report;
    bool from_cache = false;
};

/// Core-enumeration cache, one file per (s, t) keyed by the schema version
/// stored inside the file. Corrupt or stale-version files are ignored with a
/// warning on `warn` and recomputed/overwritten. The returned report is
/// byte-for-byte reproducible regardless of cache state.
CacheResult enumerate_core_cached(const CoreParams&,
                                  const std::filesystem::path& dir,
                                  Int guard, std::ostream* warn);

/// Report with the full enumeration as witnesses; shared by the cache and the
/// plain enumeration path so both produce identical documents.
EnumerationReport make_enumeration_report(const CoreParams&,
                                          const std::vector<BetaSet>& sets);

}  // namespace stcore
