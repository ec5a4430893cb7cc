#include "stcore/cache.hpp"

#include "stcore/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace stcore {

using nlohmann::json;

EnumerationReport make_enumeration_report(const CoreParams& params,
                                          const std::vector<BetaSet>& sets) {
    EnumerationReport report{params};
    report.count = static_cast<Int>(sets.size());
    for (const BetaSet& b : sets) ++report.by_size[static_cast<Int>(b.size())];
    report.witnesses = sets;
    return report;
}

namespace {

std::filesystem::path cache_file(const CoreParams& params,
                                 const std::filesystem::path& dir) {
    std::ostringstream name;
    name << "enum-core-s" << params.s() << "-t" << params.t() << ".json";
    return dir / name.str();
}

bool try_read(const std::filesystem::path& file, const CoreParams& params,
              EnumerationReport& out, std::ostream* warn) {
    std::ifstream in(file);
    if (!in) return false;
    try {
        json doc = json::parse(in);
        if (doc.at("version").get<int>() != kSchemaVersion) {
            if (warn) *warn << "cache: ignoring stale version in " << file.string()
                            << " (recomputing)\n";
            return false;
        }
        EnumerationReport report = report_from_json(doc);
        if (report.params != params)
            throw std::invalid_argument("cache file belongs to other parameters");
        out = std::move(report);
        return true;
    } catch (const std::exception&) {
        if (warn) *warn << "cache: ignoring corrupt file " << file.string()
                        << " (recomputing)\n";
        return false;
    }
}

}  // namespace

CacheResult enumerate_core_cached(const CoreParams& params,
                                  const std::filesystem::path& dir,
                                  Int guard, std::ostream* warn) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path file = cache_file(params, dir);
    EnumerationReport cached{params};
    if (std::filesystem::exists(file) && try_read(file, params, cached, warn))
        return {std::move(cached), true};

    EnumerationReport fresh = make_enumeration_report(params, enumerate_core(params, guard));
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::invalid_argument("cache directory is not writable: " + dir.string());
    out << report_to_json(fresh).dump() << '\n';
    return {std::move(fresh), false};
}

}  // namespace stcore
