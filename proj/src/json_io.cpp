#include "stcore/json_io.hpp"

#include <stdexcept>

namespace stcore {

using nlohmann::json;

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) {
    p = Partition(j.get<std::vector<Int>>());
}

void to_json(json& j, const BetaSet& b) { j = b.elements(); }

void from_json(const json& j, BetaSet& b) {
    b = BetaSet(j.get<std::vector<Int>>());
}

void to_json(json& j, const HookRow& row) {
    j = json{{"row", row.row}, {"hooks", row.hooks}};
}

void from_json(const json& j, HookRow& row) {
    row.row = j.at("row").get<Int>();
    row.hooks = j.at("hooks").get<BetaSet>();
}

void to_json(json& j, const DeltaSet& d) {
    j = json{{"s", d.params.s()},
             {"t", d.params.t()},
             {"generator", d.generator},
             {"elements", d.elements}};
}

DeltaSet delta_set_from_json(const json& j) {
    const CoreParams params(j.at("s").get<Int>(), j.at("t").get<Int>());
    const Int generator = j.at("generator").get<Int>();
    DeltaSet d = (generator == 0) ? empty_delta(params) : delta(params, generator);
    if (d.elements != j.at("elements").get<BetaSet>())
        throw std::invalid_argument("delta-set elements do not match their generator");
    return d;
}

void to_json(json& j, const Violation& v) {
    j = json{{"claim", v.claim},
             {"witness", v.witness},
             {"witness_partition", partition_of_beta(v.witness)},
             {"bound", v.bound},
             {"bound_partition", partition_of_beta(v.bound)}};
}

json report_to_json(const EnumerationReport& report) {
    json by_size = json::object();
    for (const auto& [size, count] : report.by_size)
        by_size[std::to_string(size)] = count;
    return json{{"version", kSchemaVersion},
                {"s", report.params.s()},
                {"t", report.params.t()},
                {"count", report.count},
                {"by_size", by_size},
                {"tallies", report.tallies},
                {"witnesses", report.witnesses},
                {"violations", report.violations}};
}

EnumerationReport report_from_json(const json& j) {
    if (j.at("version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported report schema version");
    EnumerationReport report{CoreParams(j.at("s").get<Int>(), j.at("t").get<Int>())};
    report.count = j.at("count").get<Int>();
    for (const auto& [key, value] : j.at("by_size").items())
        report.by_size[std::stoll(key)] = value.get<Int>();
    report.tallies = j.at("tallies").get<std::map<std::string, Int>>();
    report.witnesses = j.at("witnesses").get<std::vector<BetaSet>>();
    for (const auto& item : j.at("violations"))
        report.violations.push_back({item.at("claim").get<std::string>(),
                                     item.at("witness").get<BetaSet>(),
                                     item.at("bound").get<BetaSet>()});
    return report;
}

json maximal_report_to_json(const MaximalSetReport& report) {
    json maximal = json::array();
    for (const BetaSet& b : report.maximal)
        maximal.push_back(json{{"elements", b}, {"partition", partition_of_beta(b)}});
    return json{{"version", kSchemaVersion},
                {"ts", report.params.ts()},
                {"count", report.total},
                {"maximal", maximal},
                {"unique", report.unique}};
}

json bead_to_json(const BeadDiagram& d, const BetaSet& circled) {
    json rows = json::array();
    for (const auto& row : d.grid()) {
        json cells = json::array();
        for (Int v : row)
            cells.push_back(json{{"v", v}, {"circled", circled.contains(v)}});
        rows.push_back(cells);
    }
    return json{{"version", kSchemaVersion},
                {"s", d.params().s()},
                {"t", d.params().t()},
                {"extra_rows", d.extra_rows()},
                {"extra_cols", d.extra_cols()},
                {"rows", rows}};
}

}  // namespace stcore
