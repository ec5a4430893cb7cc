#include "cli.hpp"

#include "stcore/bead.hpp"
#include "stcore/cache.hpp"
#include "stcore/canonical.hpp"
#include "stcore/json_io.hpp"
#include "stcore/tcore.hpp"
#include "stcore/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace stcore::cli {

namespace {

using nlohmann::json;

std::vector<Int> parse_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const Int v = std::stoll(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad integer in list: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

struct Output {
    std::ostream& os;
    bool as_json;
};

void emit(const Output& o, const json& doc, const std::function<void(std::ostream&)>& text) {
    if (o.as_json)
        o.os << doc.dump() << '\n';
    else
        text(o.os);
}

void print_sets(std::ostream& os, const std::vector<BetaSet>& sets) {
    for (const BetaSet& b : sets) os << b.str() << '\n';
}

json strip_witnesses(json doc) {
    doc["witnesses"] = json::array();
    return doc;
}

int report_exit(const EnumerationReport& report) {
    return report.violations.empty() ? 0 : 1;
}

void print_violations(std::ostream& os, const EnumerationReport& report) {
    for (const Violation& v : report.violations)
        os << "violation [" << v.claim << "] " << v.witness.str() << " against "
           << v.bound.str() << '\n';
}

// -- deterministic random harness for the containment laws ------------------

struct LawRun {
    std::string name;
    Int instances = 0;
    Int violations = 0;
};

BetaSet random_beta(std::mt19937& rng, Int max_value, Int max_size) {
    const Int size = static_cast<Int>(rng() % static_cast<unsigned>(max_size + 1));
    std::vector<Int> pool(static_cast<std::size_t>(max_value));
    for (Int v = 1; v <= max_value; ++v) pool[static_cast<std::size_t>(v - 1)] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    return BetaSet(std::move(pool));
}

// a random beta-set contained partition-wise in g, built through partitions
BetaSet random_below(std::mt19937& rng, const BetaSet& g) {
    const Partition q = partition_of_beta(g);
    const Int n = static_cast<Int>(rng() % (q.size() + 1));
    std::vector<Int> parts;
    Int prev = 0;
    for (Int i = 0; i < n; ++i) {
        const Int cap = q.at(static_cast<std::size_t>(i));
        Int v = 1 + static_cast<Int>(rng() % static_cast<unsigned>(cap));
        if (i > 0) v = std::min(v, prev);
        parts.push_back(v);
        prev = v;
    }
    return beta_of_partition(Partition(std::move(parts)));
}

BetaSet random_subset_of_range(std::mt19937& rng, Int k) {
    std::vector<Int> chosen;
    for (Int v = 1; v <= k; ++v)
        if (rng() % 2 == 0) chosen.push_back(v);
    return BetaSet(std::move(chosen));
}

LawRun run_shift_pad(const CoreParams&, Int samples, std::uint32_t seed) {
    std::mt19937 rng(seed);
    LawRun run{"shift-pad containment", 0, 0};
    while (run.instances < samples) {
        const BetaSet g = random_beta(rng, 24, 8);
        if (g.empty()) continue;
        const BetaSet b = random_below(rng, g);
        const Int k = 1 + static_cast<Int>(rng() % 6);
        BetaSet a_set = random_subset_of_range(rng, k);
        if (b.size() + a_set.size() > g.size()) continue;
        std::vector<Int> b_pool = random_subset_of_range(rng, k).elements();
        while (b_pool.size() > a_set.size()) b_pool.pop_back();
        const BetaSet b_set{std::move(b_pool)};
        ++run.instances;
        if (!shift_pad_containment(b, g, k, a_set, b_set)) ++run.violations;
    }
    return run;
}

LawRun run_closure_shift(const CoreParams& params, Int samples, std::uint32_t seed) {
    std::mt19937 rng(seed + 1);
    LawRun run{"closure-shift containment", 0, 0};
    Int attempts = 0;
    while (run.instances < samples && attempts < samples * 200) {
        ++attempts;
        const BetaSet g = closure(params, random_beta(rng, 20, 4));
        const BetaSet b = closure(params, random_below(rng, g));
        const Int k = 1 + static_cast<Int>(rng() % 6);
        try {
            ++run.instances;
            if (!closure_shift_containment(params, b, g, k)) ++run.violations;
        } catch (const std::invalid_argument&) {
            --run.instances;  // preconditions not met, resample
        }
    }
    return run;
}

LawRun run_width_gap(const CoreParams& params, Int gen_bound) {
    LawRun run{"width-gap containment", 0, 0};
    for (Int g = 1; g <= gen_bound; ++g) {
        const DeltaSet d = delta(params, g);
        const Int w = width(params, d.elements);
        for_each_closed_subset(params, d.elements, [&](const BetaSet& b) {
            if (static_cast<Int>(d.elements.size() - b.size()) > w) return;
            ++run.instances;
            if (!width_gap_containment(params, d, b)) ++run.violations;
        });
    }
    return run;
}

LawRun run_disjoint_height(const CoreParams& params, Int samples, std::uint32_t seed) {
    std::mt19937 rng(seed + 2);
    LawRun run{"disjoint-family height bound", 0, 0};
    Int attempts = 0;
    while (run.instances < samples && attempts < samples * 400) {
        ++attempts;
        const std::size_t count = 3 + rng() % 3;
        std::vector<DeltaSet> deltas;
        for (std::size_t i = 0; i < count; ++i)
            deltas.push_back(delta(params, 1 + static_cast<Int>(rng() % 30)));
        try {
            ++run.instances;
            if (!disjoint_height_bound(params, deltas)) ++run.violations;
        } catch (const std::invalid_argument&) {
            --run.instances;  // overlapping or too narrow, resample
        }
    }
    return run;
}

LawRun run_delta_dimensions(const CoreParams& params, Int n_max) {
    LawRun run{"containing-delta dimensions", 0, 0};
    for (Int n = 1; n <= n_max; ++n) {
        const DeltaSet md = max_delta_with_size(params, n);
        const Int w = width(params, md.elements);
        const Int h = height(params, md.elements);
        if (w >= params.s()) continue;
        for (const BetaSet& b : enumerate_closed_of_size(params, n)) {
            if (width(params, b) != w || height(params, b) != h) continue;
            ++run.instances;
            if (!tight_delta_dimensions(params, b, n)) ++run.violations;
        }
    }
    return run;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"(s,t)-core partition toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    std::string out_file;
    std::string cache_dir;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_file, "write output to a file instead of stdout");
    app.add_option("--cache", cache_dir, "directory for enumeration caching");

    struct {
        std::string partition, beta, elements, circle, ts;
        Int s = 0, t = 0;
        Int extend_rows = 0, extend_cols = 0;
        Int generator = -1, max_size = -1;
        Int apex = -1, depth = -1, size = -1;
        bool trace = false, by_size = false, witnesses = false;
        Int guard = 40, gen_bound = 30, n_max = 8, samples = 300;
        Int seed = 12345;
    } opt;

    auto* convert = app.add_subcommand("convert", "partition <-> beta-set");
    convert->add_option("--partition", opt.partition, "comma-separated parts");
    convert->add_option("--beta", opt.beta, "comma-separated beta-set elements");

    auto* hooks = app.add_subcommand("hooks", "hook rows and hook multiset");
    hooks->add_option("--partition", opt.partition);
    hooks->add_option("--beta", opt.beta);

    const auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--s", opt.s)->required();
        cmd->add_option("--t", opt.t)->required();
    };

    auto* closure_cmd = app.add_subcommand("closure", "(s,t)-closure of a beta-set");
    add_pair(closure_cmd);
    closure_cmd->add_option("--elements", opt.elements);

    auto* check = app.add_subcommand("check-core", "closedness and core tests");
    add_pair(check);
    check->add_option("--elements", opt.elements);

    auto* gens = app.add_subcommand("generators", "minimal generating set");
    add_pair(gens);
    gens->add_option("--elements", opt.elements);

    auto* bead_cmd = app.add_subcommand("bead", "render the bead diagram");
    add_pair(bead_cmd);
    bead_cmd->add_option("--extend-rows", opt.extend_rows);
    bead_cmd->add_option("--extend-cols", opt.extend_cols);
    bead_cmd->add_option("--circle", opt.circle, "beta-set to circle");

    auto* delta_cmd = app.add_subcommand("delta", "delta-sets and the largest of a size");
    add_pair(delta_cmd);
    delta_cmd->add_option("--generator", opt.generator);
    delta_cmd->add_option("--max-size", opt.max_size,
                          "largest delta-set with this many elements");

    auto* canon = app.add_subcommand("canonical", "canonical form in a triangular region");
    add_pair(canon);
    canon->add_option("--apex", opt.apex, "region apex (default st-s-t)");
    canon->add_option("--depth", opt.depth, "region depth (default s, capped)");
    canon->add_option("--elements", opt.elements);
    canon->add_option("--size", opt.size, "use the smallest closed set of this size");
    canon->add_flag("--trace", opt.trace, "print a frame per sliding move");

    auto* enum_cmd = app.add_subcommand("enumerate", "all core beta-sets");
    add_pair(enum_cmd);
    enum_cmd->add_flag("--by-size", opt.by_size);
    enum_cmd->add_flag("--witnesses", opt.witnesses);
    enum_cmd->add_option("--guard", opt.guard);

    auto* verify_cmd = app.add_subcommand("verify", "theorem checkers");
    verify_cmd->require_subcommand(1);
    auto* v_max = verify_cmd->add_subcommand("maximal", "maximal theorem");
    add_pair(v_max);
    v_max->add_option("--guard", opt.guard);
    auto* v_g1 = verify_cmd->add_subcommand("gen1", "first generalization");
    add_pair(v_g1);
    v_g1->add_option("--gen-bound", opt.gen_bound);
    auto* v_g2 = verify_cmd->add_subcommand("gen2", "second generalization");
    add_pair(v_g2);
    v_g2->add_option("--n-max", opt.n_max);
    auto* v_lem = verify_cmd->add_subcommand("lemmas", "containment-law harnesses");
    add_pair(v_lem);
    v_lem->add_option("--samples", opt.samples);
    v_lem->add_option("--seed", opt.seed);
    v_lem->add_option("--gen-bound", opt.gen_bound);
    v_lem->add_option("--n-max", opt.n_max);

    auto* tcore_cmd = app.add_subcommand("tcore", "T-core extension");
    tcore_cmd->require_subcommand(1);
    auto* t_beta = tcore_cmd->add_subcommand("beta-t", "gap set of the parameters");
    t_beta->add_option("--ts", opt.ts)->required();
    auto* t_enum = tcore_cmd->add_subcommand("enumerate", "all T-core beta-sets");
    t_enum->add_option("--ts", opt.ts)->required();
    t_enum->add_flag("--by-size", opt.by_size);
    t_enum->add_flag("--witnesses", opt.witnesses);
    t_enum->add_option("--guard", opt.guard);
    auto* t_max = tcore_cmd->add_subcommand("maximal", "maximal T-core beta-sets");
    t_max->add_option("--ts", opt.ts)->required();
    t_max->add_option("--guard", opt.guard);
    auto* t_conj = tcore_cmd->add_subcommand("conjecture", "error-term conjecture harness");
    add_pair(t_conj);
    t_conj->add_option("--n-max", opt.n_max);

    std::vector<const char*> argv;
    argv.push_back("stcore");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file_sink;
    std::ostream* sink = &out;
    if (!out_file.empty()) {
        file_sink.open(out_file, std::ios::binary | std::ios::trunc);
        if (!file_sink) {
            err << "error: cannot open output file " << out_file << '\n';
            return 1;
        }
        sink = &file_sink;
    }
    const Output o{*sink, format == "json"};

    try {
        if (app.got_subcommand(convert) || app.got_subcommand(hooks)) {
            CLI::App* cmd = app.got_subcommand(convert) ? convert : hooks;
            const bool from_partition = cmd->count("--partition") > 0;
            if (from_partition == (cmd->count("--beta") > 0))
                throw std::invalid_argument("give exactly one of --partition or --beta");
            Partition p;
            BetaSet b;
            if (from_partition) {
                p = Partition(parse_list(opt.partition));
                b = beta_of_partition(p);
            } else {
                b = BetaSet(parse_list(opt.beta));
                p = partition_of_beta(b);
            }
            if (app.got_subcommand(convert)) {
                emit(o, json{{"version", kSchemaVersion}, {"partition", p}, {"beta_set", b}},
                     [&](std::ostream& os) {
                         os << "partition " << p.str() << '\n'
                            << "beta-set " << b.str() << '\n';
                     });
                return 0;
            }
            std::vector<HookRow> rows;
            for (Int i = 1; i <= static_cast<Int>(b.size()); ++i)
                rows.push_back(hook_row(b, i));
            const std::vector<Int> multiset = hook_multiset(p);
            emit(o,
                 json{{"version", kSchemaVersion},
                      {"beta_set", b},
                      {"partition", p},
                      {"rows", rows},
                      {"multiset", multiset}},
                 [&](std::ostream& os) {
                     os << "beta-set " << b.str() << '\n'
                        << "partition " << p.str() << '\n';
                     for (const HookRow& row : rows)
                         os << "H_" << row.row << " = " << row.hooks.str() << '\n';
                     os << "multiset {";
                     for (std::size_t i = 0; i < multiset.size(); ++i)
                         os << (i ? ", " : "") << multiset[i];
                     os << "}\n";
                 });
            return 0;
        }

        if (app.got_subcommand(closure_cmd)) {
            const CoreParams params(opt.s, opt.t);
            const BetaSet input(parse_list(opt.elements));
            const BetaSet result = closure(params, input);
            emit(o,
                 json{{"version", kSchemaVersion},
                      {"s", opt.s},
                      {"t", opt.t},
                      {"input", input},
                      {"closure", result}},
                 [&](std::ostream& os) {
                     os << "pair " << params.str() << '\n'
                        << "input " << input.str() << '\n'
                        << "closure " << result.str() << '\n';
                 });
            return 0;
        }

        if (app.got_subcommand(check)) {
            const CoreParams params(opt.s, opt.t);
            const BetaSet input(parse_list(opt.elements));
            const bool closed = is_closed(params, input);
            const bool core = is_core(params, input);
            emit(o,
                 json{{"version", kSchemaVersion},
                      {"s", opt.s},
                      {"t", opt.t},
                      {"input", input},
                      {"closed", closed},
                      {"core", core}},
                 [&](std::ostream& os) {
                     os << "pair " << params.str() << '\n'
                        << "input " << input.str() << '\n'
                        << "closed " << (closed ? "true" : "false") << '\n'
                        << "core " << (core ? "true" : "false") << '\n';
                 });
            return 0;
        }

        if (app.got_subcommand(gens)) {
            const CoreParams params(opt.s, opt.t);
            const BetaSet input(parse_list(opt.elements));
            const BetaSet result = generators(params, input);
            emit(o,
                 json{{"version", kSchemaVersion},
                      {"s", opt.s},
                      {"t", opt.t},
                      {"input", input},
                      {"generators", result}},
                 [&](std::ostream& os) {
                     os << "pair " << params.str() << '\n'
                        << "input " << input.str() << '\n'
                        << "generators " << result.str() << '\n';
                 });
            return 0;
        }

        if (app.got_subcommand(bead_cmd)) {
            const CoreParams params(opt.s, opt.t);
            const BeadDiagram diagram = build(params, opt.extend_rows, opt.extend_cols);
            const BetaSet circled(parse_list(opt.circle));
            emit(o, bead_to_json(diagram, circled),
                 [&](std::ostream& os) { os << render(diagram, circled); });
            return 0;
        }

        if (app.got_subcommand(delta_cmd)) {
            const CoreParams params(opt.s, opt.t);
            if ((opt.generator >= 0) == (opt.max_size >= 0))
                throw std::invalid_argument("give exactly one of --generator or --max-size");
            const DeltaSet d = (opt.generator >= 0) ? delta(params, opt.generator)
                                                    : max_delta_with_size(params, opt.max_size);
            json doc(d);
            doc["version"] = kSchemaVersion;
            emit(o, doc, [&](std::ostream& os) {
                os << "pair " << params.str() << '\n'
                   << "generator " << d.generator << '\n'
                   << "elements " << d.elements.str() << '\n'
                   << "size " << d.elements.size() << '\n';
            });
            return 0;
        }

        if (app.got_subcommand(canon)) {
            const CoreParams params(opt.s, opt.t);
            const Int apex = (opt.apex >= 0) ? opt.apex : params.frobenius();
            const Int depth = (opt.depth >= 0) ? opt.depth : params.s();
            const TriangleRegion region(params, apex, depth);
            if ((opt.size >= 0) == !opt.elements.empty())
                throw std::invalid_argument("give exactly one of --elements or --size");
            const BetaSet input = (opt.size >= 0)
                                      ? smallest_closed_in_region(region, opt.size)
                                      : BetaSet(parse_list(opt.elements));
            const BetaSet justified = top_justify(region, input);
            std::ostringstream trace;
            Int moves = 0;
            if (opt.trace) {
                trace << "step 0 (top-justified)\n" << render_region(region, justified);
            }
            const BetaSet final_set =
                slide_step2(region, justified, [&](const BetaSet& cur, Int from, Int to) {
                    ++moves;
                    if (opt.trace)
                        trace << "step " << moves << ": removed " << from << ", inserted "
                              << to << '\n'
                              << render_region(region, cur);
                });
            const CanonicalForm form = canonical_form(region, input);
            if (form.elements != final_set)
                throw std::logic_error("trace and canonical form disagree");
            json doc{{"version", kSchemaVersion},
                     {"s", opt.s},
                     {"t", opt.t},
                     {"apex", region.apex()},
                     {"depth", region.depth()},
                     {"input", input},
                     {"top_justified", justified},
                     {"canonical", form.elements},
                     {"moves", moves}};
            if (form.anchor)
                doc["anchor"] =
                    json{{"value", *form.anchor}, {"a", form.anchor_a}, {"b", form.anchor_b}};
            if (params.t() == params.s() + 1)
                doc["type"] =
                    classify_type(form) == CanonicalType::type_i ? "I" : "II";
            emit(o, doc, [&](std::ostream& os) {
                os << "pair " << params.str() << '\n'
                   << "region apex " << region.apex() << " depth " << region.depth() << '\n'
                   << "input " << input.str() << '\n'
                   << "top-justified " << justified.str() << '\n';
                if (opt.trace) os << trace.str();
                os << "canonical " << form.elements.str() << '\n';
                if (form.anchor)
                    os << "anchor " << *form.anchor << " (a=" << form.anchor_a
                       << ", b=" << form.anchor_b << ")\n";
                if (params.t() == params.s() + 1)
                    os << "type "
                       << (classify_type(form) == CanonicalType::type_i ? "I" : "II") << '\n';
            });
            return 0;
        }

        if (app.got_subcommand(enum_cmd)) {
            const CoreParams params(opt.s, opt.t);
            EnumerationReport report{params};
            if (!cache_dir.empty()) {
                const CacheResult cached =
                    enumerate_core_cached(params, cache_dir, opt.guard, &err);
                err << "cache: " << (cached.from_cache ? "hit" : "wrote") << " entry for "
                    << params.str() << '\n';
                report = cached.report;
            } else {
                report = make_enumeration_report(params, enumerate_core(params, opt.guard));
            }
            json doc = report_to_json(report);
            if (!opt.witnesses) doc = strip_witnesses(doc);
            emit(o, doc, [&](std::ostream& os) {
                os << "pair " << params.str() << '\n' << "count " << report.count << '\n';
                if (opt.by_size)
                    for (const auto& [size, count] : report.by_size)
                        os << "size " << size << ": " << count << '\n';
                if (opt.witnesses) print_sets(os, report.witnesses);
            });
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            const CoreParams params(opt.s, opt.t);
            if (verify_cmd->got_subcommand(v_lem)) {
                const std::uint32_t seed = static_cast<std::uint32_t>(opt.seed);
                const std::vector<LawRun> runs = {
                    run_shift_pad(params, opt.samples, seed),
                    run_closure_shift(params, opt.samples, seed),
                    run_width_gap(params, opt.gen_bound),
                    run_disjoint_height(params, opt.samples, seed),
                    run_delta_dimensions(params, opt.n_max),
                };
                Int total_violations = 0;
                json checks = json::array();
                for (const LawRun& run : runs) {
                    total_violations += run.violations;
                    checks.push_back(json{{"name", run.name},
                                          {"instances", run.instances},
                                          {"violations", run.violations}});
                }
                emit(o,
                     json{{"version", kSchemaVersion},
                          {"s", opt.s},
                          {"t", opt.t},
                          {"checks", checks}},
                     [&](std::ostream& os) {
                         os << "pair " << params.str() << '\n';
                         for (const LawRun& run : runs)
                             os << run.name << ": " << run.instances << " instances, "
                                << run.violations << " violations\n";
                         os << "violations " << total_violations << '\n';
                     });
                return total_violations == 0 ? 0 : 1;
            }
            EnumerationReport report{params};
            std::string heading;
            if (verify_cmd->got_subcommand(v_max)) {
                report = check_maximal_theorem(params, opt.guard);
                heading = "maximal theorem " + params.str();
            } else if (verify_cmd->got_subcommand(v_g1)) {
                report = check_first_generalization(params, opt.gen_bound);
                heading = "first generalization " + params.str() + ", generators 1.." +
                          std::to_string(opt.gen_bound);
            } else {
                report = check_second_generalization(params, opt.n_max);
                heading = "second generalization " + params.str() + ", sizes 0.." +
                          std::to_string(opt.n_max);
            }
            emit(o, report_to_json(report), [&](std::ostream& os) {
                os << heading << '\n'
                   << "checked " << report.count << '\n'
                   << "violations " << report.violations.size() << '\n';
                print_violations(os, report);
                if (report.tallies.count("no_shift_failures"))
                    os << "no-shift failures " << report.tallies.at("no_shift_failures")
                       << '\n';
            });
            return report_exit(report);
        }

        if (app.got_subcommand(tcore_cmd)) {
            if (tcore_cmd->got_subcommand(t_conj)) {
                const CoreParams params(opt.s, opt.t);
                const EnumerationReport report = conjecture_error_term(params, opt.n_max);
                const bool refuted = !report.violations.empty();
                emit(o, report_to_json(report), [&](std::ostream& os) {
                    os << "error-term conjecture " << params.str() << ", sizes 1.."
                       << opt.n_max << '\n'
                       << "status "
                       << (refuted ? "OPEN-REFUTED (counterexamples found)"
                                   : "OPEN-CONFIRMED (no counterexample at this scale)")
                       << '\n'
                       << "checked " << report.count << " (shifted "
                       << report.tallies.at("shifted_checked") << ", zero-shift "
                       << report.tallies.at("zero_shift_checked") << ")\n"
                       << "refuted " << report.violations.size() << '\n';
                    print_violations(os, report);
                });
                return 0;  // findings about an open question, not errors
            }
            const TParams params(parse_list(opt.ts));
            if (tcore_cmd->got_subcommand(t_beta)) {
                const BetaSet bt = beta_T(params);
                emit(o,
                     json{{"version", kSchemaVersion}, {"ts", params.ts()}, {"beta_T", bt}},
                     [&](std::ostream& os) {
                         os << "T " << params.str() << '\n'
                            << "beta_T " << bt.str() << '\n'
                            << "size " << bt.size() << '\n';
                     });
                return 0;
            }
            if (tcore_cmd->got_subcommand(t_enum)) {
                const std::vector<BetaSet> sets = enumerate_T_core(params, opt.guard);
                std::map<Int, Int> by_size;
                for (const BetaSet& b : sets) ++by_size[static_cast<Int>(b.size())];
                json by_size_json = json::object();
                for (const auto& [size, count] : by_size)
                    by_size_json[std::to_string(size)] = count;
                json doc{{"version", kSchemaVersion},
                         {"ts", params.ts()},
                         {"count", sets.size()},
                         {"by_size", by_size_json},
                         {"witnesses", opt.witnesses ? json(sets) : json::array()}};
                emit(o, doc, [&](std::ostream& os) {
                    os << "T " << params.str() << '\n' << "count " << sets.size() << '\n';
                    if (opt.by_size)
                        for (const auto& [size, count] : by_size)
                            os << "size " << size << ": " << count << '\n';
                    if (opt.witnesses) print_sets(os, sets);
                });
                return 0;
            }
            const MaximalSetReport report = maximal_elements(params, opt.guard);
            emit(o, maximal_report_to_json(report), [&](std::ostream& os) {
                os << "T " << params.str() << '\n'
                   << "count " << report.total << '\n'
                   << "maximal " << report.maximal.size() << '\n';
                for (const BetaSet& b : report.maximal)
                    os << b.str() << " partition " << partition_of_beta(b).str() << '\n';
                os << "unique " << (report.unique ? "true" : "false") << '\n';
            });
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand handled\n";
    return 2;
}

}  // namespace stcore::cli
