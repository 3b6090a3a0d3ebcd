// Acceptance driver: one line per criterion, nonzero exit when any fails.
// argv[1] must be the path to the command-line binary (used by the last
// criterion to exercise exit codes end to end).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "arcgrid/circle.hpp"
#include "arcgrid/families.hpp"
#include "arcgrid/formats.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"
#include "arcgrid/recognition.hpp"
#include "arcgrid/render.hpp"
#include "arcgrid/transforms.hpp"

using namespace arcgrid;

namespace {

std::string g_cli;

bool run_criterion(const char* label,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("unexpected exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%s  %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", label,
                static_cast<long long>(ms), detail.empty() ? "" : " — ",
                detail.c_str());
    std::fflush(stdout);
    return ok;
}

bool fail(std::string& detail, const std::string& msg) {
    detail = msg;
    return false;
}

// ---- criterion bodies ------------------------------------------------

bool paths_b3_soundness(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        int n = static_cast<int>((seed - 1) % 50) + 1;
        CircularArcModel m = random_ca_model(seed, n);
        GridModel pm = ca_to_b3_epg(m);
        if (!(epg_intersection_graph(pm) == intersection_graph(m)))
            return fail(detail, "graph mismatch at seed " + std::to_string(seed));
        if (max_bends(pm) > 3)
            return fail(detail, "more than 3 bends at seed " + std::to_string(seed));
        std::map<GridEdge, int> owners;
        for (const GridPath& p : pm.paths)
            for (const GridEdge& e : edge_set(p)) ++owners[e];
        for (const auto& [e, count] : owners) {
            if (count < 2) continue;
            bool on_axis = (e.horizontal() && e.a.row == 0) ||
                           (!e.horizontal() && e.a.col == 0);
            if (!on_axis)
                return fail(detail, "shared edge off the axes at seed " +
                                        std::to_string(seed));
        }
    }
    return true;
}

bool paths_b2_soundness(std::string& detail) {
    // Wrapping samples are rarely normal past a dozen arcs, so alternate
    // with interval-shaped samples to keep sizes up to 30 in the mix.
    int made = 0;
    for (std::uint64_t seed = 1; made < 200; ++seed) {
        if (seed > 100000) return fail(detail, "sampler starved");
        int n = static_cast<int>(seed % 30) + 1;
        CircularArcModel m = seed % 2 ? random_ca_model(seed, n)
                                      : random_interval_model(seed, n);
        if (!is_normal(m)) continue;
        ++made;
        GridModel pm = nca_to_b2_epr(m);
        if (!(epg_intersection_graph(pm) == intersection_graph(m)))
            return fail(detail, "graph mismatch at seed " + std::to_string(seed));
        if (!validate_epr(pm))
            return fail(detail, "paths leave the rectangle at seed " +
                                    std::to_string(seed));
        if (max_bends(pm) > 2)
            return fail(detail, "more than 2 bends at seed " + std::to_string(seed));
    }
    return true;
}

bool nh_threshold(std::string& detail) {
    for (int k = 2; k <= 6; ++k)
        for (int n = 2 * k + 2; n <= 40; ++n) {
            bool nh = is_normal_helly(canonical_cycle_power_model(n, k));
            if (nh != (6 * k < 2 * n))
                return fail(detail, "mismatch at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
    return true;
}

bool four_point_threshold(std::string& detail) {
    for (int k = 2; k <= 6; ++k)
        for (int n = 2 * k + 2; n <= 40; ++n) {
            CircularArcModel m = canonical_cycle_power_model(n, k);
            if (!is_normal_helly(m)) continue;
            bool none = !find_four_points(m).has_value();
            if (none != (2 * n < 8 * k))
                return fail(detail, "mismatch at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
    return true;
}

bool decision_pipeline(std::string& detail) {
    CircularArcModel yes = canonical_cycle_power_model(9, 2);
    B1Decision d = decide_b1_epr(yes);
    if (d.verdict != B1Verdict::Yes || !d.model)
        return fail(detail, "9-cycle square not accepted");
    if (!validate_epr(*d.model) || max_bends(*d.model) > 1)
        return fail(detail, "accepted model not a 1-bend rectangle model");
    if (!(epg_intersection_graph(*d.model) == intersection_graph(yes)))
        return fail(detail, "accepted model has the wrong graph");
    CircularArcModel back = epr_to_ca(*d.model);
    if (!is_normal_helly(back) ||
        !(intersection_graph(back) == intersection_graph(yes)))
        return fail(detail, "model read-back broke the graph");

    B1Decision no = decide_b1_epr(canonical_cycle_power_model(7, 2));
    if (no.verdict != B1Verdict::No || no.reason != B1Reason::NoFourPoints)
        return fail(detail, "7-cycle square not rejected for missing points");
    if (!no.obstruction_t || *no.obstruction_t != 2)
        return fail(detail, "7-cycle square obstruction not reported as t=2");
    return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
    for (long long k = 2; k <= 3; ++k)
        for (long long n = 2 * k + 2; n <= 12; ++n) {
            bool predicted = cycle_power_contains_criterion(n, k, 2);
            bool found = contains_induced(
                cycle_power(static_cast<int>(n), static_cast<int>(k)),
                cycle_power(7, 2), true);
            if (predicted != found)
                return fail(detail, "mismatch at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
    return true;
}

bool readback_soundness(std::string& detail) {
    std::vector<CircularArcModel> sources;
    for (int n = 8; n <= 40; ++n)
        sources.push_back(canonical_cycle_power_model(n, 2));
    for (std::uint64_t seed = 1;
         sources.size() < 140 && seed <= 100000; ++seed)
        sources.push_back(random_interval_model(seed, (seed % 12) + 1));
    for (std::uint64_t seed = 1;
         sources.size() < 200 && seed <= 100000; ++seed) {
        CircularArcModel m = random_ca_model(seed, (seed % 10) + 1);
        if (decide_b1_epr(m).verdict != B1Verdict::No) sources.push_back(m);
    }
    if (sources.size() < 200) return fail(detail, "sampler starved");

    for (const CircularArcModel& m : sources) {
        B1Decision d = decide_b1_epr(m);
        if (d.verdict == B1Verdict::No || !d.model)
            return fail(detail, "pipeline rejected a prepared model");
        CircularArcModel back = epr_to_ca(*d.model);
        if (!is_normal_helly(back))
            return fail(detail, "read-back model not normal-helly");
        if (!(intersection_graph(back) == intersection_graph(m)))
            return fail(detail, "read-back changed the graph");
    }
    return true;
}

bool separation_witnesses(std::string& detail) {
    std::vector<CircularArcModel> corpus;
    for (int k = 2; k <= 6; ++k)
        for (int n = 2 * k + 2; n <= 40; ++n)
            corpus.push_back(canonical_cycle_power_model(n, k));
    for (std::uint64_t seed = 1; seed <= 500; ++seed)
        corpus.push_back(random_ca_model(seed, (seed - 1) % 50 + 1));

    int checked = 0;
    for (const CircularArcModel& m : corpus) {
        Graph g = intersection_graph(m);
        if (is_chordal(g)) continue;
        std::optional<FourPoints> fp = find_four_points(m);
        if (!fp) continue;
        SeparationWitness w = derive_separating_cliques(m, *fp);
        if (!verify_separation(g, w, true))
            return fail(detail, "separation rejected on a corpus model");
        ++checked;
    }
    if (checked == 0) return fail(detail, "corpus produced no instances");
    return true;
}

bool spider_fixtures_verify(std::string& detail) {
    struct Row {
        SpiderFixtureKind kind;
        int n;
        int bends;
        bool epr;
        const char* name;
    };
    const Row rows[] = {
        {SpiderFixtureKind::S3_B1EPG, 3, 1, false, "s3-b1epg"},
        {SpiderFixtureKind::S6_B2EPR, 6, 2, true, "s6-b2epr"},
        {SpiderFixtureKind::S7_B3EPR, 7, 3, true, "s7-b3epr"},
        {SpiderFixtureKind::S7_B2EPG, 7, 2, false, "s7-b2epg"},
    };
    for (const Row& r : rows) {
        GridModel m = spider_fixture(r.kind);
        if (!validate_model(m).empty())
            return fail(detail, std::string(r.name) + " model invalid");
        if (!(epg_intersection_graph(m) == thick_spider(r.n)))
            return fail(detail, std::string(r.name) + " graph mismatch");
        if (max_bends(m) > r.bends)
            return fail(detail, std::string(r.name) + " exceeds bend bound");
        if (r.epr != m.epr || (m.epr && !validate_epr(m)))
            return fail(detail, std::string(r.name) + " rectangle shape wrong");
    }
    return true;
}

bool c4_trichotomy(std::string& detail) {
    auto path = [](const char* id, std::vector<GridPoint> cs) {
        return GridPath{id, std::move(cs)};
    };
    std::array<GridPath, 4> pie = {
        path("p1", {{5, 2}, {5, 5}, {2, 5}}),
        path("p2", {{2, 5}, {5, 5}, {5, 8}}),
        path("p3", {{5, 8}, {5, 5}, {8, 5}}),
        path("p4", {{8, 5}, {5, 5}, {5, 2}}),
    };
    if (classify_c4(pie).kind != C4Kind::TruePie)
        return fail(detail, "pie witness misclassified");

    std::array<GridPath, 4> crossing = {
        path("h", {{5, 2}, {5, 8}}),
        path("c", {{5, 2}, {5, 5}, {2, 5}}),
        path("v", {{2, 5}, {8, 5}}),
        path("d", {{5, 8}, {5, 5}, {8, 5}}),
    };
    if (classify_c4(crossing).kind != C4Kind::FalsePie)
        return fail(detail, "crossing witness misclassified");

    std::array<GridPath, 4> frame = {
        path("f1", {{2, 6}, {2, 2}, {6, 2}}),
        path("f2", {{2, 4}, {2, 8}, {6, 8}}),
        path("f3", {{4, 8}, {8, 8}, {8, 4}}),
        path("f4", {{8, 6}, {8, 2}, {4, 2}}),
    };
    if (classify_c4(frame).kind != C4Kind::Frame)
        return fail(detail, "frame witness misclassified");

    std::array<GridPath, 4> bent = pie;
    bent[0] = path("p1", {{5, 2}, {5, 5}, {2, 5}, {2, 6}});
    try {
        classify_c4(bent);
        return fail(detail, "two-bend configuration accepted");
    } catch (const std::invalid_argument&) {
    }
    return true;
}

int run_cli(const std::string& args) {
    std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

bool roundtrips_and_cli(std::string& detail) {
    int files = 0;
    for (std::uint64_t seed = 1; seed <= 250; ++seed) {
        int n = static_cast<int>(seed % 20) + 1;
        CircularArcModel m = random_ca_model(seed, n);

        std::string arcs = emit_arcs(m);
        if (emit_arcs(parse_arcs(arcs)) != arcs || !(parse_arcs(arcs) == m))
            return fail(detail, "arcs round-trip broke at seed " +
                                    std::to_string(seed));
        std::string epg = emit_paths(ca_to_b3_epg(m));
        if (emit_paths(parse_paths(epg)) != epg)
            return fail(detail, "paths round-trip broke at seed " +
                                    std::to_string(seed));
        std::string epr = emit_paths(ca_to_b4_epr(m));
        if (emit_paths(parse_paths(epr)) != epr)
            return fail(detail, "rectangle paths round-trip broke at seed " +
                                    std::to_string(seed));
        std::string graph = emit_graph(intersection_graph(m));
        if (emit_graph(parse_graph(graph)) != graph ||
            !(parse_graph(graph) == intersection_graph(m)))
            return fail(detail, "graph round-trip broke at seed " +
                                    std::to_string(seed));
        files += 4;
    }
    if (files != 1000) return fail(detail, "expected 1000 generated files");

    if (g_cli.empty())
        return fail(detail, "no command-line binary supplied");
    char tmpl[] = "/tmp/arcgrid-acceptance-XXXXXX";
    if (!mkdtemp(tmpl)) return fail(detail, "mkdtemp failed");
    std::filesystem::path dir(tmpl);
    auto at = [&](const char* name) { return (dir / name).string(); };

    write_file(at("c9.arcs"), emit_arcs(canonical_cycle_power_model(9, 2)));
    write_file(at("c7.arcs"), emit_arcs(canonical_cycle_power_model(7, 2)));
    write_file(at("bad.paths"), "this is not a paths file\n");

    bool ok = [&] {
        if (run_cli("convert " + at("c9.arcs") + " --to b1epr --out " +
                    at("m.paths")) != 0)
            return fail(detail, "convert to the 1-bend form failed");

        if (run_cli("verify " + at("m.paths") + " --against " + at("c9.arcs") +
                    " --bends 1 --format json --out " + at("ok.json")) != 0)
            return fail(detail, "verifier rejected a sound model");
        nlohmann::json okj = nlohmann::json::parse(read_file(at("ok.json")));
        if (okj["schema"] != 1 || okj["command"] != "verify" ||
            okj["result"]["verdict"] != "pass")
            return fail(detail, "passing verify run not reported as pass");
        for (const auto& [name, state] :
             okj["result"]["checks"].items()) {
            (void)name;
            if (state == "fail")
                return fail(detail, "passing verify run reported a failed check");
        }

        if (run_cli("verify " + at("m.paths") + " --against " + at("c7.arcs") +
                    " --format json --out " + at("bad.json")) != 1)
            return fail(detail, "verifier accepted a wrong reference");
        nlohmann::json badj = nlohmann::json::parse(read_file(at("bad.json")));
        if (badj["result"]["verdict"] != "fail" ||
            badj["result"]["checks"]["graph_equality"] != "fail")
            return fail(detail, "failing verify run not reported as fail");

        if (run_cli("verify " + at("bad.paths") + " --against " +
                    at("c9.arcs")) != 2)
            return fail(detail, "malformed input did not exit with code 2");
        return true;
    }();
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc >= 2) g_cli = argv[1];

    int failures = 0;
    auto crit = [&](const char* label,
                    const std::function<bool(std::string&)>& body) {
        if (!run_criterion(label, body)) ++failures;
    };

    crit("1. three-bend grid paths represent 500 random arc models",
         paths_b3_soundness);
    crit("2. two-bend rectangle paths represent 200 normal arc models",
         paths_b2_soundness);
    crit("3. canonical cycle powers are normal-helly exactly when 6k < 2n",
         nh_threshold);
    crit("4. four points exist on normal-helly cycle powers exactly when 2n >= 8k",
         four_point_threshold);
    crit("5. decision procedure accepts the 9-cycle square and rejects the "
         "7-cycle square with t=2",
         decision_pipeline);
    crit("6. arithmetic containment criterion matches the induced-subgraph "
         "search for k in {2,3}, n <= 12",
         criterion_oracle_equivalence);
    crit("7. 200 pipeline rectangle models read back as normal-helly arc "
         "models with the same graph",
         readback_soundness);
    crit("8. four-point successes on non-chordal corpus models yield verified "
         "separating cliques",
         separation_witnesses);
    crit("9. the four frozen spider drawings witness bend bounds 1/2/3/2",
         spider_fixtures_verify);
    crit("10. one-bend four-cycles classify as pie, crossing pair, or frame",
         c4_trichotomy);
    crit("11. formats round-trip on 1000 files and verifier exit codes match "
         "reported verdicts",
         roundtrips_and_cli);

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
