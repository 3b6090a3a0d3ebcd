// Command-line surface over the arcgrid library: family generators,
// arc-model-to-grid conversions, model analysis, the one-bend rectangle
// decision pipeline, induced-subgraph queries, representation verification,
// and deterministic rendering.
//
// Exit codes: 0 success, 1 verification/representation failure, 2 input
// error (bad flags, unreadable files, parse diagnostics, violated
// preconditions).

#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcgrid/circle.hpp"
#include "arcgrid/families.hpp"
#include "arcgrid/formats.hpp"
#include "arcgrid/graph.hpp"
#include "arcgrid/grid.hpp"
#include "arcgrid/recognition.hpp"
#include "arcgrid/render.hpp"
#include "arcgrid/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Globals {
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
};

void add_globals(CLI::App* sub, Globals& g) {
    sub->add_option("--seed", g.seed, "seed for randomized generators");
    sub->add_option("--format", g.format, "output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", g.out,
                    "write the primary output to this file instead of stdout");
}

void deliver(const Globals& g, const std::string& text) {
    if (g.out.empty())
        std::fwrite(text.data(), 1, text.size(), stdout);
    else
        arcgrid::write_file(g.out, text);
}

json envelope(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool looks_like_arcs(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text.compare(i, 4, "arcs") == 0;
}

std::string verdict_name(arcgrid::B1Verdict v) {
    switch (v) {
        case arcgrid::B1Verdict::Yes: return "yes";
        case arcgrid::B1Verdict::YesInterval: return "yes-interval";
        default: return "no";
    }
}

std::string reason_name(arcgrid::B1Reason r) {
    switch (r) {
        case arcgrid::B1Reason::None: return "none";
        case arcgrid::B1Reason::NotNHModel: return "not-nh-model";
        case arcgrid::B1Reason::PowerCycleObstruction:
            return "power-cycle-obstruction";
        default: return "no-four-points";
    }
}

int run_gen(const Globals& g, const std::string& family, int n, int k,
            bool model, const std::string& which) {
    std::string artifact, kind;
    if (family == "cycle-power") {
        if (n <= 0 || k <= 0)
            throw std::invalid_argument("gen cycle-power requires --n and --k");
        if (model) {
            artifact = arcgrid::emit_arcs(
                arcgrid::canonical_cycle_power_model(n, k));
            kind = "arcs";
        } else {
            artifact = arcgrid::emit_graph(arcgrid::cycle_power(n, k));
            kind = "graph";
        }
    } else if (family == "thick-spider") {
        if (n <= 0) throw std::invalid_argument("gen thick-spider requires --n");
        artifact = arcgrid::emit_graph(arcgrid::thick_spider(n));
        kind = "graph";
    } else if (family == "random-ca") {
        if (n <= 0) throw std::invalid_argument("gen random-ca requires --n");
        artifact = arcgrid::emit_arcs(arcgrid::random_ca_model(g.seed, n));
        kind = "arcs";
    } else if (family == "interval") {
        if (n <= 0) throw std::invalid_argument("gen interval requires --n");
        artifact = arcgrid::emit_arcs(arcgrid::random_interval_model(g.seed, n));
        kind = "arcs";
    } else { // spider-fixture
        arcgrid::SpiderFixtureKind fk;
        if (which == "s3-b1epg")
            fk = arcgrid::SpiderFixtureKind::S3_B1EPG;
        else if (which == "s6-b2epr")
            fk = arcgrid::SpiderFixtureKind::S6_B2EPR;
        else if (which == "s7-b3epr")
            fk = arcgrid::SpiderFixtureKind::S7_B3EPR;
        else if (which == "s7-b2epg")
            fk = arcgrid::SpiderFixtureKind::S7_B2EPG;
        else
            throw std::invalid_argument("gen spider-fixture requires --which");
        artifact = arcgrid::emit_paths(arcgrid::spider_fixture(fk));
        kind = "paths";
    }
    if (g.format == "json") {
        json j = envelope("gen");
        j["result"] = {{"family", family},
                       {"kind", kind},
                       {"digest", arcgrid::input_digest(artifact)},
                       {"artifact", artifact}};
        deliver(g, dump(j));
    } else {
        deliver(g, artifact);
    }
    return 0;
}

int run_convert(const Globals& g, const std::string& in, const std::string& to) {
    std::string text = arcgrid::read_file(in);
    arcgrid::CircularArcModel m = arcgrid::parse_arcs(text);
    arcgrid::GridModel out;
    if (to == "b3epg") {
        out = arcgrid::ca_to_b3_epg(m);
    } else if (to == "b4epr") {
        out = arcgrid::ca_to_b4_epr(m);
    } else if (to == "b2epr") {
        out = arcgrid::nca_to_b2_epr(m);
    } else { // b1epr
        arcgrid::B1Decision d = arcgrid::decide_b1_epr(m);
        if (!d.model) {
            if (g.format == "json") {
                json j = envelope("convert");
                j["input_digest"] = arcgrid::input_digest(text);
                j["result"] = {{"to", to},
                               {"representable", false},
                               {"reason", reason_name(d.reason)}};
                deliver(g, dump(j));
            } else {
                std::fprintf(stderr, "not representable: %s\n",
                             reason_name(d.reason).c_str());
            }
            return 1;
        }
        out = *d.model;
    }
    std::string artifact = arcgrid::emit_paths(out);
    if (g.format == "json") {
        json j = envelope("convert");
        j["input_digest"] = arcgrid::input_digest(text);
        j["result"] = {{"to", to},
                       {"bends", arcgrid::max_bends(out)},
                       {"digest", arcgrid::input_digest(artifact)},
                       {"paths", artifact}};
        deliver(g, dump(j));
    } else {
        deliver(g, artifact);
    }
    return 0;
}

int run_analyze(const Globals& g, const std::string& in,
                const std::vector<long long>& crit) {
    if (in.empty() && crit.empty())
        throw std::invalid_argument(
            "analyze requires an input model and/or --criterion n k t");
    json result;
    std::string text_out, digest;
    if (!in.empty()) {
        std::string text = arcgrid::read_file(in);
        digest = arcgrid::input_digest(text);
        arcgrid::CircularArcModel m = arcgrid::parse_arcs(text);
        arcgrid::Graph ig = arcgrid::intersection_graph(m);
        bool normal = arcgrid::is_normal(m);
        bool nh = arcgrid::is_normal_helly(m);
        bool chordal = arcgrid::is_chordal(ig);
        auto fp = arcgrid::find_four_points(m);
        result["arcs"] = m.arc_count();
        result["normal"] = normal;
        result["normal_helly"] = nh;
        result["chordal"] = chordal;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "arcs: %d\nnormal: %s\nnormal-helly: %s\nchordal: %s\n",
                      m.arc_count(), normal ? "true" : "false",
                      nh ? "true" : "false", chordal ? "true" : "false");
        text_out += buf;
        if (fp) {
            json pts = json::array();
            std::string line = "four-points:";
            for (const auto& p : fp->points) {
                pts.push_back(p.gap_index());
                line += " " + std::to_string(p.gap_index());
            }
            result["four_points"] = pts;
            text_out += line + "\n";
        } else {
            result["four_points"] = nullptr;
            text_out += "four-points: none\n";
        }
    }
    if (!crit.empty()) {
        bool r = arcgrid::cycle_power_contains_criterion(crit[0], crit[1],
                                                         crit[2]);
        result["criterion"] = r;
        text_out += std::string("criterion: ") + (r ? "true" : "false") + "\n";
    }
    if (g.format == "json") {
        json j = envelope("analyze");
        if (!digest.empty()) j["input_digest"] = digest;
        j["result"] = result;
        deliver(g, dump(j));
    } else {
        deliver(g, text_out);
    }
    return 0;
}

int run_decide(const Globals& g, const std::string& in,
               const std::string& model_out) {
    std::string text = arcgrid::read_file(in);
    arcgrid::CircularArcModel m = arcgrid::parse_arcs(text);
    arcgrid::B1Decision d = arcgrid::decide_b1_epr(m);
    bool written = false;
    if (!model_out.empty() && d.model) {
        arcgrid::write_file(model_out, arcgrid::emit_paths(*d.model));
        written = true;
    }
    if (g.format == "json") {
        json j = envelope("decide");
        j["input_digest"] = arcgrid::input_digest(text);
        json result;
        result["verdict"] = verdict_name(d.verdict);
        result["reason"] = reason_name(d.reason);
        result["chordal"] = d.chordal;
        if (d.obstruction_t) result["obstruction_t"] = *d.obstruction_t;
        if (d.model) result["paths"] = arcgrid::emit_paths(*d.model);
        if (!model_out.empty()) result["model_written"] = written;
        j["result"] = result;
        deliver(g, dump(j));
    } else {
        std::string t = "verdict: " + verdict_name(d.verdict) + "\n" +
                        "reason: " + reason_name(d.reason) + "\n" +
                        "chordal: " + (d.chordal ? "true" : "false") + "\n";
        if (d.obstruction_t)
            t += "obstruction-t: " + std::to_string(*d.obstruction_t) + "\n";
        if (!model_out.empty())
            t += std::string("model-written: ") + (written ? "true" : "false") +
                 "\n";
        deliver(g, t);
    }
    return 0;
}

int run_subgraph(const Globals& g, const std::string& in,
                 const std::vector<std::string>& target) {
    if (target.size() != 3 || target[0] != "cycle-power")
        throw std::invalid_argument(
            "subgraph requires --target cycle-power <n> <k>");
    int n = std::stoi(target[1]);
    int k = std::stoi(target[2]);
    std::string text = arcgrid::read_file(in);
    arcgrid::Graph host;
    if (looks_like_arcs(text))
        host = arcgrid::intersection_graph(arcgrid::parse_arcs(text));
    else
        host = arcgrid::parse_graph(text);
    arcgrid::Graph h = arcgrid::cycle_power(n, k);
    bool found = arcgrid::contains_induced(host, h, true);
    if (g.format == "json") {
        json j = envelope("subgraph");
        j["input_digest"] = arcgrid::input_digest(text);
        j["result"] = {{"target", "cycle-power"},
                       {"n", n},
                       {"k", k},
                       {"contains", found}};
        deliver(g, dump(j));
    } else {
        deliver(g, std::string("contains: ") + (found ? "true" : "false") +
                       "\n");
    }
    return 0;
}

int run_verify(const Globals& g, const std::string& paths_file,
               const std::string& against_file, std::optional<int> bends) {
    std::string ptext = arcgrid::read_file(paths_file);
    arcgrid::GridModel pm = arcgrid::parse_paths(ptext);
    std::string atext = arcgrid::read_file(against_file);
    arcgrid::Graph ref;
    arcgrid::CircularArcModel am;
    bool against_arcs = looks_like_arcs(atext);
    if (against_arcs) {
        am = arcgrid::parse_arcs(atext);
        ref = arcgrid::intersection_graph(am);
    } else {
        ref = arcgrid::parse_graph(atext);
    }

    auto check = [](int state) { // 0 fail, 1 pass, 2 skipped
        return state == 0 ? "fail" : state == 1 ? "pass" : "skipped";
    };
    int eq = arcgrid::epg_intersection_graph(pm) == ref ? 1 : 0;
    int bend_ok = bends ? (arcgrid::max_bends(pm) <= *bends ? 1 : 0) : 2;
    int epr_ok = pm.epr ? (arcgrid::validate_epr(pm) ? 1 : 0) : 2;
    int nh_ok = against_arcs ? (arcgrid::is_normal_helly(am) ? 1 : 0) : 2;
    bool failed = eq == 0 || bend_ok == 0 || epr_ok == 0 || nh_ok == 0;

    if (g.format == "json") {
        json j = envelope("verify");
        j["input_digest"] = arcgrid::input_digest(ptext);
        j["against_digest"] = arcgrid::input_digest(atext);
        j["result"] = {{"checks",
                        {{"graph_equality", check(eq)},
                         {"bend_bound", check(bend_ok)},
                         {"epr_validity", check(epr_ok)},
                         {"nh_validity", check(nh_ok)}}},
                       {"verdict", failed ? "fail" : "pass"}};
        deliver(g, dump(j));
    } else {
        std::string t;
        t += std::string("graph_equality: ") + check(eq) + "\n";
        t += std::string("bend_bound: ") + check(bend_ok) + "\n";
        t += std::string("epr_validity: ") + check(epr_ok) + "\n";
        t += std::string("nh_validity: ") + check(nh_ok) + "\n";
        t += std::string("verdict: ") + (failed ? "fail" : "pass") + "\n";
        deliver(g, t);
    }
    return failed ? 1 : 0;
}

int run_render(const Globals& g, const std::string& in, bool svg, bool ascii) {
    if (svg && ascii)
        throw std::invalid_argument("render: choose one of --svg/--ascii");
    std::string text = arcgrid::read_file(in);
    arcgrid::GridModel m = arcgrid::parse_paths(text);
    std::string artifact = ascii ? arcgrid::render_ascii(m)
                                 : arcgrid::render_svg(m);
    if (g.format == "json") {
        json j = envelope("render");
        j["input_digest"] = arcgrid::input_digest(text);
        j["result"] = {{"kind", ascii ? "ascii" : "svg"},
                       {"digest", arcgrid::input_digest(artifact)},
                       {"artifact", artifact}};
        deliver(g, dump(j));
    } else {
        deliver(g, artifact);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular-arc models and their grid path representations"};
    app.require_subcommand(1);
    int rc = 0;

    // gen
    Globals gen_g;
    std::string gen_family, gen_which;
    int gen_n = 0, gen_k = 0;
    bool gen_model = false;
    CLI::App* gen = app.add_subcommand("gen", "generate a family instance");
    gen->add_option("family", gen_family, "family to generate")
        ->required()
        ->check(CLI::IsMember({"cycle-power", "thick-spider", "random-ca",
                               "interval", "spider-fixture"}));
    gen->add_option("--n", gen_n, "size parameter");
    gen->add_option("--k", gen_k, "power parameter (cycle-power)");
    gen->add_flag("--model", gen_model,
                  "emit the canonical arc model instead of the graph");
    gen->add_option("--which", gen_which, "fixture name (spider-fixture)")
        ->check(CLI::IsMember(
            {"s3-b1epg", "s6-b2epr", "s7-b3epr", "s7-b2epg"}));
    add_globals(gen, gen_g);
    gen->callback([&] {
        rc = run_gen(gen_g, gen_family, gen_n, gen_k, gen_model, gen_which);
    });

    // convert
    Globals conv_g;
    std::string conv_in, conv_to;
    CLI::App* conv =
        app.add_subcommand("convert", "convert an arc model to grid paths");
    conv->add_option("input", conv_in, ".arcs file")->required();
    conv->add_option("--to", conv_to, "target representation")
        ->required()
        ->check(CLI::IsMember({"b3epg", "b4epr", "b2epr", "b1epr"}));
    add_globals(conv, conv_g);
    conv->callback([&] { rc = run_convert(conv_g, conv_in, conv_to); });

    // analyze
    Globals ana_g;
    std::string ana_in;
    std::vector<long long> ana_crit;
    CLI::App* ana =
        app.add_subcommand("analyze", "report structural properties");
    ana->add_option("input", ana_in, ".arcs file");
    ana->add_option("--criterion", ana_crit,
                    "evaluate the containment criterion for n k t")
        ->expected(3);
    add_globals(ana, ana_g);
    ana->callback([&] { rc = run_analyze(ana_g, ana_in, ana_crit); });

    // decide
    Globals dec_g;
    std::string dec_in, dec_model_out;
    CLI::App* dec = app.add_subcommand(
        "decide", "decide one-bend rectangle representability");
    dec->add_option("input", dec_in, ".arcs file")->required();
    dec->add_option("--model-out", dec_model_out,
                    "write the witness paths to this file when one exists");
    add_globals(dec, dec_g);
    dec->callback([&] { rc = run_decide(dec_g, dec_in, dec_model_out); });

    // subgraph
    Globals sub_g;
    std::string sub_in;
    std::vector<std::string> sub_target;
    CLI::App* sub = app.add_subcommand(
        "subgraph", "test for an induced family member");
    sub->add_option("input", sub_in, ".graph or .arcs file")->required();
    sub->add_option("--target", sub_target, "cycle-power <n> <k>")
        ->required()
        ->expected(3);
    add_globals(sub, sub_g);
    sub->callback([&] { rc = run_subgraph(sub_g, sub_in, sub_target); });

    // verify
    Globals ver_g;
    std::string ver_in, ver_against;
    int ver_bends = 0;
    CLI::App* ver = app.add_subcommand(
        "verify", "check a paths file against a reference model or graph");
    ver->add_option("input", ver_in, ".paths file")->required();
    CLI::Option* against_opt =
        ver->add_option("--against", ver_against, ".arcs or .graph reference")
            ->required();
    (void)against_opt;
    CLI::Option* bends_opt =
        ver->add_option("--bends", ver_bends, "maximum allowed bends");
    add_globals(ver, ver_g);
    ver->callback([&] {
        std::optional<int> b;
        if (bends_opt->count() > 0) b = ver_bends;
        rc = run_verify(ver_g, ver_in, ver_against, b);
    });

    // render
    Globals ren_g;
    std::string ren_in;
    bool ren_svg = false, ren_ascii = false;
    CLI::App* ren = app.add_subcommand("render", "render grid paths");
    ren->add_option("input", ren_in, ".paths file")->required();
    ren->add_flag("--svg", ren_svg, "emit SVG (default)");
    ren->add_flag("--ascii", ren_ascii, "emit a character sketch");
    add_globals(ren, ren_g);
    ren->callback([&] { rc = run_render(ren_g, ren_in, ren_svg, ren_ascii); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const arcgrid::ParseError& e) {
        std::fputs(arcgrid::format_diagnostics(e.diagnostics()).c_str(),
                   stderr);
        std::fputc('\n', stderr);
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
