// Command-line front end: parses graph documents or bundled fixtures,
// dispatches to the library and emits deterministic output. Predicate
// commands exit 0 (true) / 1 (false) / 2 (error); witness commands print the
// witness or "none".

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "thetadiv/io.hpp"
#include "thetadiv/semistable.hpp"
#include "thetadiv/theta.hpp"

using namespace thetadiv;
using nlohmann::json;

namespace {

struct Options {
    std::string fixture_name;
    std::string graph_path;
    std::string multidegree;
    std::string orientation;
    std::string target;
    std::string vertex;
    long long total = 0;
    int edge = -1;
    bool json_mode = false;
};

struct LoadedInput {
    DualGraph graph;
    std::optional<Multidegree> multidegree;
    std::string source;
};

LoadedInput load_graph(const Options& opt) {
    if (opt.fixture_name.empty() == opt.graph_path.empty())
        throw InputError("exactly one of --fixture and --graph is required");
    if (!opt.fixture_name.empty()) {
        LoadedInput in{fixture(opt.fixture_name), std::nullopt, opt.fixture_name};
        if (!opt.multidegree.empty())
            in.multidegree = parse_multidegree_literal(in.graph, opt.multidegree);
        return in;
    }
    ParsedInput parsed = parse_input_file(opt.graph_path);
    LoadedInput in{std::move(parsed.graph), std::move(parsed.multidegree), opt.graph_path};
    if (!opt.multidegree.empty())
        in.multidegree = parse_multidegree_literal(in.graph, opt.multidegree);
    return in;
}

const Multidegree& need_multidegree(const LoadedInput& in) {
    if (!in.multidegree)
        throw InputError("this command needs --multidegree (or a document that embeds one)");
    return *in.multidegree;
}

json values_json(const Multidegree& d) { return json(d.values); }

json subset_json(const DualGraph& g, const VertexSet& y) { return json(y.ids(g)); }

std::string subset_text(const DualGraph& g, const VertexSet& y) {
    std::string s = "{";
    const auto ids = y.ids(g);
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) s += ",";
        s += ids[i];
    }
    return s + "}";
}

void emit(const Options& opt, const json& structured, const std::string& human) {
    if (opt.json_mode)
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << human;
}

const char* reason_name(ThetaReason r) {
    switch (r) {
        case ThetaReason::NotSemistable: return "not_semistable";
        case ThetaReason::PositiveWeightVertex: return "positive_weight_vertex";
        case ThetaReason::CyclicRealization: return "cyclic_realization";
        case ThetaReason::AllRationalAcyclic: return "all_rational_acyclic";
    }
    return "?";
}

int cmd_validate(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const DualGraph& g = in.graph;
    // Round-trip sanity on everything we accept.
    const std::string text = serialize_graph(g, in.multidegree ? &*in.multidegree : nullptr);
    parse_input(text);
    json out{{"command", "validate"},
             {"source", in.source},
             {"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"genus", g.genus()},
             {"connected", g.is_connected()},
             {"stable_curve", is_stable_curve(g)}};
    if (in.multidegree) out["multidegree"] = values_json(*in.multidegree);
    std::string human = "valid graph: " + std::to_string(g.vertex_count()) + " vertices, " +
                        std::to_string(g.edge_count()) + " edges, genus " +
                        std::to_string(g.genus()) + (g.is_connected() ? "" : ", disconnected") +
                        (is_stable_curve(g) ? ", stable curve" : "") + "\n";
    emit(opt, out, human);
    return 0;
}

int cmd_genus(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    emit(opt, json{{"command", "genus"}, {"genus", in.graph.genus()}},
         std::to_string(in.graph.genus()) + "\n");
    return 0;
}

int cmd_canonical(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const Multidegree k = canonical_multidegree(in.graph);
    emit(opt, json{{"command", "canonical"}, {"multidegree", values_json(k)}},
         multidegree_literal(k) + "\n");
    return 0;
}

int cmd_check(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const Multidegree& d = need_multidegree(in);
    const SemistabilityCheck ss = check_semistable(in.graph, d);
    const bool stable = ss.semistable && is_stable(in.graph, d);
    json out{{"command", "check"},
             {"multidegree", values_json(d)},
             {"semistable", ss.semistable},
             {"stable", stable},
             {"violating_subset", ss.witness ? subset_json(in.graph, *ss.witness) : json()}};
    std::string human;
    if (!ss.semistable)
        human = "not semistable (violated by " + subset_text(in.graph, *ss.witness) + ")\n";
    else
        human = stable ? "semistable, stable\n" : "semistable, not stable\n";
    emit(opt, out, human);
    return ss.semistable ? 0 : 1;
}

int cmd_orient(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const Multidegree& d = need_multidegree(in);
    std::optional<Orientation> o;
    std::string mode = "orientation";
    if (opt.vertex.empty()) {
        o = find_orientation(in.graph, d);
    } else {
        const VertexIndex v = in.graph.index_of(opt.vertex);
        if (d.total() == in.graph.genus()) {
            o = degree_g_criterion(in.graph, d, v);
            mode = "degree_g_witness";
        } else if (d.total() == in.graph.genus() - 2) {
            o = degree_g_minus_2_criterion(in.graph, d, v);
            mode = "degree_g_minus_2_witness";
        } else {
            throw PreconditionError(
                "--vertex witnesses need total degree genus or genus - 2");
        }
    }
    json out{{"command", "orient"},
             {"mode", mode},
             {"multidegree", values_json(d)},
             {"orientation", o ? json(orientation_tokens(in.graph, *o)) : json()}};
    emit(opt, out, (o ? orientation_tokens(in.graph, *o) : "none") + "\n");
    return o ? 0 : 1;
}

int cmd_acyclic(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    if (!opt.orientation.empty()) {
        const Orientation o = parse_orientation_tokens(in.graph, opt.orientation);
        const bool acyclic = is_acyclic(in.graph, o);
        const bool totally = is_totally_cyclic(in.graph, o);
        json src = json::array();
        std::string src_text;
        for (VertexIndex v : sources(in.graph, o)) {
            src.push_back(in.graph.vertex(v).id);
            if (!src_text.empty()) src_text += ",";
            src_text += in.graph.vertex(v).id;
        }
        json out{{"command", "acyclic"},
                 {"acyclic", acyclic},
                 {"totally_cyclic", totally},
                 {"sources", src}};
        emit(opt, out,
             std::string("acyclic: ") + (acyclic ? "yes" : "no") +
                 "; totally cyclic: " + (totally ? "yes" : "no") + "; sources: " +
                 (src_text.empty() ? "none" : src_text) + "\n");
        return acyclic ? 0 : 1;
    }
    const Multidegree& d = need_multidegree(in);
    const auto o = admits_acyclic_orientation(in.graph, d);
    json out{{"command", "acyclic"},
             {"multidegree", values_json(d)},
             {"orientation", o ? json(orientation_tokens(in.graph, *o)) : json()}};
    emit(opt, out, (o ? orientation_tokens(in.graph, *o) : "none") + "\n");
    return o ? 0 : 1;
}

int cmd_minty(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    if (opt.orientation.empty()) throw InputError("minty needs --orientation");
    if (opt.edge < 0) throw InputError("minty needs --edge");
    const Orientation o = parse_orientation_tokens(in.graph, opt.orientation);
    const MintyWitness w = minty_decompose(in.graph, o, opt.edge);
    const bool cycle = w.kind == MintyWitness::Kind::DirectedCycle;
    json out{{"command", "minty"},
             {"edge", opt.edge},
             {"kind", cycle ? "directed_cycle" : "directed_cut"},
             {"edges", json(w.edges)},
             {"sink_side", w.sink_side ? subset_json(in.graph, *w.sink_side) : json()}};
    std::string human = std::string(cycle ? "directed_cycle" : "directed_cut") + ": edges ";
    for (size_t i = 0; i < w.edges.size(); ++i) {
        if (i > 0) human += ",";
        human += std::to_string(w.edges[i]);
    }
    if (w.sink_side) human += "; sink side " + subset_text(in.graph, *w.sink_side);
    emit(opt, out, human + "\n");
    return 0;
}

int cmd_theta(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const Multidegree& d = need_multidegree(in);
    const ThetaVerdict v = theta_exists(in.graph, d);
    json witness;
    std::string witness_text;
    if (v.witness_vertex) {
        witness = in.graph.vertex(*v.witness_vertex).id;
        witness_text = in.graph.vertex(*v.witness_vertex).id;
    } else if (v.witness_orientation) {
        witness = orientation_tokens(in.graph, *v.witness_orientation);
        witness_text = orientation_tokens(in.graph, *v.witness_orientation);
    }
    json out{{"command", "theta"},
             {"multidegree", values_json(d)},
             {"semistable", v.semistable},
             {"exists", v.exists},
             {"reason", reason_name(v.reason)},
             {"witness", witness}};
    std::string human = std::string("theta divisor ") + (v.exists ? "exists" : "does not exist") +
                        "; reason: " + reason_name(v.reason);
    if (!witness_text.empty()) human += "; witness: " + witness_text;
    emit(opt, out, human + "\n");
    return v.exists ? 0 : 1;
}

int cmd_components(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    if (opt.orientation.empty()) throw InputError("components needs --orientation");
    const Orientation o = parse_orientation_tokens(in.graph, opt.orientation);
    const auto comps = theta_components(in.graph, o);
    json list = json::array();
    std::string human;
    for (const VertexSet& y : comps) {
        list.push_back(subset_json(in.graph, y));
        human += subset_text(in.graph, y) + "\n";
    }
    if (comps.empty()) human = "none\n";
    emit(opt, json{{"command", "components"}, {"components", list}}, human);
    return 0;
}

int cmd_enumerate(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const auto all = enumerate_semistable(in.graph, opt.total);
    json list = json::array();
    std::string human;
    for (const Multidegree& d : all) {
        list.push_back(values_json(d));
        human += multidegree_literal(d) + "\n";
    }
    emit(opt, json{{"command", "enumerate"}, {"total", opt.total}, {"multidegrees", list}},
         human);
    return 0;
}

int cmd_reduce(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const Multidegree& d = need_multidegree(in);
    const DualGraph& g = in.graph;
    bool down;
    ReduceTarget target;
    if (opt.target == "g") {
        target = ReduceTarget::Genus;
        down = true;
    } else if (opt.target == "g-2") {
        target = ReduceTarget::GenusMinusTwo;
        down = false;
    } else if (opt.target == "g-1") {
        target = ReduceTarget::GenusMinusOne;
        down = d.total() >= g.genus() - 1;
    } else {
        throw InputError("--target must be one of g, g-1, g-2");
    }
    const Multidegree e = down ? reduce_down(g, d, target) : reduce_up(g, d, target);
    const Multidegree result = down ? d - e : d + e;
    json out{{"command", "reduce"},
             {"direction", down ? "down" : "up"},
             {"target", opt.target},
             {"shift", values_json(e)},
             {"result", values_json(result)}};
    emit(opt, out,
         "shift " + multidegree_literal(e) + (down ? " down" : " up") + " to " +
             multidegree_literal(result) + "\n");
    return 0;
}

int cmd_residual(const Options& opt) {
    const LoadedInput in = load_graph(opt);
    const Multidegree r = residual(in.graph, need_multidegree(in));
    emit(opt, json{{"command", "residual"}, {"multidegree", values_json(r)}},
         multidegree_literal(r) + "\n");
    return 0;
}

int cmd_fixtures(const Options& opt) {
    json list = json::array();
    std::string human;
    for (const FixtureInfo& f : fixture_catalog()) {
        list.push_back(json{{"name", f.name}, {"description", f.description}});
        human += f.name + ": " + f.description + "\n";
    }
    emit(opt, json{{"command", "fixtures"}, {"fixtures", list}}, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semistable multidegrees, orientations and Theta divisors on dual graphs"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add = [&](const std::string& name, const std::string& help,
                   int (*fn)(const Options&), bool graph_opts = true) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (graph_opts) {
            sub->add_option("--fixture", opt.fixture_name, "bundled fixture name");
            sub->add_option("--graph", opt.graph_path, "path to a graph document");
            sub->add_option("--multidegree", opt.multidegree,
                            "comma-separated values in vertex order");
            sub->add_option("--orientation", opt.orientation,
                            "per-edge tokens ab/ba/loop, comma-separated");
            sub->add_option("--total", opt.total, "total degree");
            sub->add_option("--target", opt.target, "reduction target: g, g-1 or g-2");
            sub->add_option("--vertex", opt.vertex, "vertex id");
            sub->add_option("--edge", opt.edge, "edge index");
        }
        sub->add_flag("--json", opt.json_mode, "structured output");
        sub->callback([&, fn]() { handler = fn; });
        return sub;
    };

    add("validate", "parse a graph document and report its basic data", cmd_validate);
    add("genus", "print the genus", cmd_genus);
    add("canonical", "print the canonical multidegree", cmd_canonical);
    add("check", "decide semistability and stability", cmd_check);
    add("orient", "find an orientation realizing the multidegree", cmd_orient);
    add("acyclic", "classify an orientation, or search for an acyclic realization", cmd_acyclic);
    add("minty", "directed cycle or cut through an edge", cmd_minty);
    add("theta", "decide Theta divisor existence", cmd_theta);
    add("components", "Theta component index sets for an orientation", cmd_components);
    add("enumerate", "list semistable multidegrees of a total degree", cmd_enumerate);
    add("reduce", "shift a semistable multidegree to degree g, g-1 or g-2", cmd_reduce);
    add("residual", "print the residual multidegree", cmd_residual);
    add("fixtures", "list the bundled graphs", cmd_fixtures, false);

    CLI11_PARSE(app, argc, argv);

    try {
        return handler(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
