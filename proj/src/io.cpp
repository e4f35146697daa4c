#include "thetadiv/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace thetadiv {

namespace {

using nlohmann::json;

long long to_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer, got " + j.dump());
    return j.get<long long>();
}

std::string to_id(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a vertex id string, got " + j.dump());
    return j.get<std::string>();
}

Multidegree multidegree_from_json(const DualGraph& g, const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_object())
        throw ParseError(where + ": expected an object with a \"values\" map");
    const json& values = j.at("values");
    Multidegree d;
    d.values.assign(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> present(static_cast<size_t>(g.vertex_count()), 0);
    for (auto it = values.begin(); it != values.end(); ++it) {
        if (!g.has_vertex(it.key()))
            throw ParseError(where + ".values: unknown vertex id '" + it.key() + "'");
        const VertexIndex v = g.index_of(it.key());
        d.values[static_cast<size_t>(v)] = to_integer(it.value(), where + ".values." + it.key());
        present[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!present[static_cast<size_t>(v)])
            throw ParseError(where + ".values: missing vertex '" + g.vertex(v).id + "'");
    return d;
}

json multidegree_to_json(const DualGraph& g, const Multidegree& d) {
    json values = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        values[g.vertex(v).id] = d.at(v);
    return json{{"values", values}};
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    if (!doc.contains("vertices") || !doc.at("vertices").is_array())
        throw ParseError("top level: missing \"vertices\" list");
    if (!doc.contains("edges") || !doc.at("edges").is_array())
        throw ParseError("top level: missing \"edges\" list");

    std::vector<Vertex> vertices;
    int i = 0;
    for (const json& jv : doc.at("vertices")) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!jv.is_object() || !jv.contains("id") || !jv.contains("weight"))
            throw ParseError(where + ": expected {\"id\": ..., \"weight\": ...}");
        Vertex v;
        v.id = to_id(jv.at("id"), where + ".id");
        v.weight = to_integer(jv.at("weight"), where + ".weight");
        if (v.weight < 0) throw ParseError(where + ".weight: must be nonnegative");
        vertices.push_back(std::move(v));
        ++i;
    }

    std::vector<std::pair<std::string, std::string>> edges;
    i = 0;
    for (const json& je : doc.at("edges")) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!je.is_array() || je.size() != 2)
            throw ParseError(where + ": expected a pair [id, id]");
        edges.emplace_back(to_id(je.at(0), where + "[0]"), to_id(je.at(1), where + "[1]"));
        ++i;
    }

    try {
        ParsedInput parsed{DualGraph(std::move(vertices), edges), std::nullopt};
        if (doc.contains("multidegree"))
            parsed.multidegree = multidegree_from_json(parsed.graph, doc.at("multidegree"),
                                                       "multidegree");
        return parsed;
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str());
}

std::string serialize_graph(const DualGraph& g, const Multidegree* d) {
    json doc;
    json vertices = json::array();
    for (const Vertex& v : g.vertices())
        vertices.push_back(json{{"id", v.id}, {"weight", v.weight}});
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back(json::array({g.vertex(e.a).id, g.vertex(e.b).id}));
    doc["vertices"] = vertices;
    doc["edges"] = edges;
    if (d != nullptr) {
        require_matching(g, *d);
        doc["multidegree"] = multidegree_to_json(g, *d);
    }
    return doc.dump(2) + "\n";
}

std::string serialize_multidegree(const DualGraph& g, const Multidegree& d) {
    require_matching(g, d);
    return multidegree_to_json(g, d).dump(2) + "\n";
}

Multidegree parse_multidegree_document(const DualGraph& g, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    return multidegree_from_json(g, doc, "multidegree");
}

Multidegree parse_multidegree_literal(const DualGraph& g, const std::string& literal) {
    Multidegree d;
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ParseError("multidegree literal: '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw ParseError("multidegree literal: trailing characters in '" + item + "'");
        d.values.push_back(value);
    }
    if (static_cast<int>(d.values.size()) != g.vertex_count())
        throw ParseError("multidegree literal has " + std::to_string(d.values.size()) +
                         " values; the graph has " + std::to_string(g.vertex_count()) +
                         " vertices");
    return d;
}

std::string multidegree_literal(const Multidegree& d) {
    std::string s;
    for (size_t i = 0; i < d.values.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(d.values[i]);
    }
    return s;
}

Orientation parse_orientation_tokens(const DualGraph& g, const std::string& csv) {
    std::vector<std::string> tokens;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) tokens.push_back(item);
    if (static_cast<int>(tokens.size()) != g.edge_count())
        throw ParseError("orientation has " + std::to_string(tokens.size()) +
                         " tokens; the graph has " + std::to_string(g.edge_count()) + " edges");
    Orientation o;
    o.directions.reserve(tokens.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        const std::string& t = tokens[static_cast<size_t>(e)];
        if (g.edge(e).is_loop()) {
            if (t != "loop")
                throw ParseError("edge " + std::to_string(e) + " is a loop; expected 'loop', got '" +
                                 t + "'");
            o.directions.push_back(EdgeDirection::Loop);
        } else if (t == "ab") {
            o.directions.push_back(EdgeDirection::AToB);
        } else if (t == "ba") {
            o.directions.push_back(EdgeDirection::BToA);
        } else {
            throw ParseError("edge " + std::to_string(e) + ": expected 'ab' or 'ba', got '" + t +
                             "'");
        }
    }
    return o;
}

std::string orientation_tokens(const DualGraph& g, const Orientation& o) {
    validate_orientation(g, o);
    std::string s;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e > 0) s += ",";
        switch (o.directions[static_cast<size_t>(e)]) {
            case EdgeDirection::AToB: s += "ab"; break;
            case EdgeDirection::BToA: s += "ba"; break;
            case EdgeDirection::Loop: s += "loop"; break;
        }
    }
    return s;
}

}  // namespace thetadiv
