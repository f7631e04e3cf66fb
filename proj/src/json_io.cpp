#include "clawreconf/json_io.hpp"

#include "clawreconf/errors.hpp"

namespace clawreconf {

using json = nlohmann::ordered_json;

namespace {

json labels(const Graph& g, std::span<const Vertex> vs) {
    json out = json::array();
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

json moves_json(const Graph& g, std::span<const Move> moves) {
    json out = json::array();
    for (const Move& m : moves) out.push_back(json::array({g.label(m.from), g.label(m.to)}));
    return out;
}

Vertex vertex_from(const Graph& g, const json& item) {
    std::string label;
    if (item.is_string()) {
        label = item.get<std::string>();
    } else if (item.is_number_integer()) {
        label = std::to_string(item.get<long long>());
    } else {
        throw ParseError("vertex labels must be strings or integers", 0);
    }
    const auto v = g.find_label(label);
    if (!v) throw ParseError("unknown vertex label '" + label + "'", 0);
    return *v;
}

VertexSet set_from(const Graph& g, const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) throw ParseError(std::string("missing array \"") + key + "\"", 0);
    VertexSet out;
    for (const json& item : doc.at(key)) out.push_back(vertex_from(g, item));
    const VertexSet sorted = normalized(out);
    if (sorted.size() != out.size()) throw ParseError(std::string("duplicate vertex in \"") + key + "\"", 0);
    return sorted;
}

}  // namespace

json certificate_json(const Graph& g, const ReconfigSequence& seq) {
    return json{{"model", to_string(seq.model)},
                {"start", labels(g, seq.start.vertices())},
                {"moves", moves_json(g, seq.moves)}};
}

ReconfigSequence certificate_from_json(const Graph& g, const json& doc) {
    if (!doc.is_object()) throw ParseError("certificate must be an object", 0);
    ReconfigSequence seq;
    seq.model = parse_model(doc.value("model", "TS"));
    seq.start = IndependentSet::make(g, set_from(g, doc, "start"));
    if (!doc.contains("moves") || !doc.at("moves").is_array()) throw ParseError("missing array \"moves\"", 0);
    for (const json& m : doc.at("moves")) {
        if (!m.is_array() || m.size() != 2) throw ParseError("each move is a [from, to] pair", 0);
        seq.moves.push_back({vertex_from(g, m[0]), vertex_from(g, m[1])});
    }
    return seq;
}

json resolution_json(const Graph& g, const BadCycle& c, const ResolutionCertificate& cert) {
    json out{{"cycle", labels(g, c.vertices)}, {"kind", to_string(cert.kind)}};
    if (cert.kind == ResolutionKind::InternalEnumeration) {
        out["witness"] = moves_json(g, cert.moves);
    } else {
        out["witness"] = labels(g, cert.path);
    }
    if (cert.kind == ResolutionKind::InternalDigraph) {
        out["orientation"] = cert.orientation == Orientation::Forward ? "forward" : "reversed";
    }
    return out;
}

json decision_json(const Graph& g, const Decision& d) {
    json out{{"schema", kSchemaVersion},
             {"answer", to_string(d.answer)},
             {"model", to_string(d.model)},
             {"method", d.by_oracle ? "oracle" : "polynomial"},
             {"reason", d.reason}};
    if (d.sequence) {
        out["certificate"] = certificate_json(g, *d.sequence);
    } else if (d.blocker) {
        out["certificate"] = json{{"cycle", labels(g, d.blocker->cycle.vertices)},
                                  {"component", d.blocker->component}};
    } else if (d.claw) {
        out["certificate"] = json{{"claw", {{"center", g.label(d.claw->center)}, {"leaves", labels(g, d.claw->leaves)}}}};
    } else {
        out["certificate"] = nullptr;
    }
    json res = json::array();
    for (const auto& [c, cert] : d.resolutions) res.push_back(resolution_json(g, c, cert));
    out["resolutions"] = std::move(res);
    out["stats"] = json{{"cycles", d.stats.cycles},
                        {"resolvedExternally", d.stats.resolved_externally},
                        {"resolvedInternally", d.stats.resolved_internally},
                        {"sequenceLength", d.stats.sequence_length}};
    return out;
}

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance is not valid JSON: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("graph") || !doc.at("graph").is_string()) {
        throw ParseError("instance needs a \"graph\" string holding an edge list", 0);
    }
    Instance inst;
    inst.graph = parse_graph(doc.at("graph").get<std::string>());
    inst.i = IndependentSet::make(inst.graph, set_from(inst.graph, doc, "I"));
    inst.j = IndependentSet::make(inst.graph, set_from(inst.graph, doc, "J"));
    if (doc.contains("model")) {
        if (!doc.at("model").is_string()) throw ParseError("\"model\" must be a string", 0);
        inst.model = parse_model(doc.at("model").get<std::string>());
    }
    return inst;
}

std::string instance_json(const Graph& g, std::span<const Vertex> i, std::span<const Vertex> j, Model model) {
    const json doc{{"graph", print_graph(g)}, {"I", labels(g, i)}, {"J", labels(g, j)}, {"model", to_string(model)}};
    return doc.dump(2) + "\n";
}

}  // namespace clawreconf
