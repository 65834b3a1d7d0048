#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "k5color/boundary.hpp"

namespace k5color {

// Structural problems with an instance document: malformed JSON, wrong
// member shapes, undeclared edge endpoints. Semantic violations (list
// sizes, clique-ness of A, ...) are the validator's business, not the
// parser's.
class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline int require_id(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw DocumentError(where + ": expected a non-negative integer, got " + j.dump());
    return j.get<int>();
}

inline int parse_key_id(const std::string& key, const std::string& where) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw DocumentError(where + ": key \"" + key + "\" is not a decimal vertex id");
    try {
        return std::stoi(key);
    } catch (const std::exception&) {
        throw DocumentError(where + ": key \"" + key + "\" is out of range");
    }
}

inline std::set<int> parse_id_array(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw DocumentError(where + ": expected an array");
    std::set<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.insert(require_id(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace detail

// Document shape:
//   { "vertices": [ids...], "edges": [[u,v]...], "lists": {"id": [colours...]},
//     "A": [ids...], "B": [ids...] }
// A and B default to empty. Edge endpoints must be declared vertices.
inline Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(e.what());
    }
    if (!doc.is_object()) throw DocumentError("document root must be an object");
    for (const char* member : {"vertices", "edges", "lists"})
        if (!doc.contains(member))
            throw DocumentError(std::string("missing required member \"") + member + "\"");

    Instance inst;
    const auto& jverts = doc["vertices"];
    if (!jverts.is_array()) throw DocumentError("\"vertices\": expected an array");
    for (std::size_t i = 0; i < jverts.size(); ++i) {
        int v = detail::require_id(jverts[i], "vertices[" + std::to_string(i) + "]");
        if (inst.graph.has_vertex(v))
            throw DocumentError("vertices[" + std::to_string(i) + "]: duplicate vertex " +
                                std::to_string(v));
        inst.graph.add_vertex(v);
    }

    const auto& jedges = doc["edges"];
    if (!jedges.is_array()) throw DocumentError("\"edges\": expected an array");
    for (std::size_t i = 0; i < jedges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const auto& je = jedges[i];
        if (!je.is_array() || je.size() != 2)
            throw DocumentError(where + ": expected a pair [u, v]");
        int u = detail::require_id(je[0], where);
        int v = detail::require_id(je[1], where);
        if (u == v) throw DocumentError(where + ": self-loop at vertex " + std::to_string(u));
        if (!inst.graph.has_vertex(u) || !inst.graph.has_vertex(v))
            throw DocumentError(where + ": endpoint not among the declared vertices");
        if (inst.graph.has_edge(u, v))
            throw DocumentError(where + ": duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
        inst.graph.add_edge(u, v);
    }

    const auto& jlists = doc["lists"];
    if (!jlists.is_object()) throw DocumentError("\"lists\": expected an object");
    for (auto it = jlists.begin(); it != jlists.end(); ++it) {
        int v = detail::parse_key_id(it.key(), "lists");
        const std::string where = "lists[\"" + it.key() + "\"]";
        if (!it.value().is_array()) throw DocumentError(where + ": expected an array of colours");
        std::set<int> colors;
        for (std::size_t i = 0; i < it.value().size(); ++i)
            colors.insert(detail::require_id(it.value()[i], where + "[" + std::to_string(i) + "]"));
        inst.lists[v] = std::move(colors);
    }

    if (doc.contains("A")) inst.a = detail::parse_id_array(doc["A"], "\"A\"");
    if (doc.contains("B")) inst.b = detail::parse_id_array(doc["B"], "\"B\"");
    return inst;
}

inline std::string serialize_instance(const Instance& inst) {
    nlohmann::json doc;
    doc["vertices"] = inst.graph.vertices();
    auto& jedges = doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : inst.graph.edges()) jedges.push_back({u, v});
    auto& jlists = doc["lists"] = nlohmann::json::object();
    for (const auto& [v, list] : inst.lists)
        jlists[std::to_string(v)] = std::vector<int>(list.begin(), list.end());
    doc["A"] = std::vector<int>(inst.a.begin(), inst.a.end());
    doc["B"] = std::vector<int>(inst.b.begin(), inst.b.end());
    return doc.dump(2) + "\n";
}

// Coloring document: { "coloring": {"id": colour, ...} }
inline Coloring parse_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(e.what());
    }
    if (!doc.is_object() || !doc.contains("coloring"))
        throw DocumentError("coloring document must be an object with a \"coloring\" member");
    const auto& jcol = doc["coloring"];
    if (!jcol.is_object()) throw DocumentError("\"coloring\": expected an object");
    Coloring out;
    for (auto it = jcol.begin(); it != jcol.end(); ++it) {
        int v = detail::parse_key_id(it.key(), "coloring");
        out[v] = detail::require_id(it.value(), "coloring[\"" + it.key() + "\"]");
    }
    return out;
}

inline std::string serialize_coloring(const Coloring& col) {
    nlohmann::json doc;
    auto& jcol = doc["coloring"] = nlohmann::json::object();
    for (auto [v, c] : col) jcol[std::to_string(v)] = c;
    return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Instance parse_instance_file(const std::string& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

inline Coloring parse_coloring_file(const std::string& path) {
    try {
        return parse_coloring(read_file(path));
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

} // namespace k5color
