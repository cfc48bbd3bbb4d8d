#include "cutnerve/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "cutnerve/error.hpp"

namespace cutnerve {

namespace {

std::vector<std::string> strings(const Json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

Json face_json(const SimplicialComplex& c, const Face& f) {
    return Json(c.face_labels(f));
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    return {{"type", "graph"}, {"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices")) throw Error(ErrorKind::Parse, "graph JSON needs a vertices array");
    auto labels = strings(j.at("vertices"), "vertices");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            auto ends = strings(e, "edge");
            if (ends.size() != 2) throw Error(ErrorKind::Parse, "edge must have two endpoints");
            auto find = [&](const std::string& l) {
                auto it = std::find(labels.begin(), labels.end(), l);
                if (it == labels.end()) throw Error(ErrorKind::Parse, "edge endpoint '" + l + "' is not a vertex");
                return static_cast<int>(it - labels.begin());
            };
            edges.emplace_back(find(ends[0]), find(ends[1]));
        }
    }
    return Graph(std::move(labels), edges);
}

Json to_json(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (const auto& f : c.facets()) facets.push_back(face_json(c, f));
    return {{"type", "complex"}, {"vertices", c.labels()}, {"void", c.is_void()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets")) throw Error(ErrorKind::Parse, "complex JSON needs a facets array");
    if (!j.at("facets").is_array()) throw Error(ErrorKind::Parse, "facets must be an array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(strings(f, "facet"));
    std::vector<std::string> labels;
    if (j.contains("vertices")) {
        labels = strings(j.at("vertices"), "vertices");
    } else {
        for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    }
    if (j.value("void", false)) {
        if (!facets.empty()) throw Error(ErrorKind::Parse, "void complex cannot list facets");
        return SimplicialComplex::void_complex(std::move(labels));
    }
    if (facets.empty()) throw Error(ErrorKind::Parse, "non-void complex needs at least one facet ([] for the empty face)");
    try {
        return SimplicialComplex::from_label_facets(std::move(labels), facets);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

Json canonical_json(const SimplicialComplex& c) {
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : c.facets()) {
        auto labels = c.face_labels(f);
        std::sort(labels.begin(), labels.end());
        facets.push_back(std::move(labels));
    }
    std::sort(facets.begin(), facets.end());
    std::vector<std::string> used;
    for (int v : c.used_vertices()) used.push_back(c.label(v));
    std::sort(used.begin(), used.end());
    return {{"void", c.is_void()}, {"vertices", used}, {"facets", facets}};
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string digest(const SimplicialComplex& c) {
    return fnv1a_hex(canonical_json(c).dump());
}

Json to_json(const HomologyProfile& p) {
    Json torsion = Json::array();
    for (std::size_t d = 0; d < p.torsion.size(); ++d)
        for (const auto& t : p.torsion[d]) torsion.push_back({static_cast<int>(d), t.str()});
    return {{"void", p.is_void}, {"betti_minus_one", p.betti_minus_one}, {"betti", p.betti}, {"torsion", torsion}};
}

Json to_json(const Cover& cover) {
    Json cells = Json::array();
    for (const auto& c : cover.cells()) cells.push_back({{"label", c.label}, {"simplex", face_json(cover.base(), c.simplex)}});
    Json parts = Json::array();
    for (const auto& p : cover.parts()) parts.push_back({{"label", p.label}, {"cells", p.cells}});
    return {{"type", "cover"}, {"base", to_json(cover.base())}, {"cells", cells}, {"parts", parts}};
}

Json to_json(const CollapseWitness& w, const SimplicialComplex& start) {
    Json steps = Json::array();
    for (const auto& s : w.steps) steps.push_back({face_json(start, s.sigma), face_json(start, s.tau)});
    return {{"type", "collapse-witness"},
            {"verdict", to_string(w.verdict)},
            {"search_steps", w.search_steps},
            {"complex", to_json(start)},
            {"steps", steps},
            {"terminal", to_json(w.terminal)}};
}

std::vector<FreePair> collapse_steps_from_json(const Json& j, const SimplicialComplex& c) {
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
        throw Error(ErrorKind::Parse, "witness JSON needs a steps array");
    std::vector<FreePair> out;
    for (const auto& s : j.at("steps")) {
        if (!s.is_array() || s.size() != 2) throw Error(ErrorKind::Parse, "collapse step must be [sigma, tau]");
        try {
            out.push_back({c.face_from_labels(strings(s[0], "face")), c.face_from_labels(strings(s[1], "face"))});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Parse) throw;
            throw Error(ErrorKind::Parse, e.what());
        }
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

}  // namespace cutnerve
