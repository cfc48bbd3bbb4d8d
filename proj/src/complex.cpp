#include "cutnerve/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "cutnerve/error.hpp"

namespace cutnerve {

Face::Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Face::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool Face::disjoint_from(const Face& other) const {
    auto i = vertices_.begin();
    auto j = other.vertices_.begin();
    while (i != vertices_.end() && j != other.vertices_.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

Face Face::with(int v) const {
    Face f = *this;
    auto it = std::lower_bound(f.vertices_.begin(), f.vertices_.end(), v);
    if (it == f.vertices_.end() || *it != v) f.vertices_.insert(it, v);
    return f;
}

Face Face::without(int v) const {
    Face f = *this;
    auto it = std::lower_bound(f.vertices_.begin(), f.vertices_.end(), v);
    if (it != f.vertices_.end() && *it == v) f.vertices_.erase(it);
    return f;
}

Face Face::united(const Face& other) const {
    Face f;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(f.vertices_));
    return f;
}

Face Face::intersected(const Face& other) const {
    Face f;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                          std::back_inserter(f.vertices_));
    return f;
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : f.vertices()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

FaceBudget default_face_budget() {
    static const FaceBudget budget = [] {
        FaceBudget b;
        if (const char* env = std::getenv("CUTNERVE_FACE_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) b.max_faces = static_cast<std::size_t>(v);
        }
        return b;
    }();
    return budget;
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (auto& f : faces) {
        bool absorbed = false;
        for (const auto& k : kept) {
            if (k.size() <= f.size()) break;
            if (f.is_subset_of(k)) { absorbed = true; break; }
        }
        if (!absorbed) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

namespace {

void check_unique_labels(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw Error(ErrorKind::InvalidParameter, "duplicate vertex label '" + l + "'");
}

std::unordered_map<std::string, int> label_index(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<int>(i));
    return idx;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels, std::vector<Face> candidates) {
    check_unique_labels(labels);
    const int n = static_cast<int>(labels.size());
    for (auto& f : candidates) {
        f = Face(f.data());
        for (int v : f.vertices())
            if (v < 0 || v >= n)
                throw Error(ErrorKind::InvalidFace, "face references unknown vertex index " + std::to_string(v));
    }
    SimplicialComplex c;
    c.labels_ = std::move(labels);
    c.facets_ = maximal_faces(std::move(candidates));
    return c;
}

SimplicialComplex SimplicialComplex::from_label_facets(std::vector<std::string> labels,
                                                       const std::vector<std::vector<std::string>>& candidates) {
    check_unique_labels(labels);
    auto idx = label_index(labels);
    std::vector<Face> faces;
    faces.reserve(candidates.size());
    for (const auto& cand : candidates) {
        std::vector<int> vs;
        for (const auto& l : cand) {
            auto it = idx.find(l);
            if (it == idx.end()) throw Error(ErrorKind::InvalidFace, "face references unknown vertex '" + l + "'");
            vs.push_back(it->second);
        }
        faces.emplace_back(std::move(vs));
    }
    return from_facets(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> labels) {
    return from_facets(std::move(labels), {});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> labels) {
    std::vector<int> all(labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return from_facets(std::move(labels), {Face::from_sorted(std::move(all))});
}

SimplicialComplex SimplicialComplex::discrete(std::vector<std::string> labels) {
    std::vector<Face> faces;
    for (std::size_t i = 0; i < labels.size(); ++i) faces.push_back(Face{static_cast<int>(i)});
    if (faces.empty()) faces.emplace_back();
    return from_facets(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::vector<std::string> labels) {
    std::vector<int> all(labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Face top = Face::from_sorted(all);
    std::vector<Face> faces;
    for (int v : all) faces.push_back(top.without(v));
    return from_facets(std::move(labels), std::move(faces));
}

std::optional<int> SimplicialComplex::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw Error(ErrorKind::UndefinedOnVoid, "dimension of the void complex");
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dimension());
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const auto& facet : facets_)
        if (f.is_subset_of(facet)) return true;
    return false;
}

std::vector<int> SimplicialComplex::used_vertices() const {
    std::vector<int> out;
    for (const auto& f : facets_) out.insert(out.end(), f.vertices().begin(), f.vertices().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
    std::vector<int> vs;
    for (const auto& l : labels) {
        auto i = index_of(l);
        if (!i) throw Error(ErrorKind::InvalidFace, "unknown vertex '" + l + "'");
        vs.push_back(*i);
    }
    return Face(std::move(vs));
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const {
    std::vector<std::string> out;
    for (int v : f.vertices()) out.push_back(label(v));
    return out;
}

std::size_t FaceTable::total() const {
    std::size_t t = 0;
    for (const auto& level : by_dim) t += level.size();
    return t;
}

std::size_t FaceTable::count(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < by_dim.size() ? by_dim[i].size() : 0;
}

const std::vector<Face>& FaceTable::of_dim(int d) const {
    static const std::vector<Face> none;
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < by_dim.size() ? by_dim[i] : none;
}

std::optional<std::size_t> FaceTable::position(const Face& f) const {
    const auto& level = of_dim(f.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

FaceTable enumerate_faces(const SimplicialComplex& c, FaceBudget budget) {
    FaceTable table;
    if (c.is_void()) return table;
    const int top = c.dimension();
    table.by_dim.resize(static_cast<std::size_t>(top + 2));
    std::size_t total = 0;
    // Each level is the facets of that size plus the boundary of the level above.
    for (int d = top; d >= -1; --d) {
        auto& level = table.by_dim[static_cast<std::size_t>(d + 1)];
        for (const auto& f : c.facets())
            if (f.dimension() == d) level.push_back(f);
        if (d < top) {
            const auto& above = table.by_dim[static_cast<std::size_t>(d + 2)];
            level.reserve(level.size() + above.size() * static_cast<std::size_t>(d + 2));
            for (const auto& f : above) {
                const auto& vs = f.data();
                for (std::size_t skip = 0; skip < vs.size(); ++skip) {
                    std::vector<int> sub;
                    sub.reserve(vs.size() - 1);
                    for (std::size_t i = 0; i < vs.size(); ++i)
                        if (i != skip) sub.push_back(vs[i]);
                    level.push_back(Face::from_sorted(std::move(sub)));
                }
            }
        }
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        total += level.size();
        if (total > budget.max_faces)
            throw Error(ErrorKind::ResourceLimit,
                        "face budget of " + std::to_string(budget.max_faces) + " faces exceeded (CUTNERVE_FACE_BUDGET)");
    }
    return table;
}

std::vector<Face> all_faces(const SimplicialComplex& c, FaceBudget budget) {
    auto table = enumerate_faces(c, budget);
    std::vector<Face> out;
    out.reserve(table.total());
    for (auto& level : table.by_dim)
        for (auto& f : level) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> faces_of_dim(const SimplicialComplex& c, int d, FaceBudget budget) {
    auto table = enumerate_faces(c, budget);
    return table.of_dim(d);
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& c, FaceBudget budget) {
    auto table = enumerate_faces(c, budget);
    std::vector<std::uint64_t> f;
    for (const auto& level : table.by_dim) f.push_back(level.size());
    return f;
}

std::int64_t euler_characteristic_reduced(const SimplicialComplex& c, FaceBudget budget) {
    auto f = f_vector(c, budget);
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        // f[i] counts faces of dimension i - 1
        const auto v = static_cast<std::int64_t>(f[i]);
        chi += (i % 2 == 1) ? v : -v;
    }
    return chi;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& l : b.labels())
        if (a.index_of(l)) throw Error(ErrorKind::InvalidParameter, "join requires disjoint vertex labels; '" + l + "' is shared");
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    const int offset = static_cast<int>(a.labels().size());
    std::vector<Face> facets;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            std::vector<int> vs = f.data();
            for (int v : g.vertices()) vs.push_back(v + offset);
            facets.push_back(Face::from_sorted(std::move(vs)));
        }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex) {
    if (c.index_of(apex)) throw Error(ErrorKind::InvalidParameter, "cone apex '" + apex + "' is already a vertex");
    return join(c, SimplicialComplex::simplex({apex}));
}

SimplicialComplex suspension(const SimplicialComplex& c, const std::string& north, const std::string& south) {
    return join(c, SimplicialComplex::discrete({north, south}));
}

SimplicialComplex link(const SimplicialComplex& c, const Face& sigma) {
    if (c.is_void() || !c.contains(sigma)) throw Error(ErrorKind::InvalidFace, "link of a face not in the complex");
    std::vector<std::string> labels;
    std::vector<int> remap(c.labels().size(), -1);
    for (std::size_t v = 0; v < c.labels().size(); ++v) {
        if (sigma.contains(static_cast<int>(v))) continue;
        remap[v] = static_cast<int>(labels.size());
        labels.push_back(c.labels()[v]);
    }
    std::vector<Face> facets;
    for (const auto& f : c.facets()) {
        if (!sigma.is_subset_of(f)) continue;
        std::vector<int> vs;
        for (int v : f.vertices())
            if (!sigma.contains(v)) vs.push_back(remap[static_cast<std::size_t>(v)]);
        facets.push_back(Face::from_sorted(std::move(vs)));
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& c, int d) {
    if (d < -1) throw Error(ErrorKind::InvalidParameter, "skeleton dimension must be >= -1");
    if (c.is_void()) return c;
    const auto size = static_cast<std::size_t>(d + 1);
    std::vector<Face> faces;
    for (const auto& f : c.facets()) {
        if (f.size() <= size) {
            faces.push_back(f);
            continue;
        }
        // all size-subsets of f
        const auto& vs = f.data();
        std::vector<bool> pick(vs.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<int> sub;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (pick[i]) sub.push_back(vs[i]);
            faces.push_back(Face::from_sorted(std::move(sub)));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return SimplicialComplex::from_facets(c.labels(), std::move(faces));
}

namespace {

// Both complexes re-expressed over the union of their label lists.
struct CommonGround {
    std::vector<std::string> labels;
    std::vector<Face> a;
    std::vector<Face> b;
};

CommonGround common_ground(const SimplicialComplex& a, const SimplicialComplex& b) {
    CommonGround g;
    g.labels = a.labels();
    auto idx = label_index(g.labels);
    std::vector<int> map_b(b.labels().size());
    for (std::size_t i = 0; i < b.labels().size(); ++i) {
        auto [it, inserted] = idx.emplace(b.labels()[i], static_cast<int>(g.labels.size()));
        if (inserted) g.labels.push_back(b.labels()[i]);
        map_b[i] = it->second;
    }
    g.a = a.facets();
    for (const auto& f : b.facets()) {
        std::vector<int> vs;
        for (int v : f.vertices()) vs.push_back(map_b[static_cast<std::size_t>(v)]);
        g.b.emplace_back(std::move(vs));
    }
    return g;
}

}  // namespace

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto g = common_ground(a, b);
    std::vector<Face> faces;
    for (const auto& f : g.a)
        for (const auto& h : g.b) faces.push_back(f.intersected(h));
    return SimplicialComplex::from_facets(std::move(g.labels), std::move(faces));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto g = common_ground(a, b);
    std::vector<Face> faces = std::move(g.a);
    faces.insert(faces.end(), g.b.begin(), g.b.end());
    return SimplicialComplex::from_facets(std::move(g.labels), std::move(faces));
}

bool equals_labeled(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() != b.is_void()) return false;
    auto as_labels = [](const SimplicialComplex& c) {
        std::vector<std::vector<std::string>> out;
        for (const auto& f : c.facets()) {
            auto l = c.face_labels(f);
            std::sort(l.begin(), l.end());
            out.push_back(std::move(l));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return as_labels(a) == as_labels(b);
}

SimplicialComplex relabel(const SimplicialComplex& c, std::vector<std::string> labels) {
    if (labels.size() != c.labels().size())
        throw Error(ErrorKind::InvalidParameter, "relabel needs one label per vertex");
    return SimplicialComplex::from_facets(std::move(labels), c.facets());
}

}  // namespace cutnerve
