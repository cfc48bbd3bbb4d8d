#include "cutnerve/constructions.hpp"

#include <algorithm>
#include <unordered_map>

#include "cutnerve/error.hpp"

namespace cutnerve {

namespace {

Face bitset_face(const boost::dynamic_bitset<>& bits) {
    std::vector<int> vs;
    for (auto v = bits.find_first(); v != boost::dynamic_bitset<>::npos; v = bits.find_next(v)) vs.push_back(static_cast<int>(v));
    return Face::from_sorted(std::move(vs));
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    return Face::from_sorted(a).disjoint_from(Face::from_sorted(b));
}

}  // namespace

SimplicialComplex neighborhood_complex(const Graph& g) {
    std::vector<Face> faces;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) faces.push_back(bitset_face(g.neighbors(static_cast<int>(v))));
    return SimplicialComplex::from_facets(g.labels(), std::move(faces));
}

SimplicialComplex total_cut_complex(const Graph& g, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidParameter, "total cut complex requires k >= 1");
    std::vector<Face> faces;
    for (const auto& s : independent_sets(g, k)) {
        std::vector<int> rest;
        for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
            if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
        faces.push_back(Face::from_sorted(std::move(rest)));
    }
    return SimplicialComplex::from_facets(g.labels(), std::move(faces));
}

Cover::Cover(SimplicialComplex base, std::vector<CoverCell> cells, std::vector<CoverPart> parts)
    : base_(std::move(base)), cells_(std::move(cells)), parts_(std::move(parts)) {
    for (const auto& cell : cells_)
        if (base_.is_void() || !base_.contains(cell.simplex))
            throw Error(ErrorKind::InvalidParameter, "cover cell '" + cell.label + "' is not a face of the base");
    std::vector<char> used(cells_.size(), 0);
    for (const auto& part : parts_) {
        for (std::size_t i = 0; i < part.cells.size(); ++i) {
            const int c = part.cells[i];
            if (c < 0 || static_cast<std::size_t>(c) >= cells_.size() || (i && part.cells[i - 1] >= c))
                throw Error(ErrorKind::InvalidParameter, "cover part '" + part.label + "' has invalid cell indices");
            used[static_cast<std::size_t>(c)] = 1;
        }
    }
    // parts are closed under faces, so covering the facets covers everything
    for (const auto& f : base_.facets()) {
        bool covered = false;
        for (std::size_t c = 0; c < cells_.size() && !covered; ++c) covered = used[c] && f.is_subset_of(cells_[c].simplex);
        if (!covered) throw Error(ErrorKind::InvalidParameter, "cover parts miss a facet of the base complex");
    }
}

std::vector<Face> part_faces(const Cover& cover, std::size_t part, FaceBudget budget) {
    const auto& ids = cover.parts().at(part).cells;
    if (ids.empty()) return {};
    std::vector<Face> gens;
    for (int c : ids) gens.push_back(cover.cells()[static_cast<std::size_t>(c)].simplex);
    return all_faces(SimplicialComplex::from_facets(cover.base().labels(), std::move(gens)), budget);
}

std::vector<std::string> Cover::part_labels() const {
    std::vector<std::string> out;
    for (const auto& p : parts_) out.push_back(p.label);
    return out;
}

Cover independent_cover(const Graph& g, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidParameter, "independent cover requires k >= 1");
    const auto sets = independent_sets(g, k);
    if (sets.empty())
        throw Error(ErrorKind::EmptyCover, "graph has no independent set of size " + std::to_string(k));
    const Graph h = induced_k_independent(g, k);
    SimplicialComplex base = neighborhood_complex(h);

    std::vector<CoverCell> cells;
    for (std::size_t v = 0; v < sets.size(); ++v) {
        std::vector<int> partners;
        for (std::size_t w = 0; w < sets.size(); ++w)
            if (disjoint(sets[v], sets[w])) partners.push_back(static_cast<int>(w));
        cells.push_back({h.label(static_cast<int>(v)), Face::from_sorted(std::move(partners))});
    }
    std::vector<CoverPart> parts;
    for (int i = 0; i < static_cast<int>(g.vertex_count()); ++i) {
        CoverPart part{g.label(i), {}};
        for (std::size_t v = 0; v < sets.size(); ++v)
            if (!std::binary_search(sets[v].begin(), sets[v].end(), i)) part.cells.push_back(static_cast<int>(v));
        parts.push_back(std::move(part));
    }
    return Cover(std::move(base), std::move(cells), std::move(parts));
}

Cover facet_star_cover(const SimplicialComplex& c, const std::vector<std::string>& markers) {
    std::vector<CoverCell> cells;
    for (const auto& f : c.facets()) {
        std::string label = "{";
        for (std::size_t i = 0; i < f.size(); ++i) label += (i ? "," : "") + c.label(f.data()[i]);
        cells.push_back({label + "}", f});
    }
    std::vector<CoverPart> parts;
    for (const auto& m : markers) {
        auto v = c.index_of(m);
        if (!v || c.is_void() || !c.contains(Face{*v}))
            throw Error(ErrorKind::InvalidParameter, "marker '" + m + "' is not a vertex of the complex");
        CoverPart part{m, {}};
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].simplex.contains(*v)) part.cells.push_back(static_cast<int>(i));
        parts.push_back(std::move(part));
    }
    return Cover(c, std::move(cells), std::move(parts));
}

namespace {

void check_indices(const Cover& cover, std::span<const int> indices) {
    if (indices.empty()) throw Error(ErrorKind::InvalidParameter, "cover intersection needs a nonempty index set");
    for (int i : indices)
        if (i < 0 || static_cast<std::size_t>(i) >= cover.size())
            throw Error(ErrorKind::InvalidParameter, "cover part index " + std::to_string(i) + " out of range");
}

}  // namespace

SimplicialComplex cover_intersection(const Cover& cover, std::span<const int> indices) {
    check_indices(cover, indices);
    std::vector<int> common = cover.parts()[static_cast<std::size_t>(indices[0])].cells;
    for (std::size_t j = 1; j < indices.size(); ++j) {
        const auto& other = cover.parts()[static_cast<std::size_t>(indices[j])].cells;
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
        common = std::move(next);
    }
    std::vector<Face> gens;
    for (int c : common) gens.push_back(cover.cells()[static_cast<std::size_t>(c)].simplex);
    return SimplicialComplex::from_facets(cover.base().labels(), std::move(gens));
}

SimplicialComplex raw_cover_intersection(const Cover& cover, std::span<const int> indices, FaceBudget budget) {
    check_indices(cover, indices);
    std::vector<Face> common = part_faces(cover, static_cast<std::size_t>(indices[0]), budget);
    for (std::size_t j = 1; j < indices.size(); ++j) {
        const auto other = part_faces(cover, static_cast<std::size_t>(indices[j]), budget);
        std::vector<Face> next;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
        common = std::move(next);
    }
    std::erase_if(common, [](const Face& f) { return f.empty(); });
    return SimplicialComplex::from_facets(cover.base().labels(), std::move(common));
}

SimplicialComplex nerve(const Cover& cover) {
    std::vector<std::vector<int>> holders(cover.cells().size());
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (int c : cover.parts()[i].cells) holders[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    std::vector<Face> faces;
    for (auto& h : holders)
        if (!h.empty()) faces.push_back(Face::from_sorted(std::move(h)));
    return SimplicialComplex::from_facets(cover.part_labels(), std::move(faces));
}

SimplicialComplex raw_nerve(const Cover& cover, FaceBudget budget) {
    std::unordered_map<Face, std::vector<int>, FaceHash> holders;
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (const auto& f : part_faces(cover, i, budget))
            if (!f.empty()) holders[f].push_back(static_cast<int>(i));
    std::vector<Face> faces;
    for (auto& [f, h] : holders) faces.push_back(Face::from_sorted(std::move(h)));
    return SimplicialComplex::from_facets(cover.part_labels(), std::move(faces));
}

std::size_t empty_cell_witnesses(const Cover& cover) {
    const auto n = nerve(cover);
    std::vector<std::vector<int>> holders(cover.cells().size());
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (int c : cover.parts()[i].cells) holders[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    std::size_t count = 0;
    for (const auto& facet : n.facets()) {
        bool witnessed = false;
        for (std::size_t c = 0; c < holders.size() && !witnessed; ++c)
            witnessed = !cover.cells()[c].simplex.empty() && facet.is_subset_of(Face::from_sorted(holders[c]));
        if (!witnessed) ++count;
    }
    return count;
}

MulticoneChain cycle_cover_multicone_chain(int n, int k, const std::vector<int>& indices) {
    if (indices.empty()) throw Error(ErrorKind::InvalidParameter, "multicone chain needs a nonempty index set");
    for (int i : indices)
        if (i < 1 || i > n) throw Error(ErrorKind::InvalidParameter, "cycle index out of range 1..n");
    const Graph g = cycle(n);
    const auto sets = independent_sets(g, k);
    const Graph h = induced_k_independent(g, k);
    const SimplicialComplex base = neighborhood_complex(h);

    const int shift = n - *std::max_element(indices.begin(), indices.end());
    auto rotate = [&](int x) { return (x - 1 + shift) % n + 1; };
    auto unrotate = [&](int y) { return ((y - 1 - shift) % n + n) % n + 1; };

    struct Qualifying {
        std::vector<int> rotated;
        std::size_t index;
    };
    std::vector<Qualifying> order;
    for (std::size_t v = 0; v < sets.size(); ++v) {
        bool avoids = true;
        std::vector<int> rotated;
        for (int x : sets[v]) {
            const int one_based = x + 1;
            if (std::find(indices.begin(), indices.end(), one_based) != indices.end()) avoids = false;
            rotated.push_back(rotate(one_based));
        }
        if (!avoids) continue;
        std::sort(rotated.begin(), rotated.end());
        order.push_back({std::move(rotated), v});
    }
    std::sort(order.begin(), order.end(), [](const Qualifying& a, const Qualifying& b) { return a.rotated < b.rotated; });

    MulticoneChain out;
    std::vector<Face> gens;
    for (const auto& q : order) {
        std::vector<int> partners;
        for (std::size_t w = 0; w < sets.size(); ++w)
            if (disjoint(sets[q.index], sets[w])) partners.push_back(static_cast<int>(w));
        gens.push_back(Face::from_sorted(std::move(partners)));
        out.chain.push_back(SimplicialComplex::from_facets(base.labels(), gens));

        std::vector<int> apex;
        for (int y : q.rotated) apex.push_back(unrotate(y + 1));
        std::sort(apex.begin(), apex.end());
        std::string label = "{";
        for (std::size_t i = 0; i < apex.size(); ++i) label += (i ? "," : "") + std::to_string(apex[i]);
        out.apexes.push_back(label + "}");
    }
    return out;
}

}  // namespace cutnerve
