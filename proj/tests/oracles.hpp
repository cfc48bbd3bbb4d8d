#pragma once

// Brute-force reference implementations. They work on plain label sets and
// dense matrices and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutnerve/complex.hpp"
#include "cutnerve/graph.hpp"
#include "cutnerve/homology.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using LabelFace = std::vector<std::string>;
using FaceSet = std::set<LabelFace>;

inline LabelFace sorted(LabelFace f) {
    std::sort(f.begin(), f.end());
    return f;
}

// Every subset of every facet, as sorted label lists. Void gives the empty set.
inline FaceSet closure(const std::vector<LabelFace>& facets) {
    FaceSet out;
    for (const auto& raw : facets) {
        const LabelFace f = sorted(raw);
        const std::size_t m = f.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            LabelFace s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline FaceSet faces_of(const cutnerve::SimplicialComplex& c) {
    std::vector<LabelFace> facets;
    for (const auto& f : c.facets()) facets.push_back(c.face_labels(f));
    return closure(facets);
}

inline FaceSet maximal(const FaceSet& faces) {
    FaceSet out;
    for (const auto& f : faces) {
        bool dominated = false;
        for (const auto& g : faces)
            if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        if (!dominated) out.insert(f);
    }
    return out;
}

// Textbook Smith normal form: repeatedly bring the smallest nonzero entry to
// the pivot, clear its row and column, and fix divisibility by adding rows.
inline std::vector<Big> smith(std::vector<std::vector<Big>> a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<Big> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const Big q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const Big q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

struct Homology {
    bool is_void = false;
    // rank and torsion of reduced H_d, indexed by d + 1
    std::vector<std::int64_t> rank;
    std::vector<std::vector<Big>> torsion;
};

// Reduced homology through the augmented chain complex with dense matrices.
inline Homology homology(const FaceSet& faces) {
    Homology h;
    if (faces.empty()) {
        h.is_void = true;
        return h;
    }
    std::size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size());
    std::vector<std::vector<LabelFace>> by_size(top + 1);
    for (const auto& f : faces) by_size[f.size()].push_back(f);
    // invariants[s]: nonzero Smith invariants of the boundary from size s to size s-1
    std::vector<std::vector<Big>> invariants(top + 2);
    for (std::size_t s = 1; s <= top; ++s) {
        std::map<LabelFace, std::size_t> row_of;
        for (std::size_t i = 0; i < by_size[s - 1].size(); ++i) row_of[by_size[s - 1][i]] = i;
        std::vector<std::vector<Big>> m(by_size[s - 1].size(), std::vector<Big>(by_size[s].size()));
        for (std::size_t c = 0; c < by_size[s].size(); ++c) {
            const auto& f = by_size[s][c];
            for (std::size_t i = 0; i < f.size(); ++i) {
                LabelFace g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                m[row_of.at(g)][c] = i % 2 ? -1 : 1;
            }
        }
        invariants[s] = smith(std::move(m));
    }
    for (std::size_t s = 0; s <= top; ++s) {
        const std::int64_t cycles = static_cast<std::int64_t>(by_size[s].size() - invariants[s].size());
        const std::int64_t boundaries = static_cast<std::int64_t>(invariants[s + 1].size());
        h.rank.push_back(cycles - boundaries);
        std::vector<Big> t;
        for (const auto& d : invariants[s + 1])
            if (d > 1) t.push_back(d);
        h.torsion.push_back(t);
    }
    return h;
}

// Library profile against the oracle, degree by degree (trailing zeros ignored).
inline bool same(const cutnerve::HomologyProfile& p, const Homology& h) {
    if (p.is_void || h.is_void) return p.is_void == h.is_void;
    if (p.betti_minus_one != h.rank[0] || !h.torsion[0].empty()) return false;
    const std::size_t top = std::max(p.betti.size(), h.rank.size() - 1);
    for (std::size_t d = 0; d < top; ++d) {
        const std::int64_t r = d + 1 < h.rank.size() ? h.rank[d + 1] : 0;
        std::vector<Big> t = d + 1 < h.torsion.size() ? h.torsion[d + 1] : std::vector<Big>{};
        std::vector<Big> lt = d < p.torsion.size() ? p.torsion[d] : std::vector<Big>{};
        std::sort(t.begin(), t.end());
        std::sort(lt.begin(), lt.end());
        if (p.rank(static_cast<int>(d)) != r || t != lt) return false;
    }
    return true;
}

// N(G) straight from the definition: every vertex set with a common neighbour.
inline FaceSet neighborhood_faces(const cutnerve::Graph& g) {
    FaceSet out;
    const int n = static_cast<int>(g.vertex_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int w = 0; w < n; ++w) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                if (mask >> v & 1) ok = g.adjacent(v, w);
            if (ok) {
                LabelFace f;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) f.push_back(g.label(v));
                out.insert(sorted(f));
                break;
            }
        }
    }
    return out;
}

inline bool independent(const cutnerve::Graph& g, std::uint64_t mask) {
    const int n = static_cast<int>(g.vertex_count());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) return false;
    return true;
}

inline int alpha(const cutnerve::Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask)
        if (independent(g, mask)) best = std::max(best, __builtin_popcountll(mask));
    return best;
}

// Facets of the total cut complex: complements of independent k-sets.
inline FaceSet total_cut_facets(const cutnerve::Graph& g, int k) {
    FaceSet out;
    const int n = static_cast<int>(g.vertex_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != k || !independent(g, mask)) continue;
        LabelFace f;
        for (int v = 0; v < n; ++v)
            if (!(mask >> v & 1)) f.push_back(g.label(v));
        out.insert(sorted(f));
    }
    return out;
}

// Pairs (σ, τ) of the face set where τ is the unique proper coface of σ, σ nonempty.
inline std::set<std::pair<LabelFace, LabelFace>> free_pairs(const FaceSet& faces) {
    std::set<std::pair<LabelFace, LabelFace>> out;
    for (const auto& s : faces) {
        if (s.empty()) continue;
        std::vector<LabelFace> above;
        for (const auto& t : faces)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) above.push_back(t);
        if (above.size() == 1 && above[0].size() == s.size() + 1) out.insert({s, above[0]});
    }
    return out;
}

// Acyclicity on the whole Hasse diagram: edges point down along every covering
// relation except matched ones, which point up. Colour DFS.
inline bool acyclic(const FaceSet& faces, const std::vector<std::pair<LabelFace, LabelFace>>& matching) {
    std::map<LabelFace, int> id;
    std::vector<LabelFace> list(faces.begin(), faces.end());
    for (std::size_t i = 0; i < list.size(); ++i) id[list[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> matched;
    for (const auto& [lo, hi] : matching) matched.insert({id.at(lo), id.at(hi)});
    std::vector<std::vector<int>> adj(list.size());
    for (std::size_t t = 0; t < list.size(); ++t)
        for (std::size_t i = 0; i < list[t].size(); ++i) {
            LabelFace g = list[t];
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
            const int s = id.at(g);
            if (matched.count({s, static_cast<int>(t)})) adj[static_cast<std::size_t>(s)].push_back(static_cast<int>(t));
            else adj[t].push_back(s);
        }
    std::vector<int> colour(list.size(), 0);
    std::function<bool(int)> dfs = [&](int v) {
        colour[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (colour[static_cast<std::size_t>(w)] == 1) return false;
            if (colour[static_cast<std::size_t>(w)] == 0 && !dfs(w)) return false;
        }
        colour[static_cast<std::size_t>(v)] = 2;
        return true;
    };
    for (std::size_t v = 0; v < list.size(); ++v)
        if (colour[v] == 0 && !dfs(static_cast<int>(v))) return false;
    return true;
}

// Graph isomorphism by trying every permutation. Only for tiny graphs.
inline bool isomorphic(const cutnerve::Graph& g, const cutnerve::Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> p(g.vertex_count());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (std::size_t u = 0; u < p.size() && ok; ++u)
            for (std::size_t v = u + 1; v < p.size() && ok; ++v)
                ok = g.adjacent(static_cast<int>(u), static_cast<int>(v)) == h.adjacent(p[u], p[v]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Seeded random complex: a handful of random facets on `n` labelled vertices.
inline cutnerve::SimplicialComplex random_complex(std::uint64_t seed, int n, int facets, int max_size) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<cutnerve::Face> cand;
    for (int f = 0; f < facets; ++f) {
        const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(std::min(size, n)));
        cand.emplace_back(verts);
    }
    return cutnerve::SimplicialComplex::from_facets(labels, cand);
}

// The 6-vertex real projective plane.
inline cutnerve::SimplicialComplex rp2() {
    const std::vector<std::vector<std::string>> t = {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                                                     {"1", "2", "6"}, {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"},
                                                     {"3", "4", "6"}, {"3", "5", "6"}};
    return cutnerve::SimplicialComplex::from_label_facets({"1", "2", "3", "4", "5", "6"}, t);
}

}  // namespace oracle
