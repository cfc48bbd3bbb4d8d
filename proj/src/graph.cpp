#include "cutnerve/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "cutnerve/error.hpp"

namespace cutnerve {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidParameter, what);
}

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::string subset_label(const std::vector<int>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems[i]);
    }
    return s + "}";
}

// All k-subsets of [n] (1-based) in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

Graph disjointness_graph(const std::vector<std::vector<int>>& sets, std::vector<std::string> labels) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (disjoint_sorted(sets[i], sets[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(std::move(labels), edges);
}

}  // namespace

KSubset::KSubset(int ground, std::vector<int> elems) : n(ground), elements(std::move(elems)) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        require(elements[i] >= 1 && elements[i] <= n, "k-subset element out of range 1..n");
        require(i == 0 || elements[i - 1] < elements[i], "k-subset elements must be strictly increasing");
    }
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) require(seen.insert(l).second, "duplicate vertex label '" + l + "'");
    const std::size_t n = labels_.size();
    adjacency_.assign(n, boost::dynamic_bitset<>(n));
    for (auto [u, v] : edges) {
        require(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < n && static_cast<std::size_t>(v) < n,
                "edge endpoint out of range");
        require(u != v, "self-loop at vertex " + labels_[static_cast<std::size_t>(u)]);
        if (!adjacency_[u][v]) ++edge_count_;
        adjacency_[u][v] = true;
        adjacency_[v][u] = true;
    }
}

std::optional<int> Graph::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& row : adjacency_) d = std::max(d, row.count());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (auto v = adjacency_[u].find_next(u); v != boost::dynamic_bitset<>::npos; v = adjacency_[u].find_next(v))
            out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return out;
}

Graph cycle(int n) {
    require(n >= 3, "cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(numbered(n), e);
}

Graph complete(int n) {
    require(n >= 1, "complete graph requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(numbered(n), e);
}

Graph star(int n) {
    require(n >= 1, "star requires n >= 1");
    auto labels = numbered(n);
    labels.emplace_back("c");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, n);
    return Graph(std::move(labels), e);
}

Graph squared_cycle(int n) {
    require(n >= 5, "squared cycle requires n >= 5");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(i, (i + 2) % n);
    }
    return Graph(numbered(n), e);
}

namespace {

// Vertex i+ has index i-1, vertex i- has index n+i-1.
std::vector<std::string> signed_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i) + "+");
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i) + "-");
    return out;
}

}  // namespace

Graph prism(int n) {
    require(n >= 2, "prism requires n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(n + i, n + j);
        }
        e.emplace_back(i, n + i);
    }
    return Graph(signed_labels(n), e);
}

Graph circular_ladder(int n) {
    require(n >= 3, "circular ladder requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
    }
    return Graph(signed_labels(n), e);
}

Graph kneser(int n, int k) {
    require(k >= 1 && n >= k, "kneser requires n >= k >= 1");
    auto sets = k_subsets(n, k);
    std::vector<std::string> labels;
    for (const auto& s : sets) labels.push_back(subset_label(s));
    return disjointness_graph(sets, std::move(labels));
}

Graph stable_kneser(int n, int k) {
    require(k >= 1 && n >= 1, "stable kneser requires n, k >= 1");
    if (n < 2 * k) throw Error(ErrorKind::EmptyVertexSet, "SG(n,k) has no vertices when n < 2k");
    std::vector<std::vector<int>> sets;
    std::vector<std::string> labels;
    for (auto& s : k_subsets(n, k)) {
        if (!is_r_stable(KSubset(n, s), 2)) continue;
        labels.push_back(subset_label(s));
        sets.push_back(std::move(s));
    }
    return disjointness_graph(sets, std::move(labels));
}

std::string set_label(const Graph& g, const VertexSet& vertices) {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ',';
        s += g.label(vertices[i]);
    }
    return s + "}";
}

std::vector<VertexSet> independent_sets(const Graph& g, int k) {
    std::vector<VertexSet> out;
    if (k < 0) throw Error(ErrorKind::InvalidParameter, "independent set size must be >= 0");
    const std::size_t n = g.vertex_count();
    if (static_cast<std::size_t>(k) > n) return out;
    VertexSet chosen;
    // candidates: vertices after the last chosen one that are not adjacent to any chosen vertex
    std::function<void(boost::dynamic_bitset<>)> extend = [&](boost::dynamic_bitset<> candidates) {
        if (chosen.size() == static_cast<std::size_t>(k)) {
            out.push_back(chosen);
            return;
        }
        if (candidates.count() < static_cast<std::size_t>(k) - chosen.size()) return;
        for (auto v = candidates.find_first(); v != boost::dynamic_bitset<>::npos; v = candidates.find_next(v)) {
            candidates[v] = false;
            chosen.push_back(static_cast<int>(v));
            extend(candidates - g.neighbors(static_cast<int>(v)));
            chosen.pop_back();
            if (candidates.count() < static_cast<std::size_t>(k) - chosen.size()) return;
        }
    };
    boost::dynamic_bitset<> all(n);
    all.set();
    extend(all);
    return out;
}

int independence_number(const Graph& g) {
    // Some vertex of N[v] lies in every maximal independent set, so branching on
    // the closed neighbourhood of a minimum-degree vertex is exhaustive.
    std::function<int(const boost::dynamic_bitset<>&)> best = [&](const boost::dynamic_bitset<>& pool) -> int {
        if (pool.none()) return 0;
        std::size_t pivot = pool.find_first();
        std::size_t pivot_deg = (g.neighbors(static_cast<int>(pivot)) & pool).count();
        for (auto v = pool.find_next(pivot); v != boost::dynamic_bitset<>::npos; v = pool.find_next(v)) {
            std::size_t d = (g.neighbors(static_cast<int>(v)) & pool).count();
            if (d < pivot_deg) { pivot = v; pivot_deg = d; }
        }
        boost::dynamic_bitset<> branch = g.neighbors(static_cast<int>(pivot)) & pool;
        branch[pivot] = true;
        int result = 0;
        for (auto u = branch.find_first(); u != boost::dynamic_bitset<>::npos; u = branch.find_next(u)) {
            boost::dynamic_bitset<> rest = pool - g.neighbors(static_cast<int>(u));
            rest[u] = false;
            result = std::max(result, 1 + best(rest));
        }
        return result;
    };
    boost::dynamic_bitset<> all(g.vertex_count());
    all.set();
    return best(all);
}

Graph induced_k_independent(const Graph& g, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidParameter, "induced k-independent graph requires k >= 1");
    auto sets = independent_sets(g, k);
    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (const auto& s : sets) labels.push_back(set_label(g, s));
    return disjointness_graph(sets, std::move(labels));
}

bool is_r_stable(const KSubset& s, int r) {
    const auto& e = s.elements;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            int gap = e[j] - e[i];
            if (gap < r || gap > s.n - r) return false;
        }
    return true;
}

namespace {

// Degree of v followed by the sorted degrees of its neighbours.
std::vector<std::size_t> signature(const Graph& g, int v) {
    std::vector<std::size_t> sig;
    const auto& nb = g.neighbors(v);
    for (auto u = nb.find_first(); u != boost::dynamic_bitset<>::npos; u = nb.find_next(u))
        sig.push_back(g.degree(static_cast<int>(u)));
    std::sort(sig.begin(), sig.end());
    sig.insert(sig.begin(), g.degree(v));
    return sig;
}

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    const std::size_t n = g.vertex_count();
    if (h.vertex_count() != n || map.size() != n || g.edge_count() != h.edge_count()) return false;
    std::vector<bool> hit(n, false);
    for (int m : map) {
        if (m < 0 || static_cast<std::size_t>(m) >= n || hit[static_cast<std::size_t>(m)]) return false;
        hit[static_cast<std::size_t>(m)] = true;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g.adjacent(static_cast<int>(u), static_cast<int>(v)) != h.adjacent(map[u], map[v])) return false;
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, std::size_t limit) {
    const std::size_t n = g.vertex_count();
    if (n > limit || h.vertex_count() > limit)
        throw Error(ErrorKind::ResourceLimit, "isomorphism search limited to " + std::to_string(limit) + " vertices");
    if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return std::nullopt;

    std::vector<std::vector<std::size_t>> sg(n), sh(n);
    for (std::size_t v = 0; v < n; ++v) {
        sg[v] = signature(g, static_cast<int>(v));
        sh[v] = signature(h, static_cast<int>(v));
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Map g's vertices in BFS order from the highest-degree vertex so that
    // each newly placed vertex is constrained by already-mapped neighbours.
    std::vector<int> order;
    std::vector<bool> queued(n, false);
    while (order.size() < n) {
        int root = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (!queued[v] && (root < 0 || g.degree(static_cast<int>(v)) > g.degree(root))) root = static_cast<int>(v);
        queued[static_cast<std::size_t>(root)] = true;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            int v = order[head++];
            const auto& nb = g.neighbors(v);
            for (auto u = nb.find_first(); u != boost::dynamic_bitset<>::npos; u = nb.find_next(u))
                if (!queued[u]) { queued[u] = true; order.push_back(static_cast<int>(u)); }
        }
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        const int v = order[depth];
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || sh[c] != sg[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const int u = order[d];
                ok = g.adjacent(v, u) == h.adjacent(static_cast<int>(c), map[static_cast<std::size_t>(u)]);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = static_cast<int>(c);
            used[c] = true;
            if (place(depth + 1)) return true;
            used[c] = false;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return map;
}

bool equals_labeled(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> map(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto idx = h.index_of(g.label(static_cast<int>(v)));
        if (!idx) return false;
        map[v] = *idx;
    }
    return is_isomorphism(g, h, map);
}

}  // namespace cutnerve
