#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cutnerve {

/// Sorted tuple of 0-based vertex indices.
using VertexSet = std::vector<int>;

/// A k-subset of the ground set [n] = {1, ..., n}, stored 1-based.
struct KSubset {
    int n = 0;
    std::vector<int> elements;

    /// Throws InvalidParameter unless elements are strictly increasing in 1..n.
    KSubset(int ground, std::vector<int> elems);
};

/// Simple undirected graph with unique display labels.
///
/// Algorithms run on the dense indices 0..|V|-1; labels are carried along for
/// reports and for comparing graphs built by different constructors. Graphs are
/// immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidParameter on duplicate labels, self-loops or out-of-range
    /// endpoints. Duplicate edges are merged.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<int> index_of(std::string_view label) const;

    bool adjacent(int u, int v) const { return adjacency_[u][v]; }
    const boost::dynamic_bitset<>& neighbors(int v) const { return adjacency_[v]; }
    std::size_t degree(int v) const { return adjacency_[v].count(); }
    std::size_t max_degree() const;

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::string> labels_;
    std::vector<boost::dynamic_bitset<>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Constructors for the graph families. Parameters out of range throw
// InvalidParameter.
Graph cycle(int n);
Graph complete(int n);
Graph star(int n);
Graph squared_cycle(int n);
Graph prism(int n);
Graph circular_ladder(int n);
Graph kneser(int n, int k);
/// Throws EmptyVertexSet when n < 2k (no stable k-subset exists).
Graph stable_kneser(int n, int k);

/// Label for a set of vertices of `g`, e.g. "{1+,2-}".
std::string set_label(const Graph& g, const VertexSet& vertices);

/// All independent sets of size exactly k, in lexicographic order of their
/// sorted index tuples.
std::vector<VertexSet> independent_sets(const Graph& g, int k);

int independence_number(const Graph& g);

/// H_k(G): one vertex per independent k-set (indices follow independent_sets
/// order), adjacent iff the sets are disjoint. May have no vertices.
Graph induced_k_independent(const Graph& g, int k);

/// r <= |x - y| <= n - r for every pair of elements.
bool is_r_stable(const KSubset& s, int r);

inline constexpr std::size_t kIsomorphismVertexLimit = 32;

/// Adjacency-preserving bijection `map` with map[v] = image of v in h, or
/// nullopt. Throws ResourceLimit above `limit` vertices.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 std::size_t limit = kIsomorphismVertexLimit);

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

/// Same label set and same edges between labels.
bool equals_labeled(const Graph& g, const Graph& h);

}  // namespace cutnerve
