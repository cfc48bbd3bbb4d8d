#pragma once

#include <span>
#include <string>
#include <vector>

#include "cutnerve/complex.hpp"
#include "cutnerve/graph.hpp"

namespace cutnerve {

/// N(G): faces are the vertex sets with a common neighbour. Ground labels are
/// the graph's labels; facets are the maximal neighbourhoods.
SimplicialComplex neighborhood_complex(const Graph& g);

/// Δ_k^t(G): facets are complements of independent k-sets. Void when none
/// exists. Throws InvalidParameter for k < 1.
SimplicialComplex total_cut_complex(const Graph& g, int k);

/// A named generating simplex of a cover's base complex.
struct CoverCell {
    std::string label;
    Face simplex;
};

struct CoverPart {
    std::string label;
    /// Indices into Cover::cells, increasing.
    std::vector<int> cells;
};

/// Ordered family of subcomplexes of `base`, each the union of full simplices
/// on some of the shared cells.
///
/// Intersections are taken cell-wise: the parts indexed by I meet in the union
/// of the cells they all contain. Two cells with equal vertex sets stay
/// distinct, so this can differ from the plain intersection of face sets;
/// raw_cover_intersection computes the latter.
class Cover {
public:
    /// Validates that every cell is a face of base, that every part lists
    /// valid cells, and that every facet of base lies in a cell used by some
    /// part. Throws InvalidParameter otherwise.
    Cover(SimplicialComplex base, std::vector<CoverCell> cells, std::vector<CoverPart> parts);

    const SimplicialComplex& base() const { return base_; }
    const std::vector<CoverCell>& cells() const { return cells_; }
    const std::vector<CoverPart>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::vector<std::string> part_labels() const;

private:
    SimplicialComplex base_;
    std::vector<CoverCell> cells_;
    std::vector<CoverPart> parts_;
};

/// Every face of the part, sorted (empty when the part has no cells).
std::vector<Face> part_faces(const Cover& cover, std::size_t part, FaceBudget budget = default_face_budget());

/// The cover {A_i} of N(H_k(G)): one part per vertex i of G, generated by the
/// cells Δ_v (independent k-sets disjoint from v) over independent k-sets v
/// avoiding i. Throws EmptyCover when α(G) < k.
Cover independent_cover(const Graph& g, int k);

/// Part per marker vertex: the faces of the facets containing that marker.
/// Cells are the facets of the complex. Throws InvalidParameter for unknown
/// markers.
Cover facet_star_cover(const SimplicialComplex& c, const std::vector<std::string>& markers);

/// Union of the cells shared by every part in `indices` (void if none).
/// Throws InvalidParameter for an empty or out-of-range index set.
SimplicialComplex cover_intersection(const Cover& cover, std::span<const int> indices);

/// Plain intersection of the parts' face sets, restricted to nonempty faces
/// (void if the parts share no nonempty face).
SimplicialComplex raw_cover_intersection(const Cover& cover, std::span<const int> indices,
                                         FaceBudget budget = default_face_budget());

/// Nerve on the part labels: I is a face iff cover_intersection(I) is non-void.
SimplicialComplex nerve(const Cover& cover);

/// Nerve from raw_cover_intersection (common nonempty face of the face sets).
SimplicialComplex raw_nerve(const Cover& cover, FaceBudget budget = default_face_budget());

/// Number of nerve facets whose only witnessing cells have no vertices.
std::size_t empty_cell_witnesses(const Cover& cover);

/// Filtration Γ_1 ⊆ ... ⊆ Γ_l of cover_intersection(independent_cover(cycle(n), k), I)
/// with one apex per step, for the multicone check. Coordinates are rotated so
/// that max(I) becomes n; the stable k-sets v_1 < ... < v_l avoiding I are taken
/// in lexicographic order of the rotated coordinates, Γ_i is the union of the
/// full simplices on Δ_{v_1}, ..., Δ_{v_i}, and the apex of step i is v_i shifted
/// by +1. `indices` are 1-based cycle vertices.
struct MulticoneChain {
    std::vector<SimplicialComplex> chain;
    std::vector<std::string> apexes;
};

MulticoneChain cycle_cover_multicone_chain(int n, int k, const std::vector<int>& indices);

}  // namespace cutnerve
