#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutnerve/complex.hpp"

namespace cutnerve {

/// Hasse diagram of a complex, empty face included.
///
/// Face ids follow (dimension, lexicographic) order, so id 0 is the empty face.
/// up[i] lists the faces with one more vertex that contain face i, down[i] the
/// faces with one vertex less.
class FacePoset {
public:
    /// Throws UndefinedOnVoid for the void complex and ResourceLimit past the
    /// face budget.
    explicit FacePoset(const SimplicialComplex& c, FaceBudget budget = default_face_budget());

    const SimplicialComplex& complex() const { return complex_; }
    std::size_t size() const { return faces_.size(); }
    const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
    const std::vector<Face>& faces() const { return faces_; }
    std::optional<int> id_of(const Face& f) const;
    const std::vector<int>& up(int id) const { return up_.at(static_cast<std::size_t>(id)); }
    const std::vector<int>& down(int id) const { return down_.at(static_cast<std::size_t>(id)); }

private:
    SimplicialComplex complex_;
    std::vector<Face> faces_;
    std::vector<std::size_t> dim_start_;
    std::vector<std::vector<int>> up_, down_;
};

struct MatchedPair {
    Face lower;
    Face upper;
    /// upper = lower + {vertex}
    int vertex = -1;

    bool operator==(const MatchedPair&) const = default;
};

/// Pairs sorted by (dimension, lexicographic) of the lower face.
using Matching = std::vector<MatchedPair>;

/// Increment of the element matching with v on the faces left unmatched by
/// `existing`: σ pairs with σ + {v} whenever v ∉ σ and both are unmatched
/// faces. Throws InvalidParameter when v is not a vertex of the complex.
Matching element_matching(const FacePoset& poset, const Matching& existing, int v);

/// M_{v1}, then M_{v2} on what is left, and so on.
Matching sequential_element_matching(const FacePoset& poset, const std::vector<int>& vertices);

struct AcyclicityCertificate {
    bool acyclic = true;
    /// On failure a closed V-path: faces alternate lower, upper, lower, ...
    /// and the first lower face is repeated at the end.
    std::vector<Face> cycle;
};

/// Throws InvalidMatching when the pairs are not covering relations of the
/// poset or a face is used twice.
AcyclicityCertificate is_acyclic(const FacePoset& poset, const Matching& m);

/// Unmatched nonempty faces in (dimension, lexicographic) order. Throws
/// InvalidMatching when m is not acyclic.
std::vector<Face> critical_cells(const FacePoset& poset, const Matching& m);

/// True when the empty face is left unmatched.
bool empty_face_unmatched(const FacePoset& poset, const Matching& m);

struct FreePair {
    Face sigma;
    Face tau;

    bool operator==(const FreePair&) const = default;
};

/// Pairs (σ, τ) with σ nonempty and τ the only other face containing σ, in
/// (dimension, lexicographic) order of σ.
std::vector<FreePair> free_faces(const SimplicialComplex& c, FaceBudget budget = default_face_budget());

/// Removes σ and τ. Throws InvalidCollapse unless τ = σ + {v} is the only
/// face properly containing σ.
SimplicialComplex elementary_collapse(const SimplicialComplex& c, const Face& sigma, const Face& tau);

/// Removes every face γ with σ ⊆ γ ⊆ τ, where τ is the only facet containing
/// σ and σ ≠ τ. Throws InvalidCollapse otherwise.
SimplicialComplex facet_collapse(const SimplicialComplex& c, const Face& sigma, const Face& tau);

/// The elementary steps realising facet_collapse(c, σ, τ), in order.
std::vector<FreePair> facet_collapse_steps(const SimplicialComplex& c, const Face& sigma, const Face& tau);

enum class CollapseVerdict { Collapsible, NotCollapsible, Unknown };

const char* to_string(CollapseVerdict v);

struct CollapseWitness {
    std::vector<FreePair> steps;
    SimplicialComplex terminal;
    CollapseVerdict verdict = CollapseVerdict::Unknown;
    std::uint64_t search_steps = 0;
};

inline constexpr std::uint64_t kDefaultCollapseBudget = 1'000'000;

/// Depth-first collapse search that always tries the least free pair first.
/// Collapsible: the steps end at a single vertex. NotCollapsible: the search
/// space was exhausted, or the reduced Euler characteristic is nonzero.
/// Unknown: more than `step_budget` collapses were tried; the witness then
/// holds the first dead end reached. Throws UndefinedOnVoid for the void
/// complex.
CollapseWitness greedy_collapse(const SimplicialComplex& c, std::uint64_t step_budget = kDefaultCollapseBudget,
                                FaceBudget budget = default_face_budget());

/// Applies the steps in order. Throws InvalidCollapse at the first step that is
/// not a free pair at the time.
SimplicialComplex replay_collapse(const SimplicialComplex& c, const std::vector<FreePair>& steps);

struct MulticoneCheck {
    bool holds = true;
    /// Step (1-based) and face at the first failure.
    int failed_step = 0;
    std::vector<std::string> failed_face;
};

/// Checks that for every i and F in chain[i] minus chain[i-1] (chain[0] is
/// preceded by the void complex), F with apexes[i] toggled is again in chain[i]
/// minus chain[i-1]. Apexes are labels. Throws InvalidParameter when the chain
/// is not nested or the lengths differ.
MulticoneCheck verify_multicone(const std::vector<SimplicialComplex>& chain, const std::vector<std::string>& apexes,
                                FaceBudget budget = default_face_budget());

}  // namespace cutnerve
