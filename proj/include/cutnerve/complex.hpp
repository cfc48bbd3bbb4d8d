#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cutnerve {

/// A face as a strictly increasing list of vertex indices. The empty face has
/// dimension -1.
class Face {
public:
    Face() = default;
    Face(std::initializer_list<int> vertices);
    /// Sorts and deduplicates.
    explicit Face(std::vector<int> vertices);

    static Face from_sorted(std::vector<int> vertices) {
        Face f;
        f.vertices_ = std::move(vertices);
        return f;
    }

    std::span<const int> vertices() const { return vertices_; }
    const std::vector<int>& data() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

    bool contains(int v) const;
    bool is_subset_of(const Face& other) const;
    bool disjoint_from(const Face& other) const;

    Face with(int v) const;
    Face without(int v) const;
    Face united(const Face& other) const;
    Face intersected(const Face& other) const;

    auto operator<=>(const Face&) const = default;
    bool operator==(const Face&) const = default;

private:
    std::vector<int> vertices_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept;
};

/// Upper bound on the number of faces any closure may enumerate.
struct FaceBudget {
    std::size_t max_faces = 2'000'000;
};

inline constexpr std::size_t kDefaultFaceBudget = 2'000'000;

/// kDefaultFaceBudget unless CUTNERVE_FACE_BUDGET is set.
FaceBudget default_face_budget();

/// Finite abstract simplicial complex stored by its facets.
///
/// Vertices are indices into a ground list of unique labels. Two complexes are
/// compared through labels, never through indices. The void complex (no faces)
/// and the complex whose only face is the empty face are distinct values: the
/// latter has the single facet {}.
class SimplicialComplex {
public:
    /// Void complex on an empty ground set.
    SimplicialComplex() = default;

    /// Reduces candidates to the inclusion-maximal ones. An empty candidate list
    /// yields the void complex. Throws InvalidFace for unknown vertex indices and
    /// InvalidParameter for duplicate labels.
    static SimplicialComplex from_facets(std::vector<std::string> labels, std::vector<Face> candidates);

    /// Same as from_facets with faces given by vertex labels. Unknown labels throw
    /// InvalidFace.
    static SimplicialComplex from_label_facets(std::vector<std::string> labels,
                                               const std::vector<std::vector<std::string>>& candidates);

    static SimplicialComplex void_complex(std::vector<std::string> labels = {});
    /// The full simplex on every label.
    static SimplicialComplex simplex(std::vector<std::string> labels);
    /// One isolated vertex per label.
    static SimplicialComplex discrete(std::vector<std::string> labels);
    /// Boundary of the simplex on the labels (all proper faces).
    static SimplicialComplex simplex_boundary(std::vector<std::string> labels);

    bool is_void() const { return facets_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<int> index_of(std::string_view label) const;
    const std::vector<Face>& facets() const { return facets_; }

    /// Throws UndefinedOnVoid for the void complex.
    int dimension() const;
    bool is_pure() const;
    bool contains(const Face& f) const;
    /// Vertices that occur in some face, sorted.
    std::vector<int> used_vertices() const;

    Face face_from_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> face_labels(const Face& f) const;

private:
    std::vector<std::string> labels_;
    std::vector<Face> facets_;
};

/// Faces grouped by dimension; by_dim[d + 1] holds the d-dimensional faces in
/// lexicographic order.
struct FaceTable {
    std::vector<std::vector<Face>> by_dim;

    std::size_t total() const;
    std::size_t count(int d) const;
    const std::vector<Face>& of_dim(int d) const;
    /// Position of f within of_dim(f.dimension()), if present.
    std::optional<std::size_t> position(const Face& f) const;
};

/// Closure of the facets. Throws ResourceLimit once the distinct face count
/// exceeds the budget.
FaceTable enumerate_faces(const SimplicialComplex& c, FaceBudget budget = default_face_budget());

/// Deduplicated, lexicographically sorted; includes the empty face unless void.
std::vector<Face> all_faces(const SimplicialComplex& c, FaceBudget budget = default_face_budget());
std::vector<Face> faces_of_dim(const SimplicialComplex& c, int d, FaceBudget budget = default_face_budget());

/// f[0] = f_{-1}, f[1] = f_0, ... Empty for the void complex.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& c, FaceBudget budget = default_face_budget());

/// -1 + f_0 - f_1 + ...; zero for the void complex.
std::int64_t euler_characteristic_reduced(const SimplicialComplex& c, FaceBudget budget = default_face_budget());

/// Throws InvalidParameter when the label sets overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex);
/// Suspension points get the labels `north` and `south`.
SimplicialComplex suspension(const SimplicialComplex& c, const std::string& north = "N",
                             const std::string& south = "S");
/// Throws InvalidFace when sigma is not a face.
SimplicialComplex link(const SimplicialComplex& c, const Face& sigma);
SimplicialComplex skeleton(const SimplicialComplex& c, int d);

/// Face-set operations on label sets; the ground set is the label union.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
/// Same face set over labels (ground vertices in no face are ignored).
bool equals_labeled(const SimplicialComplex& a, const SimplicialComplex& b);

/// Copy of c with vertex i renamed to labels[i].
SimplicialComplex relabel(const SimplicialComplex& c, std::vector<std::string> labels);

/// Keep the inclusion-maximal faces, sorted and deduplicated.
std::vector<Face> maximal_faces(std::vector<Face> faces);

}  // namespace cutnerve
