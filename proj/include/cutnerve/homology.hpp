#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutnerve/complex.hpp"

namespace cutnerve {

using Integer = boost::multiprecision::cpp_int;

/// Sparse integer matrix stored by columns. Zero entries are never stored.
class IntegerMatrix {
public:
    struct Entry {
        int row;
        Integer value;
    };

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static IntegerMatrix from_dense(const std::vector<std::vector<Integer>>& dense);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    /// Entries of column c ordered by row.
    const std::vector<Entry>& column(std::size_t c) const { return columns_.at(c); }
    Integer at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Integer& value);

    std::vector<std::vector<Integer>> dense() const;
    IntegerMatrix transposed() const;

    bool operator==(const IntegerMatrix&) const;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

inline bool operator==(const IntegerMatrix::Entry& a, const IntegerMatrix::Entry& b) {
    return a.row == b.row && a.value == b.value;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// Nonzero Smith invariants d_1 | d_2 | ... | d_r, all positive; r = rank.
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

/// Boundary map from d-faces (columns) to (d-1)-faces (rows) with the
/// orientation of sorted vertex order. d = 0 is the augmentation onto the empty
/// face, so the resulting homology is reduced.
IntegerMatrix boundary_matrix(const FaceTable& faces, int d);
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d, FaceBudget budget = default_face_budget());

/// Reduced integral homology. betti[d] and torsion[d] describe H~_d for
/// 0 <= d <= dim. The complex {∅} has H~_{-1} = Z, recorded in betti_minus_one.
struct HomologyProfile {
    bool is_void = false;
    std::int64_t betti_minus_one = 0;
    std::vector<std::int64_t> betti;
    std::vector<std::vector<Integer>> torsion;

    std::int64_t rank(int d) const;
    bool torsion_free() const;
    /// Alternating sum of ranks, starting at degree -1.
    std::int64_t euler_characteristic() const;

    /// Equal groups in every degree (trailing zero degrees ignored).
    bool operator==(const HomologyProfile& other) const;
};

HomologyProfile reduced_homology(const SimplicialComplex& c, FaceBudget budget = default_face_budget());
HomologyProfile reduced_homology(const FaceTable& faces);

/// H~ is Z^m in degree d and zero elsewhere, without torsion. m = 0 means
/// homology-trivial. Never true for the void complex.
bool is_wedge_of_spheres_profile(const HomologyProfile& p, int d, std::int64_t m);
bool is_wedge_of_spheres_profile(const SimplicialComplex& c, int d, std::int64_t m,
                                 FaceBudget budget = default_face_budget());

enum class JoinCheck { Holds, Fails, Inapplicable };

/// Compares rank H~_r(a * b) with sum over p + q = r - 1 of b~_p(a) b~_q(b).
/// Inapplicable when either side has torsion or is void.
JoinCheck join_homology_check(const SimplicialComplex& a, const SimplicialComplex& b,
                              FaceBudget budget = default_face_budget());

}  // namespace cutnerve
