#include "cutnerve/homology.hpp"

#include "cutnerve/error.hpp"

namespace cutnerve {

IntegerMatrix boundary_matrix(const FaceTable& faces, int d) {
    if (d < 0) throw Error(ErrorKind::InvalidParameter, "boundary matrix degree must be >= 0");
    const auto& lower = faces.of_dim(d - 1);
    const auto& upper = faces.of_dim(d);
    IntegerMatrix m(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& vs = upper[j].data();
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            std::vector<int> sub;
            sub.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != skip) sub.push_back(vs[i]);
            auto row = faces.position(Face::from_sorted(std::move(sub)));
            if (!row) throw Error(ErrorKind::InvalidFace, "face table is not closed under taking faces");
            m.set(*row, j, Integer(skip % 2 == 0 ? 1 : -1));
        }
    }
    return m;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d, FaceBudget budget) {
    if (c.is_void()) throw Error(ErrorKind::UndefinedOnVoid, "boundary matrix of the void complex");
    return boundary_matrix(enumerate_faces(c, budget), d);
}

std::int64_t HomologyProfile::rank(int d) const {
    if (d == -1) return betti_minus_one;
    if (d < -1 || static_cast<std::size_t>(d) >= betti.size()) return 0;
    return betti[static_cast<std::size_t>(d)];
}

bool HomologyProfile::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::int64_t HomologyProfile::euler_characteristic() const {
    std::int64_t chi = -betti_minus_one;
    for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 == 0) ? betti[d] : -betti[d];
    return chi;
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
    if (is_void != o.is_void || betti_minus_one != o.betti_minus_one) return false;
    const std::size_t n = std::max(betti.size(), o.betti.size());
    for (std::size_t d = 0; d < n; ++d) {
        if (rank(static_cast<int>(d)) != o.rank(static_cast<int>(d))) return false;
        static const std::vector<Integer> none;
        const auto& a = d < torsion.size() ? torsion[d] : none;
        const auto& b = d < o.torsion.size() ? o.torsion[d] : none;
        if (a != b) return false;
    }
    return true;
}

HomologyProfile reduced_homology(const FaceTable& faces) {
    HomologyProfile p;
    if (faces.by_dim.empty()) {
        p.is_void = true;
        return p;
    }
    const int top = static_cast<int>(faces.by_dim.size()) - 2;
    // invariants[d] are the Smith invariants of the boundary map out of degree d
    std::vector<std::vector<Integer>> invariants(static_cast<std::size_t>(top + 2));
    for (int d = 0; d <= top; ++d)
        invariants[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(faces, d));
    auto rank_of = [&](int d) -> std::int64_t {
        if (d < 0 || d > top) return 0;
        return static_cast<std::int64_t>(invariants[static_cast<std::size_t>(d)].size());
    };
    p.betti_minus_one = 1 - rank_of(0);
    p.betti.resize(static_cast<std::size_t>(top + 1));
    p.torsion.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        p.betti[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(faces.count(d)) - rank_of(d) - rank_of(d + 1);
        if (d + 1 <= top)
            for (const auto& inv : invariants[static_cast<std::size_t>(d + 1)])
                if (inv > 1) p.torsion[static_cast<std::size_t>(d)].push_back(inv);
    }
    return p;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, FaceBudget budget) {
    return reduced_homology(enumerate_faces(c, budget));
}

bool is_wedge_of_spheres_profile(const HomologyProfile& p, int d, std::int64_t m) {
    if (p.is_void || !p.torsion_free()) return false;
    if (p.rank(-1) != (d == -1 ? m : 0)) return false;
    for (std::size_t i = 0; i < p.betti.size(); ++i)
        if (p.betti[i] != (static_cast<int>(i) == d ? m : 0)) return false;
    if (d >= 0 && static_cast<std::size_t>(d) >= p.betti.size() && m != 0) return false;
    return true;
}

bool is_wedge_of_spheres_profile(const SimplicialComplex& c, int d, std::int64_t m, FaceBudget budget) {
    return is_wedge_of_spheres_profile(reduced_homology(c, budget), d, m);
}

JoinCheck join_homology_check(const SimplicialComplex& a, const SimplicialComplex& b, FaceBudget budget) {
    if (a.is_void() || b.is_void()) return JoinCheck::Inapplicable;
    const auto ha = reduced_homology(a, budget);
    const auto hb = reduced_homology(b, budget);
    if (!ha.torsion_free() || !hb.torsion_free()) return JoinCheck::Inapplicable;
    const auto hj = reduced_homology(join(a, b), budget);
    if (!hj.torsion_free()) return JoinCheck::Fails;
    const int top = static_cast<int>(hj.betti.size()) + 1;
    for (int r = -1; r <= top; ++r) {
        std::int64_t expected = 0;
        for (int p = -1; p <= r; ++p) expected += ha.rank(p) * hb.rank(r - 1 - p);
        if (hj.rank(r) != expected) return JoinCheck::Fails;
    }
    return JoinCheck::Holds;
}

}  // namespace cutnerve
