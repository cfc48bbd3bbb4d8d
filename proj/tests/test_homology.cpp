#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutnerve/constructions.hpp"
#include "cutnerve/homology.hpp"
#include "cutnerve/verify.hpp"
#include "oracles.hpp"

using namespace cutnerve;

namespace {

std::vector<std::vector<Integer>> to_integer(const std::vector<std::vector<oracle::Big>>& m) {
    std::vector<std::vector<Integer>> out;
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

}  // namespace

TEST_CASE("smith normal form matches the dense oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        std::vector<std::vector<oracle::Big>> m(r, std::vector<oracle::Big>(c));
        for (auto& row : m)
            for (auto& x : row) x = rng() % 3 == 0 ? static_cast<long>(rng() % 13) - 6 : 0;
        const auto expected = oracle::smith(m);
        const auto got = smith_normal_form(IntegerMatrix::from_dense(to_integer(m)));
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
        for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i] % got[i - 1] == 0);
    }
}

TEST_CASE("smith normal form of known matrices") {
    const auto d = smith_normal_form(IntegerMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(d == std::vector<Integer>{2, 6, 12});
    CHECK(smith_normal_form(IntegerMatrix(3, 3)).empty());
    CHECK(smith_normal_form(IntegerMatrix::from_dense({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
}

TEST_CASE("sparse matrix basics") {
    auto m = IntegerMatrix::from_dense({{0, 1}, {2, 0}, {0, 3}});
    CHECK(m.nonzeros() == 3);
    CHECK(m.at(1, 0) == 2);
    CHECK(m.transposed().transposed() == m);
    const auto p = multiply(m.transposed(), m);
    CHECK(p.dense() == std::vector<std::vector<Integer>>{{4, 0}, {0, 10}});
    m.set(1, 0, 0);
    CHECK(m.nonzeros() == 2);
}

TEST_CASE("boundary of a boundary vanishes") {
    const auto c = SimplicialComplex::simplex({"a", "b", "c", "d", "e"});
    for (int d = 1; d <= 4; ++d) {
        const auto p = multiply(boundary_matrix(c, d - 1), boundary_matrix(c, d));
        CHECK(p.nonzeros() == 0);
    }
}

TEST_CASE("projective plane has Z/2 in degree 1") {
    const auto p = reduced_homology(oracle::rp2());
    CHECK(p.rank(0) == 0);
    CHECK(p.rank(1) == 0);
    CHECK(p.rank(2) == 0);
    REQUIRE(p.torsion.size() >= 2);
    CHECK(p.torsion[1] == std::vector<Integer>{2});
    CHECK_FALSE(p.torsion_free());
    CHECK(oracle::same(p, oracle::homology(oracle::faces_of(oracle::rp2()))));
}

TEST_CASE("void, empty face and point") {
    const auto v = reduced_homology(SimplicialComplex::void_complex());
    CHECK(v.is_void);
    const auto e = reduced_homology(SimplicialComplex::from_facets({}, {Face{}}));
    CHECK(e.betti_minus_one == 1);
    CHECK(is_wedge_of_spheres_profile(e, -1, 1));
    const auto pt = reduced_homology(SimplicialComplex::simplex({"x"}));
    CHECK(is_wedge_of_spheres_profile(pt, 0, 0));
    CHECK_FALSE(is_wedge_of_spheres_profile(v, 0, 0));
}

TEST_CASE("spheres and wedges") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        CHECK(is_wedge_of_spheres_profile(SimplicialComplex::simplex_boundary(labels), n - 2, 1));
    }
    CHECK(is_wedge_of_spheres_profile(SimplicialComplex::discrete({"a", "b", "c", "d"}), 0, 3));
}

TEST_CASE("homology matches the oracle on random complexes") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const auto c = oracle::random_complex(seed, 7, 5, 4);
        CHECK(oracle::same(reduced_homology(c), oracle::homology(oracle::faces_of(c))));
    }
}

TEST_CASE("homology matches the oracle on small corpus complexes") {
    for (const auto& entry : random_graph_corpus(50)) {
        for (int k = 1; k <= 3; ++k) {
            const auto t = total_cut_complex(entry.graph, k);
            const auto ft = oracle::faces_of(t);
            if (ft.size() <= 200) CHECK(oracle::same(reduced_homology(t), oracle::homology(ft)));
        }
        const auto nb = neighborhood_complex(entry.graph);
        const auto fn = oracle::faces_of(nb);
        if (fn.size() <= 200) CHECK(oracle::same(reduced_homology(nb), oracle::homology(fn)));
    }
}

TEST_CASE("suspension shifts reduced homology by one") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto c = oracle::random_complex(seed, 6, 4, 4);
        const auto h = reduced_homology(c);
        const auto s = reduced_homology(suspension(c));
        CHECK(s.betti_minus_one == 0);
        for (int d = -1; d <= c.dimension(); ++d) {
            CHECK(s.rank(d + 1) == h.rank(d));
            if (d >= 0) {
                const auto& below = h.torsion[static_cast<std::size_t>(d)];
                const auto& above = s.torsion[static_cast<std::size_t>(d + 1)];
                CHECK(below == above);
            }
        }
    }
}

TEST_CASE("join ranks follow the Kunneth sum") {
    int applicable = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto a = oracle::random_complex(seed, 4, 3, 3);
        auto b = oracle::random_complex(seed + 500, 4, 3, 3);
        b = relabel(b, {"w0", "w1", "w2", "w3"});
        const auto r = join_homology_check(a, b);
        CHECK(r != JoinCheck::Fails);
        if (r == JoinCheck::Holds) ++applicable;
    }
    CHECK(applicable == 20);
    CHECK(join_homology_check(oracle::rp2(), SimplicialComplex::discrete({"p", "q"})) == JoinCheck::Inapplicable);
}
