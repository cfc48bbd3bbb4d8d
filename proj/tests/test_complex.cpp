#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutnerve/complex.hpp"
#include "cutnerve/error.hpp"
#include "oracles.hpp"

using namespace cutnerve;

namespace {

oracle::FaceSet label_faces(const SimplicialComplex& c, const std::vector<Face>& faces) {
    oracle::FaceSet out;
    for (const auto& f : faces) out.insert(oracle::sorted(c.face_labels(f)));
    return out;
}

}  // namespace

TEST_CASE("void and the empty-face complex are different") {
    const auto v = SimplicialComplex::void_complex({"a"});
    const auto e = SimplicialComplex::from_facets({"a"}, {Face{}});
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(e.dimension() == -1);
    CHECK_THROWS_AS(v.dimension(), Error);
    CHECK(f_vector(v).empty());
    CHECK(f_vector(e) == std::vector<std::uint64_t>{1});
    CHECK(euler_characteristic_reduced(v) == 0);
    CHECK(euler_characteristic_reduced(e) == -1);
    CHECK_FALSE(equals_labeled(v, e));
    CHECK(all_faces(v).empty());
    CHECK(all_faces(e).size() == 1);
}

TEST_CASE("facets are reduced to the maximal ones") {
    const auto c = SimplicialComplex::from_facets({"a", "b", "c"}, {Face{0, 1}, Face{0}, Face{0, 1}, Face{2}});
    CHECK(c.facets() == std::vector<Face>{Face{0, 1}, Face{2}});
    CHECK(c.contains(Face{}));
    CHECK(c.contains(Face{1}));
    CHECK_FALSE(c.contains(Face{1, 2}));
    CHECK_FALSE(c.is_pure());
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {Face{3}}), Error);
}

TEST_CASE("closure matches the subset oracle on random complexes") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto c = oracle::random_complex(seed, 7, 4, 5);
        CHECK(label_faces(c, all_faces(c)) == oracle::faces_of(c));
        const auto fv = f_vector(c);
        const auto brute = oracle::faces_of(c);
        for (std::size_t i = 0; i < fv.size(); ++i)
            CHECK(fv[i] == static_cast<std::uint64_t>(std::count_if(brute.begin(), brute.end(),
                                                                     [&](const auto& f) { return f.size() == i; })));
        CHECK(oracle::maximal(brute) == label_faces(c, c.facets()));
    }
}

TEST_CASE("face budget") {
    const auto big = SimplicialComplex::simplex({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"});
    CHECK_THROWS_AS(all_faces(big, FaceBudget{1000}), Error);
    CHECK(all_faces(big, FaceBudget{4096}).size() == 4096);
}

TEST_CASE("join, cone, suspension and link") {
    const auto a = SimplicialComplex::discrete({"x", "y"});
    const auto b = SimplicialComplex::discrete({"p", "q"});
    const auto square = join(a, b);
    CHECK(square.facets().size() == 4);
    CHECK(euler_characteristic_reduced(square) == -1);
    CHECK_THROWS_AS(join(a, a), Error);

    const auto k = cone(square, "z");
    CHECK(k.dimension() == 2);
    CHECK(euler_characteristic_reduced(k) == 0);

    const auto s = suspension(a);
    CHECK(equals_labeled(s, join(a, SimplicialComplex::discrete({"N", "S"}))));

    const auto l = link(square, square.face_from_labels({"x"}));
    CHECK(equals_labeled(l, b));
    CHECK_THROWS_AS(link(square, square.face_from_labels({"x", "y"})), Error);

    const auto sk = skeleton(SimplicialComplex::simplex({"a", "b", "c"}), 1);
    CHECK(equals_labeled(sk, SimplicialComplex::simplex_boundary({"a", "b", "c"})));
}

TEST_CASE("intersection and union are face-set operations") {
    for (std::uint64_t seed = 40; seed < 60; ++seed) {
        const auto x = oracle::random_complex(seed, 6, 3, 4);
        const auto y = oracle::random_complex(seed + 1000, 6, 3, 4);
        const auto fx = oracle::faces_of(x), fy = oracle::faces_of(y);
        oracle::FaceSet both, either = fx;
        std::set_intersection(fx.begin(), fx.end(), fy.begin(), fy.end(), std::inserter(both, both.end()));
        either.insert(fy.begin(), fy.end());
        CHECK(oracle::faces_of(intersection(x, y)) == both);
        CHECK(oracle::faces_of(union_of(x, y)) == either);
    }
}

TEST_CASE("relabel keeps structure") {
    const auto c = oracle::rp2();
    const auto r = relabel(c, {"a", "b", "c", "d", "e", "f"});
    CHECK(f_vector(r) == f_vector(c));
    CHECK_FALSE(equals_labeled(r, c));
    CHECK(equals_labeled(relabel(r, c.labels()), c));
}
