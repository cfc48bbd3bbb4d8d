#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutnerve/constructions.hpp"
#include "cutnerve/error.hpp"
#include "cutnerve/homology.hpp"
#include "cutnerve/verify.hpp"
#include "oracles.hpp"

using namespace cutnerve;

namespace {

// Δ^t from the oracle, as a library complex on the graph's labels.
SimplicialComplex brute_total_cut(const Graph& g, int k) {
    const auto facets = oracle::total_cut_facets(g, k);
    return SimplicialComplex::from_label_facets(g.labels(), {facets.begin(), facets.end()});
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST_CASE("neighborhood complex matches the definition") {
    std::vector<Graph> graphs = {cycle(5), cycle(6), prism(3), circular_ladder(4), star(4), kneser(5, 2)};
    for (const auto& e : random_graph_corpus(15)) graphs.push_back(e.graph);
    for (const auto& g : graphs) CHECK(oracle::faces_of(neighborhood_complex(g)) == oracle::neighborhood_faces(g));
}

TEST_CASE("total cut complex matches brute force") {
    for (const auto& e : random_graph_corpus(20))
        for (int k = 1; k <= 4; ++k) CHECK(equals_labeled(total_cut_complex(e.graph, k), brute_total_cut(e.graph, k)));
    CHECK(total_cut_complex(cycle(5), 3).is_void());
    CHECK_THROWS_AS(total_cut_complex(cycle(5), 0), Error);
}

TEST_CASE("cycle total cut facet count") {
    for (int k = 1; k <= 3; ++k)
        for (int n = std::max(3, 2 * k); n <= 9; ++n) {
            const auto t = total_cut_complex(cycle(n), k);
            CHECK(t.facets().size() * static_cast<std::size_t>(n - k) == static_cast<std::size_t>(n) * binomial(n - k, k));
        }
    CHECK(total_cut_complex(cycle(6), 2).facets().size() == 9);
}

TEST_CASE("cover validation") {
    const auto base = SimplicialComplex::simplex({"a", "b"});
    CHECK_THROWS_AS(Cover(base, {{"x", Face{0, 2}}}, {{"p", {0}}}), Error);
    CHECK_THROWS_AS(Cover(base, {{"x", Face{0, 1}}}, {{"p", {1}}}), Error);
    CHECK_THROWS_AS(Cover(base, {{"x", Face{0}}}, {{"p", {0}}}), Error);
    CHECK_THROWS_AS(Cover(base, {{"x", Face{0, 1}}, {"y", Face{0}}}, {{"p", {1, 0}}}), Error);
    const Cover ok(base, {{"x", Face{0, 1}}}, {{"p", {0}}, {"q", {}}});
    CHECK(part_faces(ok, 0).size() == 4);
    CHECK(part_faces(ok, 1).empty());
    const int both[] = {0, 1};
    CHECK(cover_intersection(ok, both).is_void());
    CHECK_THROWS_AS(cover_intersection(ok, std::span<const int>{}), Error);
}

TEST_CASE("independent cover nerve is the total cut complex") {
    for (const auto& e : random_graph_corpus(50))
        for (int k = 2; k <= 3; ++k) {
            if (oracle::alpha(e.graph) < k) {
                CHECK_THROWS_AS(independent_cover(e.graph, k), Error);
                continue;
            }
            const Cover cover = independent_cover(e.graph, k);
            CHECK(equals_labeled(cover.base(), neighborhood_complex(induced_k_independent(e.graph, k))));
            CHECK(equals_labeled(nerve(cover), brute_total_cut(e.graph, k)));
        }
}

TEST_CASE("cover intersection is the union of common cells") {
    const Cover cover = independent_cover(cycle(7), 2);
    const auto& cells = cover.cells();
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            const int idx[] = {i, j};
            std::vector<Face> common;
            for (int c : cover.parts()[static_cast<std::size_t>(i)].cells)
                if (std::binary_search(cover.parts()[static_cast<std::size_t>(j)].cells.begin(),
                                       cover.parts()[static_cast<std::size_t>(j)].cells.end(), c))
                    common.push_back(cells[static_cast<std::size_t>(c)].simplex);
            const auto expected = SimplicialComplex::from_facets(cover.base().labels(), common);
            CHECK(equals_labeled(cover_intersection(cover, idx), expected));
        }
}

TEST_CASE("raw nerve can differ from the cell nerve") {
    // Distinct cells may share a vertex set, and a face may lie in two parts
    // through different cells; the raw face-set nerve then has extra faces.
    const Cover cover = independent_cover(cycle(6), 2);
    const auto cell = nerve(cover);
    const auto raw = raw_nerve(cover);
    CHECK(equals_labeled(cell, total_cut_complex(cycle(6), 2)));
    CHECK_FALSE(equals_labeled(cell, raw));
    CHECK(all_faces(cell).size() == 51);
    CHECK(all_faces(raw).size() == 64);
}

TEST_CASE("facet star cover") {
    const auto c = SimplicialComplex::simplex_boundary({"a", "b", "c"});
    const Cover cover = facet_star_cover(c, {"a", "b", "c"});
    CHECK(cover.size() == 3);
    CHECK(equals_labeled(nerve(cover), SimplicialComplex::simplex_boundary({"a", "b", "c"})));
    CHECK_THROWS_AS(facet_star_cover(c, {"z"}), Error);
}

TEST_CASE("multicone chain is nested and ends at the intersection") {
    for (int n = 5; n <= 7; ++n) {
        const Cover cover = independent_cover(cycle(n), 2);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int idx[] = {i - 1, j - 1};
                const auto inter = cover_intersection(cover, idx);
                const auto chain = cycle_cover_multicone_chain(n, 2, {i, j});
                if (inter.is_void()) {
                    CHECK(chain.chain.empty());
                    continue;
                }
                REQUIRE_FALSE(chain.chain.empty());
                CHECK(chain.chain.size() == chain.apexes.size());
                CHECK(equals_labeled(chain.chain.back(), inter));
                for (std::size_t s = 1; s < chain.chain.size(); ++s)
                    CHECK(equals_labeled(intersection(chain.chain[s - 1], chain.chain[s]), chain.chain[s - 1]));
            }
    }
}
