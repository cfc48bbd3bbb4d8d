// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cutnerve/constructions.hpp"
#include "cutnerve/homology.hpp"
#include "cutnerve/verify.hpp"
#include "oracles.hpp"

using namespace cutnerve;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Runs the scenario and folds its verdict into `o`; failing checks are listed.
void run(Outcome& o, const std::string& id, const Parameters& p) {
    Report r;
    try {
        r = run_scenario(id, p);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail += " " + id + " error(" + e.what() + ")";
        return;
    }
    if (r.verdict() == Verdict::Pass) return;
    o.pass = false;
    std::ostringstream s;
    s << " " << id;
    for (const auto& [k, v] : r.parameters) s << " " << k << "=" << v;
    s << " [";
    bool first = true;
    for (const auto& c : r.checks)
        if (c.verdict != Verdict::Pass) {
            s << (first ? "" : "; ") << c.name << ": " << c.detail;
            first = false;
        }
    s << "]";
    o.detail += s.str();
}

Parameters nk(int n, int k) { return {{"n", n}, {"k", k}}; }

Outcome criterion_1() {
    Outcome o;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {7, 2}, {8, 2}, {6, 3}, {8, 3}, {9, 3}, {3, 2}, {5, 3}})
        run(o, "thm-1-4", nk(n, k));
    return o;
}

Outcome criterion_2() {
    Outcome o;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {7, 2}, {8, 2}, {6, 3}, {8, 3}}) run(o, "thm-1-3", nk(n, k));
    return o;
}

Outcome criterion_3() {
    Outcome o;
    for (int k = 1; k <= 3; ++k)
        for (int n = std::max(3, 2 * k); n <= 8; ++n) {
            run(o, "thm-3-1", nk(n, k));
            run(o, "prop-3-3", nk(n, k));
        }
    if (total_cut_complex(cycle(6), 2).facets().size() != 9) {
        o.pass = false;
        o.detail += " C_6 k=2 facet count is not 9";
    }
    return o;
}

Outcome criterion_4() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) run(o, "thm-4-2", {{"n", n}});
    return o;
}

Outcome criterion_5() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) run(o, "thm-4-3", {{"n", n}});
    return o;
}

Outcome criterion_6() {
    Outcome o;
    for (int n = 4; n <= 7; ++n) run(o, "thm-4-4", {{"n", n}});
    return o;
}

Outcome criterion_7() {
    Outcome o;
    for (int n = 4; n <= 7; ++n) run(o, "thm-4-6", {{"n", n}});
    return o;
}

Outcome criterion_8() {
    Outcome o;
    for (int k = 3; k <= 4; ++k) {
        run(o, "thm-4-7", {{"k", k}});
        run(o, "thm-4-8", {{"k", k}});
    }
    return o;
}

Outcome criterion_9() {
    Outcome o;
    for (int n = 4; n <= 6; ++n) run(o, "ex-4-9", {{"n", n}});
    return o;
}

Outcome criterion_10() {
    Outcome o;
    run(o, "prop-4-10", {{"graphs", 60}});
    return o;
}

void require(Outcome& o, bool ok, const std::string& what) {
    if (ok) return;
    o.pass = false;
    o.detail += " " + what;
}

Outcome criterion_11() {
    Outcome o;
    // every corpus complex with at most 200 faces against the dense oracle
    std::vector<std::pair<std::string, SimplicialComplex>> corpus;
    for (const auto& e : random_graph_corpus(60)) {
        const std::string tag = "seed " + std::to_string(e.seed);
        corpus.push_back({tag + " N", neighborhood_complex(e.graph)});
        for (int k = 1; k <= 3; ++k) corpus.push_back({tag + " k=" + std::to_string(k), total_cut_complex(e.graph, k)});
    }
    for (int k = 1; k <= 3; ++k)
        for (int n = std::max(3, 2 * k); n <= 9; ++n) {
            corpus.push_back({"C_" + std::to_string(n), total_cut_complex(cycle(n), k)});
            corpus.push_back({"SG", neighborhood_complex(stable_kneser(n, k))});
        }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) corpus.push_back({"random", oracle::random_complex(seed, 7, 5, 4)});
    corpus.push_back({"RP2", oracle::rp2()});
    std::size_t compared = 0;
    for (const auto& [tag, c] : corpus) {
        const auto faces = oracle::faces_of(c);
        if (faces.size() > 200) continue;
        ++compared;
        require(o, oracle::same(reduced_homology(c), oracle::homology(faces)), "oracle mismatch on " + tag);
    }
    o.detail += " " + std::to_string(compared) + " complexes compared with the dense oracle;";

    const auto rp2 = reduced_homology(oracle::rp2());
    require(o, rp2.torsion.size() > 1 && rp2.torsion[1] == std::vector<Integer>{2} && rp2.rank(1) == 0 && rp2.rank(2) == 0,
            "RP2 torsion is not Z/2 in degree 1");

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto c = oracle::random_complex(seed, 6, 4, 4);
        const auto h = reduced_homology(c), s = reduced_homology(suspension(c));
        bool shifted = s.rank(-1) == 0;
        for (int d = -1; d <= c.dimension(); ++d) {
            shifted = shifted && s.rank(d + 1) == h.rank(d);
            if (d >= 0) shifted = shifted && s.torsion[static_cast<std::size_t>(d + 1)] == h.torsion[static_cast<std::size_t>(d)];
        }
        require(o, shifted, "suspension shift fails for seed " + std::to_string(seed));
        const auto b = relabel(oracle::random_complex(seed + 500, 4, 3, 3), {"w0", "w1", "w2", "w3"});
        require(o, join_homology_check(oracle::random_complex(seed, 4, 3, 3), b) == JoinCheck::Holds,
                "join ranks fail for seed " + std::to_string(seed));
    }
    o.detail += " RP2, 20 suspensions and 20 joins checked";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        double limit_seconds;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, 10, criterion_1},  {2, 60, criterion_2},  {3, 120, criterion_3},  {4, 120, criterion_4},
        {5, 30, criterion_5},  {6, 60, criterion_6},  {7, 30, criterion_7},   {8, 60, criterion_8},
        {9, 60, criterion_9},  {10, 120, criterion_10}, {11, 60, criterion_11},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail += std::string(" error(") + e.what() + ")";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.pass = false;
            o.detail += " over the time limit";
        }
        if (!o.pass) ++failed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, c.limit_seconds);
        std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " (" << timing << ")" << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size() << " criteria pass"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
