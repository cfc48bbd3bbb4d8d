// Scenario registry: one entry per verified statement.

#include <algorithm>
#include <sstream>

#include "cutnerve/constructions.hpp"
#include "cutnerve/error.hpp"
#include "cutnerve/homology.hpp"
#include "cutnerve/verify.hpp"

namespace cutnerve {

namespace {

void add(Report& r, std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)});
}

std::string describe(const HomologyProfile& p) {
    if (p.is_void) return "void complex";
    std::ostringstream out;
    bool any = false;
    auto term = [&](int d, std::int64_t b) {
        if (b == 0) return;
        out << (any ? ", " : "") << "b~_" << d << " = " << b;
        any = true;
    };
    term(-1, p.betti_minus_one);
    for (std::size_t d = 0; d < p.betti.size(); ++d) term(static_cast<int>(d), p.betti[d]);
    for (std::size_t d = 0; d < p.torsion.size(); ++d)
        for (const auto& t : p.torsion[d]) {
            out << (any ? ", " : "") << "Z/" << t << " in degree " << d;
            any = true;
        }
    return any ? out.str() : "trivial";
}

std::string wedge_text(int d, std::int64_t m) {
    if (m == 0) return "trivial";
    return "b~_" + std::to_string(d) + " = " + std::to_string(m) + " only";
}

HomologyProfile expect_wedge(Report& r, const std::string& name, const SimplicialComplex& c, int d, std::int64_t m,
                             const RunOptions& o) {
    const auto p = reduced_homology(c, o.face_budget);
    add(r, name, is_wedge_of_spheres_profile(p, d, m), "expected " + wedge_text(d, m) + ", got " + describe(p));
    return p;
}

Verdict collapse_verdict(CollapseVerdict v) {
    switch (v) {
        case CollapseVerdict::Collapsible: return Verdict::Pass;
        case CollapseVerdict::NotCollapsible: return Verdict::Fail;
        case CollapseVerdict::Unknown: return Verdict::Unknown;
    }
    return Verdict::Unknown;
}

// Tally of collapse searches over a family of complexes.
struct CollapseTally {
    int total = 0;
    int collapsible = 0;
    int unknown = 0;
    Verdict verdict = Verdict::Pass;

    void add(const SimplicialComplex& c, const RunOptions& o) {
        const auto w = greedy_collapse(c, o.collapse_budget, o.face_budget);
        ++total;
        if (w.verdict == CollapseVerdict::Collapsible) ++collapsible;
        if (w.verdict == CollapseVerdict::Unknown) ++unknown;
        verdict = worst(verdict, collapse_verdict(w.verdict));
    }

    std::string detail(const std::string& what) const {
        std::string s = std::to_string(collapsible) + " of " + std::to_string(total) + " " + what + " collapse to a point";
        if (unknown) s += ", " + std::to_string(unknown) + " undecided within the step budget";
        return s;
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string count_text(std::size_t got, std::size_t want) {
    return "expected " + std::to_string(want) + ", got " + std::to_string(got);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < k) return 0;
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return b;
}

std::optional<std::string> need_n_ge_2k(const Parameters& p) {
    if (p.at("n") < 2 * p.at("k")) return std::string("n >= 2k");
    return std::nullopt;
}

std::string pm(int i, char sign) { return std::to_string(i) + sign; }

// 1-based position of each vertex label of c in lexicographic label-index order.
std::vector<std::string> window(const SimplicialComplex& c, int start, int length, int m) {
    std::vector<std::string> out;
    for (int j = 0; j < length; ++j) out.push_back(c.label((start - 1 + j) % m));
    return out;
}

// ---------------------------------------------------------------- scenarios

void total_cut_cycle(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n"), k = p.at("k");
    const auto c = total_cut_complex(cycle(n), k);
    r.digests["total-cut"] = digest(c);
    if (n < 2 * k) {
        add(r, "void", c.is_void(), "n < 2k, complex is " + std::string(c.is_void() ? "void" : "not void"));
        return;
    }
    expect_wedge(r, "sphere-profile", c, n - 2 * k, 1, o);
}

void stable_kneser_neighborhood(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n"), k = p.at("k");
    const auto c = neighborhood_complex(stable_kneser(n, k));
    r.digests["neighborhood"] = digest(c);
    expect_wedge(r, "sphere-profile", c, n - 2 * k, 1, o);
}

void cycle_nerve(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n"), k = p.at("k");
    const Graph g = cycle(n);
    const Cover cover = independent_cover(g, k);
    const auto nv = nerve(cover);
    const auto tc = total_cut_complex(g, k);
    r.digests["nerve"] = digest(nv);
    r.digests["total-cut"] = digest(tc);
    r.digests["base"] = digest(cover.base());

    add(r, "induced-graph-is-stable-kneser", equals_labeled(induced_k_independent(g, k), stable_kneser(n, k)),
        "H_k(C_n) and SG(n,k) compared by labels");
    add(r, "nerve-equals-total-cut", equals_labeled(nv, tc),
        std::to_string(nv.facets().size()) + " nerve facets, " + std::to_string(tc.facets().size()) + " total cut facets");

    CollapseTally tally;
    int multicone_ok = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx, one_based;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                idx.push_back(i);
                one_based.push_back(i + 1);
            }
        const auto x = cover_intersection(cover, idx);
        if (x.is_void()) continue;
        tally.add(x, o);
        const auto chain = cycle_cover_multicone_chain(n, k, one_based);
        if (!chain.chain.empty() && equals_labeled(chain.chain.back(), x) &&
            verify_multicone(chain.chain, chain.apexes, o.face_budget).holds)
            ++multicone_ok;
    }
    r.checks.push_back({"intersections-collapsible", tally.verdict, tally.detail("nonempty intersections")});
    add(r, "intersections-multicone", multicone_ok == tally.total,
        std::to_string(multicone_ok) + " of " + std::to_string(tally.total) + " pass the shifted-apex multicone check");
    expect_wedge(r, "total-cut-sphere-profile", tc, n - 2 * k, 1, o);
    expect_wedge(r, "base-sphere-profile", cover.base(), n - 2 * k, 1, o);

    const auto raw = raw_nerve(cover, o.face_budget);
    r.notes.push_back("face-set nerve equals the total cut complex: " + yes_no(equals_labeled(raw, tc)) + " (" +
                      std::to_string(all_faces(raw, o.face_budget).size()) + " vs " +
                      std::to_string(all_faces(tc, o.face_budget).size()) + " faces)");
}

void cycle_facet_count(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n"), k = p.at("k");
    const std::uint64_t numerator = static_cast<std::uint64_t>(n) * binomial(n - k, k);
    const std::uint64_t expected = numerator / static_cast<std::uint64_t>(n - k);
    add(r, "formula-integral", numerator % static_cast<std::uint64_t>(n - k) == 0,
        "n C(n-k,k) = " + std::to_string(numerator) + " over n-k = " + std::to_string(n - k));
    const auto tc = total_cut_complex(cycle(n), k);
    r.digests["total-cut"] = digest(tc);
    add(r, "total-cut-facets", tc.facets().size() == expected, count_text(tc.facets().size(), expected));
    if (n >= 2 * k) {
        const auto nv = nerve(independent_cover(cycle(n), k));
        add(r, "nerve-facets", nv.facets().size() == expected, count_text(nv.facets().size(), expected));
    }
}

std::vector<std::string> prism_markers(int n) {
    std::vector<std::string> m;
    for (int i = 1; i <= n; ++i) m.push_back("{" + pm(i, '+') + "," + pm(i % n + 1, '-') + "}");
    return m;
}

void prism_neighborhood(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n");
    const auto nc = neighborhood_complex(induced_k_independent(prism(n), 2));
    r.digests["neighborhood"] = digest(nc);
    const std::size_t facets = static_cast<std::size_t>(n * (n - 1));
    add(r, "facet-count", nc.facets().size() == facets, count_text(nc.facets().size(), facets));
    const int dim = n * n - 3 * n + 2;
    bool pure = true;
    for (const auto& f : nc.facets()) pure = pure && f.dimension() == dim;
    add(r, "facet-dimension", pure, "every facet of dimension " + std::to_string(dim) + ": " + yes_no(pure));

    const Cover cover = facet_star_cover(nc, prism_markers(n));
    const auto nv = nerve(cover);
    r.digests["marker-nerve"] = digest(nv);
    add(r, "marker-nerve-is-simplex-boundary", equals_labeled(nv, SimplicialComplex::simplex_boundary(cover.part_labels())),
        std::to_string(nv.facets().size()) + " nerve facets on " + std::to_string(n) + " parts");
    CollapseTally tally;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int idx[2] = {i, j};
            tally.add(cover_intersection(cover, idx), o);
        }
    r.checks.push_back({"pairwise-intersections-collapsible", tally.verdict, tally.detail("pairwise intersections")});
    expect_wedge(r, "sphere-profile", nc, n - 2, 1, o);
    r.notes.push_back("face-set nerve of the marker cover is the simplex boundary: " +
                      yes_no(equals_labeled(raw_nerve(cover, o.face_budget), SimplicialComplex::simplex_boundary(cover.part_labels()))));
}

void prism_total_cut(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n");
    const auto c = total_cut_complex(prism(n), 2);
    r.digests["total-cut"] = digest(c);
    expect_wedge(r, "wedge-profile", c, 2 * n - 4, n - 1, o);
}

void ladder_total_cut(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n");
    const auto c = total_cut_complex(circular_ladder(n), n - 1);
    r.digests["total-cut"] = digest(c);
    const std::int64_t m = n % 2 ? n - 1 : static_cast<std::int64_t>(n - 1) * (n - 1);
    expect_wedge(r, "wedge-profile", c, 2, m, o);

    if (n % 2) {
        const FacePoset poset(c, o.face_budget);
        const int plus = *c.index_of("1+"), minus = *c.index_of("1-");
        const auto matching = sequential_element_matching(poset, {plus, minus});
        const auto cert = is_acyclic(poset, matching);
        add(r, "matching-acyclic", cert.acyclic, cert.acyclic ? "no closed V-path" : "closed V-path found");
        const auto empty_pair =
            std::find_if(matching.begin(), matching.end(), [](const MatchedPair& mp) { return mp.lower.empty(); });
        add(r, "empty-face-matched-with-1+", empty_pair != matching.end() && empty_pair->upper == Face{plus},
            "empty face partner checked");
        if (cert.acyclic) {
            std::vector<Face> expected;
            for (int j = 2; j <= n; ++j) expected.push_back(c.face_from_labels({"1-", pm(j, '+'), pm(j, '-')}));
            std::sort(expected.begin(), expected.end());
            const auto critical = critical_cells(poset, matching);
            add(r, "critical-cells", critical == expected,
                count_text(critical.size(), expected.size()) + " critical cells, all of the form {1-, j+, j-}: " +
                    yes_no(critical == expected));
        }
        return;
    }

    std::vector<std::string> a, b;
    for (int i = 1; i <= n; ++i) {
        a.push_back(pm(i, i % 2 ? '+' : '-'));
        b.push_back(pm(i, i % 2 ? '-' : '+'));
    }
    auto cone_family = [&](const std::vector<std::string>& top, const std::vector<std::string>& points) {
        std::vector<std::vector<std::string>> facets;
        for (const auto& q : points) {
            auto f = top;
            f.push_back(q);
            facets.push_back(std::move(f));
        }
        return SimplicialComplex::from_label_facets(c.labels(), facets);
    };
    const auto x = cone_family(a, b);
    const auto y = cone_family(b, a);
    add(r, "union-is-total-cut", equals_labeled(union_of(x, y), c), "X = simplex(A) * B, Y = simplex(B) * A");
    expect_wedge(r, "X-trivial", x, 0, 0, o);
    expect_wedge(r, "Y-trivial", y, 0, 0, o);
    std::vector<std::vector<std::string>> bipartite;
    for (const auto& u : a)
        for (const auto& v : b) bipartite.push_back({u, v});
    const auto meet = intersection(x, y);
    add(r, "intersection-is-bipartite-graph", equals_labeled(meet, SimplicialComplex::from_label_facets(c.labels(), bipartite)),
        "X and Y meet in the 1-skeleton of K_{n,n}");
    expect_wedge(r, "intersection-profile", meet, 1, static_cast<std::int64_t>(n - 1) * (n - 1), o);
}

void ladder_neighborhood(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n");
    const Graph g = circular_ladder(n);
    const Graph h = induced_k_independent(g, n - 1);
    if (n % 2) {
        const auto iso = find_isomorphism(h, g);
        add(r, "isomorphic-to-ladder", iso && is_isomorphism(h, g, *iso),
            "H_{n-1} has " + std::to_string(h.vertex_count()) + " vertices and " + std::to_string(h.edge_count()) + " edges");
        SimplicialComplex nc = neighborhood_complex(g);
        r.digests["neighborhood"] = digest(nc);
        const auto free = free_faces(nc, o.face_budget);
        bool all_free = true, collapsed = true;
        for (char s : {'+', '-'})
            for (int i = 1; i <= n; ++i) {
                const auto sigma = nc.face_from_labels({pm(i, s), pm((i + 1) % n + 1, s)});
                const auto tau = nc.face_from_labels({pm(i, s), pm((i + 1) % n + 1, s), pm(i % n + 1, s == '+' ? '-' : '+')});
                all_free = all_free && std::find(free.begin(), free.end(), FreePair{sigma, tau}) != free.end();
                try {
                    nc = elementary_collapse(nc, sigma, tau);
                } catch (const Error&) {
                    collapsed = false;
                }
            }
        add(r, "stated-faces-free", all_free, "{i+, (i+2)+} and {i-, (i+2)-} are free in N(CL_n)");
        add(r, "stated-collapses-apply", collapsed, "the 2n collapses apply in sequence");
        r.digests["collapsed"] = digest(nc);
        expect_wedge(r, "collapsed-circle-profile", nc, 1, 1, o);
        return;
    }
    const auto nc = neighborhood_complex(h);
    r.digests["neighborhood"] = digest(nc);
    const auto& f = nc.facets();
    const bool two = f.size() == 2;
    add(r, "two-facets", two, count_text(f.size(), 2));
    add(r, "facets-disjoint-and-spanning", two && f[0].disjoint_from(f[1]) && f[0].size() + f[1].size() == h.vertex_count(),
        "the two facets split the vertex set");
    expect_wedge(r, "two-point-profile", nc, 0, 1, o);
}

void squared_cycle_total_cut(const Parameters& p, const RunOptions& o, Report& r) {
    const int k = p.at("k");
    const auto c = total_cut_complex(squared_cycle(3 * k + 1), k);
    r.digests["total-cut"] = digest(c);
    expect_wedge(r, "sphere-profile", c, 3, 1, o);
}

void squared_cycle_neighborhood(const Parameters& p, const RunOptions& o, Report& r) {
    const int k = p.at("k");
    const int m = 3 * k + 1;
    const Graph h = induced_k_independent(squared_cycle(m), k);
    bool regular = h.vertex_count() == static_cast<std::size_t>(m);
    for (int v = 0; v < static_cast<int>(h.vertex_count()); ++v) regular = regular && h.degree(v) == static_cast<std::size_t>(k + 2);
    add(r, "regular", regular,
        std::to_string(h.vertex_count()) + " vertices, degree " + std::to_string(k + 2) + " everywhere: " + yes_no(regular));

    SimplicialComplex nc = neighborhood_complex(h);
    r.digests["neighborhood"] = digest(nc);
    add(r, "dimension", nc.dimension() == k + 1, count_text(static_cast<std::size_t>(nc.dimension()), static_cast<std::size_t>(k + 1)));
    std::vector<std::vector<std::string>> windows, bands;
    for (int i = 1; i <= m; ++i) {
        windows.push_back(window(nc, i + k, k + 2, m));
        bands.push_back(window(nc, i, k + 1, m));
    }
    add(r, "facets-are-cyclic-windows", equals_labeled(nc, SimplicialComplex::from_label_facets(nc.labels(), windows)),
        "facets F_i = {i+k, ..., i+2k+1} mod 3k+1 in lexicographic vertex order");
    expect_wedge(r, "circle-profile", nc, 1, 1, o);

    bool collapsed = true;
    for (int i = 1; i <= m && collapsed; ++i) {
        const auto tau = nc.face_from_labels(window(nc, i + k, k + 2, m));
        const auto sigma = nc.face_from_labels({nc.label((i + k - 1) % m), nc.label((i + 2 * k) % m)});
        try {
            nc = facet_collapse(nc, sigma, tau);
        } catch (const Error&) {
            collapsed = false;
        }
    }
    add(r, "band-collapse", collapsed && equals_labeled(nc, SimplicialComplex::from_label_facets(nc.labels(), bands)),
        "removing {i+k, i+2k+1} from every F_i leaves the windows {i, ..., i+k}");
    expect_wedge(r, "band-circle-profile", nc, 1, 1, o);
}

void star_example(const Parameters& p, const RunOptions& o, Report& r) {
    const int n = p.at("n");
    const Graph s = star(n);
    const auto tc = total_cut_complex(s, 2);
    r.digests["total-cut"] = digest(tc);
    const auto w = greedy_collapse(tc, o.collapse_budget, o.face_budget);
    r.checks.push_back({"total-cut-collapsible", collapse_verdict(w.verdict),
                        std::string(to_string(w.verdict)) + " after " + std::to_string(w.search_steps) + " search steps"});
    add(r, "induced-graph-is-kneser", equals_labeled(induced_k_independent(s, 2), kneser(n, 2)), "H_2(S_n) and KG(n,2) compared by labels");
    const auto nc = neighborhood_complex(kneser(n, 2));
    r.digests["neighborhood"] = digest(nc);
    expect_wedge(r, "kneser-wedge-profile", nc, n - 4, static_cast<std::int64_t>(n) * n - 3 * n + 1, o);
}

void general_nerve(const Parameters& p, const RunOptions& o, Report& r) {
    const int count = p.at("graphs");
    int instances = 0, agree = 0, graphs_used = 0;
    std::size_t empty_witnessed = 0;
    std::string first_failure;
    for (const auto& e : random_graph_corpus(count)) {
        const int alpha = independence_number(e.graph);
        bool used = false;
        for (int k : {2, 3}) {
            if (alpha < k) continue;
            used = true;
            ++instances;
            const Cover cover = independent_cover(e.graph, k);
            if (equals_labeled(nerve(cover), total_cut_complex(e.graph, k))) ++agree;
            else if (first_failure.empty())
                first_failure = "seed " + std::to_string(e.seed) + ", k = " + std::to_string(k);
            empty_witnessed += empty_cell_witnesses(cover);
        }
        graphs_used += used;
    }
    add(r, "corpus-size", graphs_used >= std::min(count, 50),
        std::to_string(graphs_used) + " of " + std::to_string(count) + " graphs have independence number >= 2");
    add(r, "nerve-equals-total-cut", agree == instances,
        std::to_string(agree) + " of " + std::to_string(instances) + " (graph, k) instances agree" +
            (first_failure.empty() ? "" : ", first failure at " + first_failure));
    r.notes.push_back(std::to_string(empty_witnessed) + " nerve facets are witnessed only by an empty cell");
}

Parameters nk(int n, int k) { return {{"n", n}, {"k", k}}; }
Parameters only(const std::string& name, int v) { return {{name, v}}; }

std::vector<Parameters> cycle_sets(int max_n, std::initializer_list<int> ks) {
    std::vector<Parameters> out;
    for (int k : ks)
        for (int n = 2 * k; n <= max_n; ++n) out.push_back(nk(std::max(n, 3), k));
    return out;
}

std::vector<Scenario> build_registry() {
    std::vector<Scenario> s;
    const ParameterGuard cycle_n{"n", 3, 9, 6}, cycle_k{"k", 1, 3, 2};

    s.push_back({"thm-1-4",
                 "The total k-cut complex of the n-cycle has the homology of the sphere of dimension n-2k, and is void "
                 "for n < 2k.",
                 {cycle_n, cycle_k},
                 nullptr,
                 {{SizeClass::Smoke, {nk(4, 2), nk(3, 2)}},
                  {SizeClass::Desk,
                   {nk(4, 2), nk(6, 2), nk(7, 2), nk(8, 2), nk(6, 3), nk(8, 3), nk(9, 3), nk(3, 2), nk(5, 3)}},
                  {SizeClass::Extended, {nk(9, 2), nk(9, 1), nk(7, 3)}}},
                 total_cut_cycle});
    s.push_back({"thm-1-3",
                 "The neighborhood complex of the stable Kneser graph SG(n,k) has the homology of the sphere of "
                 "dimension n-2k.",
                 {cycle_n, cycle_k},
                 need_n_ge_2k,
                 {{SizeClass::Smoke, {nk(4, 2), nk(6, 2)}},
                  {SizeClass::Desk, {nk(4, 2), nk(6, 2), nk(7, 2), nk(8, 2), nk(6, 3), nk(8, 3)}},
                  {SizeClass::Extended, {nk(9, 2), nk(9, 3)}}},
                 stable_kneser_neighborhood});
    s.push_back({"thm-3-1",
                 "The cover of N(SG(n,k)) by the parts avoiding each cycle vertex has the total cut complex of C_n as "
                 "nerve, every nonempty intersection collapses, and both complexes are homology (n-2k)-spheres.",
                 {cycle_n, cycle_k},
                 need_n_ge_2k,
                 {{SizeClass::Smoke, {nk(5, 2)}},
                  {SizeClass::Desk, cycle_sets(8, {2, 3})},
                  {SizeClass::Extended, {nk(9, 2), nk(9, 3), nk(6, 1)}}},
                 cycle_nerve});
    s.push_back({"prop-3-3",
                 "The total k-cut complex of the n-cycle has n/(n-k) C(n-k,k) facets.",
                 {cycle_n, cycle_k},
                 [](const Parameters& p) -> std::optional<std::string> {
                     if (p.at("n") <= p.at("k")) return std::string("n > k");
                     return std::nullopt;
                 },
                 {{SizeClass::Smoke, {nk(6, 2)}},
                  {SizeClass::Desk, cycle_sets(9, {1, 2, 3})},
                  {SizeClass::Extended, {}}},
                 cycle_facet_count});
    s.push_back({"thm-4-2",
                 "For the prism K_n x K_2, N(H_2) has n(n-1) facets of dimension n^2-3n+2, the marker cover has the "
                 "boundary of the (n-1)-simplex as nerve with collapsible pairwise intersections, and N(H_2) has the "
                 "homology of the (n-2)-sphere.",
                 {{"n", 2, 5, 4}},
                 nullptr,
                 {{SizeClass::Smoke, {only("n", 3)}}, {SizeClass::Desk, {only("n", 3), only("n", 4), only("n", 5)}}},
                 prism_neighborhood});
    s.push_back({"thm-4-3",
                 "The total 2-cut complex of the prism K_n x K_2 has the homology of a wedge of n-1 spheres of "
                 "dimension 2n-4.",
                 {{"n", 2, 5, 4}},
                 nullptr,
                 {{SizeClass::Smoke, {only("n", 3)}},
                  {SizeClass::Desk, {only("n", 3), only("n", 4), only("n", 5)}},
                  {SizeClass::Extended, {only("n", 2)}}},
                 prism_total_cut});
    s.push_back({"thm-4-4",
                 "The total (n-1)-cut complex of the circular ladder CL_n has the homology of a wedge of n-1 (odd n) or "
                 "(n-1)^2 (even n) 2-spheres; odd n via the element matching on 1+ then 1-, even n via the X, Y "
                 "decomposition.",
                 {{"n", 3, 7, 5}},
                 nullptr,
                 {{SizeClass::Smoke, {only("n", 4), only("n", 5)}},
                  {SizeClass::Desk, {only("n", 4), only("n", 5), only("n", 6), only("n", 7)}},
                  {SizeClass::Extended, {only("n", 3)}}},
                 ladder_total_cut});
    s.push_back({"thm-4-6",
                 "For odd n, H_{n-1}(CL_n) is isomorphic to CL_n and N(CL_n) collapses through the stated free faces to "
                 "a homology circle; for even n, N(H_{n-1}) is two disjoint simplices.",
                 {{"n", 3, 7, 5}},
                 nullptr,
                 {{SizeClass::Smoke, {only("n", 4), only("n", 5)}},
                  {SizeClass::Desk, {only("n", 4), only("n", 5), only("n", 6), only("n", 7)}},
                  {SizeClass::Extended, {only("n", 3)}}},
                 ladder_neighborhood});
    s.push_back({"thm-4-7",
                 "The total k-cut complex of the squared cycle W_{3k+1} has the homology of the 3-sphere.",
                 {{"k", 3, 4, 3}},
                 nullptr,
                 {{SizeClass::Smoke, {only("k", 3)}}, {SizeClass::Desk, {only("k", 3), only("k", 4)}}},
                 squared_cycle_total_cut});
    s.push_back({"thm-4-8",
                 "H_k(W_{3k+1}) is (k+2)-regular on 3k+1 vertices, N(H_k) is (k+1)-dimensional with cyclic window "
                 "facets, and collapsing the window ends leaves a homology circle.",
                 {{"k", 3, 4, 3}},
                 nullptr,
                 {{SizeClass::Smoke, {only("k", 3)}}, {SizeClass::Desk, {only("k", 3), only("k", 4)}}},
                 squared_cycle_neighborhood});
    s.push_back({"ex-4-9",
                 "The total 2-cut complex of the star S_n collapses, while N(KG(n,2)) has the homology of a wedge of "
                 "n^2-3n+1 spheres of dimension n-4.",
                 {{"n", 4, 7, 5}},
                 nullptr,
                 {{SizeClass::Smoke, {only("n", 4), only("n", 5)}},
                  {SizeClass::Desk, {only("n", 4), only("n", 5), only("n", 6)}},
                  {SizeClass::Extended, {only("n", 7)}}},
                 star_example});
    s.push_back({"prop-4-10",
                 "For every graph G and k <= alpha(G), the total k-cut complex is the nerve of the independent-set "
                 "cover of N(H_k(G)); checked on a seeded random-graph corpus.",
                 {{"graphs", 1, 500, 60}},
                 nullptr,
                 {{SizeClass::Smoke, {only("graphs", 10)}},
                  {SizeClass::Desk, {only("graphs", 60)}},
                  {SizeClass::Extended, {only("graphs", 200)}}},
                 general_nerve});
    return s;
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
    static const std::vector<Scenario> registry = build_registry();
    return registry;
}

}  // namespace cutnerve
