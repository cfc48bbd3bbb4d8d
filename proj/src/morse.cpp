#include "cutnerve/morse.hpp"

#include <algorithm>

#include "cutnerve/error.hpp"

namespace cutnerve {

FacePoset::FacePoset(const SimplicialComplex& c, FaceBudget budget) : complex_(c) {
    if (c.is_void()) throw Error(ErrorKind::UndefinedOnVoid, "face poset of the void complex");
    const FaceTable table = enumerate_faces(c, budget);
    for (const auto& level : table.by_dim) {
        dim_start_.push_back(faces_.size());
        faces_.insert(faces_.end(), level.begin(), level.end());
    }
    dim_start_.push_back(faces_.size());
    up_.resize(faces_.size());
    down_.resize(faces_.size());
    for (std::size_t id = 0; id < faces_.size(); ++id) {
        const auto& vs = faces_[id].data();
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            std::vector<int> sub;
            sub.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != skip) sub.push_back(vs[i]);
            const auto lower = id_of(Face::from_sorted(std::move(sub)));
            down_[id].push_back(*lower);
            up_[static_cast<std::size_t>(*lower)].push_back(static_cast<int>(id));
        }
    }
    for (auto& u : up_) std::sort(u.begin(), u.end());
    for (auto& d : down_) std::sort(d.begin(), d.end());
}

std::optional<int> FacePoset::id_of(const Face& f) const {
    const std::size_t level = f.size();
    if (level + 1 >= dim_start_.size()) return std::nullopt;
    auto first = faces_.begin() + static_cast<std::ptrdiff_t>(dim_start_[level]);
    auto last = faces_.begin() + static_cast<std::ptrdiff_t>(dim_start_[level + 1]);
    auto it = std::lower_bound(first, last, f);
    if (it == last || *it != f) return std::nullopt;
    return static_cast<int>(it - faces_.begin());
}

namespace {

std::vector<char> matched_flags(const FacePoset& poset, const Matching& m) {
    std::vector<char> used(poset.size(), 0);
    for (const auto& p : m) {
        const auto lo = poset.id_of(p.lower);
        const auto hi = poset.id_of(p.upper);
        if (!lo || !hi) throw Error(ErrorKind::InvalidMatching, "matched face is not in the complex");
        if (used[static_cast<std::size_t>(*lo)] || used[static_cast<std::size_t>(*hi)])
            throw Error(ErrorKind::InvalidMatching, "face used by two matched pairs");
        if (p.lower.contains(p.vertex) || p.lower.with(p.vertex) != p.upper)
            throw Error(ErrorKind::InvalidMatching, "matched pair is not a covering relation");
        used[static_cast<std::size_t>(*lo)] = used[static_cast<std::size_t>(*hi)] = 1;
    }
    return used;
}

void sort_matching(Matching& m) {
    std::sort(m.begin(), m.end(), [](const MatchedPair& a, const MatchedPair& b) {
        if (a.lower.size() != b.lower.size()) return a.lower.size() < b.lower.size();
        return a.lower < b.lower;
    });
}

}  // namespace

Matching element_matching(const FacePoset& poset, const Matching& existing, int v) {
    const auto& c = poset.complex();
    if (v < 0 || static_cast<std::size_t>(v) >= c.labels().size() || !poset.id_of(Face{v}))
        throw Error(ErrorKind::InvalidParameter, "element matching vertex is not a vertex of the complex");
    auto used = matched_flags(poset, existing);
    Matching out;
    for (std::size_t id = 0; id < poset.size(); ++id) {
        const Face& sigma = poset.face(static_cast<int>(id));
        if (used[id] || sigma.contains(v)) continue;
        const auto hi = poset.id_of(sigma.with(v));
        if (!hi || used[static_cast<std::size_t>(*hi)]) continue;
        used[id] = used[static_cast<std::size_t>(*hi)] = 1;
        out.push_back({sigma, sigma.with(v), v});
    }
    return out;
}

Matching sequential_element_matching(const FacePoset& poset, const std::vector<int>& vertices) {
    Matching m;
    for (int v : vertices) {
        auto inc = element_matching(poset, m, v);
        m.insert(m.end(), inc.begin(), inc.end());
    }
    sort_matching(m);
    return m;
}

AcyclicityCertificate is_acyclic(const FacePoset& poset, const Matching& m) {
    matched_flags(poset, m);
    const std::size_t n = poset.size();
    std::vector<int> partner_up(n, -1);
    for (const auto& p : m) partner_up[static_cast<std::size_t>(*poset.id_of(p.lower))] = *poset.id_of(p.upper);

    // V-path graph on lower faces: α -> α' whenever α' is another facet of α's partner.
    enum : char { White, Grey, Black };
    std::vector<char> colour(n, White);
    AcyclicityCertificate cert;
    for (std::size_t start = 0; start < n; ++start) {
        if (colour[start] != White || partner_up[start] < 0) continue;
        struct Frame {
            int node;
            std::size_t next;
        };
        std::vector<Frame> stack{{static_cast<int>(start), 0}};
        colour[start] = Grey;
        while (!stack.empty()) {
            auto& top = stack.back();
            const int beta = partner_up[static_cast<std::size_t>(top.node)];
            static const std::vector<int> none;
            const auto& out = beta < 0 ? none : poset.down(beta);
            if (top.next >= out.size()) {
                colour[static_cast<std::size_t>(top.node)] = Black;
                stack.pop_back();
                continue;
            }
            const int next = out[top.next++];
            if (next == top.node) continue;
            if (colour[static_cast<std::size_t>(next)] == Grey) {
                auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.node == next; });
                cert.acyclic = false;
                for (; it != stack.end(); ++it) {
                    cert.cycle.push_back(poset.face(it->node));
                    cert.cycle.push_back(poset.face(partner_up[static_cast<std::size_t>(it->node)]));
                }
                cert.cycle.push_back(poset.face(next));
                return cert;
            }
            if (colour[static_cast<std::size_t>(next)] == White) {
                colour[static_cast<std::size_t>(next)] = Grey;
                stack.push_back({next, 0});
            }
        }
    }
    return cert;
}

std::vector<Face> critical_cells(const FacePoset& poset, const Matching& m) {
    if (!is_acyclic(poset, m).acyclic) throw Error(ErrorKind::InvalidMatching, "matching has a closed V-path");
    const auto used = matched_flags(poset, m);
    std::vector<Face> out;
    for (std::size_t id = 1; id < poset.size(); ++id)
        if (!used[id]) out.push_back(poset.face(static_cast<int>(id)));
    return out;
}

bool empty_face_unmatched(const FacePoset& poset, const Matching& m) {
    return !matched_flags(poset, m)[0];
}

std::vector<FreePair> free_faces(const SimplicialComplex& c, FaceBudget budget) {
    if (c.is_void()) return {};
    const FacePoset poset(c, budget);
    std::vector<FreePair> out;
    for (std::size_t id = 1; id < poset.size(); ++id)
        if (poset.up(static_cast<int>(id)).size() == 1)
            out.push_back({poset.face(static_cast<int>(id)), poset.face(poset.up(static_cast<int>(id)).front())});
    return out;
}

namespace {

// Facets of c other than tau, plus the maximal faces of tau that miss part of sigma.
SimplicialComplex remove_interval(const SimplicialComplex& c, const Face& sigma, const Face& tau) {
    std::vector<Face> facets;
    for (const auto& f : c.facets())
        if (f != tau) facets.push_back(f);
    for (int x : sigma.data()) facets.push_back(tau.without(x));
    return SimplicialComplex::from_facets(c.labels(), std::move(facets));
}

void check_facet_interval(const SimplicialComplex& c, const Face& sigma, const Face& tau) {
    if (sigma.empty() || !sigma.is_subset_of(tau) || sigma == tau)
        throw Error(ErrorKind::InvalidCollapse, "collapse needs a nonempty face strictly inside the coface");
    if (!std::binary_search(c.facets().begin(), c.facets().end(), tau))
        throw Error(ErrorKind::InvalidCollapse, "collapse coface is not a facet");
    for (const auto& f : c.facets())
        if (f != tau && sigma.is_subset_of(f))
            throw Error(ErrorKind::InvalidCollapse, "collapse face lies in a second facet");
}

}  // namespace

SimplicialComplex elementary_collapse(const SimplicialComplex& c, const Face& sigma, const Face& tau) {
    if (tau.size() != sigma.size() + 1) throw Error(ErrorKind::InvalidCollapse, "coface must have one more vertex");
    check_facet_interval(c, sigma, tau);
    return remove_interval(c, sigma, tau);
}

SimplicialComplex facet_collapse(const SimplicialComplex& c, const Face& sigma, const Face& tau) {
    check_facet_interval(c, sigma, tau);
    return remove_interval(c, sigma, tau);
}

std::vector<FreePair> facet_collapse_steps(const SimplicialComplex& c, const Face& sigma, const Face& tau) {
    check_facet_interval(c, sigma, tau);
    std::vector<int> rest;
    for (int v : tau.data())
        if (!sigma.contains(v)) rest.push_back(v);
    const int x = rest.front();
    rest.erase(rest.begin());
    // every ρ with σ ⊆ ρ ⊆ τ - x pairs with ρ + x, largest ρ first
    std::vector<Face> rhos;
    const std::size_t r = rest.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        Face rho = sigma;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) rho = rho.with(rest[i]);
        rhos.push_back(std::move(rho));
    }
    std::sort(rhos.begin(), rhos.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<FreePair> steps;
    for (auto& rho : rhos) steps.push_back({rho, rho.with(x)});
    return steps;
}

const char* to_string(CollapseVerdict v) {
    switch (v) {
        case CollapseVerdict::Collapsible: return "collapsible";
        case CollapseVerdict::NotCollapsible: return "not-collapsible";
        case CollapseVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

MulticoneCheck verify_multicone(const std::vector<SimplicialComplex>& chain, const std::vector<std::string>& apexes,
                                FaceBudget budget) {
    if (chain.size() != apexes.size())
        throw Error(ErrorKind::InvalidParameter, "multicone chain and apex list differ in length");
    MulticoneCheck result;
    if (chain.empty()) return result;
    const auto& labels = chain.front().labels();
    std::vector<Face> previous;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].labels() != labels)
            throw Error(ErrorKind::InvalidParameter, "multicone chain members use different ground sets");
        auto current = chain[i].is_void() ? std::vector<Face>{} : all_faces(chain[i], budget);
        if (!std::includes(current.begin(), current.end(), previous.begin(), previous.end()))
            throw Error(ErrorKind::InvalidParameter, "multicone chain is not nested at step " + std::to_string(i + 1));
        std::vector<Face> fresh;
        std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(), std::back_inserter(fresh));
        const auto w = chain[i].index_of(apexes[i]);
        for (const auto& f : fresh) {
            bool ok = false;
            if (w) {
                const Face toggled = f.contains(*w) ? f.without(*w) : f.with(*w);
                ok = std::binary_search(fresh.begin(), fresh.end(), toggled);
            }
            if (!ok && result.holds) {
                result.holds = false;
                result.failed_step = static_cast<int>(i + 1);
                result.failed_face = chain[i].face_labels(f);
                return result;
            }
        }
        previous = std::move(current);
    }
    return result;
}

}  // namespace cutnerve
