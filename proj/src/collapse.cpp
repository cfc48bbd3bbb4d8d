// Collapse search on an indexed face store.

#include <random>
#include <set>
#include <unordered_set>

#include "cutnerve/error.hpp"
#include "cutnerve/morse.hpp"

namespace cutnerve {

namespace {

class CollapseState {
public:
    explicit CollapseState(const FacePoset& poset) : poset_(poset), alive_(poset.size(), 1), cofaces_(poset.size()) {
        std::mt19937_64 rng(0x5eed);
        keys_.resize(poset.size());
        for (auto& k : keys_) k = rng();
        for (std::size_t id = 0; id < poset.size(); ++id) {
            cofaces_[id] = static_cast<int>(poset.up(static_cast<int>(id)).size());
            refresh(static_cast<int>(id));
        }
        remaining_ = poset.size() - 1;
    }

    const std::set<int>& free() const { return free_; }
    std::size_t remaining() const { return remaining_; }
    std::uint64_t hash() const { return hash_; }
    bool alive(int id) const { return alive_[static_cast<std::size_t>(id)] != 0; }
    const std::vector<std::pair<int, int>>& history() const { return history_; }

    bool is_free(int id) const { return id != 0 && alive(id) && cofaces_[static_cast<std::size_t>(id)] == 1; }

    int coface(int sigma) const {
        for (int t : poset_.up(sigma))
            if (alive(t)) return t;
        return -1;
    }

    void apply(int sigma) {
        const int tau = coface(sigma);
        kill(tau);
        kill(sigma);
        for (int r : poset_.down(tau)) adjust(r, -1);
        for (int r : poset_.down(sigma)) adjust(r, -1);
        history_.emplace_back(sigma, tau);
    }

    void undo() {
        const auto [sigma, tau] = history_.back();
        history_.pop_back();
        for (int r : poset_.down(sigma)) adjust(r, +1);
        for (int r : poset_.down(tau)) adjust(r, +1);
        revive(sigma);
        revive(tau);
    }

    SimplicialComplex complex() const {
        std::vector<Face> facets;
        for (std::size_t id = 0; id < poset_.size(); ++id)
            if (alive_[id] && cofaces_[id] == 0) facets.push_back(poset_.face(static_cast<int>(id)));
        return SimplicialComplex::from_facets(poset_.complex().labels(), std::move(facets));
    }

    std::vector<FreePair> steps() const {
        std::vector<FreePair> out;
        for (auto [s, t] : history_) out.push_back({poset_.face(s), poset_.face(t)});
        return out;
    }

private:
    void refresh(int id) {
        if (is_free(id)) free_.insert(id);
        else free_.erase(id);
    }
    void adjust(int id, int delta) {
        cofaces_[static_cast<std::size_t>(id)] += delta;
        refresh(id);
    }
    void kill(int id) {
        alive_[static_cast<std::size_t>(id)] = 0;
        hash_ ^= keys_[static_cast<std::size_t>(id)];
        --remaining_;
        free_.erase(id);
    }
    void revive(int id) {
        alive_[static_cast<std::size_t>(id)] = 1;
        hash_ ^= keys_[static_cast<std::size_t>(id)];
        ++remaining_;
        refresh(id);
    }

    const FacePoset& poset_;
    std::vector<char> alive_;
    std::vector<int> cofaces_;
    std::vector<std::uint64_t> keys_;
    std::set<int> free_;
    std::vector<std::pair<int, int>> history_;
    std::size_t remaining_ = 0;
    std::uint64_t hash_ = 0;
};

}  // namespace

CollapseWitness greedy_collapse(const SimplicialComplex& c, std::uint64_t step_budget, FaceBudget budget) {
    if (c.is_void()) throw Error(ErrorKind::UndefinedOnVoid, "collapse search on the void complex");
    const FacePoset poset(c, budget);
    CollapseState state(poset);

    std::int64_t chi = 0;
    for (std::size_t id = 0; id < poset.size(); ++id) chi += (poset.face(static_cast<int>(id)).size() % 2) ? 1 : -1;
    // a collapsible complex has the reduced Euler characteristic of a point
    const bool hopeless = chi != 0;

    CollapseWitness w;
    bool have_dead_end = false;
    std::unordered_set<std::uint64_t> failed;
    int resume_after = -1;
    while (true) {
        if (state.remaining() == 1) {
            w.steps = state.steps();
            w.terminal = state.complex();
            w.verdict = CollapseVerdict::Collapsible;
            return w;
        }
        const auto& free = state.free();
        auto it = resume_after < 0 ? free.begin() : free.upper_bound(resume_after);
        if (it == free.end()) {
            if (!have_dead_end) {
                have_dead_end = true;
                w.steps = state.steps();
                w.terminal = state.complex();
                if (hopeless) {
                    w.verdict = CollapseVerdict::NotCollapsible;
                    return w;
                }
            }
            failed.insert(state.hash());
            if (state.history().empty()) {
                w.verdict = CollapseVerdict::NotCollapsible;
                return w;
            }
            resume_after = state.history().back().first;
            state.undo();
            continue;
        }
        const int sigma = *it;
        if (++w.search_steps > step_budget) {
            if (!have_dead_end) {
                w.steps = state.steps();
                w.terminal = state.complex();
            }
            w.verdict = CollapseVerdict::Unknown;
            return w;
        }
        state.apply(sigma);
        if (failed.count(state.hash())) {
            state.undo();
            resume_after = sigma;
            continue;
        }
        resume_after = -1;
    }
}

SimplicialComplex replay_collapse(const SimplicialComplex& c, const std::vector<FreePair>& steps) {
    if (steps.empty()) return c;
    if (c.is_void()) throw Error(ErrorKind::InvalidCollapse, "cannot collapse the void complex");
    const FacePoset poset(c);
    CollapseState state(poset);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto sigma = poset.id_of(steps[i].sigma);
        const auto tau = poset.id_of(steps[i].tau);
        const std::string where = "collapse step " + std::to_string(i + 1);
        if (!sigma || !tau || !state.alive(*sigma) || !state.alive(*tau))
            throw Error(ErrorKind::InvalidCollapse, where + " uses a face that is not present");
        if (!state.is_free(*sigma) || state.coface(*sigma) != *tau)
            throw Error(ErrorKind::InvalidCollapse, where + " is not a free pair");
        state.apply(*sigma);
    }
    return state.complex();
}

}  // namespace cutnerve
