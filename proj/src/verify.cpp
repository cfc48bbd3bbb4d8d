#include "cutnerve/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <tuple>

#include "cutnerve/error.hpp"

namespace cutnerve {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "unknown") return Verdict::Unknown;
    throw Error(ErrorKind::Parse, "unknown verdict '" + s + "'");
}

Verdict worst(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
    return Verdict::Pass;
}

const char* to_string(SizeClass c) {
    switch (c) {
        case SizeClass::Smoke: return "smoke";
        case SizeClass::Desk: return "desk";
        case SizeClass::Extended: return "extended";
    }
    return "desk";
}

SizeClass size_class_from_string(const std::string& s) {
    if (s == "smoke") return SizeClass::Smoke;
    if (s == "desk") return SizeClass::Desk;
    if (s == "extended") return SizeClass::Extended;
    throw Error(ErrorKind::InvalidParameter, "size class must be smoke, desk or extended, not '" + s + "'");
}

Verdict Report::verdict() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : checks) v = worst(v, c.verdict);
    return v;
}

Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    Json digests = Json::object();
    for (const auto& [k, v] : r.digests) digests[k] = v;
    Json j = {{"scenario", r.scenario},
              {"parameters", params},
              {"statement", r.statement},
              {"verdict", to_string(r.verdict())},
              {"checks", checks},
              {"notes", r.notes},
              {"digests", digests},
              {"surrogate", r.surrogate}};
    if (r.seconds) j["seconds"] = *r.seconds;
    return j;
}

Report report_from_json(const Json& j) {
    try {
        Report r;
        r.scenario = j.at("scenario").get<std::string>();
        for (const auto& [k, v] : j.at("parameters").items()) r.parameters[k] = v.get<int>();
        r.statement = j.at("statement").get<std::string>();
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(), verdict_from_string(c.at("verdict").get<std::string>()),
                                c.at("detail").get<std::string>()});
        r.notes = j.at("notes").get<std::vector<std::string>>();
        for (const auto& [k, v] : j.at("digests").items()) r.digests[k] = v.get<std::string>();
        r.surrogate = j.at("surrogate").get<std::string>();
        if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
        if (to_string(r.verdict()) != j.at("verdict").get<std::string>())
            throw Error(ErrorKind::Parse, "report verdict does not match its checks");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed report: ") + e.what());
    }
}

const Scenario& find_scenario(const std::string& id) {
    for (const auto& s : scenario_registry())
        if (s.id == id) return s;
    throw Error(ErrorKind::UnknownScenario, "no scenario named '" + id + "'");
}

namespace {

Parameters resolve(const Scenario& s, const Parameters& given) {
    Parameters out;
    for (const auto& [name, value] : given) {
        auto it = std::find_if(s.guards.begin(), s.guards.end(), [&](const ParameterGuard& g) { return g.name == name; });
        if (it == s.guards.end())
            throw Error(ErrorKind::GuardViolation, s.id + " takes no parameter '" + name + "'");
    }
    for (const auto& g : s.guards) {
        auto it = given.find(g.name);
        const int v = it == given.end() ? g.fallback : it->second;
        if (v < g.min || v > g.max)
            throw Error(ErrorKind::GuardViolation, s.id + ": " + g.name + " = " + std::to_string(v) + " outside the limit " +
                                                       std::to_string(g.min) + " <= " + g.name + " <= " + std::to_string(g.max));
        out[g.name] = v;
    }
    if (s.constraint)
        if (auto violated = s.constraint(out)) throw Error(ErrorKind::GuardViolation, s.id + ": requires " + *violated);
    return out;
}

}  // namespace

Report run_scenario(const std::string& id, const Parameters& parameters, const RunOptions& options) {
    const Scenario& s = find_scenario(id);
    Report r;
    r.scenario = s.id;
    r.parameters = resolve(s, parameters);
    r.statement = s.statement;
    r.surrogate =
        "Homotopy-type statements are checked through exact integer homology, plus collapse witnesses where "
        "contractibility is claimed. This is weaker than a homotopy equivalence.";
    const auto start = std::chrono::steady_clock::now();
    s.body(r.parameters, options, r);
    if (options.timings)
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<Report> run_all(SizeClass max_class, const RunOptions& options, unsigned threads) {
    struct Job {
        std::string id;
        Parameters parameters;
    };
    std::vector<Job> jobs;
    for (const auto& s : scenario_registry())
        for (const auto& [cls, sets] : s.runs)
            if (cls <= max_class)
                for (const auto& p : sets) jobs.push_back({s.id, p});
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        return std::tie(a.id, a.parameters) < std::tie(b.id, b.parameters);
    });
    jobs.erase(std::unique(jobs.begin(), jobs.end(),
                           [](const Job& a, const Job& b) { return a.id == b.id && a.parameters == b.parameters; }),
               jobs.end());

    std::vector<Report> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                reports[i] = run_scenario(jobs[i].id, jobs[i].parameters, options);
            } catch (const std::exception& e) {
                Report r;
                r.scenario = jobs[i].id;
                r.parameters = jobs[i].parameters;
                r.statement = find_scenario(jobs[i].id).statement;
                r.checks.push_back({"completed", Verdict::Fail, e.what()});
                reports[i] = std::move(r);
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw Error(ErrorKind::InvalidParameter, "random graph needs n >= 0");
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // 53 random bits as a double in [0, 1), independent of the library's distributions
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    return Graph(std::move(labels), edges);
}

std::vector<CorpusEntry> random_graph_corpus(int count) {
    std::vector<CorpusEntry> out;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        const int n = 5 + i % 5;
        const double p = (i / 5) % 2 ? 0.5 : 0.3;
        out.push_back({seed, p, random_graph(n, p, seed)});
    }
    return out;
}

}  // namespace cutnerve
