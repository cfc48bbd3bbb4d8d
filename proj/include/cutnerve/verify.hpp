#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutnerve/complex.hpp"
#include "cutnerve/json_io.hpp"
#include "cutnerve/morse.hpp"

namespace cutnerve {

enum class Verdict { Pass, Fail, Unknown };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);
/// Fail beats Unknown beats Pass.
Verdict worst(Verdict a, Verdict b);

using Parameters = std::map<std::string, int>;

enum class SizeClass { Smoke, Desk, Extended };

const char* to_string(SizeClass c);
/// Throws InvalidParameter for anything but smoke, desk or extended.
SizeClass size_class_from_string(const std::string& s);

struct Check {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

struct Report {
    std::string scenario;
    Parameters parameters;
    std::string statement;
    std::vector<Check> checks;
    /// Observations that are not verdicts (raw-nerve comparison and the like).
    std::vector<std::string> notes;
    /// Canonical digests of the complexes the checks were run on.
    std::map<std::string, std::string> digests;
    std::string surrogate;
    std::optional<double> seconds;

    Verdict verdict() const;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

struct RunOptions {
    FaceBudget face_budget = default_face_budget();
    std::uint64_t collapse_budget = kDefaultCollapseBudget;
    bool timings = false;
};

/// Inclusive bounds for one integer parameter.
struct ParameterGuard {
    std::string name;
    int min = 0;
    int max = 0;
    int fallback = 0;
};

struct Scenario {
    std::string id;
    std::string statement;
    std::vector<ParameterGuard> guards;
    /// Extra condition across parameters; returns the violated limit, if any.
    std::function<std::optional<std::string>(const Parameters&)> constraint;
    /// Parameter sets run by run_all; each class includes the smaller ones.
    std::map<SizeClass, std::vector<Parameters>> runs;
    std::function<void(const Parameters&, const RunOptions&, Report&)> body;
};

const std::vector<Scenario>& scenario_registry();
const Scenario& find_scenario(const std::string& id);

/// Missing parameters take the guard's fallback value. Throws UnknownScenario
/// or GuardViolation (naming the limit) before any work is done.
Report run_scenario(const std::string& id, const Parameters& parameters, const RunOptions& options = {});

/// Every registered parameter set up to the class, run on `threads` workers.
/// Reports are sorted by (id, parameters).
std::vector<Report> run_all(SizeClass max_class, const RunOptions& options = {}, unsigned threads = 0);

/// Random graph on n vertices labelled "1".."n": each pair is an edge with
/// probability p, decided by mt19937_64 seeded with `seed`.
Graph random_graph(int n, double p, std::uint64_t seed);

struct CorpusEntry {
    std::uint64_t seed;
    double p;
    Graph graph;
};

/// Seeded random graphs with 5..9 vertices and edge probability 0.3 or 0.5.
std::vector<CorpusEntry> random_graph_corpus(int count);

}  // namespace cutnerve
