// cutnerve command line: scenario verification and single-complex tools.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cutnerve/constructions.hpp"
#include "cutnerve/error.hpp"
#include "cutnerve/homology.hpp"
#include "cutnerve/json_io.hpp"
#include "cutnerve/morse.hpp"
#include "cutnerve/verify.hpp"

using namespace cutnerve;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Parameters parse_params(const std::vector<std::string>& raw) {
    Parameters out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::InvalidParameter, "parameter '" + item + "' is not of the form name=value");
        const std::string name = item.substr(0, eq);
        try {
            std::size_t used = 0;
            const int v = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
            out[name] = v;
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidParameter, "parameter '" + item + "' needs an integer value");
        }
    }
    return out;
}

int param(const Parameters& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw Error(ErrorKind::InvalidParameter, "missing --param " + name + "=...");
    return it->second;
}

Graph make_graph(const std::string& family, const Parameters& p) {
    if (family == "cycle") return cycle(param(p, "n"));
    if (family == "complete") return complete(param(p, "n"));
    if (family == "star") return star(param(p, "n"));
    if (family == "squared-cycle") return squared_cycle(param(p, "n"));
    if (family == "prism") return prism(param(p, "n"));
    if (family == "circular-ladder") return circular_ladder(param(p, "n"));
    if (family == "kneser") return kneser(param(p, "n"), param(p, "k"));
    if (family == "stable-kneser") return stable_kneser(param(p, "n"), param(p, "k"));
    throw Error(ErrorKind::InvalidParameter, "unknown graph family '" + family + "'");
}

void emit(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
    out << j.dump(2) << "\n";
}

void print_report(const Report& r) {
    std::cout << r.scenario;
    for (const auto& [k, v] : r.parameters) std::cout << " " << k << "=" << v;
    std::cout << ": " << to_string(r.verdict()) << "\n";
    for (const auto& c : r.checks) std::cout << "  [" << to_string(c.verdict) << "] " << c.name << ": " << c.detail << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cutnerve: total cut complexes, neighborhood complexes and nerves"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a registered scenario, or all of them");
    std::string scenario_id, json_out, size_class = "desk";
    std::vector<std::string> raw_params;
    bool all = false, timings = false;
    unsigned threads = 0;
    std::uint64_t collapse_budget = kDefaultCollapseBudget;
    verify->add_option("scenario", scenario_id, "scenario id, e.g. thm-1-4");
    verify->add_option("--param", raw_params, "name=value, repeatable");
    verify->add_option("--json", json_out, "write the report JSON here");
    verify->add_flag("--all", all, "run every scenario of the size class");
    verify->add_option("--class", size_class, "smoke, desk or extended");
    verify->add_option("--threads", threads, "worker threads for --all (0 = hardware)");
    verify->add_option("--collapse-budget", collapse_budget, "step budget of collapse searches");
    verify->add_flag("--timings", timings, "record wall-clock seconds in reports");

    auto* build = app.add_subcommand("build", "emit a graph or complex as JSON");
    std::string kind, family, graph_file, build_out;
    build->add_option("kind", kind, "graph, total-cut, neighborhood, induced-neighborhood, nerve or cover")->required();
    build->add_option("--graph", family, "cycle, complete, star, squared-cycle, prism, circular-ladder, kneser, stable-kneser");
    build->add_option("--graph-file", graph_file, "graph JSON instead of a family");
    build->add_option("--param", raw_params, "name=value, repeatable");
    build->add_option("-o,--output", build_out, "output file (default stdout)");

    auto* homology = app.add_subcommand("homology", "reduced integral homology of a complex JSON file");
    std::string complex_file;
    homology->add_option("file", complex_file)->required();

    auto* morse = app.add_subcommand("morse", "sequential element matching on a complex JSON file");
    std::vector<std::string> vertices;
    morse->add_option("file", complex_file)->required();
    morse->add_option("--vertices", vertices, "matching vertices in order")->delimiter(',')->required();

    auto* collapse = app.add_subcommand("collapse", "collapse search, or replay of a witness");
    std::string replay_file, witness_out;
    collapse->add_option("file", complex_file)->required();
    collapse->add_option("--budget", collapse_budget, "step budget");
    collapse->add_option("--replay", replay_file, "witness JSON to replay on the complex");
    collapse->add_option("-o,--output", witness_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            RunOptions options;
            options.timings = timings;
            options.collapse_budget = collapse_budget;
            std::vector<Report> reports;
            if (all) {
                if (!scenario_id.empty() || !raw_params.empty())
                    throw Error(ErrorKind::InvalidParameter, "--all takes no scenario id or parameters");
                reports = run_all(size_class_from_string(size_class), options, threads);
            } else {
                if (scenario_id.empty()) throw Error(ErrorKind::InvalidParameter, "give a scenario id or --all");
                reports.push_back(run_scenario(scenario_id, parse_params(raw_params), options));
            }
            Verdict overall = Verdict::Pass;
            for (const auto& r : reports) {
                print_report(r);
                overall = worst(overall, r.verdict());
            }
            if (!json_out.empty()) {
                if (all) {
                    Json arr = Json::array();
                    for (const auto& r : reports) arr.push_back(to_json(r));
                    emit(arr, json_out);
                } else {
                    emit(to_json(reports.front()), json_out);
                }
            }
            return overall == Verdict::Pass ? 0 : kExitFail;
        }

        if (build->parsed()) {
            const auto p = parse_params(raw_params);
            if (family.empty() == graph_file.empty())
                throw Error(ErrorKind::InvalidParameter, "give exactly one of --graph and --graph-file");
            const Graph g = graph_file.empty() ? make_graph(family, p) : graph_from_json(read_json_file(graph_file));
            Json out;
            if (kind == "graph") out = to_json(g);
            else if (kind == "total-cut") out = to_json(total_cut_complex(g, param(p, "k")));
            else if (kind == "neighborhood") out = to_json(neighborhood_complex(g));
            else if (kind == "induced-neighborhood") out = to_json(neighborhood_complex(induced_k_independent(g, param(p, "k"))));
            else if (kind == "nerve") out = to_json(nerve(independent_cover(g, param(p, "k"))));
            else if (kind == "cover") out = to_json(independent_cover(g, param(p, "k")));
            else throw Error(ErrorKind::InvalidParameter, "unknown build kind '" + kind + "'");
            emit(out, build_out);
            return 0;
        }

        const auto c = complex_from_json(read_json_file(complex_file));

        if (homology->parsed()) {
            emit(to_json(reduced_homology(c)), "");
            return 0;
        }

        if (morse->parsed()) {
            const FacePoset poset(c);
            std::vector<int> order;
            for (const auto& v : vertices) {
                auto id = c.index_of(v);
                if (!id) throw Error(ErrorKind::InvalidParameter, "'" + v + "' is not a vertex label");
                order.push_back(*id);
            }
            const auto m = sequential_element_matching(poset, order);
            const auto cert = is_acyclic(poset, m);
            Json out = {{"pairs", m.size()}, {"acyclic", cert.acyclic}};
            if (cert.acyclic) {
                Json critical = Json::array();
                for (const auto& f : critical_cells(poset, m)) critical.push_back(c.face_labels(f));
                out["critical"] = critical;
                out["empty_face_critical"] = empty_face_unmatched(poset, m);
            } else {
                Json cycle = Json::array();
                for (const auto& f : cert.cycle) cycle.push_back(c.face_labels(f));
                out["cycle"] = cycle;
            }
            emit(out, "");
            return cert.acyclic ? 0 : kExitFail;
        }

        if (collapse->parsed()) {
            if (!replay_file.empty()) {
                const Json w = read_json_file(replay_file);
                const auto terminal = replay_collapse(c, collapse_steps_from_json(w, c));
                Json out = {{"valid", true}, {"steps", w.at("steps").size()}, {"terminal", to_json(terminal)}};
                if (w.contains("terminal")) out["matches_witness_terminal"] = equals_labeled(terminal, complex_from_json(w.at("terminal")));
                emit(out, witness_out);
                return 0;
            }
            const auto w = greedy_collapse(c, collapse_budget);
            emit(to_json(w, c), witness_out);
            return w.verdict == CollapseVerdict::Collapsible ? 0 : kExitFail;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::InvalidCollapse ? kExitFail : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
