#include <json.hpp>

#include "netrecon/io.hpp"

namespace netrecon {

namespace {

using nlohmann::ordered_json;

ordered_json instance_meta(const ExperimentGraph& g) {
    ordered_json species = ordered_json::array();
    for (std::size_t k = 0; k < g.species().size(); ++k)
        species.push_back({{"name", g.species().name(k)}, {"max", g.species().max_value(k)}});
    return ordered_json{{"digest", instance_digest(g)},
                        {"species", std::move(species)},
                        {"states", g.state_count()},
                        {"perturbations", g.perturbation_edges().size()},
                        {"responses", g.response_edges().size()},
                        {"terminals", g.terminals().size()}};
}

ordered_json id_pairs(const ExperimentGraph& g,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    ordered_json out = ordered_json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

ordered_json extension_json(const Extension& e) {
    ordered_json assignment = ordered_json::object();
    for (const auto& [id, values] : e.assignment) assignment[id] = values;
    return ordered_json{{"hidden", e.hidden_count}, {"assignment", std::move(assignment)}};
}

ordered_json bounds_json(const Bounds& b) {
    ordered_json edges = ordered_json::array();
    for (const auto& [key, steps] : b.edge_steps)
        edges.push_back({{"edge", {key.first, key.second}}, {"steps", steps}});
    return ordered_json{{"max_reactions", b.max_reactions}, {"edge_steps", std::move(edges)}};
}

ordered_json solution_json(const ExperimentGraph& g, const Solution& s) {
    ordered_json reactions = ordered_json::array();
    for (const Reaction& r : s.structure.reactions()) reactions.push_back(r.delta());
    ordered_json slower = ordered_json::array();
    for (const auto& [a, b] : s.structure.slower_pairs()) slower.push_back({a, b});
    ordered_json realizations = ordered_json::array();
    for (const Realization& re : s.realizations)
        realizations.push_back({{"edge", {g.state(re.edge.first).id, g.state(re.edge.second).id}},
                                {"fired", re.fired}});
    return ordered_json{{"reactions", std::move(reactions)},
                        {"slower", std::move(slower)},
                        {"realizations", std::move(realizations)}};
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

void write_validity(std::ostream& out, const ExperimentGraph& g, const ValidityReport& report) {
    ordered_json doc{{"format_version", 1},
                     {"command", "validate"},
                     {"instance", instance_meta(g)},
                     {"valid", report.is_valid()},
                     {"report",
                      {{"multiple_response_states", report.multiple_response_states},
                       {"equal_terminal_violations", id_pairs(g, report.equal_terminal_violations)},
                       {"nondecreasing_edges", id_pairs(g, report.nondecreasing_edges)},
                       {"dangling_states", report.dangling_states}}}};
    emit(out, doc);
}

void write_extensions(std::ostream& out, const ExperimentGraph& g,
                      const ExtensionSearchResult& result) {
    ordered_json extensions = ordered_json::array();
    for (const Extension& e : result.extensions) extensions.push_back(extension_json(e));
    ordered_json doc{{"format_version", 1},
                     {"command", "extend"},
                     {"instance", instance_meta(g)},
                     {"feasible", result.feasible},
                     {"hidden_count", result.hidden_count},
                     {"change_count", result.change_count},
                     {"extensions", std::move(extensions)}};
    emit(out, doc);
}

void write_solutions(std::ostream& out, const ExperimentGraph& g, const SolveOptions& opts,
                     const SolveResult& result) {
    ordered_json results = ordered_json::array();
    std::size_t total = 0;
    for (const auto& per : result.results) {
        ordered_json solutions = ordered_json::array();
        for (const Solution& s : per.solutions) solutions.push_back(solution_json(g, s));
        total += per.solutions.size();
        results.push_back({{"extension", extension_json(per.extension)},
                           {"bounds", bounds_json(per.bounds)},
                           {"solutions", std::move(solutions)},
                           {"solution_count", per.solutions.size()}});
    }
    ordered_json doc{{"format_version", 1},
                     {"command", "solve"},
                     {"instance", instance_meta(g)},
                     {"options",
                      {{"project", opts.project},
                       {"tighten", opts.tighten},
                       {"max_hidden", opts.max_hidden}}},
                     {"valid", result.validity.is_valid()},
                     {"feasible", result.extensions.feasible},
                     {"hidden_count", result.extensions.hidden_count},
                     {"change_count", result.extensions.change_count},
                     {"results", std::move(results)},
                     {"total_solutions", total}};
    emit(out, doc);
}

void write_trajectory(std::ostream& out, const ExperimentGraph& g, const RegulatoryStructure& rs,
                      const std::string& start_id, const Trajectory& traj) {
    ordered_json reactions = ordered_json::array();
    for (const Reaction& r : rs.reactions()) reactions.push_back(r.delta());
    ordered_json slower = ordered_json::array();
    for (const auto& [a, b] : rs.slower_pairs()) slower.push_back({a, b});
    ordered_json states = ordered_json::array();
    for (const StateVector& x : traj.states) states.push_back(x);
    ordered_json doc{{"format_version", 1},
                     {"command", "simulate"},
                     {"instance", instance_meta(g)},
                     {"start", start_id},
                     {"reactions", std::move(reactions)},
                     {"slower", std::move(slower)},
                     {"trajectory",
                      {{"states", std::move(states)},
                       {"fired", traj.fired},
                       {"outcome", to_string(traj.outcome)}}},
                     {"steps", traj.fired.size()}};
    emit(out, doc);
}

void write_dot(std::ostream& out, const RegulatoryStructure& rs, const SpeciesTable& table,
               const std::string& graph_name) {
    out << "digraph \"" << graph_name << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];";
    for (std::size_t k = 0; k < table.size(); ++k) out << " \"" << table.name(k) << "\";";
    out << "\n";
    out << "  node [shape=box];";
    for (std::size_t i = 0; i < rs.reactions().size(); ++i)
        out << " \"r" << i + 1 << "\";";
    out << "\n";
    for (std::size_t i = 0; i < rs.reactions().size(); ++i) {
        const Reaction& r = rs.reactions()[i];
        for (std::size_t k = 0; k < table.size(); ++k) {
            if (r[k] == 0) continue;
            if (r[k] < 0) {
                out << "  \"" << table.name(k) << "\" -> \"r" << i + 1 << "\"";
                if (r[k] < -1) out << " [label=\"" << -r[k] << "\"]";
            } else {
                out << "  \"r" << i + 1 << "\" -> \"" << table.name(k) << "\"";
                if (r[k] > 1) out << " [label=\"" << r[k] << "\"]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
}

}  // namespace netrecon
