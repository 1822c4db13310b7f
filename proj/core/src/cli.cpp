#include "netrecon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "netrecon/io.hpp"
#include "netrecon/oracle.hpp"
#include "netrecon/pipeline.hpp"
#include "netrecon/simulate.hpp"

namespace netrecon {

namespace {

int do_validate(const std::string& path, std::ostream& out) {
    ExperimentGraph g = parse_instance_file(path);
    ValidityReport report = validate(g);
    write_validity(out, g, report);
    return report.is_valid() ? 0 : 1;
}

int do_extend(const std::string& path, std::size_t max_hidden, std::ostream& out) {
    ExperimentGraph g = parse_instance_file(path);
    ExtensionSearchResult result = minimal_valid_extensions(g, max_hidden);
    write_extensions(out, g, result);
    return 0;
}

int do_solve(const std::string& path, const SolveOptions& opts, std::ostream& out) {
    ExperimentGraph g = parse_instance_file(path);
    SolveResult result = solve_instance(g, opts);
    write_solutions(out, g, opts, result);
    return 0;
}

int do_simulate(const std::string& instance_path, const std::string& structure_path,
                const std::string& state_id, std::ostream& out) {
    ExperimentGraph g = parse_instance_file(instance_path);
    std::ifstream in(structure_path);
    if (!in) throw ParseError("cannot open " + structure_path);
    RegulatoryStructure rs = parse_structure(in, g.species());
    std::size_t start = g.state_index(state_id);
    Trajectory traj = run(rs, g.state(start).values, g.species());
    write_trajectory(out, g, rs, state_id, traj);
    return 0;
}

int do_export(const std::string& solutions_path, std::ostream& out) {
    std::ifstream in(solutions_path);
    if (!in) throw ParseError("cannot open " + solutions_path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("not a solutions document: ") + e.what());
    }

    try {
        std::vector<std::string> names;
        std::vector<int> maxima;
        for (const auto& sp : doc.at("instance").at("species")) {
            names.push_back(sp.at("name").get<std::string>());
            maxima.push_back(sp.at("max").get<int>());
        }
        SpeciesTable observed = SpeciesTable::observed(names, maxima);

        std::size_t ei = 0;
        for (const auto& per : doc.at("results")) {
            ++ei;
            std::size_t hidden = per.at("extension").at("hidden").get<std::size_t>();
            SpeciesTable table = observed.with_hidden(hidden);
            std::size_t si = 0;
            for (const auto& sol : per.at("solutions")) {
                ++si;
                std::vector<Reaction> reactions;
                for (const auto& vec : sol.at("reactions"))
                    reactions.push_back(Reaction::create(vec.get<std::vector<int>>(), table));
                std::set<std::pair<std::size_t, std::size_t>> slower;
                for (const auto& pair : sol.at("slower"))
                    slower.emplace(pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>());
                RegulatoryStructure rs = RegulatoryStructure::create(std::move(reactions), slower);
                write_dot(out, rs, table,
                          "s" + std::to_string(ei) + "_" + std::to_string(si));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("not a solutions document: ") + e.what());
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reaction network reconstruction from perturbation experiments"};
    app.name("netrecon");
    app.require_subcommand(1);

    std::string instance_path;
    std::string structure_path;
    std::string state_id;
    std::string solutions_path;
    SolveOptions opts;
    std::size_t extend_hidden = 4;
    bool no_project = false;
    bool dot = false;

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check an instance");
    validate_cmd->add_option("file", instance_path, "Instance file")->required();

    CLI::App* extend_cmd = app.add_subcommand("extend", "Find minimal hidden-species extensions");
    extend_cmd->add_option("file", instance_path, "Instance file")->required();
    extend_cmd->add_option("--max-hidden", extend_hidden, "Hidden species limit");

    CLI::App* solve_cmd = app.add_subcommand("solve", "Enumerate conformal structures");
    solve_cmd->add_option("file", instance_path, "Instance file")->required();
    solve_cmd->add_flag("--no-project", no_project,
                        "Keep one solution per (reactions, order) pair");
    solve_cmd->add_flag("--tighten", opts.tighten, "Probe for sharper search bounds");
    solve_cmd->add_option("--max-hidden", opts.max_hidden, "Hidden species limit");
    solve_cmd->add_option("--workers", opts.workers, "Worker threads");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Run a structure from a state");
    simulate_cmd->add_option("file", instance_path, "Instance file")->required();
    simulate_cmd->add_option("structure", structure_path, "Structure file")->required();
    simulate_cmd->add_option("state", state_id, "Start state id")->required();

    CLI::App* export_cmd = app.add_subcommand("export", "Render solutions");
    export_cmd->add_option("solutions", solutions_path, "Solutions document")->required();
    export_cmd->add_flag("--dot", dot, "Graphviz output")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) return do_validate(instance_path, out);
        if (*extend_cmd) return do_extend(instance_path, extend_hidden, out);
        if (*solve_cmd) {
            opts.project = !no_project;
            return do_solve(instance_path, opts, out);
        }
        if (*simulate_cmd) return do_simulate(instance_path, structure_path, state_id, out);
        if (*export_cmd) return do_export(solutions_path, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace netrecon
