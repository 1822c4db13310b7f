#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netrecon/model.hpp"
#include "netrecon/pipeline.hpp"
#include "netrecon/simulate.hpp"

namespace netrecon {

// Line-oriented instance format, # starts a comment:
//   species <name> 0..<hi>
//   state <id> <name>=<value> ...     every species assigned
//   perturb <from> <to>
//   response <from> <to>
//   terminal <id>
ExperimentGraph parse_instance(std::istream& in);
ExperimentGraph parse_instance_file(const std::string& path);

// Canonical text form; parse(write(g)) reproduces g.
void write_instance(std::ostream& out, const ExperimentGraph& g);

// 64-bit FNV-1a over the canonical form, as 16 hex digits. Stable under
// reordering of declarations in the source file.
std::string instance_digest(const ExperimentGraph& g);

// Structure file, same lexical rules:
//   reaction <name> <entry> ...       one entry per species
//   slower <name> <name>              first reaction is the slower one
RegulatoryStructure parse_structure(std::istream& in, const SpeciesTable& table);

// Self-describing document with instance digest, options, bounds,
// extensions, and solutions.
void write_solutions(std::ostream& out, const ExperimentGraph& g, const SolveOptions& opts,
                     const SolveResult& result);

void write_trajectory(std::ostream& out, const ExperimentGraph& g, const RegulatoryStructure& rs,
                      const std::string& start_id, const Trajectory& traj);

void write_validity(std::ostream& out, const ExperimentGraph& g, const ValidityReport& report);

void write_extensions(std::ostream& out, const ExperimentGraph& g,
                      const ExtensionSearchResult& result);

// Bipartite rendering: species as circles, reactions as boxes, an arc from
// species to reaction per negative entry and from reaction to species per
// positive entry, labeled with the magnitude when above one.
void write_dot(std::ostream& out, const RegulatoryStructure& rs, const SpeciesTable& table,
               const std::string& graph_name);

}  // namespace netrecon
