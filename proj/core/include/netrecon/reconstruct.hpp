#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "netrecon/bounds.hpp"
#include "netrecon/model.hpp"

namespace netrecon {

struct SearchConfig {
    Bounds bounds;
    // Order-free relaxation when false: any enabled monotone reaction may
    // fire and no slower pairs are recorded. Used for bound tightening.
    bool check_order = true;
    // One solution per distinct reaction set, first witness order kept.
    bool project_on_reactions = true;
    // One solution per distinct (reaction set, forced order) pair.
    // Mutually exclusive with projection.
    bool enumerate_all_orders = false;
};

struct Realization {
    Edge edge;
    std::vector<std::size_t> fired;  // reaction indices in firing order
};

// realizations follow the global response-edge order (source id, target id).
// structure.slower_pairs() holds exactly what the realizations force: at
// every step, each other enabled reaction sits slower than the fired one.
struct Solution {
    RegulatoryStructure structure;
    std::vector<Realization> realizations;
};

// y1 = x, y(i+1) = apply(seq[i], y(i)). Empty when some step is disabled;
// that is a pruning signal, not a fault.
std::optional<std::vector<StateVector>> intermediate_states(const StateVector& x,
                                                            const std::vector<Reaction>& seq,
                                                            const SpeciesTable& table);

// r may take part in realizing (x, x_target): entries sign-match the edge
// difference and vanish on species the edge leaves unchanged.
bool monotone_ok(const Reaction& r, const StateVector& x, const StateVector& x_target);

std::vector<std::size_t> enabled_set(const std::vector<Reaction>& reactions, const StateVector& y,
                                     const SpeciesTable& table);

bool canonical_reactions(const std::vector<Reaction>& rs);

// Change vectors usable as one sequence step while `remaining` still
// separates the current state from the edge target: sign-matching, never
// overshooting, consuming at least one unit of decrease. Ascending order.
std::vector<std::vector<int>> monotone_step_vectors(const std::vector<int>& remaining,
                                                    const SpeciesTable& table);

struct SearchStats {
    long long nodes = 0;
    long long solutions = 0;
};

using SolutionCallback = std::function<bool(const Solution&)>;

// Every regulatory structure conformal with g within cfg.bounds: no reaction
// enabled in any terminal, every response edge realized by a sequence firing
// the unique fastest enabled reaction at each step, every reaction fired
// somewhere. Reactions arrive canonically sorted. Callback returns false to
// stop the search early. Requires a valid graph.
SearchStats enumerate_structures(const ExperimentGraph& g, const SearchConfig& cfg,
                                 const SolutionCallback& cb);

std::vector<Solution> enumerate_structures_all(const ExperimentGraph& g, const SearchConfig& cfg);

}  // namespace netrecon
