#pragma once

#include <map>
#include <string>
#include <utility>

#include "netrecon/model.hpp"

namespace netrecon {

// Finite search limits. edge_steps is keyed by (source id, target id) and
// caps realizing-sequence length; max_reactions caps reaction-set size.
struct Bounds {
    int max_reactions = 0;
    int max_hidden = 0;
    std::map<std::pair<std::string, std::string>, int> edge_steps;
};

// Total decrease along the edge, plus one unit per prospective hidden
// species. Every step of a realizing sequence consumes at least one unit of
// decrease, so no sequence for the edge can be longer.
int edge_step_bound(const ExperimentGraph& g, const Edge& e, int prospective_hidden = 0);

// Sum of the edge step bounds: a conformal structure cannot hold more
// reactions than the total number of steps available to fire them in.
int global_reaction_bound(const ExperimentGraph& g, int prospective_hidden = 0);

Bounds compute_bounds(const ExperimentGraph& g, int prospective_hidden = 0);

// Sharper limits from probing the instance: per-edge maximum sequence length
// using only steps that keep every terminal quiescent, then the largest
// reaction set any order-free solution actually reaches. Never excludes a
// conformal structure. Requires a valid graph.
Bounds tighten_bounds(const ExperimentGraph& g, const Bounds& start);

}  // namespace netrecon
