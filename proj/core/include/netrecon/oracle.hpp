#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "netrecon/extension.hpp"
#include "netrecon/model.hpp"

namespace netrecon {

// Reaction-vector families conformal with g, by exhaustive enumeration of
// candidate subsets, per-edge sequences, and order assignments. Independent
// of the search engine; desk-scale instances only, guarded by max_combos.
// max_steps < 0 leaves sequence length to its natural limit.
std::set<std::set<std::vector<int>>> brute_structures(const ExperimentGraph& g, int max_reactions,
                                                      long long max_steps = -1,
                                                      long long max_combos = 1000000);

// Same optimum as minimal_valid_extensions, by exhaustive enumeration of all
// hidden assignments per species count: every returned extension is raw, no
// symmetry filtering. |states| * a_max is limited to 20 binary cells.
ExtensionSearchResult brute_minimal_extensions(const ExperimentGraph& g, std::size_t a_max);

}  // namespace netrecon
