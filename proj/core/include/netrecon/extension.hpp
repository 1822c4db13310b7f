#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "netrecon/model.hpp"
#include "netrecon/validity.hpp"

namespace netrecon {

// Binary hidden values appended to every state, keyed by state id. All
// vectors share length hidden_count.
struct Extension {
    std::size_t hidden_count = 0;
    std::map<std::string, std::vector<int>> assignment;

    friend bool operator==(const Extension&, const Extension&) = default;
    friend auto operator<=>(const Extension&, const Extension&) = default;
};

ExperimentGraph extend(const ExperimentGraph& g, const Extension& e);

// Response-source states at which some hidden value changes.
int change_count(const ExperimentGraph& g, const Extension& e);

// Hidden values must be constant across perturbation edges and the extended
// graph must pass validate(). The report describes the extended graph; when
// the perturbation rule already fails the report stays empty.
std::pair<bool, ValidityReport> is_valid_extension(const ExperimentGraph& g, const Extension& e);

// Groups of states connected by perturbation edges; hidden values are
// assigned per group. Singleton groups included, members ascending.
std::vector<std::vector<std::size_t>> perturbation_components(const ExperimentGraph& g);

// Hidden columns are ordered by their change pattern over the global
// response-edge order: a decrease ranks before an increase, which ranks
// before no change; ties fall back to the raw column values in state order.
// Exactly one column permutation per orbit passes.
bool canonical_hidden(const ExperimentGraph& g, const Extension& e);

// The member of e's column-permutation orbit that passes canonical_hidden.
Extension canonicalize_hidden(const ExperimentGraph& g, const Extension& e);

struct ExtensionSearchResult {
    bool feasible = false;
    std::size_t hidden_count = 0;
    int change_count = 0;
    std::vector<Extension> extensions;
};

// Least hidden-species count, then least change count, over extensions that
// make g valid and leave it reconstructible (at least one conformal
// regulatory structure exists). Returns every canonical extension at that
// optimum; an already-reconstructible valid graph yields the empty extension.
// Gives up past max_hidden species and reports infeasible.
ExtensionSearchResult minimal_valid_extensions(const ExperimentGraph& g,
                                               std::size_t max_hidden = 4);

}  // namespace netrecon
