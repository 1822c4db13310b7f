#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/model.hpp"

namespace netrecon {

// Findings for one experiment graph, listed by state id. A graph is usable
// for reconstruction when the first three lists are empty:
//   - every state has at most one outgoing response edge,
//   - value-equal states settle in value-equal terminals,
//   - every response edge strictly decreases some species.
// Dangling states (response chain never reaches a terminal) are reported
// but do not make the graph unusable.
struct ValidityReport {
    std::vector<std::string> multiple_response_states;
    std::vector<std::pair<std::string, std::string>> equal_terminal_violations;
    std::vector<std::pair<std::string, std::string>> nondecreasing_edges;
    std::vector<std::string> dangling_states;

    bool is_valid() const {
        return multiple_response_states.empty() && equal_terminal_violations.empty() &&
               nondecreasing_edges.empty();
    }
};

ValidityReport validate(const ExperimentGraph& g);

// Maps each state to the terminal its response chain settles in. Terminals
// map to themselves. States whose chain never reaches a terminal are absent.
// Requires at most one outgoing response edge per state.
std::map<std::size_t, std::size_t> terminal_map(const ExperimentGraph& g);

}  // namespace netrecon
