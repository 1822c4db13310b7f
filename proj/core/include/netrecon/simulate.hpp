#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/model.hpp"

namespace netrecon {

enum class RunOutcome { ReachedFixpoint, NondeterministicStall, CycleDetected, StepLimit };

std::string to_string(RunOutcome o);

struct Trajectory {
    std::vector<StateVector> states;  // starts at x0
    std::vector<std::size_t> fired;   // |fired| = |states| - 1
    RunOutcome outcome = RunOutcome::ReachedFixpoint;
};

// Fires the unique fastest enabled reaction until none is enabled, the
// fastest one is ambiguous, a state repeats, or max_steps run out.
// max_steps < 0 selects the state-space size.
Trajectory run(const RegulatoryStructure& rs, const StateVector& x0, const SpeciesTable& table,
               long long max_steps = -1);

// Conformality verdicts, checked independently of the search engine:
// terminals must enable no reaction, every response edge must be realized by
// the simulated fastest-reaction run within the edge step bound with every
// fired reaction monotone for the edge, and no reaction may stay unused.
struct ConformalityReport {
    std::vector<std::pair<std::string, std::size_t>> terminal_enabled;  // (state id, reaction)
    std::vector<std::pair<std::string, std::string>> edge_failures;
    std::vector<std::size_t> unused_reactions;

    bool conformal() const {
        return terminal_enabled.empty() && edge_failures.empty() && unused_reactions.empty();
    }
};

ConformalityReport check_conformal(const RegulatoryStructure& rs, const ExperimentGraph& g);

}  // namespace netrecon
