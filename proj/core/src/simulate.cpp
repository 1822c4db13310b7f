#include "netrecon/simulate.hpp"

#include <set>

#include "netrecon/bounds.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/validity.hpp"

namespace netrecon {

std::string to_string(RunOutcome o) {
    switch (o) {
        case RunOutcome::ReachedFixpoint: return "reached-fixpoint";
        case RunOutcome::NondeterministicStall: return "nondeterministic-stall";
        case RunOutcome::CycleDetected: return "cycle-detected";
        case RunOutcome::StepLimit: return "step-limit";
    }
    return "unknown";
}

Trajectory run(const RegulatoryStructure& rs, const StateVector& x0, const SpeciesTable& table,
               long long max_steps) {
    if (!table.in_range(x0)) throw ModelError("start state out of capacity range");
    if (max_steps < 0) max_steps = table.state_space_size();

    Trajectory t;
    t.states.push_back(x0);
    std::set<StateVector> visited{x0};
    for (long long step = 0;; ++step) {
        const StateVector& y = t.states.back();
        auto en = rs.enabled_set(y, table);
        if (en.empty()) {
            t.outcome = RunOutcome::ReachedFixpoint;
            return t;
        }
        std::size_t fastest = en.size();
        for (std::size_t i = 0; i < en.size() && fastest == en.size(); ++i) {
            bool least = true;
            for (std::size_t q : en)
                if (q != en[i] && !rs.is_slower(q, en[i])) {
                    least = false;
                    break;
                }
            if (least) fastest = i;
        }
        if (fastest == en.size()) {
            t.outcome = RunOutcome::NondeterministicStall;
            return t;
        }
        if (step >= max_steps) {
            t.outcome = RunOutcome::StepLimit;
            return t;
        }
        std::size_t r = en[fastest];
        StateVector next = netrecon::apply(rs.reactions()[r], y);
        t.fired.push_back(r);
        t.states.push_back(next);
        if (!visited.insert(next).second) {
            t.outcome = RunOutcome::CycleDetected;
            return t;
        }
    }
}

ConformalityReport check_conformal(const RegulatoryStructure& rs, const ExperimentGraph& g) {
    if (!validate(g).is_valid()) throw ModelError("graph is not valid");
    const SpeciesTable& table = g.species();
    ConformalityReport rep;

    for (std::size_t t : g.terminals())
        for (std::size_t i : rs.enabled_set(g.state(t).values, table))
            rep.terminal_enabled.emplace_back(g.state(t).id, i);

    std::set<std::size_t> used;
    for (const Edge& e : g.sorted_response_edges()) {
        const StateVector& x = g.state(e.first).values;
        const StateVector& target = g.state(e.second).values;
        Trajectory tr = run(rs, x, table, edge_step_bound(g, e));

        std::size_t hit = tr.states.size();
        for (std::size_t i = 1; i < tr.states.size() && hit == tr.states.size(); ++i)
            if (tr.states[i] == target) hit = i;

        bool ok = hit < tr.states.size();
        for (std::size_t i = 0; ok && i < hit; ++i)
            if (!monotone_ok(rs.reactions()[tr.fired[i]], x, target)) ok = false;

        if (!ok) {
            rep.edge_failures.emplace_back(g.state(e.first).id, g.state(e.second).id);
        } else {
            for (std::size_t i = 0; i < hit; ++i) used.insert(tr.fired[i]);
        }
    }

    for (std::size_t i = 0; i < rs.reactions().size(); ++i)
        if (!used.count(i)) rep.unused_reactions.push_back(i);
    return rep;
}

}  // namespace netrecon
