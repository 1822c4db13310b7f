#include "netrecon/bounds.hpp"

#include <algorithm>

#include "netrecon/reconstruct.hpp"

namespace netrecon {

int edge_step_bound(const ExperimentGraph& g, const Edge& e, int prospective_hidden) {
    const auto& edges = g.response_edges();
    if (std::find(edges.begin(), edges.end(), e) == edges.end())
        throw ModelError("not a response edge");
    int total = prospective_hidden;
    const auto& src = g.state(e.first).values;
    const auto& tgt = g.state(e.second).values;
    for (std::size_t k = 0; k < src.size(); ++k)
        if (tgt[k] < src[k]) total += src[k] - tgt[k];
    return total;
}

int global_reaction_bound(const ExperimentGraph& g, int prospective_hidden) {
    int sum = 0;
    for (const Edge& e : g.response_edges()) sum += edge_step_bound(g, e, prospective_hidden);
    return sum;
}

Bounds compute_bounds(const ExperimentGraph& g, int prospective_hidden) {
    Bounds b;
    b.max_hidden = prospective_hidden;
    for (const Edge& e : g.sorted_response_edges()) {
        int steps = edge_step_bound(g, e, prospective_hidden);
        b.edge_steps[{g.state(e.first).id, g.state(e.second).id}] = steps;
        b.max_reactions += steps;
    }
    return b;
}

namespace {

// Longest step count over monotone sequences from y to target whose every
// step stays disabled at all terminals. -1 when the target is unreachable.
int longest_realization(const SpeciesTable& table, const StateVector& y, const StateVector& target,
                        const std::vector<StateVector>& terminal_values, int budget) {
    if (y == target) return 0;
    if (budget <= 0) return -1;
    int best = -1;
    for (const auto& vec : monotone_step_vectors(diff(y, target), table)) {
        Reaction r = Reaction::create(vec, table);
        bool quiet = true;
        for (const StateVector& tv : terminal_values)
            if (enabled(r, tv, table)) {
                quiet = false;
                break;
            }
        if (!quiet) continue;
        int sub = longest_realization(table, netrecon::apply(r, y), target, terminal_values,
                                      budget - 1);
        if (sub >= 0) best = std::max(best, sub + 1);
    }
    return best;
}

}  // namespace

Bounds tighten_bounds(const ExperimentGraph& g, const Bounds& start) {
    Bounds out = start;
    std::vector<StateVector> terminal_values;
    for (std::size_t t : g.terminals()) terminal_values.push_back(g.state(t).values);

    for (const Edge& e : g.sorted_response_edges()) {
        std::pair<std::string, std::string> key{g.state(e.first).id, g.state(e.second).id};
        auto it = start.edge_steps.find(key);
        int base = it != start.edge_steps.end() ? it->second : edge_step_bound(g, e);
        int longest = longest_realization(g.species(), g.state(e.first).values,
                                          g.state(e.second).values, terminal_values, base);
        out.edge_steps[key] = std::max(longest, 0);
    }

    SearchConfig cfg;
    cfg.bounds = out;
    cfg.bounds.max_reactions = start.max_reactions;
    cfg.check_order = false;
    std::size_t largest = 0;
    enumerate_structures(g, cfg, [&](const Solution& s) {
        largest = std::max(largest, s.structure.reactions().size());
        return true;
    });
    out.max_reactions = static_cast<int>(largest);
    return out;
}

}  // namespace netrecon
