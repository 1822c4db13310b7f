#include "netrecon/validity.hpp"

#include <algorithm>
#include <set>

namespace netrecon {
namespace {

// Terminal value vectors reachable from each state over nonempty response
// paths. Fixpoint iteration, safe in the presence of chain cycles.
std::vector<std::set<StateVector>> chain_terminal_values(const ExperimentGraph& g) {
    const std::size_t n = g.state_count();
    std::vector<std::set<StateVector>> reach(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t : g.response_out(i)) {
                std::size_t before = reach[i].size();
                if (g.is_terminal(t)) reach[i].insert(g.state(t).values);
                reach[i].insert(reach[t].begin(), reach[t].end());
                if (reach[i].size() != before) changed = true;
            }
        }
    }
    return reach;
}

// States with some maximal response path that never settles in a terminal,
// either by dead-ending elsewhere or by cycling.
std::vector<bool> failing_chain(const ExperimentGraph& g) {
    const std::size_t n = g.state_count();
    std::vector<bool> on_cycle(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack(g.response_out(s));
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            if (cur == s) {
                on_cycle[s] = true;
                break;
            }
            if (seen[cur]) continue;
            seen[cur] = true;
            for (std::size_t t : g.response_out(cur)) stack.push_back(t);
        }
    }

    std::vector<bool> fail(n, false);
    for (std::size_t i = 0; i < n; ++i)
        fail[i] = on_cycle[i] || (g.response_out(i).empty() && !g.is_terminal(i));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (fail[i]) continue;
            for (std::size_t t : g.response_out(i))
                if (fail[t]) {
                    fail[i] = true;
                    changed = true;
                }
        }
    }
    return fail;
}

}  // namespace

ValidityReport validate(const ExperimentGraph& g) {
    ValidityReport report;
    const std::size_t n = g.state_count();

    for (std::size_t i = 0; i < n; ++i)
        if (g.response_out(i).size() > 1) report.multiple_response_states.push_back(g.state(i).id);
    std::sort(report.multiple_response_states.begin(), report.multiple_response_states.end());

    auto reach = chain_terminal_values(g);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (g.state(i).values != g.state(j).values) continue;
            if (reach[i].empty() || reach[j].empty()) continue;
            std::set<StateVector> joint = reach[i];
            joint.insert(reach[j].begin(), reach[j].end());
            if (joint.size() < 2) continue;
            std::string a = g.state(i).id, b = g.state(j).id;
            if (b < a) std::swap(a, b);
            report.equal_terminal_violations.emplace_back(a, b);
        }
    }
    std::sort(report.equal_terminal_violations.begin(), report.equal_terminal_violations.end());

    for (const auto& [src, tgt] : g.sorted_response_edges()) {
        auto d = diff(g.state(src).values, g.state(tgt).values);
        if (std::none_of(d.begin(), d.end(), [](int v) { return v < 0; }))
            report.nondecreasing_edges.emplace_back(g.state(src).id, g.state(tgt).id);
    }

    auto fail = failing_chain(g);
    for (std::size_t i = 0; i < n; ++i)
        if (fail[i] && !g.is_terminal(i)) report.dangling_states.push_back(g.state(i).id);
    std::sort(report.dangling_states.begin(), report.dangling_states.end());

    return report;
}

std::map<std::size_t, std::size_t> terminal_map(const ExperimentGraph& g) {
    for (std::size_t i = 0; i < g.state_count(); ++i)
        if (g.response_out(i).size() > 1)
            throw ModelError("state " + g.state(i).id + " has several outgoing response edges");

    std::map<std::size_t, std::size_t> result;
    for (std::size_t i = 0; i < g.state_count(); ++i) {
        std::size_t cur = i;
        std::size_t steps = 0;
        while (!g.is_terminal(cur)) {
            const auto& out = g.response_out(cur);
            if (out.empty()) break;
            cur = out[0];
            if (++steps > g.state_count()) break;
        }
        if (g.is_terminal(cur)) result.emplace(i, cur);
    }
    return result;
}

}  // namespace netrecon
