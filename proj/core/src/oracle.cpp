#include "netrecon/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "netrecon/bounds.hpp"
#include "netrecon/extension.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/validity.hpp"

namespace netrecon {

namespace {

// All sequences over `universe` that lead from x to target, each step
// staying inside the monotone window of what remains.
void edge_sequences(const std::vector<std::vector<int>>& universe, const StateVector& x,
                    const StateVector& target, long long max_steps,
                    std::vector<std::size_t>& prefix,
                    std::vector<std::vector<std::size_t>>& out) {
    if (x == target) {
        if (!prefix.empty()) out.push_back(prefix);
        return;
    }
    if (max_steps >= 0 && static_cast<long long>(prefix.size()) >= max_steps) return;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const auto& r = universe[i];
        bool fits = true;
        StateVector next(x.size());
        for (std::size_t k = 0; k < x.size() && fits; ++k) {
            int d = target[k] - x[k];
            if (d == 0 && r[k] != 0) fits = false;
            else if (d < 0 && (r[k] > 0 || r[k] < d)) fits = false;
            else if (d > 0 && (r[k] < 0 || r[k] > d)) fits = false;
            else next[k] = x[k] + r[k];
        }
        if (!fits) continue;
        prefix.push_back(i);
        edge_sequences(universe, next, target, max_steps, prefix, out);
        prefix.pop_back();
    }
}

bool enabled_vec(const std::vector<int>& r, const StateVector& y, const SpeciesTable& table) {
    for (std::size_t k = 0; k < y.size(); ++k) {
        int v = y[k] + r[k];
        if (v < 0 || v > table.max_value(k)) return false;
    }
    return true;
}

struct EdgeChoice {
    // One realizing sequence per response edge, as indices into the universe.
    std::vector<std::vector<std::size_t>> sequences;
};

}  // namespace

std::set<std::set<std::vector<int>>> brute_structures(const ExperimentGraph& g,
                                                      int max_reactions, long long max_steps,
                                                      long long max_combos) {
    if (!validate(g).is_valid()) throw ModelError("graph is not valid");

    const SpeciesTable& table = g.species();
    EdgeList edges = g.sorted_response_edges();

    // Candidate universe: every step vector inside some edge's monotone
    // window, minus those enabled in a terminal. Windows only shrink along a
    // monotone run, so the initial window per edge already covers every step.
    std::set<std::vector<int>> universe_set;
    for (const auto& [src, tgt] : edges) {
        StateVector remaining(table.size());
        for (std::size_t k = 0; k < table.size(); ++k)
            remaining[k] = g.state(tgt).values[k] - g.state(src).values[k];
        for (const auto& r : monotone_step_vectors(remaining, table)) universe_set.insert(r);
    }
    std::vector<std::vector<int>> universe;
    for (const auto& r : universe_set) {
        bool at_terminal = false;
        for (std::size_t t : g.terminals())
            if (enabled_vec(r, g.state(t).values, table)) {
                at_terminal = true;
                break;
            }
        if (!at_terminal) universe.push_back(r);
    }

    // Per edge, every realizing sequence over the whole universe.
    std::vector<std::vector<std::vector<std::size_t>>> per_edge;
    for (const auto& [src, tgt] : edges) {
        std::vector<std::vector<std::size_t>> seqs;
        std::vector<std::size_t> prefix;
        edge_sequences(universe, g.state(src).values, g.state(tgt).values, max_steps, prefix,
                       seqs);
        if (seqs.empty()) return {};
        per_edge.push_back(std::move(seqs));
    }

    long long combos = 1;
    for (const auto& seqs : per_edge) {
        combos *= static_cast<long long>(seqs.size());
        if (combos > max_combos)
            throw ModelError("combination count exceeds the oracle limit");
    }

    std::set<std::set<std::vector<int>>> found;
    std::vector<std::size_t> pick(per_edge.size(), 0);
    for (long long c = 0; c < combos; ++c) {
        long long rest = c;
        for (std::size_t e = 0; e < per_edge.size(); ++e) {
            pick[e] = static_cast<std::size_t>(rest % per_edge[e].size());
            rest /= per_edge[e].size();
        }

        std::set<std::size_t> used;
        for (std::size_t e = 0; e < per_edge.size(); ++e)
            for (std::size_t i : per_edge[e][pick[e]]) used.insert(i);
        if (max_reactions >= 0 && static_cast<int>(used.size()) > max_reactions) continue;

        // Forced order: at each step the fired reaction must be the least
        // enabled one, so every other enabled reaction is slower.
        std::map<std::size_t, std::set<std::size_t>> slower;
        bool ok = true;
        for (std::size_t e = 0; e < per_edge.size() && ok; ++e) {
            StateVector y = g.state(edges[e].first).values;
            for (std::size_t fired : per_edge[e][pick[e]]) {
                for (std::size_t q : used) {
                    if (q == fired) continue;
                    if (enabled_vec(universe[q], y, table)) slower[q].insert(fired);
                }
                for (std::size_t k = 0; k < y.size(); ++k) y[k] += universe[fired][k];
            }
        }

        // A cycle among the forced pairs means no strict order exists.
        std::map<std::size_t, int> mark;
        auto cyclic = [&](auto&& self, std::size_t v) -> bool {
            mark[v] = 1;
            for (std::size_t w : slower[v]) {
                if (mark[w] == 1) return true;
                if (mark[w] == 0 && self(self, w)) return true;
            }
            mark[v] = 2;
            return false;
        };
        for (std::size_t a : used)
            if (mark[a] == 0 && cyclic(cyclic, a)) {
                ok = false;
                break;
            }
        if (!ok) continue;

        std::set<std::vector<int>> reactions;
        for (std::size_t i : used) reactions.insert(universe[i]);
        found.insert(std::move(reactions));
    }
    return found;
}

ExtensionSearchResult brute_minimal_extensions(const ExperimentGraph& g, std::size_t a_max) {
    ExtensionSearchResult result;

    auto admits = [&](const ExperimentGraph& ext) {
        int bound = global_reaction_bound(ext);
        return !brute_structures(ext, bound).empty();
    };

    if (validate(g).is_valid() && admits(g)) {
        result.feasible = true;
        result.extensions.push_back(Extension{});
        return result;
    }

    int max_changes = 0;
    for (std::size_t i = 0; i < g.state_count(); ++i)
        if (!g.response_out(i).empty()) ++max_changes;

    for (std::size_t a = 1; a <= a_max; ++a) {
        std::size_t cells = g.state_count() * a;
        if (cells > 20) throw ModelError("instance too large for the extension oracle");

        // Bucket every assignment that is a valid extension by change count.
        std::map<int, std::vector<Extension>> by_changes;
        for (unsigned long long mask = 0; mask < (1ULL << cells); ++mask) {
            Extension e;
            e.hidden_count = a;
            std::size_t bit = 0;
            for (std::size_t i = 0; i < g.state_count(); ++i) {
                std::vector<int> values(a);
                for (std::size_t j = 0; j < a; ++j) values[j] = (mask >> bit++) & 1;
                e.assignment.emplace(g.state(i).id, std::move(values));
            }
            auto [valid, rep] = is_valid_extension(g, e);
            if (!valid) continue;
            by_changes[change_count(g, e)].push_back(std::move(e));
        }

        for (auto& [c, candidates] : by_changes) {
            std::vector<Extension> admitted;
            for (Extension& e : candidates)
                if (admits(extend(g, e))) admitted.push_back(std::move(e));
            if (admitted.empty()) continue;
            std::sort(admitted.begin(), admitted.end());
            result.feasible = true;
            result.hidden_count = a;
            result.change_count = c;
            result.extensions = std::move(admitted);
            return result;
        }
    }
    return result;
}

}  // namespace netrecon
