#include "netrecon/reconstruct.hpp"

#include <algorithm>
#include <set>

#include "netrecon/validity.hpp"

namespace netrecon {

std::optional<std::vector<StateVector>> intermediate_states(const StateVector& x,
                                                            const std::vector<Reaction>& seq,
                                                            const SpeciesTable& table) {
    std::vector<StateVector> out{x};
    for (const Reaction& r : seq) {
        if (!enabled(r, out.back(), table)) return std::nullopt;
        out.push_back(netrecon::apply(r, out.back()));
    }
    return out;
}

bool monotone_ok(const Reaction& r, const StateVector& x, const StateVector& x_target) {
    if (r.size() != x.size() || x.size() != x_target.size())
        throw ModelError("state and reaction arity differ");
    for (std::size_t k = 0; k < x.size(); ++k) {
        int d = x_target[k] - x[k];
        if (d == 0 && r[k] != 0) return false;
        if (static_cast<long long>(r[k]) * d < 0) return false;
    }
    return true;
}

std::vector<std::size_t> enabled_set(const std::vector<Reaction>& reactions, const StateVector& y,
                                     const SpeciesTable& table) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < reactions.size(); ++i)
        if (enabled(reactions[i], y, table)) out.push_back(i);
    return out;
}

bool canonical_reactions(const std::vector<Reaction>& rs) {
    for (std::size_t i = 1; i < rs.size(); ++i)
        if (!(rs[i - 1] < rs[i])) return false;
    return true;
}

std::vector<std::vector<int>> monotone_step_vectors(const std::vector<int>& remaining,
                                                    const SpeciesTable& table) {
    if (remaining.size() != table.size()) throw ModelError("difference arity mismatch");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(remaining.size(), 0);
    auto gen = [&](auto&& self, std::size_t k, bool has_negative) -> void {
        if (k == remaining.size()) {
            if (has_negative) out.push_back(cur);
            return;
        }
        int lo = std::min(0, remaining[k]);
        int hi = std::max(0, remaining[k]);
        for (int v = lo; v <= hi; ++v) {
            cur[k] = v;
            self(self, k + 1, has_negative || v < 0);
        }
        cur[k] = 0;
    };
    gen(gen, 0, false);
    return out;
}

namespace {

struct EdgeTask {
    Edge edge;
    StateVector source;
    StateVector target;
    int bound;
};

// Depth-first construction of all conformal structures. Reactions enter the
// pool when first fired, which settles the everything-fires-somewhere
// condition by construction. The slower relation grows as firing decisions
// are made; a reaction introduced late is re-checked against every earlier
// step it would have been enabled at.
class Searcher {
public:
    Searcher(const ExperimentGraph& g, const SearchConfig& cfg, const SolutionCallback& cb)
        : g_(g), cfg_(cfg), cb_(cb), table_(g.species()) {
        for (const Edge& e : g.sorted_response_edges()) {
            EdgeTask t;
            t.edge = e;
            t.source = g.state(e.first).values;
            t.target = g.state(e.second).values;
            auto it = cfg.bounds.edge_steps.find({g.state(e.first).id, g.state(e.second).id});
            t.bound = it != cfg.bounds.edge_steps.end() ? it->second : edge_step_bound(g, e);
            tasks_.push_back(std::move(t));
        }
        max_reactions_ =
            cfg.bounds.max_reactions > 0 ? cfg.bounds.max_reactions : global_reaction_bound(g);
        for (std::size_t t : g.terminals()) terminal_values_.push_back(g.state(t).values);
    }

    SearchStats run() {
        search_edge(0);
        return stats_;
    }

private:
    void search_edge(std::size_t ei) {
        if (stopped_) return;
        if (ei == tasks_.size()) {
            emit();
            return;
        }
        std::vector<std::size_t> fired;
        extend_edge(ei, tasks_[ei].source, 0, fired);
    }

    void extend_edge(std::size_t ei, const StateVector& y, int used,
                     std::vector<std::size_t>& fired) {
        if (stopped_) return;
        const EdgeTask& t = tasks_[ei];
        if (y == t.target) {
            realized_.push_back({t.edge, fired});
            search_edge(ei + 1);
            realized_.pop_back();
            return;
        }
        ++stats_.nodes;
        if (used >= t.bound) return;
        // Every step must decrease something inside the window, so a state with
        // no pending decrease cannot make progress. No step-count cutoff beyond
        // the edge bound: a single step may cover several units at once.
        int remaining_decrease = 0;
        for (std::size_t k = 0; k < y.size(); ++k)
            if (y[k] > t.target[k]) remaining_decrease += y[k] - t.target[k];
        if (remaining_decrease == 0) return;

        std::vector<int> remaining = diff(y, t.target);
        for (std::size_t r = 0; r < reactions_.size(); ++r)
            if (fits_window(reactions_[r], remaining)) fire(ei, y, used, fired, r);

        if (reactions_.size() < static_cast<std::size_t>(max_reactions_)) {
            for (const auto& vec : monotone_step_vectors(remaining, table_)) {
                if (stopped_) return;
                if (is_known(vec)) continue;
                Reaction r = Reaction::create(vec, table_);
                if (enabled_at_terminal(r)) continue;
                introduce_and_fire(ei, y, used, fired, std::move(r));
            }
        }
    }

    static bool fits_window(const Reaction& r, const std::vector<int>& remaining) {
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            if (remaining[k] == 0) {
                if (r[k] != 0) return false;
            } else if (remaining[k] > 0) {
                if (r[k] < 0 || r[k] > remaining[k]) return false;
            } else {
                if (r[k] > 0 || r[k] < remaining[k]) return false;
            }
        }
        return true;
    }

    bool is_known(const std::vector<int>& vec) const {
        for (const Reaction& r : reactions_)
            if (r.delta() == vec) return true;
        return false;
    }

    bool enabled_at_terminal(const Reaction& r) const {
        for (const StateVector& tv : terminal_values_)
            if (enabled(r, tv, table_)) return true;
        return false;
    }

    // (a, b): a runs slower than b. Rejects pairs closing a cycle.
    bool add_pair(std::size_t a, std::size_t b,
                  std::vector<std::pair<std::size_t, std::size_t>>& added) {
        if (pairs_.count({a, b})) return true;
        if (reaches(b, a)) return false;
        pairs_.insert({a, b});
        adj_[a].push_back(b);
        added.emplace_back(a, b);
        return true;
    }

    void remove_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& added) {
        for (auto it = added.rbegin(); it != added.rend(); ++it) {
            pairs_.erase(*it);
            adj_[it->first].pop_back();
        }
    }

    bool reaches(std::size_t from, std::size_t to) const {
        if (from == to) return true;
        std::vector<bool> seen(reactions_.size(), false);
        std::vector<std::size_t> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t nxt : adj_[cur]) {
                if (nxt == to) return true;
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    stack.push_back(nxt);
                }
            }
        }
        return false;
    }

    void fire(std::size_t ei, const StateVector& y, int used, std::vector<std::size_t>& fired,
              std::size_t r) {
        std::vector<std::pair<std::size_t, std::size_t>> added;
        bool ok = true;
        if (cfg_.check_order) {
            for (std::size_t q = 0; q < reactions_.size() && ok; ++q) {
                if (q == r || !enabled(reactions_[q], y, table_)) continue;
                ok = add_pair(q, r, added);
            }
        }
        if (ok) {
            trail_.emplace_back(y, r);
            fired.push_back(r);
            extend_edge(ei, netrecon::apply(reactions_[r], y), used + 1, fired);
            fired.pop_back();
            trail_.pop_back();
        }
        remove_pairs(added);
    }

    void introduce_and_fire(std::size_t ei, const StateVector& y, int used,
                            std::vector<std::size_t>& fired, Reaction r) {
        reactions_.push_back(std::move(r));
        adj_.emplace_back();
        std::size_t idx = reactions_.size() - 1;
        std::vector<std::pair<std::size_t, std::size_t>> retro;
        bool ok = true;
        if (cfg_.check_order) {
            for (const auto& [ys, f] : trail_) {
                if (!enabled(reactions_[idx], ys, table_)) continue;
                if (!add_pair(idx, f, retro)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) fire(ei, y, used, fired, idx);
        remove_pairs(retro);
        adj_.pop_back();
        reactions_.pop_back();
    }

    void emit() {
        RegulatoryStructure st = RegulatoryStructure::create(reactions_, pairs_);
        bool fresh;
        if (cfg_.project_on_reactions && cfg_.check_order)
            fresh = seen_sets_.insert(st.reactions()).second;
        else if (!cfg_.check_order)
            fresh = seen_sets_.insert(st.reactions()).second;
        else
            fresh = seen_full_.insert({st.reactions(), st.slower_pairs()}).second;
        if (!fresh) return;

        std::vector<std::size_t> order(reactions_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return reactions_[a] < reactions_[b]; });
        std::vector<std::size_t> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

        Solution sol{std::move(st), {}};
        for (const Realization& re : realized_) {
            Realization mapped{re.edge, re.fired};
            for (std::size_t& f : mapped.fired) f = pos[f];
            sol.realizations.push_back(std::move(mapped));
        }
        ++stats_.solutions;
        if (!cb_(sol)) stopped_ = true;
    }

    const ExperimentGraph& g_;
    const SearchConfig& cfg_;
    const SolutionCallback& cb_;
    const SpeciesTable& table_;
    std::vector<EdgeTask> tasks_;
    std::vector<StateVector> terminal_values_;
    int max_reactions_ = 0;

    std::vector<Reaction> reactions_;
    std::vector<std::vector<std::size_t>> adj_;
    std::set<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::pair<StateVector, std::size_t>> trail_;
    std::vector<Realization> realized_;

    std::set<std::vector<Reaction>> seen_sets_;
    std::set<std::pair<std::vector<Reaction>, std::set<std::pair<std::size_t, std::size_t>>>>
        seen_full_;
    SearchStats stats_;
    bool stopped_ = false;
};

}  // namespace

SearchStats enumerate_structures(const ExperimentGraph& g, const SearchConfig& cfg,
                                 const SolutionCallback& cb) {
    if (cfg.project_on_reactions && cfg.enumerate_all_orders)
        throw ModelError("projection and order enumeration are mutually exclusive");
    if (!validate(g).is_valid()) throw ModelError("graph is not valid");
    Searcher s(g, cfg, cb);
    return s.run();
}

std::vector<Solution> enumerate_structures_all(const ExperimentGraph& g, const SearchConfig& cfg) {
    std::vector<Solution> out;
    enumerate_structures(g, cfg, [&](const Solution& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace netrecon
