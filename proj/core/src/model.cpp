#include "netrecon/model.hpp"

#include <algorithm>

namespace netrecon {

SpeciesTable SpeciesTable::observed(std::vector<std::string> names, std::vector<int> maxima) {
    if (names.size() != maxima.size())
        throw ModelError("species name and capacity counts differ");
    SpeciesTable t;
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k].empty()) throw ModelError("empty species name");
        if (maxima[k] < 1)
            throw ModelError("species " + names[k] + " needs capacity of at least 1");
        for (std::size_t j = 0; j < k; ++j)
            if (names[j] == names[k]) throw ModelError("duplicate species " + names[k]);
    }
    t.names_ = std::move(names);
    t.maxima_ = std::move(maxima);
    t.observed_ = t.names_.size();
    return t;
}

SpeciesTable SpeciesTable::with_hidden(std::size_t count) const {
    SpeciesTable t;
    t.names_ = names_;
    t.maxima_ = maxima_;
    t.observed_ = observed_;
    for (std::size_t i = 1; i <= count; ++i) {
        std::string name = "_h" + std::to_string(hidden_count() + i);
        if (index_of(name)) throw ModelError("hidden species name " + name + " already taken");
        t.names_.push_back(name);
        t.maxima_.push_back(1);
    }
    return t;
}

std::optional<std::size_t> SpeciesTable::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

bool SpeciesTable::in_range(const StateVector& x) const {
    if (x.size() != maxima_.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] < 0 || x[k] > maxima_[k]) return false;
    return true;
}

long long SpeciesTable::state_space_size() const {
    const long long cap = 1'000'000'000'000'000'000LL;
    long long p = 1;
    for (int m : maxima_) {
        if (p > cap / (m + 1)) return cap;
        p *= m + 1;
    }
    return p;
}

Reaction Reaction::create(std::vector<int> delta, const SpeciesTable& table) {
    if (delta.size() != table.size())
        throw ModelError("reaction arity does not match species count");
    bool has_negative = false;
    for (std::size_t k = 0; k < delta.size(); ++k) {
        if (delta[k] < 0) has_negative = true;
        if (delta[k] > table.max_value(k) || delta[k] < -table.max_value(k))
            throw ModelError("reaction entry for " + table.name(k) + " exceeds capacity");
    }
    if (!has_negative) throw ModelError("reaction must consume at least one species");
    return Reaction(std::move(delta));
}

bool enabled(const Reaction& r, const StateVector& x, const SpeciesTable& table) {
    if (x.size() != r.size()) throw ModelError("state and reaction arity differ");
    for (std::size_t k = 0; k < x.size(); ++k) {
        int v = x[k] + r[k];
        if (v < 0 || v > table.max_value(k)) return false;
    }
    return true;
}

StateVector apply(const Reaction& r, const StateVector& x) {
    if (x.size() != r.size()) throw ModelError("state and reaction arity differ");
    StateVector y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] + r[k];
    return y;
}

std::vector<int> diff(const StateVector& from, const StateVector& to) {
    if (from.size() != to.size()) throw ModelError("state arities differ");
    std::vector<int> d(from.size());
    for (std::size_t k = 0; k < from.size(); ++k) d[k] = to[k] - from[k];
    return d;
}

std::string to_string(const StateVector& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(x[k]);
    }
    return s + ")";
}

std::string to_string(const Reaction& r, const SpeciesTable& table) {
    std::string s;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] == 0) continue;
        if (!s.empty()) s += ' ';
        s += table.name(k);
        s += r[k] > 0 ? '+' : '-';
        int mag = r[k] > 0 ? r[k] : -r[k];
        if (mag > 1) s += std::to_string(mag);
    }
    return s;
}

RegulatoryStructure RegulatoryStructure::create(
    std::vector<Reaction> reactions,
    const std::set<std::pair<std::size_t, std::size_t>>& slower) {
    const std::size_t n = reactions.size();
    for (std::size_t i = 1; i < n; ++i)
        if (reactions[i].size() != reactions[0].size())
            throw ModelError("reactions have mixed arity");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return reactions[a] < reactions[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    RegulatoryStructure s;
    s.reactions_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.reactions_.push_back(reactions[order[i]]);
    for (std::size_t i = 1; i < n; ++i)
        if (s.reactions_[i] == s.reactions_[i - 1]) throw ModelError("duplicate reaction");

    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto [a, b] : slower) {
        if (a >= n || b >= n) throw ModelError("order pair names unknown reaction");
        reach[position[a]][position[b]] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (reach[k][j]) reach[i][j] = true;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (reach[i][i]) throw ModelError("order has a cycle");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j]) s.slower_.insert({i, j});
    return s;
}

std::vector<std::size_t> RegulatoryStructure::enabled_set(const StateVector& x,
                                                          const SpeciesTable& table) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < reactions_.size(); ++i)
        if (enabled(reactions_[i], x, table)) out.push_back(i);
    return out;
}

bool RegulatoryStructure::minimal_in(std::size_t r, const std::vector<std::size_t>& members) const {
    for (std::size_t q : members)
        if (q != r && is_slower(r, q)) return false;
    return true;
}

ExperimentGraph::ExperimentGraph(SpeciesTable table,
                                 std::vector<ExperimentState> states,
                                 const std::vector<std::pair<std::string, std::string>>& perturbations,
                                 const std::vector<std::pair<std::string, std::string>>& responses,
                                 const std::vector<std::string>& terminals)
    : table_(std::move(table)), states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const auto& st = states_[i];
        if (st.id.empty()) throw ModelError("empty state id");
        if (!index_.emplace(st.id, i).second) throw ModelError("duplicate state id " + st.id);
        if (st.values.size() != table_.size())
            throw ModelError("state " + st.id + " does not assign every species");
        if (!table_.in_range(st.values))
            throw ModelError("state " + st.id + " is out of capacity range");
    }

    std::set<Edge> seen;
    for (const auto& [a, b] : perturbations) {
        Edge e{state_index(a), state_index(b)};
        if (!seen.insert(e).second) throw ModelError("duplicate perturbation edge " + a + " " + b);
        perturbations_.push_back(e);
    }
    std::set<Edge> seen_resp;
    for (const auto& [a, b] : responses) {
        Edge e{state_index(a), state_index(b)};
        if (seen.count(e)) throw ModelError("edge " + a + " " + b + " is both perturbation and response");
        if (!seen_resp.insert(e).second) throw ModelError("duplicate response edge " + a + " " + b);
        responses_.push_back(e);
    }

    out_.resize(states_.size());
    for (const auto& [src, tgt] : responses_) out_[src].push_back(tgt);

    for (const auto& id : terminals) {
        std::size_t i = state_index(id);
        terminals_.insert(i);
        if (!out_[i].empty()) throw ModelError("terminal " + id + " has an outgoing response edge");
    }
}

std::size_t ExperimentGraph::state_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ModelError("unknown state id " + id);
    return it->second;
}

EdgeList ExperimentGraph::sorted_response_edges() const {
    EdgeList edges = responses_;
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        const std::string& sa = states_[a.first].id;
        const std::string& sb = states_[b.first].id;
        if (sa != sb) return sa < sb;
        return states_[a.second].id < states_[b.second].id;
    });
    return edges;
}

ExperimentGraph ExperimentGraph::with_hidden_values(
    const std::map<std::string, std::vector<int>>& assignment) const {
    if (assignment.size() != states_.size())
        throw ModelError("hidden assignment must cover every state exactly once");
    std::size_t width = assignment.begin()->second.size();

    std::vector<ExperimentState> states;
    states.reserve(states_.size());
    for (const auto& st : states_) {
        auto it = assignment.find(st.id);
        if (it == assignment.end()) throw ModelError("no hidden values for state " + st.id);
        if (it->second.size() != width) throw ModelError("hidden value widths differ");
        ExperimentState ext{st.id, st.values};
        for (int v : it->second) ext.values.push_back(v);
        states.push_back(std::move(ext));
    }

    std::vector<std::pair<std::string, std::string>> perts, resps;
    for (const auto& [a, b] : perturbations_) perts.emplace_back(states_[a].id, states_[b].id);
    for (const auto& [a, b] : responses_) resps.emplace_back(states_[a].id, states_[b].id);
    std::vector<std::string> terms;
    for (std::size_t i : terminals_) terms.push_back(states_[i].id);

    return ExperimentGraph(table_.with_hidden(width), std::move(states), perts, resps, terms);
}

}  // namespace netrecon
