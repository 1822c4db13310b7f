#include "netrecon/extension.hpp"

#include <algorithm>
#include <numeric>

#include "netrecon/bounds.hpp"
#include "netrecon/reconstruct.hpp"

namespace netrecon {

ExperimentGraph extend(const ExperimentGraph& g, const Extension& e) {
    for (const auto& [id, values] : e.assignment)
        if (values.size() != e.hidden_count)
            throw ModelError("hidden values for state " + id + " have the wrong width");
    if (e.hidden_count == 0) return g;
    return g.with_hidden_values(e.assignment);
}

int change_count(const ExperimentGraph& g, const Extension& e) {
    if (e.hidden_count == 0) return 0;
    auto values_of = [&](std::size_t i) -> const std::vector<int>& {
        auto it = e.assignment.find(g.state(i).id);
        if (it == e.assignment.end())
            throw ModelError("no hidden values for state " + g.state(i).id);
        return it->second;
    };
    int count = 0;
    for (std::size_t i = 0; i < g.state_count(); ++i) {
        if (g.response_out(i).empty()) continue;
        const auto& src = values_of(i);
        for (std::size_t t : g.response_out(i))
            if (values_of(t) != src) {
                ++count;
                break;
            }
    }
    return count;
}

std::pair<bool, ValidityReport> is_valid_extension(const ExperimentGraph& g, const Extension& e) {
    if (e.hidden_count > 0) {
        for (const auto& [a, b] : g.perturbation_edges()) {
            auto ia = e.assignment.find(g.state(a).id);
            auto ib = e.assignment.find(g.state(b).id);
            if (ia == e.assignment.end() || ib == e.assignment.end())
                throw ModelError("hidden assignment does not cover every state");
            if (ia->second != ib->second) return {false, ValidityReport{}};
        }
    }
    ExperimentGraph ext = extend(g, e);
    ValidityReport rep = validate(ext);
    return {rep.is_valid(), rep};
}

std::vector<std::vector<std::size_t>> perturbation_components(const ExperimentGraph& g) {
    std::vector<std::size_t> parent(g.state_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (const auto& [a, b] : g.perturbation_edges()) parent[find(a)] = find(b);

    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> slot(g.state_count(), g.state_count());
    for (std::size_t i = 0; i < g.state_count(); ++i) {
        std::size_t root = find(i);
        if (slot[root] == g.state_count()) {
            slot[root] = components.size();
            components.emplace_back();
        }
        components[slot[root]].push_back(i);
    }
    return components;
}

namespace {

// Key of one hidden column: its change pattern over the globally ordered
// response edges (decrease, then increase, then no change), then the raw
// column in state order as a tiebreak.
std::vector<std::pair<std::vector<int>, std::vector<int>>> column_keys(const ExperimentGraph& g,
                                                                       const Extension& e) {
    EdgeList edges = g.sorted_response_edges();
    std::vector<std::vector<int>> columns(e.hidden_count,
                                          std::vector<int>(g.state_count()));
    for (std::size_t i = 0; i < g.state_count(); ++i) {
        auto it = e.assignment.find(g.state(i).id);
        if (it == e.assignment.end() || it->second.size() != e.hidden_count)
            throw ModelError("hidden assignment does not cover every state");
        for (std::size_t j = 0; j < e.hidden_count; ++j) columns[j][i] = it->second[j];
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keys;
    for (std::size_t j = 0; j < e.hidden_count; ++j) {
        std::vector<int> signature;
        signature.reserve(edges.size());
        for (const auto& [src, tgt] : edges) {
            int d = columns[j][tgt] - columns[j][src];
            signature.push_back(d < 0 ? 0 : d > 0 ? 1 : 2);
        }
        keys.emplace_back(std::move(signature), std::move(columns[j]));
    }
    return keys;
}

}  // namespace

bool canonical_hidden(const ExperimentGraph& g, const Extension& e) {
    auto keys = column_keys(g, e);
    return std::is_sorted(keys.begin(), keys.end());
}

Extension canonicalize_hidden(const ExperimentGraph& g, const Extension& e) {
    auto keys = column_keys(g, e);
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    Extension out;
    out.hidden_count = e.hidden_count;
    for (const auto& [id, values] : e.assignment) {
        std::vector<int> permuted;
        permuted.reserve(values.size());
        for (std::size_t j : order) permuted.push_back(values[j]);
        out.assignment.emplace(id, std::move(permuted));
    }
    return out;
}

namespace {

bool admits_structure(const ExperimentGraph& ext) {
    SearchConfig cfg;
    cfg.bounds = compute_bounds(ext);
    bool found = false;
    enumerate_structures(ext, cfg, [&](const Solution&) {
        found = true;
        return false;
    });
    return found;
}

// Enumerates hidden assignments per perturbation component, pruning on the
// change budget and on response edges that have lost their last possible
// decrease. Leaves are re-validated in full.
class AssignmentSearch {
public:
    AssignmentSearch(const ExperimentGraph& g, std::size_t hidden, int c_limit)
        : g_(g), hidden_(hidden), c_limit_(c_limit) {
        components_ = perturbation_components(g);
        component_of_.assign(g.state_count(), 0);
        for (std::size_t c = 0; c < components_.size(); ++c)
            for (std::size_t s : components_[c]) component_of_[s] = c;
        choice_.assign(components_.size(), -1);
        for (const Edge& e : g.response_edges()) {
            bool base_decrease = false;
            const auto& a = g.state(e.first).values;
            const auto& b = g.state(e.second).values;
            for (std::size_t k = 0; k < a.size() && !base_decrease; ++k)
                if (b[k] < a[k]) base_decrease = true;
            if (!base_decrease) needs_hidden_decrease_.push_back(e);
        }
    }

    std::vector<Extension> run() {
        descend(0, 0);
        return found_;
    }

private:
    static bool hidden_decreases(int src_code, int tgt_code, std::size_t hidden) {
        for (std::size_t j = 0; j < hidden; ++j) {
            int s = (src_code >> j) & 1;
            int t = (tgt_code >> j) & 1;
            if (t < s) return true;
        }
        return false;
    }

    int partial_changes() const {
        int count = 0;
        for (std::size_t i = 0; i < g_.state_count(); ++i) {
            if (choice_[component_of_[i]] < 0) continue;
            bool changed = false;
            for (std::size_t t : g_.response_out(i)) {
                if (choice_[component_of_[t]] < 0) continue;
                if (choice_[component_of_[t]] != choice_[component_of_[i]]) changed = true;
            }
            if (changed) ++count;
        }
        return count;
    }

    bool dead_edge() const {
        for (const Edge& e : needs_hidden_decrease_) {
            int a = choice_[component_of_[e.first]];
            int b = choice_[component_of_[e.second]];
            if (a >= 0 && b >= 0 && !hidden_decreases(a, b, hidden_)) return true;
        }
        return false;
    }

    void descend(std::size_t ci, int changes_so_far) {
        if (changes_so_far > c_limit_) return;
        if (ci == components_.size()) {
            leaf();
            return;
        }
        for (int code = 0; code < (1 << hidden_); ++code) {
            choice_[ci] = code;
            if (!dead_edge()) {
                int c = partial_changes();
                if (c <= c_limit_) descend(ci + 1, c);
            }
            choice_[ci] = -1;
        }
    }

    void leaf() {
        Extension e;
        e.hidden_count = hidden_;
        for (std::size_t i = 0; i < g_.state_count(); ++i) {
            int code = choice_[component_of_[i]];
            std::vector<int> values(hidden_);
            for (std::size_t j = 0; j < hidden_; ++j) values[j] = (code >> j) & 1;
            e.assignment.emplace(g_.state(i).id, std::move(values));
        }
        if (change_count(g_, e) != c_limit_) return;
        if (!canonical_hidden(g_, e)) return;
        auto [valid, rep] = is_valid_extension(g_, e);
        if (!valid) return;
        if (!admits_structure(extend(g_, e))) return;
        found_.push_back(std::move(e));
    }

    const ExperimentGraph& g_;
    std::size_t hidden_;
    int c_limit_;
    std::vector<std::vector<std::size_t>> components_;
    std::vector<std::size_t> component_of_;
    std::vector<int> choice_;
    EdgeList needs_hidden_decrease_;
    std::vector<Extension> found_;
};

}  // namespace

ExtensionSearchResult minimal_valid_extensions(const ExperimentGraph& g, std::size_t max_hidden) {
    ExtensionSearchResult result;

    if (validate(g).is_valid() && admits_structure(g)) {
        result.feasible = true;
        result.extensions.push_back(Extension{});
        return result;
    }

    int max_changes = 0;
    for (std::size_t i = 0; i < g.state_count(); ++i)
        if (!g.response_out(i).empty()) ++max_changes;

    for (std::size_t a = 1; a <= max_hidden; ++a) {
        for (int c = 0; c <= max_changes; ++c) {
            AssignmentSearch search(g, a, c);
            std::vector<Extension> found = search.run();
            if (found.empty()) continue;
            std::sort(found.begin(), found.end());
            result.feasible = true;
            result.hidden_count = a;
            result.change_count = c;
            result.extensions = std::move(found);
            return result;
        }
    }
    return result;
}

}  // namespace netrecon
