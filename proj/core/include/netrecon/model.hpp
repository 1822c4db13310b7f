#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netrecon {

// Semantic error in otherwise well-formed input.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error while reading input. line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    int line;
};

using StateVector = std::vector<int>;

// Species with integer capacities [0, max]. Hidden species are binary,
// stored after all observed ones and named _h1, _h2, ...
class SpeciesTable {
public:
    static SpeciesTable observed(std::vector<std::string> names, std::vector<int> maxima);
    SpeciesTable with_hidden(std::size_t count) const;

    std::size_t size() const { return names_.size(); }
    std::size_t observed_count() const { return observed_; }
    std::size_t hidden_count() const { return names_.size() - observed_; }
    const std::string& name(std::size_t k) const { return names_[k]; }
    int max_value(std::size_t k) const { return maxima_[k]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool in_range(const StateVector& x) const;
    // Number of distinct value vectors.
    long long state_space_size() const;

private:
    SpeciesTable() = default;
    std::vector<std::string> names_;
    std::vector<int> maxima_;
    std::size_t observed_ = 0;
};

// Change vector with at least one negative entry. Entry magnitudes never
// exceed the species capacity, otherwise the reaction could not fire at all.
class Reaction {
public:
    static Reaction create(std::vector<int> delta, const SpeciesTable& table);

    const std::vector<int>& delta() const { return delta_; }
    int operator[](std::size_t k) const { return delta_[k]; }
    std::size_t size() const { return delta_.size(); }

    friend bool operator==(const Reaction&, const Reaction&) = default;
    friend auto operator<=>(const Reaction&, const Reaction&) = default;

private:
    explicit Reaction(std::vector<int> delta) : delta_(std::move(delta)) {}
    std::vector<int> delta_;
};

bool enabled(const Reaction& r, const StateVector& x, const SpeciesTable& table);
StateVector apply(const Reaction& r, const StateVector& x);

// Componentwise to - from.
std::vector<int> diff(const StateVector& from, const StateVector& to);

std::string to_string(const StateVector& x);
// Nonzero entries as name+sign, magnitude appended when above one: "fr- spo+2".
std::string to_string(const Reaction& r, const SpeciesTable& table);

// Reaction set with a strict partial order. A pair (a, b) reads "a is slower
// than b". Reactions are kept in ascending order and the pair set is closed
// under transitivity on construction.
class RegulatoryStructure {
public:
    static RegulatoryStructure create(std::vector<Reaction> reactions,
                                      const std::set<std::pair<std::size_t, std::size_t>>& slower);

    const std::vector<Reaction>& reactions() const { return reactions_; }
    const std::set<std::pair<std::size_t, std::size_t>>& slower_pairs() const { return slower_; }
    bool is_slower(std::size_t a, std::size_t b) const { return slower_.count({a, b}) > 0; }

    std::vector<std::size_t> enabled_set(const StateVector& x, const SpeciesTable& table) const;
    // Minimal within the given index set: not slower than any other member.
    bool minimal_in(std::size_t r, const std::vector<std::size_t>& members) const;

    friend bool operator==(const RegulatoryStructure&, const RegulatoryStructure&) = default;
    friend auto operator<=>(const RegulatoryStructure&, const RegulatoryStructure&) = default;

private:
    RegulatoryStructure() = default;
    std::vector<Reaction> reactions_;
    std::set<std::pair<std::size_t, std::size_t>> slower_;
};

struct ExperimentState {
    std::string id;
    StateVector values;
};

using Edge = std::pair<std::size_t, std::size_t>;
using EdgeList = std::vector<Edge>;

// States with perturbation and response edges and declared terminal states.
// Terminals never have an outgoing response edge. The two edge sets are
// disjoint and free of duplicates.
class ExperimentGraph {
public:
    ExperimentGraph(SpeciesTable table,
                    std::vector<ExperimentState> states,
                    const std::vector<std::pair<std::string, std::string>>& perturbations,
                    const std::vector<std::pair<std::string, std::string>>& responses,
                    const std::vector<std::string>& terminals);

    const SpeciesTable& species() const { return table_; }
    std::size_t state_count() const { return states_.size(); }
    const ExperimentState& state(std::size_t i) const { return states_[i]; }
    std::size_t state_index(const std::string& id) const;
    bool has_state(const std::string& id) const { return index_.count(id) > 0; }

    const EdgeList& perturbation_edges() const { return perturbations_; }
    const EdgeList& response_edges() const { return responses_; }
    const std::set<std::size_t>& terminals() const { return terminals_; }
    bool is_terminal(std::size_t i) const { return terminals_.count(i) > 0; }

    const std::vector<std::size_t>& response_out(std::size_t i) const { return out_[i]; }

    // Response edges ordered by source id, then target id.
    EdgeList sorted_response_edges() const;

    // Same graph with hidden values appended to every state. The assignment
    // must cover every state id with vectors of one shared length.
    ExperimentGraph with_hidden_values(const std::map<std::string, std::vector<int>>& assignment) const;

private:
    SpeciesTable table_;
    std::vector<ExperimentState> states_;
    std::map<std::string, std::size_t> index_;
    EdgeList perturbations_;
    EdgeList responses_;
    std::set<std::size_t> terminals_;
    std::vector<std::vector<std::size_t>> out_;
};

}  // namespace netrecon
