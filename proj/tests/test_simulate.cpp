#include <doctest.h>

#include "netrecon/io.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/simulate.hpp"

using namespace netrecon;

namespace {

RegulatoryStructure demo_structure(const SpeciesTable& t) {
    return RegulatoryStructure::create(
        {Reaction::create({-1, 0, 0, 1, 0}, t), Reaction::create({0, -1, 0, -1, 0}, t),
         Reaction::create({0, -1, 0, 0, 0}, t), Reaction::create({0, 0, 0, -1, 1}, t),
         Reaction::create({0, 0, 1, 0, -1}, t)},
        {{2, 1}, {3, 1}, {4, 1}, {4, 2}});
}

}  // namespace

TEST_CASE("runs follow the fastest enabled reaction to a fixpoint") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    RegulatoryStructure rs = demo_structure(g.species());

    Trajectory t = run(rs, g.state(g.state_index("x1")).values, g.species());
    CHECK(t.outcome == RunOutcome::ReachedFixpoint);
    CHECK(t.fired == std::vector<std::size_t>{0, 3, 4});
    CHECK(t.states.back() == g.state(g.state_index("x4")).values);

    Trajectory u = run(rs, g.state(g.state_index("x5")).values, g.species());
    CHECK(u.outcome == RunOutcome::ReachedFixpoint);
    CHECK(u.fired == std::vector<std::size_t>{1});
    CHECK(u.states.back() == StateVector{0, 0, 0, 0, 0});
}

TEST_CASE("incomparable enabled reactions stall the run") {
    SpeciesTable t = SpeciesTable::observed({"A", "B"}, {1, 1});
    RegulatoryStructure rs = RegulatoryStructure::create(
        {Reaction::create({-1, 0}, t), Reaction::create({0, -1}, t)}, {});
    Trajectory tr = run(rs, {1, 1}, t);
    CHECK(tr.outcome == RunOutcome::NondeterministicStall);
    CHECK(tr.fired.empty());
    CHECK(tr.states == std::vector<StateVector>{{1, 1}});
}

TEST_CASE("state revisits are reported as cycles") {
    SpeciesTable t = SpeciesTable::observed({"A", "B"}, {1, 1});
    RegulatoryStructure rs = RegulatoryStructure::create(
        {Reaction::create({-1, 1}, t), Reaction::create({1, -1}, t)}, {});
    Trajectory tr = run(rs, {1, 0}, t);
    CHECK(tr.outcome == RunOutcome::CycleDetected);
    CHECK(tr.fired == std::vector<std::size_t>{0, 1});
    CHECK(tr.states.back() == StateVector{1, 0});

    Trajectory lim = run(rs, {1, 0}, t, 1);
    CHECK(lim.outcome == RunOutcome::StepLimit);
    CHECK(lim.fired == std::vector<std::size_t>{0});
}

TEST_CASE("runs reject out-of-range start states") {
    SpeciesTable t = SpeciesTable::observed({"A"}, {1});
    RegulatoryStructure rs =
        RegulatoryStructure::create({Reaction::create({-1}, t)}, {});
    CHECK_THROWS_AS(run(rs, {2}, t), ModelError);
}

TEST_CASE("outcome names round-trip to strings") {
    CHECK(to_string(RunOutcome::ReachedFixpoint) == "reached-fixpoint");
    CHECK(to_string(RunOutcome::NondeterministicStall) == "nondeterministic-stall");
    CHECK(to_string(RunOutcome::CycleDetected) == "cycle-detected");
    CHECK(to_string(RunOutcome::StepLimit) == "step-limit");
}

TEST_CASE("the known structure is conformal with the extended demo") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    ConformalityReport rep = check_conformal(demo_structure(g.species()), g);
    CHECK(rep.conformal());
    CHECK(rep.terminal_enabled.empty());
    CHECK(rep.edge_failures.empty());
    CHECK(rep.unused_reactions.empty());
}

TEST_CASE("a missing reaction shows up as an unrealized edge") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    const SpeciesTable& t = g.species();
    RegulatoryStructure rs = RegulatoryStructure::create(
        {Reaction::create({0, -1, 0, -1, 0}, t), Reaction::create({0, -1, 0, 0, 0}, t),
         Reaction::create({0, 0, 0, -1, 1}, t), Reaction::create({0, 0, 1, 0, -1}, t)},
        {{1, 0}, {2, 0}, {3, 0}, {3, 1}});
    ConformalityReport rep = check_conformal(rs, g);
    CHECK_FALSE(rep.conformal());
    CHECK(rep.edge_failures ==
          std::vector<std::pair<std::string, std::string>>{{"x1", "x2"}});
}

TEST_CASE("terminal-enabled and never-fired reactions are reported") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    const SpeciesTable& t = g.species();
    RegulatoryStructure rs = RegulatoryStructure::create(
        {Reaction::create({-1, 0, 0, 1, 0}, t), Reaction::create({0, -1, 0, -1, 0}, t),
         Reaction::create({0, -1, 0, 0, 0}, t), Reaction::create({0, 0, -1, 0, 0}, t),
         Reaction::create({0, 0, 0, -1, 1}, t), Reaction::create({0, 0, 1, 0, -1}, t)},
        {{2, 1}, {4, 1}, {5, 1}, {5, 2}});
    ConformalityReport rep = check_conformal(rs, g);
    CHECK_FALSE(rep.conformal());
    CHECK(rep.terminal_enabled ==
          std::vector<std::pair<std::string, std::size_t>>{{"x4", 3}, {"x8", 3}});
    CHECK(rep.edge_failures.empty());
    CHECK(rep.unused_reactions == std::vector<std::size_t>{3});
}

TEST_CASE("non-monotone realizations fail the edge check") {
    SpeciesTable t = SpeciesTable::observed({"A", "B"}, {1, 1});
    ExperimentGraph g(t, {{"p", {1, 0}}, {"q", {0, 0}}}, {}, {{"p", "q"}}, {"q"});
    RegulatoryStructure rs = RegulatoryStructure::create(
        {Reaction::create({-1, 1}, t), Reaction::create({0, -1}, t)}, {});
    ConformalityReport rep = check_conformal(rs, g);
    CHECK(rep.edge_failures ==
          std::vector<std::pair<std::string, std::string>>{{"p", "q"}});
    CHECK(rep.unused_reactions == std::vector<std::size_t>{0, 1});
}

TEST_CASE("conformality checking requires a usable graph") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo.exp");
    SpeciesTable t = g.species();
    RegulatoryStructure rs =
        RegulatoryStructure::create({Reaction::create({-1, 0, 0}, t)}, {});
    CHECK_THROWS_AS(check_conformal(rs, g), ModelError);
}
