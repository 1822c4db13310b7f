#include <doctest.h>

#include "netrecon/bounds.hpp"
#include "netrecon/io.hpp"

using namespace netrecon;

namespace {

using Key = std::pair<std::string, std::string>;

}  // namespace

TEST_CASE("per-edge step limits count the strict decreases") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    auto edge = [&](const char* a, const char* b) {
        return Edge{g.state_index(a), g.state_index(b)};
    };
    CHECK(edge_step_bound(g, edge("x1", "x2")) == 1);
    CHECK(edge_step_bound(g, edge("x2", "x3")) == 1);
    CHECK(edge_step_bound(g, edge("x5", "x0")) == 2);
    CHECK(edge_step_bound(g, edge("x5", "x0"), 3) == 5);
    CHECK(global_reaction_bound(g) == 7);

    CHECK_THROWS_AS(edge_step_bound(g, Edge{0, 1}, 0), ModelError);
}

TEST_CASE("prospective hidden species widen every edge") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo.exp");
    Bounds b = compute_bounds(g, 2);
    CHECK(b.max_hidden == 2);
    CHECK(b.max_reactions == 15);
    REQUIRE(b.edge_steps.size() == 6);
    CHECK(b.edge_steps.at(Key{"x1", "x2"}) == 3);
    CHECK(b.edge_steps.at(Key{"x2", "x3"}) == 2);
    CHECK(b.edge_steps.at(Key{"x3", "x4"}) == 2);
    CHECK(b.edge_steps.at(Key{"x5", "x0"}) == 3);
    CHECK(b.edge_steps.at(Key{"x6", "x7"}) == 3);
    CHECK(b.edge_steps.at(Key{"x7", "x8"}) == 2);
}

TEST_CASE("tightening keeps the extended demo bounds sharp") {
    ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    Bounds base = compute_bounds(g);
    CHECK(base.max_reactions == 7);

    Bounds tight = tighten_bounds(g, base);
    CHECK(tight.max_reactions == 5);
    for (const auto& [key, steps] : tight.edge_steps) {
        CHECK(steps <= base.edge_steps.at(key));
    }
    CHECK(tight.edge_steps.at(Key{"x5", "x0"}) == 2);
    CHECK(tight.edge_steps.at(Key{"x1", "x2"}) == 1);
}

TEST_CASE("terminal states rule out step vectors during tightening") {
    // From (2) the one-unit step is enabled at the terminal (1), so only the
    // two-unit jump survives and the edge shrinks from two steps to one.
    SpeciesTable t = SpeciesTable::observed({"A"}, {2});
    ExperimentGraph g(t, {{"p", {2}}, {"q", {0}}, {"w", {1}}}, {}, {{"p", "q"}},
                      {"q", "w"});
    Bounds base = compute_bounds(g);
    CHECK(base.edge_steps.at(Key{"p", "q"}) == 2);

    Bounds tight = tighten_bounds(g, base);
    CHECK(tight.edge_steps.at(Key{"p", "q"}) == 1);
    CHECK(tight.max_reactions == 1);
}
