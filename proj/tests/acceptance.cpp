#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netrecon/cli.hpp"
#include "netrecon/extension.hpp"
#include "netrecon/io.hpp"
#include "netrecon/oracle.hpp"
#include "netrecon/pipeline.hpp"
#include "netrecon/simulate.hpp"
#include "netrecon/validity.hpp"

using namespace netrecon;

namespace {

using Clock = std::chrono::steady_clock;
using PairSet = std::set<std::pair<std::size_t, std::size_t>>;
using ReactionSet = std::set<std::vector<int>>;
using Family = std::set<ReactionSet>;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    bool ok = false;
    double seconds = 0;
    std::string note;
};

struct Tally {
    long long checked = 0;
    long long failed = 0;
    double seconds = 0;

    void check(const RegulatoryStructure& rs, const ExperimentGraph& g) {
        auto t0 = Clock::now();
        ++checked;
        if (!check_conformal(rs, g).conformal()) ++failed;
        seconds += seconds_since(t0);
    }
};

Extension first_demo_extension() {
    Extension e;
    e.hidden_count = 2;
    e.assignment = {{"x0", {0, 0}}, {"x1", {0, 0}}, {"x2", {1, 0}},
                    {"x3", {0, 1}}, {"x4", {0, 0}}, {"x5", {1, 0}},
                    {"x6", {0, 1}}, {"x7", {0, 1}}, {"x8", {0, 0}}};
    return e;
}

Extension second_demo_extension() {
    Extension e;
    e.hidden_count = 2;
    e.assignment = {{"x0", {0, 0}}, {"x1", {0, 0}}, {"x2", {1, 1}},
                    {"x3", {0, 1}}, {"x4", {0, 0}}, {"x5", {1, 1}},
                    {"x6", {0, 1}}, {"x7", {0, 1}}, {"x8", {0, 0}}};
    return e;
}

ReactionSet delta_set(const RegulatoryStructure& rs) {
    ReactionSet out;
    for (const Reaction& r : rs.reactions()) out.insert(r.delta());
    return out;
}

bool contains_all(const PairSet& have, const PairSet& want) {
    return std::includes(have.begin(), have.end(), want.begin(), want.end());
}

// Distinct assignments reachable by permuting hidden columns.
std::size_t orbit_size(const Extension& e) {
    if (e.hidden_count == 0) return 1;
    std::vector<std::size_t> idx(e.hidden_count);
    std::iota(idx.begin(), idx.end(), 0);
    std::set<std::map<std::string, std::vector<int>>> seen;
    do {
        std::map<std::string, std::vector<int>> permuted;
        for (const auto& [id, v] : e.assignment) {
            std::vector<int> w;
            for (std::size_t j : idx) w.push_back(v[j]);
            permuted.emplace(id, std::move(w));
        }
        seen.insert(std::move(permuted));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return seen.size();
}

std::optional<ExperimentGraph> random_instance(std::mt19937& rng) {
    std::size_t n_sp = 1 + rng() % 3;
    std::size_t n_st = 2 + rng() % 5;

    std::vector<std::string> names;
    std::vector<int> caps;
    for (std::size_t k = 0; k < n_sp; ++k) {
        names.push_back("m" + std::to_string(k + 1));
        caps.push_back(1);
    }
    std::vector<ExperimentState> states;
    for (std::size_t i = 0; i < n_st; ++i) {
        StateVector v(n_sp);
        for (std::size_t k = 0; k < n_sp; ++k) v[k] = static_cast<int>(rng() % 2);
        states.push_back({"s" + std::to_string(i + 1), std::move(v)});
    }

    std::vector<std::size_t> perm(n_st);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n_st - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % (i + 1)]);

    std::size_t edges = std::min<std::size_t>(1 + rng() % 3, n_st - 1);
    bool cycle = edges >= 2 && rng() % 100 < 15;
    std::vector<std::pair<std::string, std::string>> responses;
    std::set<std::pair<std::size_t, std::size_t>> taken;
    for (std::size_t i = 0; i < edges; ++i) {
        std::size_t src = perm[i];
        std::size_t tgt = (cycle && i + 1 == edges) ? perm[0] : perm[i + 1];
        responses.emplace_back(states[src].id, states[tgt].id);
        taken.insert({src, tgt});
    }

    std::vector<std::string> terminals;
    std::set<std::size_t> sources(perm.begin(), perm.begin() + edges);
    for (std::size_t i = 0; i < n_st; ++i) {
        if (sources.count(i)) continue;
        unsigned chance = (!cycle && i == perm[edges]) ? 80 : 50;
        if (rng() % 100 < chance) terminals.push_back(states[i].id);
    }

    std::vector<std::pair<std::string, std::string>> perturbations;
    std::size_t wanted = rng() % 3;
    for (std::size_t j = 0; j < wanted; ++j) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            std::size_t a = rng() % n_st;
            std::size_t b = rng() % n_st;
            if (a == b || taken.count({a, b})) continue;
            taken.insert({a, b});
            perturbations.emplace_back(states[a].id, states[b].id);
            break;
        }
    }

    try {
        return ExperimentGraph(SpeciesTable::observed(names, caps), states, perturbations,
                               responses, terminals);
    } catch (const ModelError&) {
        return std::nullopt;
    }
}

}  // namespace

int main() {
    const std::string demo_path = NETRECON_INSTANCE_DIR "/demo.exp";
    const std::string cascade_path = NETRECON_INSTANCE_DIR "/cascade10.exp";

    std::vector<Line> lines(8);
    Tally tally;

    // 1: the fault report on the nine-state instance.
    try {
        std::fprintf(stderr, "acceptance: validation report\n");
        auto t0 = Clock::now();
        ExperimentGraph demo = parse_instance_file(demo_path);
        ValidityReport r = validate(demo);
        bool ok = !r.is_valid() && r.multiple_response_states.empty() &&
                  r.dangling_states.empty() &&
                  r.equal_terminal_violations ==
                      std::vector<std::pair<std::string, std::string>>{{"x5", "x6"}} &&
                  r.nondecreasing_edges == std::vector<std::pair<std::string, std::string>>{
                                               {"x2", "x3"}, {"x3", "x4"}, {"x7", "x8"}};
        double el = seconds_since(t0);
        lines[0] = {ok && el < 1.0, el, ""};
    } catch (const std::exception& e) {
        lines[0] = {false, 0, e.what()};
    }

    // 2: the minimal extension pair, canonical and counted with column orbits.
    try {
        std::fprintf(stderr, "acceptance: minimal extensions\n");
        auto t0 = Clock::now();
        ExperimentGraph demo = parse_instance_file(demo_path);
        ExtensionSearchResult r = minimal_valid_extensions(demo, 4);
        bool ok = r.feasible && r.hidden_count == 2 && r.change_count == 5 &&
                  r.extensions ==
                      std::vector<Extension>{first_demo_extension(), second_demo_extension()};
        std::size_t raw = 0;
        for (const Extension& e : r.extensions) raw += orbit_size(e);
        ok = ok && raw == 4;
        double el = seconds_since(t0);
        lines[1] = {ok && el < 10.0, el,
                    "hidden " + std::to_string(r.hidden_count) + ", changes " +
                        std::to_string(r.change_count) + ", raw " + std::to_string(raw)};
    } catch (const std::exception& e) {
        lines[1] = {false, 0, e.what()};
    }

    // 3: per extension exactly one structure, with the forced order.
    try {
        std::fprintf(stderr, "acceptance: full solve of the nine-state instance\n");
        auto t0 = Clock::now();
        ExperimentGraph demo = parse_instance_file(demo_path);
        SolveOptions opts;
        SolveResult sr = solve_instance(demo, opts);

        const ReactionSet set_a{{-1, 0, 0, 1, 0},
                                {0, -1, 0, -1, 0},
                                {0, -1, 0, 0, 0},
                                {0, 0, 0, -1, 1},
                                {0, 0, 1, 0, -1}};
        const PairSet pairs_a{{2, 1}, {3, 1}, {4, 1}, {4, 2}};
        const ReactionSet set_b{{-1, 0, 0, 1, 1},
                                {0, -1, 0, -1, -1},
                                {0, -1, 0, 0, 0},
                                {0, 0, 0, -1, 0},
                                {0, 0, 1, 0, -1}};
        const PairSet pairs_b{{2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}};

        bool ok = sr.results.size() == 2 &&
                  sr.extensions.extensions ==
                      std::vector<Extension>{first_demo_extension(), second_demo_extension()};
        if (ok) {
            const auto& first = sr.results[0];
            const auto& second = sr.results[1];
            ok = first.solutions.size() == 1 && second.solutions.size() == 1 &&
                 delta_set(first.solutions[0].structure) == set_a &&
                 delta_set(second.solutions[0].structure) == set_b &&
                 contains_all(first.solutions[0].structure.slower_pairs(), pairs_a) &&
                 contains_all(second.solutions[0].structure.slower_pairs(), pairs_b);
        }
        for (const auto& per : sr.results) {
            ExperimentGraph ext = extend(demo, per.extension);
            for (const Solution& s : per.solutions) tally.check(s.structure, ext);
        }
        double el = seconds_since(t0);
        lines[2] = {ok && el < 60.0, el, ""};
    } catch (const std::exception& e) {
        lines[2] = {false, 0, e.what()};
    }

    // 5 and 6: the random corpus against the exhaustive oracle.
    try {
        std::fprintf(stderr, "acceptance: random corpus\n");
        auto t0 = Clock::now();
        std::mt19937 rng(20240817);
        int compared = 0, attempts = 0, skipped = 0;
        bool ext_ok = true, fam_ok = true;
        bool size_ok = true, witness_ok = true, tighten_ok = true;

        while (compared < 200 && attempts < 4000 && seconds_since(t0) < 590.0) {
            ++attempts;
            auto maybe = random_instance(rng);
            if (!maybe) continue;
            const ExperimentGraph& g = *maybe;
            try {
                ExtensionSearchResult eng = minimal_valid_extensions(g, 2);
                ExtensionSearchResult orc = brute_minimal_extensions(g, 2);
                bool same = eng.feasible == orc.feasible;
                if (same && eng.feasible) {
                    same = eng.hidden_count == orc.hidden_count &&
                           eng.change_count == orc.change_count;
                    std::set<Extension> canon;
                    for (const Extension& e : orc.extensions)
                        canon.insert(canonicalize_hidden(g, e));
                    std::set<Extension> engine(eng.extensions.begin(), eng.extensions.end());
                    same = same && canon == engine;
                }
                if (!same) ext_ok = false;

                if (validate(g).is_valid()) {
                    SearchConfig cfg;
                    cfg.bounds = compute_bounds(g);
                    auto sols = enumerate_structures_all(g, cfg);
                    Family fam_engine;
                    for (const Solution& s : sols) fam_engine.insert(delta_set(s.structure));
                    Family fam_oracle = brute_structures(g, 99);
                    if (fam_engine != fam_oracle) fam_ok = false;

                    int cap = global_reaction_bound(g);
                    for (const ReactionSet& st : fam_oracle)
                        if (static_cast<int>(st.size()) > cap) size_ok = false;
                    for (const Solution& s : sols)
                        for (const Realization& re : s.realizations)
                            if (static_cast<int>(re.fired.size()) >
                                edge_step_bound(g, re.edge))
                                witness_ok = false;

                    SearchConfig tight;
                    tight.bounds = tighten_bounds(g, cfg.bounds);
                    Family fam_tight;
                    for (const Solution& s : enumerate_structures_all(g, tight))
                        fam_tight.insert(delta_set(s.structure));
                    for (const ReactionSet& st : fam_oracle)
                        if (!fam_tight.count(st)) tighten_ok = false;

                    for (const Solution& s : sols) tally.check(s.structure, g);
                }

                if (eng.feasible && eng.hidden_count > 0) {
                    for (const Extension& e : eng.extensions) {
                        ExperimentGraph ext = extend(g, e);
                        SearchConfig cfg;
                        cfg.bounds = compute_bounds(ext);
                        for (const Solution& s : enumerate_structures_all(ext, cfg))
                            tally.check(s.structure, ext);
                    }
                }
                ++compared;
            } catch (const ModelError&) {
                ++skipped;
            }
        }
        double el = seconds_since(t0);
        std::string note = "compared " + std::to_string(compared) + ", skipped " +
                           std::to_string(skipped);
        lines[4] = {ext_ok && fam_ok && compared >= 200 && el < 600.0, el, note};
        lines[5] = {size_ok && witness_ok && tighten_ok && compared >= 200, el, note};
    } catch (const std::exception& e) {
        lines[4] = {false, 0, e.what()};
        lines[5] = {false, 0, e.what()};
    }

    // 7: worker count must not change a byte of output.
    try {
        std::fprintf(stderr, "acceptance: worker determinism\n");
        auto t0 = Clock::now();
        std::ostringstream out1, err1, out4, err4;
        int c1 = run_cli({"solve", demo_path, "--workers", "1"}, out1, err1);
        int c4 = run_cli({"solve", demo_path, "--workers", "4"}, out4, err4);
        bool ok = c1 == 0 && c4 == 0 && !out1.str().empty() && out1.str() == out4.str();
        double el = seconds_since(t0);
        lines[6] = {ok, el, ""};
    } catch (const std::exception& e) {
        lines[6] = {false, 0, e.what()};
    }

    // 8: the ten-species cascade within one hour and two gigabytes.
    try {
        std::fprintf(stderr, "acceptance: ten-species cascade\n");
        auto t0 = Clock::now();
        ExperimentGraph casc = parse_instance_file(cascade_path);
        bool ok = validate(casc).is_valid();

        SolveOptions opts;
        opts.max_hidden = 1;
        SolveResult sr = solve_instance(casc, opts);
        ok = ok && sr.extensions.feasible && sr.extensions.hidden_count == 1 &&
             sr.extensions.change_count == 1;

        std::size_t total = 0;
        for (const auto& per : sr.results) {
            total += per.solutions.size();
            ExperimentGraph ext = extend(casc, per.extension);
            for (const Solution& s : per.solutions) tally.check(s.structure, ext);
        }
        ok = ok && total >= 1;

        double el = seconds_since(t0);
        struct rusage ru{};
        getrusage(RUSAGE_SELF, &ru);
        long rss_mib = ru.ru_maxrss / 1024;
        ok = ok && el < 3600.0 && ru.ru_maxrss < 2L * 1024 * 1024;
        lines[7] = {ok, el,
                    std::to_string(sr.results.size()) + " extensions, " +
                        std::to_string(total) + " solutions, rss " +
                        std::to_string(rss_mib) + " MiB"};
    } catch (const std::exception& e) {
        lines[7] = {false, 0, e.what()};
    }

    // 4: every solution emitted anywhere above went through the simulator.
    lines[3] = {tally.checked > 0 && tally.failed == 0, tally.seconds,
                "checked " + std::to_string(tally.checked) + ", failed " +
                    std::to_string(tally.failed)};

    const char* names[8] = {
        "validation findings on the nine-state instance",
        "minimal extension pair with column-orbit count",
        "one forced structure per extension",
        "every emitted solution passes the conformality check",
        "random corpus agrees with the exhaustive oracle",
        "search bounds hold across the corpus",
        "worker count leaves solve output unchanged",
        "ten-species cascade solved within time and memory budget",
    };

    bool all_ok = true;
    for (int i = 0; i < 8; ++i) {
        all_ok = all_ok && lines[i].ok;
        std::printf("[%s] %d. %s (%.2fs)%s%s\n", lines[i].ok ? "PASS" : "FAIL", i + 1,
                    names[i], lines[i].seconds, lines[i].note.empty() ? "" : " - ",
                    lines[i].note.c_str());
    }
    return all_ok ? 0 : 1;
}
