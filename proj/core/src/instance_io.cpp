#include "netrecon/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace netrecon {

namespace {

int parse_int(const std::string& tok, int line) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("expected an integer, got '" + tok + "'", line);
    return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

struct RawState {
    std::string id;
    std::vector<std::pair<std::string, int>> assignments;
    int line;
};

}  // namespace

ExperimentGraph parse_instance(std::istream& in) {
    std::vector<std::string> species_names;
    std::vector<int> species_maxima;
    std::set<std::string> species_seen;
    std::vector<RawState> raw_states;
    std::set<std::string> state_seen;
    std::vector<std::pair<std::string, std::string>> perturbations;
    std::vector<std::pair<std::string, std::string>> responses;
    std::vector<std::string> terminals;
    std::set<std::string> terminal_seen;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;

        const std::string& kw = toks[0];
        if (kw == "species") {
            if (toks.size() != 3)
                throw ParseError("species takes a name and a range", lineno);
            const std::string& name = toks[1];
            if (name.find('=') != std::string::npos)
                throw ParseError("species name must not contain '='", lineno);
            if (!species_seen.insert(name).second)
                throw ParseError("species " + name + " declared twice", lineno);
            auto dots = toks[2].find("..");
            if (dots == std::string::npos)
                throw ParseError("range must look like 0..N", lineno);
            int lo = parse_int(toks[2].substr(0, dots), lineno);
            int hi = parse_int(toks[2].substr(dots + 2), lineno);
            if (lo != 0) throw ModelError("species " + name + " must start at 0");
            if (hi < 0) throw ModelError("species " + name + " has a negative capacity");
            species_names.push_back(name);
            species_maxima.push_back(hi);
        } else if (kw == "state") {
            if (toks.size() < 2) throw ParseError("state takes an id", lineno);
            RawState rs{toks[1], {}, lineno};
            if (!state_seen.insert(rs.id).second)
                throw ParseError("state " + rs.id + " declared twice", lineno);
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto eq = toks[i].find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 == toks[i].size() ||
                    toks[i].find('=', eq + 1) != std::string::npos)
                    throw ParseError("expected name=value, got '" + toks[i] + "'", lineno);
                rs.assignments.emplace_back(toks[i].substr(0, eq),
                                            parse_int(toks[i].substr(eq + 1), lineno));
            }
            raw_states.push_back(std::move(rs));
        } else if (kw == "perturb" || kw == "response") {
            if (toks.size() != 3)
                throw ParseError(kw + " takes two state ids", lineno);
            auto& list = kw == "perturb" ? perturbations : responses;
            list.emplace_back(toks[1], toks[2]);
        } else if (kw == "terminal") {
            if (toks.size() != 2) throw ParseError("terminal takes one state id", lineno);
            if (!terminal_seen.insert(toks[1]).second)
                throw ParseError("terminal " + toks[1] + " declared twice", lineno);
            terminals.push_back(toks[1]);
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno);
        }
    }

    if (raw_states.empty()) throw ModelError("at least one state required");
    if (species_names.empty()) throw ModelError("at least one species required");

    SpeciesTable table = SpeciesTable::observed(species_names, species_maxima);
    std::vector<ExperimentState> states;
    for (const RawState& rs : raw_states) {
        StateVector values(table.size());
        std::vector<bool> assigned(table.size(), false);
        for (const auto& [name, value] : rs.assignments) {
            auto idx = table.index_of(name);
            if (!idx) throw ModelError("state " + rs.id + " assigns unknown species " + name);
            if (assigned[*idx])
                throw ModelError("state " + rs.id + " assigns " + name + " twice");
            assigned[*idx] = true;
            values[*idx] = value;
        }
        for (std::size_t k = 0; k < table.size(); ++k)
            if (!assigned[k])
                throw ModelError("state " + rs.id + " does not assign species " +
                                 table.name(k));
        states.push_back({rs.id, std::move(values)});
    }

    return ExperimentGraph(std::move(table), std::move(states), perturbations, responses,
                           terminals);
}

ExperimentGraph parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_instance(in);
}

void write_instance(std::ostream& out, const ExperimentGraph& g) {
    const SpeciesTable& table = g.species();
    for (std::size_t k = 0; k < table.size(); ++k)
        out << "species " << table.name(k) << " 0.." << table.max_value(k) << "\n";
    for (std::size_t i = 0; i < g.state_count(); ++i) {
        out << "state " << g.state(i).id;
        for (std::size_t k = 0; k < table.size(); ++k)
            out << ' ' << table.name(k) << '=' << g.state(i).values[k];
        out << "\n";
    }
    for (const auto& [a, b] : g.perturbation_edges())
        out << "perturb " << g.state(a).id << ' ' << g.state(b).id << "\n";
    for (const auto& [a, b] : g.response_edges())
        out << "response " << g.state(a).id << ' ' << g.state(b).id << "\n";
    for (std::size_t t : g.terminals()) out << "terminal " << g.state(t).id << "\n";
}

std::string instance_digest(const ExperimentGraph& g) {
    // Declaration order must not matter, so every section is sorted.
    const SpeciesTable& table = g.species();
    std::ostringstream ss;
    for (std::size_t k = 0; k < table.size(); ++k)
        ss << "species " << table.name(k) << " 0.." << table.max_value(k) << "\n";

    std::vector<std::size_t> order(g.state_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.state(a).id < g.state(b).id;
    });
    for (std::size_t i : order) {
        ss << "state " << g.state(i).id;
        for (int v : g.state(i).values) ss << ' ' << v;
        ss << "\n";
    }

    auto id_pairs = [&](const EdgeList& edges, const char* kw) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [a, b] : edges) pairs.emplace_back(g.state(a).id, g.state(b).id);
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [a, b] : pairs) ss << kw << ' ' << a << ' ' << b << "\n";
    };
    id_pairs(g.perturbation_edges(), "perturb");
    id_pairs(g.response_edges(), "response");

    std::vector<std::string> terms;
    for (std::size_t t : g.terminals()) terms.push_back(g.state(t).id);
    std::sort(terms.begin(), terms.end());
    for (const auto& t : terms) ss << "terminal " << t << "\n";

    unsigned long long hash = 14695981039346656037ULL;
    for (unsigned char c : ss.str()) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[hash & 0xF];
        hash >>= 4;
    }
    return hex;
}

RegulatoryStructure parse_structure(std::istream& in, const SpeciesTable& table) {
    std::vector<std::pair<std::string, Reaction>> named;
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<std::string, std::string>> slower_names;
    std::vector<int> slower_lines;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;

        if (toks[0] == "reaction") {
            if (toks.size() != table.size() + 2)
                throw ParseError("reaction takes a name and one entry per species", lineno);
            const std::string& name = toks[1];
            if (index.count(name))
                throw ParseError("reaction " + name + " declared twice", lineno);
            std::vector<int> delta;
            for (std::size_t i = 2; i < toks.size(); ++i)
                delta.push_back(parse_int(toks[i], lineno));
            index.emplace(name, named.size());
            named.emplace_back(name, Reaction::create(std::move(delta), table));
        } else if (toks[0] == "slower") {
            if (toks.size() != 3)
                throw ParseError("slower takes two reaction names", lineno);
            slower_names.emplace_back(toks[1], toks[2]);
            slower_lines.push_back(lineno);
        } else {
            throw ParseError("unknown directive '" + toks[0] + "'", lineno);
        }
    }

    if (named.empty()) throw ModelError("at least one reaction required");

    std::vector<Reaction> reactions;
    for (auto& [name, r] : named) reactions.push_back(r);
    std::set<std::pair<std::size_t, std::size_t>> slower;
    for (std::size_t i = 0; i < slower_names.size(); ++i) {
        const auto& [a, b] = slower_names[i];
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw ParseError("unknown reaction '" + a + "'", slower_lines[i]);
        if (ib == index.end())
            throw ParseError("unknown reaction '" + b + "'", slower_lines[i]);
        slower.emplace(ia->second, ib->second);
    }
    return RegulatoryStructure::create(std::move(reactions), slower);
}

}  // namespace netrecon
