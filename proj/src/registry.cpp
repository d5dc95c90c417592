#include "turanlab/registry.hpp"

#include "turanlab/error.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/multipartite.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>

namespace turan {

std::string provenance_tag(Provenance p) {
    switch (p) {
    case Provenance::Clique: return "clique";
    case Provenance::Matching: return "matching";
    case Provenance::CliqueUnion: return "clique-union";
    case Provenance::CliquePlusVertex: return "clique-plus-vertex";
    case Provenance::CliquePlusPair: return "clique-plus-pair";
    case Provenance::TuranGraph: return "turan-graph";
    case Provenance::TriangleClassic: return "triangle-classic";
    case Provenance::Builtin: return "builtin";
    case Provenance::Extension: return "extension";
    case Provenance::Axiom: return "axiom";
    }
    throw error(errc::internal, "unhandled provenance value");
}

Provenance provenance_from_tag(const std::string& tag) {
    for (Provenance p :
         {Provenance::Clique, Provenance::Matching, Provenance::CliqueUnion,
          Provenance::CliquePlusVertex, Provenance::CliquePlusPair, Provenance::TuranGraph,
          Provenance::TriangleClassic, Provenance::Builtin, Provenance::Extension,
          Provenance::Axiom})
        if (provenance_tag(p) == tag) return p;
    throw error(errc::parse, "unknown provenance tag '" + tag + "'");
}

std::string KCondition::str() const {
    if (hi == 0) return "k >= " + std::to_string(lo);
    if (hi == lo) return "k = " + std::to_string(lo);
    return std::to_string(lo) + " <= k <= " + std::to_string(hi);
}

KCondition parse_k_condition(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    auto number = [&](std::size_t at) {
        if (at >= t.size() || t.find_first_not_of("0123456789", at) != std::string::npos ||
            t.size() - at > 3)
            throw error(errc::parse, "bad k condition '" + s + "'");
        return std::stoi(t.substr(at));
    };
    if (t.rfind("k>=", 0) == 0) return KCondition::at_least(number(3));
    if (t.rfind("k==", 0) == 0) return KCondition::exactly(number(3));
    if (t.rfind("k=", 0) == 0) return KCondition::exactly(number(2));
    throw error(errc::parse, "bad k condition '" + s + "'");
}

namespace {

bool is_path(const SmallGraph& g) {
    if (g.n < 2 || component_masks(g).size() != 1) return false;
    int ends = 0;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++ends;
    }
    return ends == 2;
}

bool is_even_cycle(const SmallGraph& g) {
    if (g.n < 4 || g.n % 2 || component_masks(g).size() != 1) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

GoodnessEntry make_entry(const SmallGraph& h, KCondition cond, Provenance prov,
                         const std::string& note) {
    GoodnessEntry e;
    e.rep = canonical_relabel(h);
    e.code = canonical_form(h);
    e.condition = cond;
    e.provenance = prov;
    e.note = note;
    return e;
}

} // namespace

GoodnessRegistry::GoodnessRegistry() {
    put(make_entry(path_graph(3), KCondition::at_least(3), Provenance::Builtin, "3-vertex path"));
    put(make_entry(path_graph(4), KCondition::at_least(5), Provenance::Builtin, "4-vertex path"));
    put(make_entry(path_graph(5), KCondition::at_least(4), Provenance::Builtin, "5-vertex path"));
    put(make_entry(graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}),
                   KCondition::at_least(4), Provenance::Builtin, "bowtie"));
}

std::optional<GoodnessEntry> GoodnessRegistry::is_known_good(const SmallGraph& h, int k) const {
    if (k < 3) throw error(errc::invalid_argument, "goodness is defined for k >= 3");
    if (h.n < 1) throw error(errc::invalid_argument, "pattern needs at least one vertex");
    // A pattern containing K_k can never be k-good: the host class excludes
    // it outright.
    if (contains_clique(h, k)) return std::nullopt;
    if (is_complete(h))
        return make_entry(h, KCondition::at_least(h.n + 1), Provenance::Clique,
                          "clique on " + std::to_string(h.n) + " vertices");
    auto comps = component_masks(h);
    bool union_of_cliques = true;
    int largest = 0;
    bool all_edges = true;
    for (std::uint64_t mask : comps) {
        if (!is_complete(induced_subgraph(h, mask))) {
            union_of_cliques = false;
            break;
        }
        largest = std::max(largest, std::popcount(mask));
        if (std::popcount(mask) != 2) all_edges = false;
    }
    if (union_of_cliques) {
        if (all_edges)
            return make_entry(h, KCondition::at_least(3), Provenance::Matching,
                              std::to_string(comps.size()) + " disjoint edges");
        return make_entry(h, KCondition::at_least(std::max(3, largest + 1)),
                          Provenance::CliqueUnion, "disjoint cliques, largest on " +
                                                       std::to_string(largest) + " vertices");
    }
    if (k >= h.n)
        for (int v = 0; v < h.n; ++v)
            if (is_complete(induced_subgraph(h, h.full_mask() & ~(1ull << v))))
                return make_entry(h, KCondition::at_least(h.n), Provenance::CliquePlusVertex,
                                  "complete after deleting one vertex");
    if (k == h.n)
        for (auto [u, v] : h.edges())
            if (is_complete(induced_subgraph(h, h.full_mask() & ~(1ull << u) & ~(1ull << v))))
                return make_entry(h, KCondition::exactly(h.n), Provenance::CliquePlusPair,
                                  "complete after deleting one edge's endpoints");
    if (h.n <= 10 && is_isomorphic(h, realize_multipartite(turan_parts(k - 1, h.n))))
        return make_entry(h, KCondition::exactly(k), Provenance::TuranGraph,
                          "Turán graph on " + std::to_string(h.n) + " vertices");
    if (k == 3 && (is_path(h) || is_even_cycle(h) ||
                   (h.n <= 10 && is_isomorphic(h, realize_multipartite(part_vector({3, 2}))))))
        return make_entry(h, KCondition::exactly(3), Provenance::TriangleClassic,
                          "triangle case: paths, even cycles, K_{2,3}");
    if (h.n <= 10) {
        CanonicalCode code = canonical_form(h);
        for (const GoodnessEntry& e : entries_)
            if (e.code == code && e.condition.contains(k)) return e;
    }
    return std::nullopt;
}

std::pair<SmallGraph, GoodnessEntry>
GoodnessRegistry::extend_by_attachment(const SmallGraph& h, std::uint64_t clique_mask,
                                       const std::vector<std::pair<int, int>>& joins, int k) {
    if (k < 3) throw error(errc::invalid_argument, "goodness is defined for k >= 3");
    auto base = is_known_good(h, k);
    if (!base)
        throw error(errc::unverified, "base pattern is not known " + std::to_string(k) + "-good");
    if (clique_mask & ~h.full_mask())
        throw error(errc::invalid_argument, "clique mask references missing vertices");
    if (!is_complete(induced_subgraph(h, clique_mask)))
        throw error(errc::invalid_type, "attachment set must induce a clique");
    if (h.n + k - 1 > 10)
        throw error(errc::size_cap, "extension result exceeds the 10-vertex registry cap");
    SmallGraph out = disjoint_union(h, complete_graph(k - 1));
    for (auto [a, t] : joins) {
        if (a < 0 || a >= h.n || !(clique_mask >> a & 1) || t < 0 || t >= k - 1)
            throw error(errc::invalid_argument, "join pair outside the clique or the new K_{k-1}");
        out = with_edge(out, a, h.n + t);
    }
    if (contains_clique(out, k))
        throw error(errc::invalid_type, "attachment creates a K_" + std::to_string(k));
    GoodnessEntry e = make_entry(out, KCondition::exactly(k), Provenance::Extension,
                                 "clique attachment on " + to_graph6(base->rep) + " (" +
                                     provenance_tag(base->provenance) + ")");
    return {out, put(std::move(e))};
}

GoodnessEntry GoodnessRegistry::register_axiom(const SmallGraph& h, KCondition condition,
                                               const std::string& note) {
    if (condition.lo < 3) throw error(errc::invalid_argument, "axioms need k >= 3");
    if (h.n < 1 || h.n > 10)
        throw error(errc::size_cap, "axioms capped at 10 vertices");
    if (contains_clique(h, condition.lo))
        throw error(errc::invalid_type,
                    "pattern contains K_" + std::to_string(condition.lo) +
                        " and cannot be " + std::to_string(condition.lo) + "-good");
    return put(make_entry(h, condition, Provenance::Axiom, note));
}

GoodnessEntry GoodnessRegistry::put(GoodnessEntry e) {
    for (const GoodnessEntry& have : entries_)
        if (have.code == e.code && have.condition == e.condition &&
            have.provenance == e.provenance)
            return have;
    entries_.push_back(std::move(e));
    return entries_.back();
}

void GoodnessRegistry::dump(std::ostream& out) const {
    for (const GoodnessEntry& e : entries_) {
        nlohmann::json j;
        j["graph"] = to_graph6(e.rep);
        j["k"] = e.condition.str();
        j["provenance"] = provenance_tag(e.provenance);
        j["note"] = e.note;
        out << j.dump() << "\n";
    }
}

int GoodnessRegistry::load(std::istream& in) {
    int added = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
            GoodnessEntry e = make_entry(from_graph6(j.at("graph").get<std::string>()),
                                         parse_k_condition(j.at("k").get<std::string>()),
                                         provenance_from_tag(j.at("provenance").get<std::string>()),
                                         j.value("note", ""));
            std::size_t before = entries_.size();
            put(std::move(e));
            added += entries_.size() != before;
        } catch (const nlohmann::json::exception& err) {
            throw error(errc::parse,
                        "registry line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return added;
}

} // namespace turan
