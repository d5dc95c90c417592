#include "turanlab/canonical.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace turan;

namespace {

// Independent clique oracle: scan every vertex subset.
bool clique_oracle(const SmallGraph& g, int r) {
    for (std::uint64_t mask = 0; mask < (1ull << g.n); ++mask)
        if (std::popcount(mask) == r && is_complete(induced_subgraph(g, mask))) return true;
    return r == 0;
}

// Independent automorphism oracle: try every permutation.
long long aut_oracle(const SmallGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        total += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_SUITE("graph_core") {

TEST_CASE("graph construction and basic accessors") {
    SmallGraph g = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK(graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), error);
    CHECK_THROWS_AS(graph_from_edges(3, {{1, 1}}), error);
    CHECK_THROWS_AS(graph_from_edges(65, {}), error);
    CHECK_THROWS_AS(graph_from_edges(-1, {}), error);
}

TEST_CASE("builders") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(0).n == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), error);
    CHECK(empty_graph(6).edge_count() == 0);
    CHECK(is_complete(complete_graph(7)));
    CHECK(is_complete(empty_graph(1)));
    CHECK_FALSE(is_complete(path_graph(3)));
    CHECK(is_edgeless(empty_graph(4)));
}

TEST_CASE("surgery: induced, union, pad, add_vertex, with_edge") {
    SmallGraph p4 = path_graph(4);
    SmallGraph mid = induced_subgraph(p4, 0b0110);
    CHECK(mid.n == 2);
    CHECK(mid.edge_count() == 1);
    CHECK(induced_subgraph(p4, 0b1001).edge_count() == 0);

    SmallGraph u = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(u.n == 5);
    CHECK(u.edge_count() == 4);
    CHECK_FALSE(u.has_edge(2, 3));
    CHECK(u.has_edge(3, 4));

    SmallGraph padded = pad_to(complete_graph(3), 5);
    CHECK(padded.n == 5);
    CHECK(padded.edge_count() == 3);
    CHECK(padded.degree(4) == 0);
    CHECK_THROWS_AS(pad_to(complete_graph(3), 2), error);

    SmallGraph grown = add_vertex(path_graph(3), 0b101);
    CHECK(grown.n == 4);
    CHECK(grown.has_edge(3, 0));
    CHECK(grown.has_edge(3, 2));
    CHECK_FALSE(grown.has_edge(3, 1));
    CHECK_THROWS_AS(add_vertex(path_graph(3), 0b1000), error);

    CHECK(with_edge(empty_graph(2), 0, 1).edge_count() == 1);
    CHECK_THROWS_AS(with_edge(empty_graph(2), 0, 0), error);
}

TEST_CASE("components") {
    auto comps = component_masks(k2_k3_graph());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b00011);
    CHECK(comps[1] == 0b11100);
    CHECK(component_masks(empty_graph(3)).size() == 3);
    CHECK(component_masks(cycle_graph(5)).size() == 1);
}

TEST_CASE("contains_clique matches the subset oracle") {
    CHECK(contains_clique(complete_graph(5), 5));
    CHECK_FALSE(contains_clique(complete_graph(5), 6));
    CHECK(contains_clique(paw_graph(), 3));
    CHECK_FALSE(contains_clique(paw_graph(), 4));
    CHECK(contains_clique(empty_graph(3), 1));
    CHECK(contains_clique(empty_graph(3), 0));

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        SmallGraph g = random_graph(7, rng);
        for (int r = 1; r <= 7; ++r) CHECK(contains_clique(g, r) == clique_oracle(g, r));
    }
}

TEST_CASE("canonical form is a permutation invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        SmallGraph g = random_graph(n, rng);
        CanonicalCode code = canonical_form(g);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(apply_permutation(g, perm)) == code);
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs with equal degrees") {
    // Both 2-regular on six vertices.
    SmallGraph c6 = cycle_graph(6);
    SmallGraph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(canonical_form(c6) != canonical_form(two_triangles));
    CHECK_FALSE(is_isomorphic(c6, two_triangles));
    CHECK(is_isomorphic(paw_graph(), graph_from_edges(4, {{2, 1}, {1, 0}, {0, 2}, {2, 3}})));
}

TEST_CASE("canonical_relabel realizes its own code") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        SmallGraph g = random_graph(2 + static_cast<int>(rng() % 6), rng);
        SmallGraph rep = canonical_relabel(g);
        CHECK(canonical_form(rep) == canonical_form(g));
        CHECK(is_isomorphic(rep, g));
        CHECK(rep.edge_count() == g.edge_count());
    }
}

TEST_CASE("canonical size cap") {
    CHECK_NOTHROW(canonical_form(empty_graph(10)));
    CHECK_THROWS_AS(canonical_form(empty_graph(11)), error);
    CHECK_THROWS_AS(automorphism_count(empty_graph(11)), error);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(path_graph(4)) == 2);
    CHECK(automorphism_count(complete_graph(4)) == 24);
    CHECK(automorphism_count(bowtie_graph()) == 8);
    CHECK(automorphism_count(cycle_graph(5)) == 10);
    CHECK(automorphism_count(empty_graph(4)) == 24);
    CHECK(automorphism_count(paw_graph()) == 2);

    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        SmallGraph g = random_graph(2 + static_cast<int>(rng() % 5), rng);
        CHECK(automorphism_count(g) == aut_oracle(g));
    }
}

TEST_CASE("graph6 fixed vectors") {
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(from_graph6("Bw") == complete_graph(3));
    CHECK(from_graph6("Bg") == path_graph(3));
    CHECK(from_graph6("@") == complete_graph(1));
}

TEST_CASE("graph6 round trip preserves labels") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        SmallGraph g = random_graph(static_cast<int>(rng() % 13), rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_WITH_AS(from_graph6(""), "empty graph6 string at byte 0", error);
    CHECK_THROWS_WITH_AS(from_graph6("~~~"), "long-form graph6 is not supported at byte 0",
                         error);
    CHECK_THROWS_AS(from_graph6("\x20"), error);     // header below range
    CHECK_THROWS_AS(from_graph6("Bww"), error);      // too long
    CHECK_THROWS_AS(from_graph6("B"), error);        // too short
    CHECK_THROWS_AS(from_graph6("Bx"), error);       // nonzero padding
    CHECK_THROWS_AS(from_graph6(std::string("B") + '\x20'), error); // payload below range
    try {
        from_graph6("Bx");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code == errc::parse);
        CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
    }
}

TEST_CASE("edge list format") {
    CHECK(from_edge_list("3; 0-1,1-2") == path_graph(3));
    CHECK(from_edge_list("4;") == empty_graph(4));
    CHECK(from_edge_list(" 5 ; 0 - 1 , 2-3 ").edge_count() == 2);
    CHECK(to_edge_list(path_graph(3)) == "3; 0-1,1-2");
    CHECK(to_edge_list(empty_graph(2)) == "2;");
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        SmallGraph g = random_graph(1 + static_cast<int>(rng() % 9), rng);
        CHECK(from_edge_list(to_edge_list(g)) == g);
    }
    CHECK_THROWS_AS(from_edge_list("3 0-1"), error);
    CHECK_THROWS_AS(from_edge_list("3; 0-"), error);
    CHECK_THROWS_AS(from_edge_list("3; 0-3"), error);
    CHECK_THROWS_AS(from_edge_list("; 0-1"), error);
}

TEST_CASE("parse_graph dispatches on the semicolon") {
    CHECK(parse_graph("Bw") == complete_graph(3));
    CHECK(parse_graph("3; 0-1,0-2,1-2") == complete_graph(3));
}

TEST_CASE("canonical codes order a dedup set consistently") {
    // Every 4-vertex labeled graph collapses to one of 11 classes.
    std::set<CanonicalCode> codes;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<int, int>> all = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) edges.push_back(all[b]);
        codes.insert(canonical_form(graph_from_edges(4, edges)));
    }
    CHECK(codes.size() == 11);
}

} // TEST_SUITE
