#include "turanlab/canonical.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/multipartite.hpp"
#include "turanlab/tables.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace turan;

namespace {

// Column index of the type isomorphic to t; the table must contain it.
std::size_t column_of(const TypeTable& table, const SmallGraph& t) {
    for (std::size_t i = 0; i < table.types.size(); ++i)
        if (is_isomorphic(table.types[i], t)) return i;
    REQUIRE(false);
    return 0;
}

bool same_table(const TypeTable& a, const TypeTable& b) {
    return a.h == b.h && a.k == b.k && a.m == b.m && a.gadgets == b.gadgets &&
           a.types == b.types && a.gadget_counts == b.gadget_counts &&
           a.h_counts == b.h_counts;
}

} // namespace

TEST_SUITE("tables") {

TEST_CASE("four-vertex table for the three-edge path") {
    SmallGraph p4 = path_graph(4);
    TypeTable table =
        build_type_table(p4, std::nullopt, {matching_graph(2), complete_graph(3), complete_graph(4)});
    REQUIRE(table.types.size() == 5);
    REQUIRE(table.gadgets.size() == 3);
    CHECK(table.m == 4);
    // Small gadgets are padded up to the pattern size.
    CHECK(table.gadgets[1].n == 4);
    CHECK(table.gadgets[1].edge_count() == 3);

    SmallGraph diamond = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}});
    std::size_t c_p4 = column_of(table, p4);
    std::size_t c_c4 = column_of(table, cycle_graph(4));
    std::size_t c_paw = column_of(table, paw_graph());
    std::size_t c_dia = column_of(table, diamond);
    std::size_t c_k4 = column_of(table, complete_graph(4));

    auto row_at = [&](std::size_t r) {
        std::vector<Count> row(5);
        row[0] = table.gadget_counts[r][c_p4];
        row[1] = table.gadget_counts[r][c_c4];
        row[2] = table.gadget_counts[r][c_paw];
        row[3] = table.gadget_counts[r][c_dia];
        row[4] = table.gadget_counts[r][c_k4];
        return row;
    };
    CHECK(row_at(0) == std::vector<Count>{1, 2, 1, 2, 3});
    CHECK(row_at(1) == std::vector<Count>{0, 0, 1, 2, 4});
    CHECK(row_at(2) == std::vector<Count>{0, 0, 0, 0, 1});
    CHECK(table.h_counts[c_p4] == 1);
    CHECK(table.h_counts[c_c4] == 4);
    CHECK(table.h_counts[c_paw] == 2);
    CHECK(table.h_counts[c_dia] == 6);
    CHECK(table.h_counts[c_k4] == 12);
}

TEST_CASE("five-vertex clique-bounded table for the four-edge path") {
    SmallGraph p5 = path_graph(5);
    TypeTable table = build_type_table(p5, 4, {matching_graph(2), k2_k3_graph(), bowtie_graph()});
    REQUIRE(table.types.size() == 14);
    for (const SmallGraph& t : table.types) CHECK_FALSE(contains_clique(t, 4));

    std::size_t c_k23 = column_of(table, realize_multipartite(part_vector({3, 2})));
    CHECK(table.gadget_counts[0][c_k23] == 6);
    CHECK(table.gadget_counts[1][c_k23] == 0);
    CHECK(table.gadget_counts[2][c_k23] == 0);
    CHECK(table.h_counts[c_k23] == 6);

    std::size_t c_bow = column_of(table, bowtie_graph());
    CHECK(table.gadget_counts[0][c_bow] == 5);
    CHECK(table.gadget_counts[1][c_bow] == 2);
    CHECK(table.gadget_counts[2][c_bow] == 1);
    CHECK(table.h_counts[c_bow] == 4);
}

TEST_CASE("extra columns extend the enumerated set") {
    SmallGraph bow = bowtie_graph();
    SmallGraph k113 = realize_multipartite(part_vector({3, 1, 1}));
    TypeTable plain = build_type_table(bow, 6, {});
    TypeTable extended = build_type_table(bow, 6, {}, {k113});
    CHECK(plain.types.size() == 6);
    REQUIRE(extended.types.size() == 7);
    // The extra column carries no copy of the pattern; that is its point.
    CHECK(extended.h_counts[column_of(extended, k113)] == 0);

    // Duplicates of enumerated columns collapse.
    TypeTable dup = build_type_table(bow, 6, {}, {complete_graph(5), k113});
    CHECK(dup.types.size() == 7);

    CHECK_THROWS_AS(build_type_table(bow, 6, {}, {complete_graph(4)}), error);
    CHECK_THROWS_AS(build_type_table(bow, 5, {}, {complete_graph(5)}), error);
}

TEST_CASE("gadget and argument validation") {
    CHECK_THROWS_AS(build_type_table(path_graph(4), std::nullopt, {complete_graph(5)}), error);
    CHECK_THROWS_AS(build_type_table(path_graph(4), 2, {}), error);
    CHECK_THROWS_AS(build_type_table(empty_graph(0), std::nullopt, {}), error);
}

TEST_CASE("csv layout") {
    TypeTable table = build_type_table(path_graph(4), std::nullopt, {matching_graph(2)});
    std::string csv = render_table_csv(table);
    CHECK(csv.rfind("pattern,", 0) == 0);
    std::size_t lines = 0, commas = 0;
    for (char c : csv) {
        lines += c == '\n';
        commas += c == ',';
    }
    CHECK(lines == 3);
    CHECK(commas == 3 * table.types.size());
}

TEST_CASE("json round trip") {
    TypeTable table = build_type_table(path_graph(5), 4, {matching_graph(2), k2_k3_graph()});
    TypeTable back = parse_table_json(render_table_json(table));
    CHECK(same_table(table, back));

    TypeTable open_table = build_type_table(path_graph(4), std::nullopt, {});
    CHECK(same_table(open_table, parse_table_json(render_table_json(open_table))));

    CHECK_THROWS_AS(parse_table_json("not json"), error);
    CHECK_THROWS_AS(parse_table_json("{}"), error);
    CHECK_THROWS_AS(parse_table_json(R"({"h":"Bw","k":null,"m":3,"gadgets":[],)"
                                     R"("types":["Bw"],"gadget_counts":[],"h_counts":[]})"),
                    error);
}

} // TEST_SUITE
