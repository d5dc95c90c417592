#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/multipartite.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>

using namespace turan;

TEST_SUITE("extremal") {

TEST_CASE("triangle-free path maximum sits on the balanced bipartite host") {
    ExtremalReport r = brute_force_ex(path_graph(3), 5, 3, false);
    CHECK(r.maximum == 9);
    CHECK(r.turan_count == 9);
    CHECK(r.turan_is_max);
    CHECK(r.turan_unique);
    REQUIRE(r.extremal_graphs.size() == 1);
    CHECK(is_isomorphic(r.extremal_graphs[0], realize_multipartite(part_vector({3, 2}))));
}

TEST_CASE("a pattern the Turán graph cannot host loses") {
    ExtremalReport r = brute_force_ex(cycle_graph(5), 5, 3, false);
    CHECK(r.maximum == 1);
    CHECK(r.turan_count == 0);
    CHECK_FALSE(r.turan_is_max);
    CHECK_FALSE(r.turan_unique);
    REQUIRE(r.extremal_graphs.size() == 1);
    CHECK(is_isomorphic(r.extremal_graphs[0], cycle_graph(5)));
}

TEST_CASE("matching count is maximized by the Turán graph") {
    ExtremalReport r = brute_force_ex(matching_graph(2), 6, 3, false);
    CHECK(r.turan_count == 18);
    CHECK(r.turan_is_max);
    CHECK(r.turan_unique);
}

TEST_CASE("triangle maximum among K4-free hosts") {
    ExtremalReport r = brute_force_ex(complete_graph(3), 6, 4, false);
    CHECK(r.maximum == 8);
    CHECK(r.turan_is_max);
    CHECK(r.turan_unique);
    CHECK(r.maximum == zykov_bound(6, 3, 4));
}

TEST_CASE("maximal-only sweeps find the same maximum") {
    for (auto [n, k] : {std::pair{6, 3}, std::pair{6, 4}, std::pair{7, 3}}) {
        ExtremalReport full = brute_force_ex(path_graph(4), n, k, false);
        ExtremalReport maximal = brute_force_ex(path_graph(4), n, k, true);
        CHECK(full.maximum == maximal.maximum);
        CHECK(full.turan_is_max == maximal.turan_is_max);
    }
}

TEST_CASE("patterns too large to embed leave a zero-count sweep") {
    ExtremalReport r = brute_force_ex(path_graph(5), 4, 3, false);
    CHECK(r.maximum == 0);
    CHECK(r.turan_is_max);
    CHECK_FALSE(r.turan_unique);
    CHECK(r.extremal_graphs.size() == 7);
}

TEST_CASE("single-size verdicts carry their scope in the note") {
    ExtremalReport r = check_turan_good_at(path_graph(4), 6, 4);
    CHECK(r.turan_is_max);
    CHECK(r.maximal_only);
    CHECK(r.note.find("n = 6") != std::string::npos);
    CHECK(check_turan_good_at(path_graph(5), 6, 4).turan_is_max);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(brute_force_ex(path_graph(3), 10, 3, false), error);
    CHECK_THROWS_AS(brute_force_ex(path_graph(3), 0, 3, false), error);
    CHECK_THROWS_AS(brute_force_ex(path_graph(3), 5, 2, false), error);
    CHECK_THROWS_AS(brute_force_ex(complete_graph(4), 6, 4, false), error);
    CHECK_THROWS_AS(brute_force_ex(empty_graph(0), 5, 3, false), error);
}

TEST_CASE("results do not depend on the worker count") {
    setenv("TURANLAB_THREADS", "1", 1);
    ExtremalReport serial = brute_force_ex(bowtie_graph(), 7, 4, false);
    setenv("TURANLAB_THREADS", "3", 1);
    ExtremalReport threaded = brute_force_ex(bowtie_graph(), 7, 4, false);
    unsetenv("TURANLAB_THREADS");
    CHECK(serial.maximum == threaded.maximum);
    CHECK(serial.extremal_graphs == threaded.extremal_graphs);
    CHECK(serial.turan_is_max == threaded.turan_is_max);
    CHECK(extremal_report_to_json(serial) == extremal_report_to_json(threaded));
}

TEST_CASE("report json carries the verdict fields") {
    std::string j = extremal_report_to_json(check_turan_good_at(path_graph(3), 5, 3));
    CHECK(j.find("\"turan_is_max\": true") != std::string::npos);
    CHECK(j.find("\"turan_unique\": true") != std::string::npos);
    CHECK(j.find("\"maximum\": \"9\"") != std::string::npos);
    CHECK(j.find("\"note\"") != std::string::npos);
}

} // TEST_SUITE
