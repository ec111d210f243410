#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "vlab/graphs.hpp"

using namespace vlab;

TEST_CASE("edges normalize and order") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(Edge(1, 3) == Edge(3, 1));
    CHECK(Edge(1, 2) < Edge(1, 3));
    CHECK(Edge(1, 4) < Edge(2, 3));
    CHECK_THROWS_AS(Edge(2, 2), RangeError);
}

TEST_CASE("pair indexing round trips") {
    CHECK(pair_index(1, 2) == 0);
    CHECK(pair_index(1, 3) == 1);
    CHECK(pair_index(2, 3) == 2);
    for (int idx = 0; idx < pair_count(8); ++idx) {
        Edge e = pair_from_index(idx);
        CHECK(pair_index(e.u, e.v) == idx);
    }
}

TEST_CASE("two-color graph construction") {
    CHECK_NOTHROW(make_two_color_graph(3, {{1, 2}, {2, 3}}, {}));
    CHECK_NOTHROW(make_two_color_graph(3, {{1, 2}, {1, 3}}, {{2, 3}}));
    CHECK_THROWS_AS(make_two_color_graph(3, {{1, 2}}, {}), CoverageError);
    CHECK_THROWS_AS(make_two_color_graph(3, {{1, 2}, {2, 3}}, {{1, 2}}), EdgeOverlapError);
    CHECK_THROWS_AS(make_two_color_graph(3, {{1, 2}, {2, 4}}, {}), RangeError);
}

TEST_CASE("connectivity by edge selector") {
    TwoColorGraph path = make_two_color_graph(3, {{1, 2}, {2, 3}}, {});
    CHECK(is_connected(path, EdgeSelector::MayerOnly));

    TwoColorGraph bridged = make_two_color_graph(4, {{1, 2}, {3, 4}}, {{2, 3}});
    CHECK_FALSE(is_connected(bridged, EdgeSelector::MayerOnly));
    CHECK(is_connected(bridged, EdgeSelector::Both));
}

TEST_CASE("biconnectivity") {
    CHECK(is_biconnected({{1, 2}, {1, 3}, {2, 3}}, 3));
    CHECK_FALSE(is_biconnected({{1, 2}, {2, 3}}, 3));
    // complete graph on four vertices minus one edge
    CHECK(is_biconnected({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, 4));
    CHECK(is_biconnected({{1, 2}}, 2));
    CHECK_FALSE(is_biconnected({}, 2));
    // a spanning cycle plus an isolated vertex is not spanning-connected
    CHECK_FALSE(is_biconnected({{1, 2}, {1, 3}, {2, 3}}, 4));
}

TEST_CASE("mask biconnectivity agrees with the list version") {
    for (int n = 2; n <= 5; ++n) {
        const EdgeMask limit = EdgeMask(1) << pair_count(n);
        for (EdgeMask mask = 0; mask < limit; ++mask) {
            CHECK(is_biconnected_mask(mask, n) == is_biconnected(edges_from_mask(mask, n), n));
        }
    }
}

TEST_CASE("per-integral complexity") {
    CHECK(n1_complexity(make_two_color_graph(3, {{1, 2}, {2, 3}}, {})) == 0);
    CHECK(n1_complexity(make_two_color_graph(3, {{1, 2}, {1, 3}}, {{2, 3}})) == 1);
    TwoColorGraph k4 = make_two_color_graph(
        4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {});
    CHECK(n1_complexity(k4) == 3);
    TwoColorGraph split = make_two_color_graph(4, {{1, 2}, {3, 4}}, {{2, 3}});
    CHECK_THROWS_AS(n1_complexity(split), NotBaseError);
}

TEST_CASE("canonical form identifies relabelings") {
    CHECK(canonical_form({{1, 2}, {2, 3}}, 3) == canonical_form({{2, 1}, {1, 3}}, 3));
    CHECK(canonical_form({{1, 2}, {2, 3}}, 3) != canonical_form({{1, 2}, {1, 3}, {2, 3}}, 3));

    // the three labeled 4-cycles share one key
    std::set<EdgeMask> keys;
    keys.insert(canonical_form({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 4));
    keys.insert(canonical_form({{1, 2}, {2, 4}, {3, 4}, {1, 3}}, 4));
    keys.insert(canonical_form({{1, 3}, {2, 3}, {2, 4}, {1, 4}}, 4));
    CHECK(keys.size() == 1);

    CHECK_THROWS_AS(canonical_form({{1, 2}}, 9), RangeError);
}

TEST_CASE("complexity is nonnegative, zero exactly on bare spanning trees") {
    const int n = 4;
    for (EdgeMask mayer = 0; mayer < (EdgeMask(1) << pair_count(n)); ++mayer) {
        EdgeList medges = edges_from_mask(mayer, n);
        if (!is_connected(medges, n)) continue;
        for (EdgeMask boltz : {EdgeMask(0), EdgeMask(~mayer & 0x15)}) {
            EdgeList bedges = edges_from_mask(boltz & ~mayer, n);
            TwoColorGraph g = make_two_color_graph(n, medges, bedges);
            long long v = n1_complexity(g);
            CHECK(v >= 0);
            CHECK((v == 0) == (g.mayer.size() == std::size_t(n - 1) && g.boltzmann.empty()));
        }
    }
}

TEST_CASE("canonical form partitions the mask lattice into isomorphism classes") {
    // distinct keys must count the unlabeled graphs: 11 on 4 vertices, 34 on 5
    const int expected[] = {0, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        std::map<EdgeMask, long> classes;
        const EdgeMask limit = EdgeMask(1) << pair_count(n);
        long total = 0;
        for (EdgeMask mask = 0; mask < limit; ++mask) {
            ++classes[canonical_form_mask(mask, n)];
            ++total;
        }
        CHECK(static_cast<int>(classes.size()) == expected[n]);
        long sum = 0;
        for (const auto& [key, size] : classes) {
            CHECK(key <= canonical_form_mask(key, n)); // representative is minimal
            CHECK(canonical_form_mask(key, n) == key);
            sum += size;
        }
        CHECK(sum == total);
    }
}

TEST_CASE("canonical classes on six vertices") {
    std::set<EdgeMask> keys;
    const EdgeMask limit = EdgeMask(1) << pair_count(6);
    long total = 0;
    for (EdgeMask mask = 0; mask < limit; ++mask) {
        keys.insert(canonical_form_mask(mask, 6));
        ++total;
    }
    CHECK(total == 1 << 15);
    CHECK(keys.size() == 156); // unlabeled graphs on six vertices
}

TEST_CASE("two-color canonical form respects both colors") {
    TwoColorGraph a = make_two_color_graph(3, {{1, 2}, {1, 3}}, {{2, 3}});
    TwoColorGraph b = make_two_color_graph(3, {{2, 1}, {2, 3}}, {{1, 3}});
    TwoColorGraph c = make_two_color_graph(3, {{2, 3}}, {{1, 2}, {1, 3}});
    CHECK(canonical_form_two_color(a) == canonical_form_two_color(b));
    CHECK(canonical_form_two_color(a) != canonical_form_two_color(c));
}

TEST_CASE("json round trip") {
    TwoColorGraph g = make_two_color_graph(4, {{1, 2}, {2, 3}, {3, 4}}, {{1, 4}});
    auto j = to_json(g);
    CHECK(j.dump() == R"({"n":4,"mayer":[[1,2],[2,3],[3,4]],"boltzmann":[[1,4]]})");
    CHECK(two_color_from_json(j) == g);
}
