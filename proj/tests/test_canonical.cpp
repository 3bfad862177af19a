#include <doctest.h>

#include <bit>
#include <set>

#include "satlab/canonical.hpp"
#include "satlab/enumeration.hpp"
#include "satlab/graph6.hpp"
#include "test_util.hpp"

using namespace satlab;

TEST_CASE("canonical key is invariant under relabeling") {
    std::mt19937 rng(101);
    for (int n = 4; n <= 8; ++n) {
        for (int rep = 0; rep < 100; ++rep) {
            Graph g = testing::random_graph(rng, n);
            auto perm = testing::random_permutation(rng, n);
            CHECK(canonical_key(g) == canonical_key(g.permuted(perm)));
        }
    }
}

TEST_CASE("scan route and search route agree on the n in {8,9} band") {
    std::mt19937 rng(303);
    for (int n : {8, 9}) {
        for (int rep = 0; rep < (n == 8 ? 40 : 15); ++rep) {
            Graph g = testing::random_graph(rng, n, 0.25 + 0.5 * (rep % 2));
            CHECK(canonical_key_bruteforce(g) == canonical_key_search(g));
        }
    }
}

TEST_CASE("scan route and search route agree on every labeled graph up to n=5") {
    // independent labeled sweep, no enumeration module involved
    for (int n = 2; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        for (std::uint32_t bits = 0; bits < (1u << slots); ++bits) {
            std::vector<std::pair<int, int>> es;
            int t = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if ((bits >> t) & 1u) es.emplace_back(i, j);
            Graph g = Graph::from_edge_list(n, es);
            CHECK(canonical_key_bruteforce(g) == canonical_key_search(g));
        }
    }
}

TEST_CASE("scan route and search route agree on every class at n in {6,7}") {
    std::mt19937 rng(13);
    for (int n : {6, 7}) {
        for (int m = 0; m <= n * (n - 1) / 2; ++m) {
            satlab::enumerate_graphs(n, m, [&](const Graph& g) {
                Graph shuffled = g.permuted(testing::random_permutation(rng, n));
                CHECK(canonical_key_bruteforce(shuffled) == canonical_key_search(shuffled));
            });
        }
    }
}

TEST_CASE("keys separate isomorphism classes") {
    CHECK(canonical_key(path_graph(3)) ==
          canonical_key(Graph::from_edge_list(3, std::vector<std::pair<int, int>>{{1, 0}, {0, 2}})));
    CHECK(canonical_key(complete_graph(3)) != canonical_key(path_graph(3)));

    // the three classes of 3-edge graphs on 4 labeled vertices, by full
    // labeled enumeration and key dedup
    std::set<CanonicalKey> keys;
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        if (std::popcount(bits) != 3) continue;
        std::vector<std::pair<int, int>> es;
        int t = 0;
        for (int j = 1; j < 4; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if ((bits >> t) & 1u) es.emplace_back(i, j);
        keys.insert(canonical_key_bruteforce(Graph::from_edge_list(4, es)));
    }
    CHECK(keys.size() == 3);
    CHECK(keys.count(canonical_key(path_graph(4))) == 1);
    CHECK(keys.count(canonical_key(star_graph(4))) == 1);
    CHECK(keys.count(canonical_key(disjoint_union(complete_graph(3), empty_graph(1)))) == 1);
}

TEST_CASE("labeled dedup counts: 11 classes at n=4, 34 at n=5") {
    for (auto [n, want] : {std::pair{4, 11}, std::pair{5, 34}}) {
        std::set<CanonicalKey> keys;
        int slots = n * (n - 1) / 2;
        for (std::uint32_t bits = 0; bits < (1u << slots); ++bits) {
            std::vector<std::pair<int, int>> es;
            int t = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if ((bits >> t) & 1u) es.emplace_back(i, j);
            keys.insert(canonical_key_bruteforce(Graph::from_edge_list(n, es)));
        }
        CHECK(keys.size() == std::size_t(want));
    }
}

TEST_CASE("a canonical key decodes to an isomorphic self-canonical graph") {
    std::mt19937 rng(55);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = testing::random_graph(rng, 3 + rep % 7);
        Graph rep_graph = graph6_decode(canonical_key(g));
        CHECK(is_isomorphic(g, rep_graph));
        CHECK(is_canonical_labeling(rep_graph));
        CHECK(graph6_encode(rep_graph) == canonical_key(g));
    }
}

TEST_CASE("is_isomorphic") {
    std::mt19937 rng(77);
    Graph c4 = cycle_graph(4);
    CHECK(is_isomorphic(c4, c4.permuted(testing::random_permutation(rng, 4))));
    CHECK_FALSE(is_isomorphic(star_graph(4), path_graph(4)));

    // K5 minus a path on 4 of its vertices is K1 v P4
    Graph k5_minus_p4 = complete_graph(5).without_edge(0, 1).without_edge(1, 2).without_edge(2, 3);
    CHECK(is_isomorphic(k5_minus_p4, join(complete_graph(1), path_graph(4))));
}

TEST_CASE("search route properties above the scan band") {
    // no scan oracle exists past n=9; check label-invariance, idempotence
    // and decode-isomorphism directly
    std::mt19937 rng(909);
    for (int n : {10, 12, 14}) {
        for (int rep = 0; rep < 12; ++rep) {
            Graph g = testing::random_graph(rng, n, 0.2 + 0.2 * (rep % 4));
            CanonicalKey key = canonical_key(g);
            CHECK(key == canonical_key(g.permuted(testing::random_permutation(rng, n))));
            Graph rep_graph = graph6_decode(key);
            CHECK(graph6_encode(rep_graph) == key);
            CHECK(canonical_key(rep_graph) == key);
            CHECK(is_canonical_labeling(rep_graph));
            CHECK(rep_graph.sorted_degrees() == g.sorted_degrees());
        }
    }
}

TEST_CASE("highly symmetric graphs stay cheap") {
    CHECK(is_canonical_labeling(empty_graph(31)));
    CHECK(is_canonical_labeling(complete_graph(31)));
    std::mt19937 rng(9);
    Graph m10 = empty_graph(0);
    for (int i = 0; i < 5; ++i) m10 = disjoint_union(m10, complete_graph(2));
    CHECK(canonical_key_search(m10) ==
          canonical_key_search(m10.permuted(testing::random_permutation(rng, 10))));
}
