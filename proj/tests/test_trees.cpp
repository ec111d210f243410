#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "vlab/trees.hpp"

using namespace vlab;

namespace {

const long long kFullCounts[] = {1, 2, 5, 14, 44, 157, 634, 2852, 14047};
const long long kSubsetCounts[] = {1, 1, 2, 5, 15, 55, 239, 1169, 6213};

TreeClass star_class(int n) {
    TreeClass t;
    t.n = n;
    t.height = 1;
    t.layers = {n - 1};
    t.tail = {n - 1};
    return t;
}

TreeClass chain3() {
    TreeClass t;
    t.n = 3;
    t.height = 2;
    t.layers = {1, 1};
    t.tail = {1};
    return t;
}

// class key of a labeled rooted tree: layer profile, the label-rank parent
// maps of the intermediate layers, and the children composition of the
// next-to-last layer
struct ClassKey {
    std::vector<int> layers;
    std::vector<std::vector<int>> parents;
    std::vector<int> tail;
    auto operator<=>(const ClassKey&) const = default;
};

ClassKey key_of_labeled_tree(const EdgeList& edges, int n) {
    std::vector<std::vector<int>> adj(n + 1);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> depth(n + 1, -1), parent(n + 1, 0);
    depth[1] = 0;
    std::vector<int> frontier{1};
    std::vector<std::vector<int>> layer_labels;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int w : adj[v])
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    next.push_back(w);
                }
        if (!next.empty()) {
            std::sort(next.begin(), next.end());
            layer_labels.push_back(next);
        }
        frontier = std::move(next);
    }
    const int H = static_cast<int>(layer_labels.size());
    auto rank_in = [&](int layer, int label) {
        const auto& labels = layer_labels[layer];
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                                labels.begin()) +
               1;
    };
    ClassKey key;
    for (const auto& labels : layer_labels) key.layers.push_back(labels.size());
    for (int layer = 1; layer + 1 < H; ++layer) {
        std::vector<int> ranks;
        for (int label : layer_labels[layer]) ranks.push_back(rank_in(layer - 1, parent[label]));
        key.parents.push_back(std::move(ranks));
    }
    if (H >= 2) {
        key.tail.assign(layer_labels[H - 2].size(), 0);
        for (int label : layer_labels[H - 1]) ++key.tail[rank_in(H - 2, parent[label]) - 1];
    } else {
        key.tail = {static_cast<int>(layer_labels.empty() ? 0 : layer_labels[0].size())};
    }
    return key;
}

ClassKey key_of_class(const TreeClass& t) {
    return ClassKey{t.layers, t.parent_ranks, t.tail};
}

std::vector<EdgeList> all_labeled_rooted_trees(int n) {
    std::vector<EdgeList> trees;
    const int bits = pair_count(n);
    for (EdgeMask mask = 0; mask < (EdgeMask(1) << bits); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        EdgeList edges = edges_from_mask(mask, n);
        if (is_connected(edges, n)) trees.push_back(std::move(edges));
    }
    return trees;
}

} // namespace

TEST_CASE("closed-form counts match the enumeration") {
    for (int n = 2; n <= 10; ++n) {
        CHECK(count_tr(n) == kFullCounts[n - 2]);
        CHECK(count_tr0(n) == kSubsetCounts[n - 2]);
        CHECK(Int(enumerate_tr(n).size()) == count_tr(n));
        CHECK(Int(enumerate_tr0(n).size()) == count_tr0(n));
    }
    CHECK_THROWS_AS(enumerate_tr(1), RangeError);
    CHECK_THROWS_AS(enumerate_tr(13), RangeError);
    CHECK_THROWS_AS(enumerate_tr0(1), RangeError);
}

TEST_CASE("enumeration order is deterministic and height-sorted") {
    auto first = enumerate_tr(6);
    auto second = enumerate_tr(6);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(key_of_class(first[i]) == key_of_class(second[i]));
        if (i) CHECK(first[i - 1].height <= first[i].height);
    }
}

TEST_CASE("the enumeration holds up to its cap") {
    for (int n : {11, 12}) {
        CHECK(Int(enumerate_tr(n).size()) == count_tr(n));
        CHECK(Int(enumerate_tr0(n).size()) == count_tr0(n));
    }
}

TEST_CASE("multiplicities") {
    for (int n = 3; n <= 7; ++n) CHECK(multiplicity(star_class(n)) == 1);
    CHECK(multiplicity(chain3()) == 2);

    TreeClass t;
    t.n = 5;
    t.height = 2;
    t.layers = {2, 2};
    t.tail = {2, 0};
    CHECK(multiplicity(t) == 6);

    for (int n = 2; n <= 10; ++n) {
        Int total = 0;
        for (const TreeClass& c : enumerate_tr(n)) total += multiplicity(c);
        Int cayley = 1;
        for (int e = 0; e < n - 2; ++e) cayley *= n;
        CHECK(total == cayley);
    }
}

TEST_CASE("canonical labeling") {
    CHECK(canonical_labeling(star_class(3)) == EdgeList{{1, 2}, {1, 3}});
    CHECK(canonical_labeling(chain3()) == EdgeList{{1, 2}, {2, 3}});

    TreeClass t;
    t.n = 4;
    t.height = 2;
    t.layers = {2, 1};
    t.tail = {1, 0};
    CHECK(canonical_labeling(t) == EdgeList{{1, 2}, {1, 3}, {2, 4}});
}

TEST_CASE("admissible edges") {
    CHECK(admissible_edges(star_class(3)) == EdgeList{{2, 3}});
    CHECK(admissible_edges(chain3()).empty());

    Int total = 0;
    for (const TreeClass& t : enumerate_tr(4)) total += admissible_edges(t).size();
    CHECK(total == 7);
}

TEST_CASE("admissible edges avoid the tree and join non-adjacent vertices") {
    for (const TreeClass& t : enumerate_tr(6)) {
        const EdgeList tree = canonical_labeling(t);
        std::set<Edge> tree_set(tree.begin(), tree.end());
        for (const Edge& e : admissible_edges(t)) CHECK_FALSE(tree_set.count(e));
    }
}

TEST_CASE("the star is the unique complete closure") {
    for (int n = 3; n <= 7; ++n) {
        int complete = 0;
        for (const TreeClass& t : enumerate_tr(n)) {
            const std::size_t edges = canonical_labeling(t).size() + admissible_edges(t).size();
            if (static_cast<int>(edges) == pair_count(n)) {
                ++complete;
                CHECK(t.height == 1);
            }
        }
        CHECK(complete == 1);
    }
}

TEST_CASE("a-subset filter") {
    auto tr0_3 = enumerate_tr0(3);
    REQUIRE(tr0_3.size() == 1);
    CHECK(tr0_3[0].height == 1);
    CHECK(enumerate_tr0(4).size() == 2);
    CHECK(enumerate_tr0(8).size() == 239);

    // subset relation on class keys
    for (int n = 2; n <= 7; ++n) {
        std::set<ClassKey> full;
        for (const TreeClass& t : enumerate_tr(n)) full.insert(key_of_class(t));
        for (const TreeClass& t : enumerate_tr0(n)) CHECK(full.count(key_of_class(t)));
    }
}

TEST_CASE("completed labels") {
    TwoColorGraph star = to_two_color_graph(star_class(3));
    CHECK(star == make_two_color_graph(3, {{1, 2}, {1, 3}}, {{2, 3}}));
    TwoColorGraph chain = to_two_color_graph(chain3());
    CHECK(chain == make_two_color_graph(3, {{1, 2}, {2, 3}}, {}));

    for (const TreeClass& t : enumerate_tr(6))
        CHECK(n1_complexity(to_two_color_graph(t)) ==
              static_cast<long long>(admissible_edges(t).size()));
}

TEST_CASE("labeled trees group into classes of the stated size") {
    for (int n = 2; n <= 5; ++n) {
        std::map<ClassKey, std::vector<EdgeList>> groups;
        for (const EdgeList& tree : all_labeled_rooted_trees(n))
            groups[key_of_labeled_tree(tree, n)].push_back(tree);

        auto classes = enumerate_tr(n);
        REQUIRE(groups.size() == classes.size());
        for (const TreeClass& t : classes) {
            auto it = groups.find(key_of_class(t));
            REQUIRE(it != groups.end());
            CHECK(Int(it->second.size()) == multiplicity(t));
            // the canonical representative belongs to its own group
            CHECK(key_of_labeled_tree(canonical_labeling(t), n) == key_of_class(t));
        }
    }
}

TEST_CASE("tree sums") {
    TreeSum s3 = tree_sum(3, TreeSubset::Full);
    REQUIRE(s3.entries.size() == 2);
    CHECK(s3.prefactor == Rational(1, 6));
    Int star_mult = 0, chain_mult = 0;
    for (const auto& [t, mult] : s3.entries) (t.height == 1 ? star_mult : chain_mult) = mult;
    CHECK(star_mult == 1);
    CHECK(chain_mult == 2);

    CHECK(tree_sum(3, TreeSubset::ASubset).entries.size() == 1);

    Int total = 0;
    for (const auto& [t, mult] : tree_sum(5, TreeSubset::Full).entries) {
        (void)t;
        total += mult;
    }
    CHECK(total == 125);

    CHECK_THROWS_AS(tree_sum(1, TreeSubset::Full), RangeError);
    CHECK_THROWS_AS(tree_sum(13, TreeSubset::Full), RangeError);
}
