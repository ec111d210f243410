#pragma once

#include <vector>

#include "vlab/criteria.hpp"
#include "vlab/graphs.hpp"

namespace vlab {

// One maximal-isomorphism class of rooted labeled trees, encoded by its
// layer profile, the parent ranks of the intermediate layers, and the
// children composition of the next-to-last layer.
//
// layers[i] is the size of layer i+1 (the root alone forms layer 0).
// parent_ranks[k] describes layer k+2: one 1-based rank into layer k+1
// per vertex, in rank order. The last layer has no rank map; `tail`
// gives how many of its vertices hang below each next-to-last vertex
// (for height 1 a single entry n-1 below the root).
struct TreeClass {
    int n = 0;
    int height = 0;
    std::vector<int> layers;
    std::vector<std::vector<int>> parent_ranks;
    std::vector<int> tail;
};

bool valid_tree_class(const TreeClass& t);

// Number of labeled rooted trees in the class.
Int multiplicity(const TreeClass& t);

// Class representative: labels 2..n handed out layer by layer in rank
// order, last-layer labels grouped by parent rank. Returns the n-1 edges.
EdgeList canonical_labeling(const TreeClass& t);

// Non-tree pairs whose presence keeps the breadth-first frame of the graph
// equal to this tree: all same-layer pairs plus the consecutive-layer pairs
// {u,v} with label(u) > label(parent(v)).
EdgeList admissible_edges(const TreeClass& t);

// Tree edges as Mayer edges, admissible edges as Boltzmann edges.
TwoColorGraph to_two_color_graph(const TreeClass& t);

// All classes on n vertices, deterministic order (height, then layer
// profile, then rank maps, then composition). 2 <= n <= 12.
std::vector<TreeClass> enumerate_tr(int n);

// The subset indexing the activity-ratio series: every layer but the last
// has at least two vertices, and no layer's children hang entirely below
// its highest-ranked vertex.
std::vector<TreeClass> enumerate_tr0(int n);

// Closed-form counts matching the two enumerations.
Int count_tr(int n);
Int count_tr0(int n);

enum class TreeSubset { Full, ASubset };

struct TreeSum {
    int n = 0;
    TreeSubset subset = TreeSubset::Full;
    Domain domain;
    Rational prefactor; // 1/n!
    std::vector<std::pair<TreeClass, Int>> entries;
};

TreeSum tree_sum(int n, TreeSubset subset, Domain domain = improper_space());

BaseLinearCombination to_linear_combination(const TreeSum& sum);

} // namespace vlab
