#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vlab/exact.hpp"

namespace vlab {

// Unordered pair of distinct vertex labels, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b || a < 1 || b < 1) throw RangeError("edge endpoints must be distinct naturals");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>; // kept sorted, no duplicates
using EdgeMask = std::uint32_t;     // pair-index bitmask, usable for n <= 8

constexpr int kMaskVertexLimit = 8;
constexpr int kVertexLimit = 16;

// Triangular pair index: (1,2)->0, (1,3)->1, (2,3)->2, (1,4)->3, ...
int pair_index(int u, int v);
Edge pair_from_index(int idx);
int pair_count(int n);

EdgeList sorted_unique(EdgeList edges);
EdgeMask mask_from_edges(const EdgeList& edges, int n);
EdgeList edges_from_mask(EdgeMask mask, int n);

// A graph label: disjoint Mayer/Boltzmann edge sets jointly covering {1..n}.
struct TwoColorGraph {
    int n = 0;
    EdgeList mayer;
    EdgeList boltzmann;

    friend auto operator<=>(const TwoColorGraph&, const TwoColorGraph&) = default;
};

// Validates the invariants (disjoint sets, endpoints in range, full vertex
// coverage); throws EdgeOverlapError / CoverageError / RangeError.
TwoColorGraph make_two_color_graph(int n, EdgeList mayer, EdgeList boltzmann);

enum class EdgeSelector { MayerOnly, Both };

bool is_connected(const EdgeList& edges, int n);
bool is_connected(const TwoColorGraph& g, EdgeSelector which);

// A single edge at n=2 counts as biconnected (block convention).
bool is_biconnected(const EdgeList& edges, int n);
bool is_biconnected_mask(EdgeMask mask, int n); // fast path, n <= 8

// |mayer| - n + 1 + |boltzmann|; throws NotBaseError if the Mayer subgraph
// is disconnected.
long long n1_complexity(const TwoColorGraph& g);

// Lexicographic minimum of the pair-index bitmask over all n! relabelings.
// Equal keys exactly for isomorphic edge sets. Requires n <= 8.
EdgeMask canonical_form(const EdgeList& edges, int n);
EdgeMask canonical_form_mask(EdgeMask mask, int n);

// Same idea for both colors at once (mayer key major, boltzmann key minor).
std::pair<EdgeMask, EdgeMask> canonical_form_two_color(const TwoColorGraph& g);

nlohmann::ordered_json to_json(const TwoColorGraph& g);
TwoColorGraph two_color_from_json(const nlohmann::ordered_json& j);

} // namespace vlab
