#pragma once

#include <cstdint>
#include <vector>

#include "vlab/criteria.hpp"
#include "vlab/graphs.hpp"

namespace vlab {

// One isomorphism class of f-edge sets with nonzero star content. The
// Boltzmann edges are implicitly the complement in the complete graph.
struct RhDiagram {
    int n = 0;
    EdgeList mayer_edges; // class representative (lexicographic-min mask)
    long long star_content = 0;
    long long iso_class_size = 0;
};

// Signed count of spanning biconnected subgraphs inside f_edges:
// sum over biconnected spanning B within f_edges of (-1)^(|f_edges|-|B|).
// n <= 7.
long long star_content(const EdgeList& f_edges, int n);

// Star content of every edge mask at once: biconnected seeding plus one
// subset-sum transform over the 2^(n(n-1)/2) lattice. n <= 7.
std::vector<std::int64_t> star_content_table(int n, int threads = 0);

// All diagram classes with nonzero star content, ordered by representative
// mask. 2 <= n <= 7; n=7 walks 2^21 masks.
std::vector<RhDiagram> enumerate_rh_diagrams(int n, int threads = 0);

// Published class counts for n = 2..10.
Int rh_reference_count(int n);

// The complete base linear combination of order n over a box of the given
// side: coefficient -(n-1)/n! * star_content per labeled diagram, times the
// class size when labeled=false (one entry per class).
BaseLinearCombination rh_linear_combination(int n, double box_side, bool labeled = false);

} // namespace vlab
