#include "vlab/graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include <nlohmann/json.hpp>

namespace vlab {

int pair_index(int u, int v) {
    if (u == v || u < 1 || v < 1) throw RangeError("pair_index: bad endpoints");
    if (u > v) std::swap(u, v);
    return (v - 1) * (v - 2) / 2 + (u - 1);
}

Edge pair_from_index(int idx) {
    int v = 2;
    while ((v) * (v - 1) / 2 <= idx) ++v;
    int u = idx - (v - 1) * (v - 2) / 2 + 1;
    return Edge(u, v);
}

int pair_count(int n) { return n * (n - 1) / 2; }

EdgeList sorted_unique(EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

EdgeMask mask_from_edges(const EdgeList& edges, int n) {
    if (n > kMaskVertexLimit) throw RangeError("mask_from_edges: n > 8");
    EdgeMask mask = 0;
    for (const Edge& e : edges) {
        if (e.v > n) throw RangeError("mask_from_edges: endpoint exceeds n");
        mask |= EdgeMask(1) << pair_index(e.u, e.v);
    }
    return mask;
}

EdgeList edges_from_mask(EdgeMask mask, int n) {
    if (n > kMaskVertexLimit) throw RangeError("edges_from_mask: n > 8");
    EdgeList out;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(pair_from_index(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TwoColorGraph make_two_color_graph(int n, EdgeList mayer, EdgeList boltzmann) {
    if (n < 1 || n > kVertexLimit) throw RangeError("graph order outside 1..16");
    mayer = sorted_unique(std::move(mayer));
    boltzmann = sorted_unique(std::move(boltzmann));

    std::vector<char> covered(n + 1, 0);
    for (const EdgeList* set : {&mayer, &boltzmann}) {
        for (const Edge& e : *set) {
            if (e.v > n) throw RangeError("edge endpoint exceeds graph order");
            covered[e.u] = covered[e.v] = 1;
        }
    }
    EdgeList common;
    std::set_intersection(mayer.begin(), mayer.end(), boltzmann.begin(), boltzmann.end(),
                          std::back_inserter(common));
    if (!common.empty()) throw EdgeOverlapError("Mayer and Boltzmann edge sets intersect");
    for (int v = 1; v <= n; ++v)
        if (!covered[v]) throw CoverageError("vertex " + std::to_string(v) + " is isolated");

    return TwoColorGraph{n, std::move(mayer), std::move(boltzmann)};
}

bool is_connected(const EdgeList& edges, int n) {
    if (n <= 0) return false;
    if (n == 1) return true;
    std::vector<std::vector<int>> adj(n + 1);
    for (const Edge& e : edges) {
        if (e.v > n) throw RangeError("is_connected: endpoint exceeds n");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_connected(const TwoColorGraph& g, EdgeSelector which) {
    if (which == EdgeSelector::MayerOnly) return is_connected(g.mayer, g.n);
    EdgeList all = g.mayer;
    all.insert(all.end(), g.boltzmann.begin(), g.boltzmann.end());
    return is_connected(sorted_unique(std::move(all)), g.n);
}

bool is_biconnected(const EdgeList& edges, int n) {
    if (n < 2) return false;
    if (n == 2) return std::find(edges.begin(), edges.end(), Edge(1, 2)) != edges.end();
    if (!is_connected(edges, n)) return false;
    // Remove each vertex in turn; n is small enough for the direct check.
    for (int skip = 1; skip <= n; ++skip) {
        std::vector<std::vector<int>> adj(n + 1);
        for (const Edge& e : edges) {
            if (e.u == skip || e.v == skip) continue;
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        int start = skip == 1 ? 2 : 1;
        std::vector<char> seen(n + 1, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != n - 1) return false;
    }
    return true;
}

namespace {

struct PairTable {
    std::array<std::pair<int, int>, 28> uv{}; // 0-based endpoints per bit
    PairTable() {
        for (int b = 0; b < 28; ++b) {
            Edge e = pair_from_index(b);
            uv[b] = {e.u - 1, e.v - 1};
        }
    }
};
const PairTable g_pairs;

inline bool connected_over(const std::array<std::uint32_t, 8>& adj, std::uint32_t verts) {
    if (!verts) return false;
    std::uint32_t reach = verts & (~verts + 1); // lowest vertex
    std::uint32_t frontier = reach;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        next &= verts & ~reach;
        reach |= next;
        frontier = next;
    }
    return reach == verts;
}

} // namespace

bool is_biconnected_mask(EdgeMask mask, int n) {
    if (n < 2 || n > kMaskVertexLimit) return false;
    if (n == 2) return (mask & 1u) != 0;
    std::array<std::uint32_t, 8> adj{};
    EdgeMask m = mask;
    while (m) {
        int b = std::countr_zero(m);
        m &= m - 1;
        auto [u, v] = g_pairs.uv[b];
        if (v >= n) return false;
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const std::uint32_t full = (1u << n) - 1;
    if (!connected_over(adj, full)) return false;
    for (int v = 0; v < n; ++v)
        if (!connected_over(adj, full & ~(1u << v))) return false;
    return true;
}

long long n1_complexity(const TwoColorGraph& g) {
    if (!is_connected(g.mayer, g.n)) throw NotBaseError("Mayer subgraph is disconnected");
    return static_cast<long long>(g.mayer.size()) - g.n + 1 +
           static_cast<long long>(g.boltzmann.size());
}

namespace {

EdgeMask permute_mask(EdgeMask mask, const std::array<int, 8>& perm) {
    EdgeMask out = 0;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        auto [u, v] = g_pairs.uv[b];
        out |= EdgeMask(1) << pair_index(perm[u] + 1, perm[v] + 1);
    }
    return out;
}

} // namespace

EdgeMask canonical_form_mask(EdgeMask mask, int n) {
    if (n < 1 || n > kMaskVertexLimit) throw RangeError("canonical_form: n outside 1..8");
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    EdgeMask best = ~EdgeMask(0);
    do {
        best = std::min(best, permute_mask(mask, perm));
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

EdgeMask canonical_form(const EdgeList& edges, int n) {
    return canonical_form_mask(mask_from_edges(edges, n), n);
}

std::pair<EdgeMask, EdgeMask> canonical_form_two_color(const TwoColorGraph& g) {
    if (g.n > kMaskVertexLimit) throw RangeError("canonical_form_two_color: n > 8");
    EdgeMask mm = mask_from_edges(g.mayer, g.n);
    EdgeMask bm = mask_from_edges(g.boltzmann, g.n);
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + g.n, 0);
    std::pair<EdgeMask, EdgeMask> best{~EdgeMask(0), ~EdgeMask(0)};
    do {
        std::pair<EdgeMask, EdgeMask> cur{permute_mask(mm, perm), permute_mask(bm, perm)};
        best = std::min(best, cur);
    } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
    return best;
}

nlohmann::ordered_json to_json(const TwoColorGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    auto edges = [](const EdgeList& list) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Edge& e : list) arr.push_back({e.u, e.v});
        return arr;
    };
    j["mayer"] = edges(g.mayer);
    j["boltzmann"] = edges(g.boltzmann);
    return j;
}

TwoColorGraph two_color_from_json(const nlohmann::ordered_json& j) {
    auto edges = [](const nlohmann::ordered_json& arr) {
        EdgeList list;
        for (const auto& e : arr) list.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return list;
    };
    return make_two_color_graph(j.at("n").get<int>(), edges(j.at("mayer")),
                                edges(j.at("boltzmann")));
}

} // namespace vlab
