#include "vlab/trees.hpp"

#include <algorithm>
#include <numeric>

namespace vlab {

namespace {

constexpr int kTreeOrderLimit = 12;

void check_order(int n) {
    if (n < 2 || n > kTreeOrderLimit) throw RangeError("tree order outside 2..12");
}

// Positive compositions of k into exactly parts parts, ascending lex.
std::vector<std::vector<int>> positive_compositions(int k, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            if (left >= 1) {
                cur[pos] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 1; v <= left - (parts - 1 - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (parts >= 1 && k >= parts) rec(rec, 0, k);
    return out;
}

// Nonnegative compositions of k into parts parts, ascending lex.
std::vector<std::vector<int>> nonneg_compositions(int k, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (parts >= 1) rec(rec, 0, k);
    return out;
}

// First label of layer `layer` (1-based layers; layer 0 is the root).
int layer_base(const TreeClass& t, int layer) {
    if (layer == 0) return 1;
    int base = 2;
    for (int i = 0; i + 1 < layer; ++i) base += t.layers[i];
    return base;
}

// parent label of every vertex 2..n under the canonical labeling
std::vector<int> canonical_parents(const TreeClass& t) {
    std::vector<int> parent(t.n + 1, 0);
    const int H = t.height;
    for (int v = 0; v < t.layers[0]; ++v) parent[layer_base(t, 1) + v] = 1;
    for (int layer = 2; layer <= H - 1; ++layer) {
        const auto& ranks = t.parent_ranks[layer - 2];
        for (int v = 0; v < t.layers[layer - 1]; ++v)
            parent[layer_base(t, layer) + v] = layer_base(t, layer - 1) + ranks[v] - 1;
    }
    if (H >= 2) {
        int label = layer_base(t, H);
        for (std::size_t r = 0; r < t.tail.size(); ++r)
            for (int c = 0; c < t.tail[r]; ++c)
                parent[label++] = layer_base(t, H - 1) + static_cast<int>(r);
    }
    return parent;
}

} // namespace

bool valid_tree_class(const TreeClass& t) {
    if (t.n < 2 || t.height < 1) return false;
    if (static_cast<int>(t.layers.size()) != t.height) return false;
    int total = 0;
    for (int s : t.layers) {
        if (s < 1) return false;
        total += s;
    }
    if (total != t.n - 1) return false;
    const int maps = std::max(t.height - 2, 0);
    if (static_cast<int>(t.parent_ranks.size()) != maps) return false;
    for (int k = 0; k < maps; ++k) {
        if (static_cast<int>(t.parent_ranks[k].size()) != t.layers[k + 1]) return false;
        for (int r : t.parent_ranks[k])
            if (r < 1 || r > t.layers[k]) return false;
    }
    const int tail_parts = t.height >= 2 ? t.layers[t.height - 2] : 1;
    if (static_cast<int>(t.tail.size()) != tail_parts) return false;
    int tail_sum = 0;
    for (int c : t.tail) {
        if (c < 0) return false;
        tail_sum += c;
    }
    return tail_sum == t.layers[t.height - 1];
}

Int multiplicity(const TreeClass& t) {
    if (!valid_tree_class(t)) throw RangeError("invalid tree class");
    Int result = factorial(t.n - 1);
    for (int i = 0; i + 1 < t.height; ++i) result /= factorial(t.layers[i]);
    for (int children : t.tail) result /= factorial(children);
    return result;
}

EdgeList canonical_labeling(const TreeClass& t) {
    if (!valid_tree_class(t)) throw RangeError("invalid tree class");
    const std::vector<int> parent = canonical_parents(t);
    EdgeList edges;
    edges.reserve(t.n - 1);
    for (int v = 2; v <= t.n; ++v) edges.emplace_back(parent[v], v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

EdgeList admissible_edges(const TreeClass& t) {
    if (!valid_tree_class(t)) throw RangeError("invalid tree class");
    const std::vector<int> parent = canonical_parents(t);
    EdgeList out;
    for (int layer = 1; layer <= t.height; ++layer) {
        const int base = layer_base(t, layer);
        const int size = t.layers[layer - 1];
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b) out.emplace_back(base + a, base + b);
        if (layer < t.height) {
            const int next_base = layer_base(t, layer + 1);
            const int next_size = t.layers[layer];
            for (int c = 0; c < next_size; ++c) {
                const int child = next_base + c;
                for (int u = parent[child] + 1; u < base + size; ++u)
                    out.emplace_back(u, child);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TwoColorGraph to_two_color_graph(const TreeClass& t) {
    return make_two_color_graph(t.n, canonical_labeling(t), admissible_edges(t));
}

std::vector<TreeClass> enumerate_tr(int n) {
    check_order(n);
    std::vector<TreeClass> out;

    TreeClass star;
    star.n = n;
    star.height = 1;
    star.layers = {n - 1};
    star.tail = {n - 1};
    out.push_back(star);

    for (int H = 2; H <= n - 1; ++H) {
        for (const auto& layers : positive_compositions(n - 1, H)) {
            // odometer over the intermediate-layer rank maps
            std::vector<std::vector<int>> maps(std::max(H - 2, 0));
            for (int k = 0; k < H - 2; ++k) maps[k].assign(layers[k + 1], 1);
            bool more = true;
            while (more) {
                for (const auto& tail : nonneg_compositions(layers[H - 1], layers[H - 2])) {
                    TreeClass t;
                    t.n = n;
                    t.height = H;
                    t.layers = layers;
                    t.parent_ranks = maps;
                    t.tail = tail;
                    out.push_back(std::move(t));
                }
                more = false;
                for (int k = H - 3; k >= 0 && !more; --k) {
                    auto& m = maps[k];
                    for (int pos = static_cast<int>(m.size()) - 1; pos >= 0; --pos) {
                        if (m[pos] < layers[k]) {
                            ++m[pos];
                            std::fill(m.begin() + pos + 1, m.end(), 1);
                            for (int k2 = k + 1; k2 < H - 2; ++k2)
                                std::fill(maps[k2].begin(), maps[k2].end(), 1);
                            more = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    return out;
}

namespace {

bool passes_a_subset(const TreeClass& t) {
    // every layer except the last needs two vertices
    for (int i = 0; i + 1 < t.height; ++i)
        if (t.layers[i] < 2) return false;
    // no layer may feed all of its children from its highest rank alone
    for (int k = 0; k + 2 < t.height; ++k) {
        const auto& ranks = t.parent_ranks[k];
        const int top = t.layers[k];
        bool all_top = !ranks.empty();
        for (int r : ranks)
            if (r != top) {
                all_top = false;
                break;
            }
        if (all_top) return false;
    }
    if (t.height >= 2) {
        const int parts = static_cast<int>(t.tail.size());
        bool only_last = t.tail[parts - 1] > 0;
        for (int r = 0; r + 1 < parts; ++r)
            if (t.tail[r] > 0) only_last = false;
        if (only_last) return false;
    }
    return true;
}

} // namespace

std::vector<TreeClass> enumerate_tr0(int n) {
    check_order(n);
    std::vector<TreeClass> out;
    for (auto& t : enumerate_tr(n))
        if (passes_a_subset(t)) out.push_back(std::move(t));
    return out;
}

Int count_tr(int n) {
    if (n < 2) throw RangeError("count_tr: n must be at least 2");
    if (n == 2) return 1;
    Int total = 1;                                      // the star
    total += (Int(1) << (n - 2)) - 1;                   // height 2
    for (int H = 3; H <= n - 1; ++H) {
        for (const auto& layers : positive_compositions(n - 1, H)) {
            Int term = factorial(layers[H - 2] + layers[H - 1] - 1) /
                       (factorial(layers[H - 1]) * factorial(layers[H - 2] - 1));
            for (int i = 2; i <= H - 1; ++i) {
                Int base = layers[i - 2];
                Int power = 1;
                for (int e = 0; e < layers[i - 1]; ++e) power *= base;
                term *= power;
            }
            total += term;
        }
    }
    return total;
}

Int count_tr0(int n) {
    if (n < 2) throw RangeError("count_tr0: n must be at least 2");
    Int total = 1; // the star
    const int H_max = (n - 1 + 1) / 2;
    for (int H = 2; H <= H_max; ++H) {
        for (const auto& layers : positive_compositions(n - 1, H)) {
            bool ok = true;
            for (int i = 0; i + 1 < H; ++i)
                if (layers[i] < 2) ok = false;
            if (!ok) continue;
            Int term = factorial(layers[H - 1] + layers[H - 2] - 1) /
                           (factorial(layers[H - 2] - 1) * factorial(layers[H - 1])) -
                       1;
            for (int i = 2; i <= H - 1; ++i) {
                Int base = layers[i - 2];
                Int power = 1;
                for (int e = 0; e < layers[i - 1]; ++e) power *= base;
                term *= power - 1;
            }
            total += term;
        }
    }
    return total;
}

TreeSum tree_sum(int n, TreeSubset subset, Domain domain) {
    check_order(n);
    TreeSum sum;
    sum.n = n;
    sum.subset = subset;
    sum.domain = domain;
    sum.prefactor = Rational(1, factorial(n));
    auto classes = subset == TreeSubset::Full ? enumerate_tr(n) : enumerate_tr0(n);
    sum.entries.reserve(classes.size());
    for (auto& t : classes) {
        Int mult = multiplicity(t);
        sum.entries.emplace_back(std::move(t), std::move(mult));
    }
    return sum;
}

BaseLinearCombination to_linear_combination(const TreeSum& sum) {
    std::vector<std::pair<TwoColorGraph, Rational>> entries;
    entries.reserve(sum.entries.size());
    for (const auto& [t, mult] : sum.entries)
        entries.emplace_back(to_two_color_graph(t), sum.prefactor * Rational(mult));
    return make_base_linear_combination(sum.n, sum.domain, std::move(entries));
}

} // namespace vlab
