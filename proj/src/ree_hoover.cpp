#include "vlab/ree_hoover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <thread>

#include "vlab/kernels.hpp"

namespace vlab {

namespace {

constexpr int kRhLimit = 7;

void check_rh_order(int n, int lo = 2) {
    if (n < lo || n > kRhLimit) throw RangeError("ree-hoover order outside 2..7");
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace

long long star_content(const EdgeList& f_edges, int n) {
    check_rh_order(n);
    const EdgeMask full = mask_from_edges(f_edges, n);
    const int total_bits = std::popcount(full);
    long long acc = 0;
    // walk all submasks of the f-edge set
    EdgeMask sub = full;
    while (true) {
        if (is_biconnected_mask(sub, n)) {
            const int removed = total_bits - std::popcount(sub);
            acc += (removed & 1) ? -1 : 1;
        }
        if (sub == 0) break;
        sub = (sub - 1) & full;
    }
    return acc;
}

std::vector<std::int64_t> star_content_table(int n, int threads) {
    check_rh_order(n);
    const int bits = pair_count(n);
    const std::size_t size = std::size_t(1) << bits;
    std::vector<std::int64_t> table(size);

    // seed: parity-signed biconnected-spanning indicator
    auto seed_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t mask = lo; mask < hi; ++mask) {
            if (is_biconnected_mask(static_cast<EdgeMask>(mask), n))
                table[mask] = (std::popcount(mask) & 1) ? -1 : 1;
        }
    };
    const int workers = std::min<int>(resolve_threads(threads), 8);
    if (workers <= 1 || size < (1u << 16)) {
        seed_range(0, size);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = size / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk;
            std::size_t hi = w + 1 == workers ? size : lo + chunk;
            pool.emplace_back(seed_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    kernels::subset_zeta_i64(table.data(), bits);
    // undo the outer parity: sc[G] = (-1)^|G| * sum_{B subset G} (-1)^|B| seed
    for (std::size_t mask = 0; mask < size; ++mask)
        if (std::popcount(mask) & 1) table[mask] = -table[mask];
    return table;
}

std::vector<RhDiagram> enumerate_rh_diagrams(int n, int threads) {
    check_rh_order(n);
    const std::vector<std::int64_t> sc = star_content_table(n, threads);
    const int bits = pair_count(n);
    const std::size_t size = std::size_t(1) << bits;

    // orbit expansion: permutation tables over pair indices
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::vector<std::array<std::uint8_t, 28>> perms;
    do {
        std::array<std::uint8_t, 28> map{};
        for (int b = 0; b < bits; ++b) {
            Edge e = pair_from_index(b);
            map[b] = static_cast<std::uint8_t>(pair_index(perm[e.u - 1] + 1, perm[e.v - 1] + 1));
        }
        perms.push_back(map);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    std::vector<char> seen(size, 0);
    std::vector<RhDiagram> out;
    std::vector<EdgeMask> orbit;
    for (std::size_t mask = 0; mask < size; ++mask) {
        if (seen[mask] || sc[mask] == 0) continue;
        orbit.clear();
        for (const auto& map : perms) {
            EdgeMask image = 0;
            EdgeMask m = static_cast<EdgeMask>(mask);
            while (m) {
                int b = std::countr_zero(m);
                m &= m - 1;
                image |= EdgeMask(1) << map[b];
            }
            if (!seen[image]) {
                seen[image] = 1;
                orbit.push_back(image);
            }
        }
        RhDiagram d;
        d.n = n;
        d.mayer_edges = edges_from_mask(static_cast<EdgeMask>(mask), n);
        d.star_content = sc[mask];
        d.iso_class_size = static_cast<long long>(orbit.size());
        out.push_back(std::move(d));
    }
    return out;
}

Int rh_reference_count(int n) {
    static const long long counts[] = {1, 1, 2, 5, 23, 171, 2606, 81564, 4980756};
    if (n < 2 || n > 10) throw RangeError("rh_reference_count: n outside 2..10");
    return Int(counts[n - 2]);
}

BaseLinearCombination rh_linear_combination(int n, double box_side, bool labeled) {
    check_rh_order(n);
    const auto diagrams = enumerate_rh_diagrams(n);
    const Rational base = Rational(-(n - 1), factorial(n));
    std::vector<std::pair<TwoColorGraph, Rational>> entries;
    auto complement = [&](const EdgeList& mayer) {
        EdgeList rest;
        for (int b = 0; b < pair_count(n); ++b) {
            Edge e = pair_from_index(b);
            if (!std::binary_search(mayer.begin(), mayer.end(), e)) rest.push_back(e);
        }
        return rest;
    };
    if (!labeled) {
        for (const RhDiagram& d : diagrams) {
            Rational coeff = base * d.star_content * d.iso_class_size;
            entries.emplace_back(
                make_two_color_graph(n, d.mayer_edges, complement(d.mayer_edges)),
                std::move(coeff));
        }
    } else {
        const auto sc = star_content_table(n);
        for (std::size_t mask = 0; mask < sc.size(); ++mask) {
            if (sc[mask] == 0) continue;
            EdgeList mayer = edges_from_mask(static_cast<EdgeMask>(mask), n);
            entries.emplace_back(make_two_color_graph(n, mayer, complement(mayer)),
                                 base * sc[mask]);
        }
    }
    return make_base_linear_combination(n, bounded_box(box_side), std::move(entries));
}

} // namespace vlab
