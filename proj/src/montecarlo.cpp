#include "vlab/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "vlab/kernels.hpp"

namespace vlab {

namespace {

// Streaming mean/M2 with an exact merge; identical-valued streams keep M2
// at exactly zero, so constant estimators report std_err 0.
struct Welford {
    double mean = 0;
    double m2 = 0;
    std::uint64_t count = 0;

    void push(double x) {
        ++count;
        const double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    void merge(const Welford& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double total = static_cast<double>(count + o.count);
        const double d = o.mean - mean;
        mean += d * (static_cast<double>(o.count) / total);
        m2 += o.m2 + d * d * (static_cast<double>(count) * static_cast<double>(o.count) / total);
        count += o.count;
    }

    double variance_of_mean() const {
        if (count < 2) return 0;
        double v = m2 / (static_cast<double>(count) - 1.0) / static_cast<double>(count);
        return v > 0 ? v : 0;
    }
};

struct ClassKernel {
    int n = 0;
    std::vector<int> parents;          // parent label per vertex 2..n
    std::vector<std::pair<int, int>> pairs; // admissible pairs
    double weight = 0;                 // integral of |f|
    double weight_pow = 0;             // weight^(n-1)
    bool sign_constant = true;         // hard spheres: every edge sign is -1
    int constant_sign = 1;             // (-1)^(n-1) when sign_constant

    explicit ClassKernel(const TreeClass& t, const PairPotential& p) {
        n = t.n;
        parents.assign(n + 1, 0);
        for (const Edge& e : canonical_labeling(t)) parents[e.v] = e.u;
        for (const Edge& e : admissible_edges(t)) pairs.emplace_back(e.u, e.v);
        weight = abs_f_integral(p);
        weight_pow = std::pow(weight, n - 1);
        sign_constant = p.kind == PairPotential::Kind::HardSphere;
        constant_sign = (n - 1) % 2 ? -1 : 1;
    }
};

struct ShardResult {
    Welford stats;
    std::uint64_t pair_evals = 0;
};

ShardResult run_shard(const ClassKernel& k, const PairPotential& p, std::uint64_t samples,
                      std::uint64_t stream_key) {
    ShardResult r;
    SplitMix64 rng(stream_key);
    const int n = k.n;
    const std::size_t npairs = k.pairs.size();
    std::vector<Vec3> pos(n + 1, Vec3{0, 0, 0});
    std::vector<double> dx(npairs), dy(npairs), dz(npairs), rsq(npairs);
    for (std::uint64_t s = 0; s < samples; ++s) {
        int sign = 1;
        Vec3 step;
        for (int child = 2; child <= n; ++child) {
            sign *= draw_displacement(p, rng, step);
            const Vec3& base = pos[k.parents[child]];
            pos[child] = {base[0] + step[0], base[1] + step[1], base[2] + step[2]};
        }
        double value = (k.sign_constant ? k.constant_sign : sign) * k.weight_pow;
        if (npairs) {
            for (std::size_t i = 0; i < npairs; ++i) {
                const Vec3& a = pos[k.pairs[i].first];
                const Vec3& b = pos[k.pairs[i].second];
                dx[i] = a[0] - b[0];
                dy[i] = a[1] - b[1];
                dz[i] = a[2] - b[2];
            }
            kernels::norm_sq_batch(dx.data(), dy.data(), dz.data(), rsq.data(), npairs);
            for (std::size_t i = 0; i < npairs; ++i) value *= 1.0 + mayer_f(p, rsq[i]);
        }
        r.stats.push(value);
        r.pair_evals += static_cast<std::uint64_t>(n - 1) + npairs;
    }
    return r;
}

// Run the shards of one class, possibly on several threads; the merge order
// is fixed so the result is independent of the thread count.
ShardResult run_class(const ClassKernel& k, const PairPotential& p, std::uint64_t samples,
                      std::uint64_t seed, std::uint64_t class_id, const McOptions& opt) {
    const int shards = std::max(1, opt.shards);
    std::vector<std::uint64_t> quota(shards, samples / shards);
    for (std::uint64_t i = 0; i < samples % shards; ++i) ++quota[i];

    std::vector<ShardResult> results(shards);
    auto work = [&](int shard) {
        results[shard] =
            run_shard(k, p, quota[shard], derive_stream(seed, class_id, shard));
    };
    const int threads = std::max(1, opt.threads);
    if (threads <= 1) {
        for (int s = 0; s < shards; ++s) work(s);
    } else {
        std::atomic<int> next{0};
        auto loop = [&] {
            for (int s = next.fetch_add(1); s < shards; s = next.fetch_add(1)) work(s);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(threads, shards); ++t) pool.emplace_back(loop);
        for (auto& t : pool) t.join();
    }

    ShardResult merged;
    for (const ShardResult& r : results) {
        merged.stats.merge(r.stats);
        merged.pair_evals += r.pair_evals;
    }
    return merged;
}

std::uint64_t quantity_tag(const std::string& q) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : q) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    return h;
}

Estimate estimate_class_sum(const std::string& quantity, const TreeSum& sum,
                            const PairPotential& p, std::uint64_t samples, std::uint64_t seed,
                            const McOptions& opt) {
    Int total_mult = 0;
    for (const auto& [t, mult] : sum.entries) total_mult += mult;

    const std::uint64_t tag = quantity_tag(quantity);
    const double prefactor = to_double(sum.prefactor);
    double mean = 0, var = 0;
    std::uint64_t drawn = 0, pair_evals = 0;
    for (std::size_t idx = 0; idx < sum.entries.size(); ++idx) {
        const auto& [t, mult] = sum.entries[idx];
        Int share = (Int(samples) * mult) / total_mult;
        std::uint64_t quota = share.convert_to<std::uint64_t>();
        if (quota < opt.floor) quota = opt.floor;
        ClassKernel kernel(t, p);
        ShardResult r = run_class(kernel, p, quota, seed ^ tag, idx, opt);
        const double w = to_double(mult);
        mean += w * r.stats.mean;
        var += w * w * r.stats.variance_of_mean();
        drawn += r.stats.count;
        pair_evals += r.pair_evals;
    }
    Estimate est;
    est.quantity = quantity;
    est.mean = prefactor * mean;
    est.std_err = prefactor * std::sqrt(var);
    est.samples = drawn;
    est.pair_evals = pair_evals;
    est.seed = seed;
    return est;
}

} // namespace

std::vector<Vec3> sample_tree_positions(const TreeClass& t, const PairPotential& p,
                                        SplitMix64& rng, int* sign_out) {
    std::vector<int> parents(t.n + 1, 0);
    for (const Edge& e : canonical_labeling(t)) parents[e.v] = e.u;
    std::vector<Vec3> pos(t.n + 1, Vec3{0, 0, 0});
    int sign = 1;
    Vec3 step;
    for (int child = 2; child <= t.n; ++child) {
        sign *= draw_displacement(p, rng, step);
        const Vec3& base = pos[parents[child]];
        pos[child] = {base[0] + step[0], base[1] + step[1], base[2] + step[2]};
    }
    if (sign_out) *sign_out = sign;
    return pos;
}

Estimate estimate_tree_integral(const TreeClass& t, const PairPotential& p,
                                std::uint64_t samples, std::uint64_t seed,
                                const McOptions& opt) {
    if (samples < 1) throw RangeError("estimate_tree_integral: need at least one sample");
    ClassKernel kernel(t, p);
    ShardResult r = run_class(kernel, p, samples, seed, 0, opt);
    Estimate est;
    est.quantity = "tree-integral";
    est.mean = r.stats.mean;
    est.std_err = std::sqrt(r.stats.variance_of_mean());
    est.samples = r.stats.count;
    est.pair_evals = r.pair_evals;
    est.seed = seed;
    return est;
}

Estimate estimate_b(int n, const PairPotential& p, std::uint64_t samples, std::uint64_t seed,
                    const McOptions& opt) {
    if (n < 2 || n > 8) throw RangeError("estimate_b: n outside 2..8");
    return estimate_class_sum("b(" + std::to_string(n) + ")", tree_sum(n, TreeSubset::Full), p,
                              samples, seed, opt);
}

Estimate estimate_a(int n, const PairPotential& p, std::uint64_t samples, std::uint64_t seed,
                    const McOptions& opt) {
    if (n < 2 || n > 8) throw RangeError("estimate_a: n outside 2..8");
    return estimate_class_sum("a(" + std::to_string(n) + ")", tree_sum(n, TreeSubset::ASubset),
                              p, samples, seed, opt);
}

VirialEstimate estimate_B(int n, Route route, const PairPotential& p, std::uint64_t samples,
                          std::uint64_t seed, const McOptions& opt) {
    if (n < 2 || n > 6) throw RangeError("estimate_B: n outside 2..6");
    VirialEstimate out;
    std::vector<EstVal> coeffs;
    std::vector<double> variances;
    std::uint64_t pair_evals = 0;
    for (int k = 2; k <= n; ++k) {
        Estimate e = route == Route::BRoute
                         ? estimate_b(k, p, samples, derive_stream(seed, 17, k), opt)
                         : estimate_a(k, p, samples, derive_stream(seed, 23, k), opt);
        std::vector<double> grad(n - 1, 0.0);
        grad[k - 2] = 1.0;
        coeffs.emplace_back(e.mean, std::move(grad));
        variances.push_back(e.std_err * e.std_err);
        pair_evals += e.pair_evals;
        out.inputs.push_back(std::move(e));
    }

    EstVal value;
    if (route == Route::BRoute) {
        value = b_to_B(coeffs, n, &out.polynomial_ops);
    } else {
        ARouteResult<EstVal> staged = a_to_B_staged(coeffs, n);
        value = staged.value;
        out.stage2 = staged.stage2;
        out.stage3 = staged.stage3;
        out.stage4 = staged.stage4;
        out.polynomial_ops = staged.total();
    }

    out.est.quantity =
        "B(" + std::to_string(n) + ")/" + (route == Route::BRoute ? "b-route" : "a-route");
    out.est.mean = value.v;
    out.est.std_err = std::sqrt(propagated_variance(value, variances));
    out.est.samples = samples;
    out.est.pair_evals = pair_evals;
    out.est.seed = seed;
    return out;
}

namespace {

// Importance-sampled estimate of the sum over all edge sets accepted by
// `keep` of the integral of the f-product (one coordinate pinned).
Estimate graph_sum_estimate(int n, const PairPotential& p, std::uint64_t samples,
                            std::uint64_t seed, const McOptions& opt,
                            bool (*keep)(const EdgeList&, int), double prefactor,
                            const std::string& quantity) {
    const int bits = pair_count(n);
    const double weight = abs_f_integral(p);
    const double weight_pow = std::pow(weight, n - 1);

    double mean = 0, var = 0;
    std::uint64_t total_samples = 0;
    std::uint64_t block_id = 0;
    for (EdgeMask mask = 0; mask < (EdgeMask(1) << bits); ++mask) {
        const EdgeList edges = edges_from_mask(mask, n);
        if (!keep(edges, n)) continue;
        // breadth-first spanning tree from vertex 1, then leftover f factors
        std::vector<int> parent(n + 1, 0);
        std::vector<char> seen(n + 1, 0);
        std::vector<int> order{1};
        seen[1] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (const Edge& e : edges) {
                int w = e.u == v ? e.v : e.v == v ? e.u : 0;
                if (w && !seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    order.push_back(w);
                }
            }
        }
        std::vector<Edge> extra;
        for (const Edge& e : edges)
            if (parent[e.v] != e.u && parent[e.u] != e.v) extra.push_back(e);

        const int shards = std::max(1, opt.shards);
        std::vector<std::uint64_t> quota(shards, samples / shards);
        for (std::uint64_t i = 0; i < samples % shards; ++i) ++quota[i];
        Welford stats;
        for (int shard = 0; shard < shards; ++shard) {
            SplitMix64 rng(derive_stream(seed, 29, block_id, shard));
            std::vector<Vec3> pos(n + 1, Vec3{0, 0, 0});
            Vec3 step;
            for (std::uint64_t s = 0; s < quota[shard]; ++s) {
                int sign = 1;
                for (int v = 1; v < static_cast<int>(order.size()); ++v) {
                    int child = order[v];
                    sign *= draw_displacement(p, rng, step);
                    const Vec3& base = pos[parent[child]];
                    pos[child] = {base[0] + step[0], base[1] + step[1], base[2] + step[2]};
                }
                double value = sign * weight_pow;
                for (const Edge& e : extra) {
                    const Vec3& a = pos[e.u];
                    const Vec3& b = pos[e.v];
                    double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
                    value *= mayer_f(p, dx * dx + dy * dy + dz * dz);
                }
                stats.push(value);
            }
        }
        mean += stats.mean;
        var += stats.variance_of_mean();
        total_samples += stats.count;
        ++block_id;
    }
    Estimate est;
    est.quantity = quantity;
    est.mean = prefactor * mean;
    est.std_err = std::abs(prefactor) * std::sqrt(var);
    est.samples = total_samples;
    est.pair_evals = 0;
    est.seed = seed;
    return est;
}

} // namespace

Estimate mayer_oracle_Bn(int n, const PairPotential& p, std::uint64_t samples,
                         std::uint64_t seed, const McOptions& opt) {
    if (n < 2 || n > 4) throw RangeError("mayer_oracle_Bn: n outside 2..4");
    return graph_sum_estimate(n, p, samples, seed, opt, is_biconnected,
                              -to_double(Rational(n - 1, factorial(n))),
                              "B(" + std::to_string(n) + ")/block-oracle");
}

Estimate mayer_oracle_bn(int n, const PairPotential& p, std::uint64_t samples,
                         std::uint64_t seed, const McOptions& opt) {
    if (n < 2 || n > 4) throw RangeError("mayer_oracle_bn: n outside 2..4");
    return graph_sum_estimate(n, p, samples, seed, opt, is_connected,
                              to_double(Rational(1, factorial(n))),
                              "b(" + std::to_string(n) + ")/connected-oracle");
}

PairEvalTotals pair_eval_accounting(const TreeSum& sum, std::uint64_t per_class_samples) {
    PairEvalTotals totals;
    for (const auto& [t, mult] : sum.entries) {
        (void)mult;
        totals.mayer += per_class_samples * static_cast<std::uint64_t>(t.n - 1);
        totals.boltzmann += per_class_samples * admissible_edges(t).size();
    }
    return totals;
}

} // namespace vlab
