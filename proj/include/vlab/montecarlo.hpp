#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlab/potential.hpp"
#include "vlab/series.hpp"
#include "vlab/trees.hpp"

namespace vlab {

struct Estimate {
    std::string quantity;
    double mean = 0;
    double std_err = 0;
    std::uint64_t samples = 0;
    std::uint64_t pair_evals = 0; // Mayer + Boltzmann function evaluations
    std::uint64_t seed = 0;
};

struct McOptions {
    int threads = 1;          // worker threads; results do not depend on this
    int shards = 16;          // fixed per-class stream count
    std::uint64_t floor = 1000; // minimum samples per class
};

// One configuration r_2..r_n for the class, drawn edge by edge with the
// |f|-normalized displacement density (r_1 pinned at the origin).
// Returns positions indexed 1..n; sign_out collects the product of edge signs.
std::vector<Vec3> sample_tree_positions(const TreeClass& t, const PairPotential& p,
                                        SplitMix64& rng, int* sign_out = nullptr);

Estimate estimate_tree_integral(const TreeClass& t, const PairPotential& p,
                                std::uint64_t samples, std::uint64_t seed,
                                const McOptions& opt = {});

// (1/n!) sum over the full class set, multiplicity-weighted; samples are
// allocated proportionally to multiplicity with a floor. 2 <= n <= 8.
Estimate estimate_b(int n, const PairPotential& p, std::uint64_t samples, std::uint64_t seed,
                    const McOptions& opt = {});

// Same over the a-subset classes.
Estimate estimate_a(int n, const PairPotential& p, std::uint64_t samples, std::uint64_t seed,
                    const McOptions& opt = {});

struct VirialEstimate {
    Estimate est;
    OpCounter stage2, stage3, stage4; // polynomial-assembly ops (a-route)
    OpCounter polynomial_ops;         // all ops past stage 1
    std::vector<Estimate> inputs;     // the stage-1 coefficient estimates
};

// Stage 1 estimates every needed coefficient (each with the given sample
// budget); the remaining stages run the polynomial assembly in estimate
// mode with first-order variance propagation. 2 <= n <= 6.
VirialEstimate estimate_B(int n, Route route, const PairPotential& p, std::uint64_t samples,
                          std::uint64_t seed, const McOptions& opt = {});

// Direct block-sum estimate of the virial coefficient (one coordinate
// pinned); independent oracle, n <= 4.
Estimate mayer_oracle_Bn(int n, const PairPotential& p, std::uint64_t samples,
                         std::uint64_t seed, const McOptions& opt = {});

// Direct connected-graph-sum estimate of the activity coefficient; the
// long form the tree sums reorganize. Independent oracle, n <= 4.
Estimate mayer_oracle_bn(int n, const PairPotential& p, std::uint64_t samples,
                         std::uint64_t seed, const McOptions& opt = {});

// Deterministic per-sample cost: n-1 Mayer draws plus one Boltzmann
// evaluation per admissible pair.
struct PairEvalTotals {
    std::uint64_t mayer = 0;
    std::uint64_t boltzmann = 0;
    std::uint64_t total() const { return mayer + boltzmann; }
};

PairEvalTotals pair_eval_accounting(const TreeSum& sum, std::uint64_t per_class_samples);

} // namespace vlab
