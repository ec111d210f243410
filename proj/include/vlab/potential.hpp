#pragma once

#include <array>

#include "vlab/exact.hpp"
#include "vlab/rng.hpp"

namespace vlab {

using Vec3 = std::array<double, 3>; // components beyond dim stay 0

// Pair interaction; both kinds have |f| bounded and integrable, which is what
// the sampler needs (uniform core, constant-weight shell).
struct PairPotential {
    enum class Kind { HardSphere, SquareWell } kind = Kind::HardSphere;
    double sigma = 1.0;   // hard-core diameter
    int dim = 3;          // spatial dimension, 1..3
    double lambda = 1.5;  // well range multiple (square well only)
    double beta_eps = 0;  // reduced well depth beta*eps (square well only)
};

PairPotential hard_sphere(double sigma, int dim);
PairPotential square_well(double sigma, int dim, double lambda, double beta_eps);

// Mayer function from the squared pair distance.
double mayer_f(const PairPotential& p, double r_sq);

// Volume of the radius-r ball in p.dim dimensions.
double ball_volume(int dim, double r);

// Integral of |f| over space; the normalizer of the displacement density.
double abs_f_integral(const PairPotential& p);

// Draw a displacement with density |f|/integral(|f|); returns the sign of f
// at the drawn point (-1 in the core, +1 in a square-well shell).
int draw_displacement(const PairPotential& p, SplitMix64& rng, Vec3& out);

} // namespace vlab
