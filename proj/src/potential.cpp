#include "vlab/potential.hpp"

#include <cmath>

namespace vlab {

namespace {

void validate(const PairPotential& p) {
    if (p.sigma <= 0) throw RangeError("potential: sigma must be positive");
    if (p.dim < 1 || p.dim > 3) throw RangeError("potential: dim must be 1, 2 or 3");
    if (p.kind == PairPotential::Kind::SquareWell) {
        if (p.lambda <= 1.0) throw RangeError("potential: square-well lambda must exceed 1");
        if (p.beta_eps < 0) throw RangeError("potential: square-well beta*eps must be >= 0");
    }
}

double shell_weight(const PairPotential& p) {
    return std::expm1(p.beta_eps) *
           (ball_volume(p.dim, p.lambda * p.sigma) - ball_volume(p.dim, p.sigma));
}

void unit_direction(int dim, SplitMix64& rng, Vec3& out) {
    out = {0, 0, 0};
    switch (dim) {
        case 1: out[0] = rng.next_unit() < 0.5 ? -1.0 : 1.0; break;
        case 2: {
            double theta = 2.0 * M_PI * rng.next_unit();
            out[0] = std::cos(theta);
            out[1] = std::sin(theta);
            break;
        }
        default: {
            double z = 2.0 * rng.next_unit() - 1.0;
            double phi = 2.0 * M_PI * rng.next_unit();
            double s = std::sqrt(std::max(0.0, 1.0 - z * z));
            out[0] = s * std::cos(phi);
            out[1] = s * std::sin(phi);
            out[2] = z;
            break;
        }
    }
}

// Radius with density proportional to r^(dim-1) on [lo, hi).
double radius_in_shell(int dim, double lo, double hi, double u) {
    double a = std::pow(lo, dim), b = std::pow(hi, dim);
    return std::pow(a + u * (b - a), 1.0 / dim);
}

} // namespace

PairPotential hard_sphere(double sigma, int dim) {
    PairPotential p{PairPotential::Kind::HardSphere, sigma, dim, 1.5, 0.0};
    validate(p);
    return p;
}

PairPotential square_well(double sigma, int dim, double lambda, double beta_eps) {
    PairPotential p{PairPotential::Kind::SquareWell, sigma, dim, lambda, beta_eps};
    validate(p);
    return p;
}

double ball_volume(int dim, double r) {
    switch (dim) {
        case 1: return 2.0 * r;
        case 2: return M_PI * r * r;
        case 3: return 4.0 * M_PI * r * r * r / 3.0;
        default: throw RangeError("ball_volume: dim must be 1, 2 or 3");
    }
}

double mayer_f(const PairPotential& p, double r_sq) {
    double core = p.sigma * p.sigma;
    if (r_sq < core) return -1.0;
    if (p.kind == PairPotential::Kind::SquareWell) {
        double outer = p.lambda * p.sigma;
        if (r_sq < outer * outer) return std::expm1(p.beta_eps);
    }
    return 0.0;
}

double abs_f_integral(const PairPotential& p) {
    validate(p);
    double w = ball_volume(p.dim, p.sigma);
    if (p.kind == PairPotential::Kind::SquareWell) w += shell_weight(p);
    return w;
}

int draw_displacement(const PairPotential& p, SplitMix64& rng, Vec3& out) {
    unit_direction(p.dim, rng, out);
    double radius;
    int sign = -1;
    if (p.kind == PairPotential::Kind::SquareWell) {
        double wc = ball_volume(p.dim, p.sigma);
        double ws = shell_weight(p);
        if (rng.next_unit() * (wc + ws) < wc) {
            radius = radius_in_shell(p.dim, 0.0, p.sigma, rng.next_unit());
        } else {
            radius = radius_in_shell(p.dim, p.sigma, p.lambda * p.sigma, rng.next_unit());
            sign = 1;
        }
    } else {
        radius = radius_in_shell(p.dim, 0.0, p.sigma, rng.next_unit());
    }
    for (double& c : out) c *= radius;
    return sign;
}

} // namespace vlab
