#pragma once

#include <cstddef>
#include <vector>

#include "vlab/exact.hpp"

namespace vlab {

// Index vector of the coefficient polynomials: sum_j j*m_j = n-1.
struct MVector {
    int n = 0;
    std::vector<int> m; // m[j-1] = m_j, length n-1

    int norm() const {
        int s = 0;
        for (int x : m) s += x;
        return s;
    }
};

// All vectors of M(n), descending lexicographic; p(n-1) of them.
std::vector<MVector> enumerate_m_vectors(int n);

// Arithmetic accounting at the granularity of the 5*norm budget: additions,
// multiplications, divisions and factorial-table lookups each count one.
struct OpCounter {
    long long add = 0, mul = 0, div = 0, lookup = 0;
    long long total() const { return add + mul + div + lookup; }
    OpCounter& operator+=(const OpCounter& o) {
        add += o.add;
        mul += o.mul;
        div += o.div;
        lookup += o.lookup;
        return *this;
    }
};

// Monte Carlo value with first-order error propagation: the gradient is
// taken with respect to the stage-1 inputs, variances combine as
// sum(g_k^2 var_k). An empty gradient means an exact constant.
struct EstVal {
    double v = 0;
    std::vector<double> g;

    EstVal() = default;
    explicit EstVal(double value) : v(value) {}
    EstVal(double value, std::vector<double> grad) : v(value), g(std::move(grad)) {}
};

EstVal operator+(const EstVal& a, const EstVal& b);
EstVal operator-(const EstVal& a, const EstVal& b);
EstVal operator*(const EstVal& a, const EstVal& b);

double propagated_variance(const EstVal& value, const std::vector<double>& input_variances);

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct RingTraits<double> {
    static double from_rational(const Rational& r) { return to_double(r); }
};

template <>
struct RingTraits<EstVal> {
    static EstVal from_rational(const Rational& r) { return EstVal(to_double(r)); }
};

enum class WeightMode { Successor, NegatedSuccessor, Unit };

namespace detail {

inline void count_add(OpCounter* ops, long long k = 1) {
    if (ops) ops->add += k;
}
inline void count_mul(OpCounter* ops, long long k = 1) {
    if (ops) ops->mul += k;
}
inline void count_div(OpCounter* ops, long long k = 1) {
    if (ops) ops->div += k;
}
inline void count_lookup(OpCounter* ops, long long k = 1) {
    if (ops) ops->lookup += k;
}

} // namespace detail

// Product over j of (1/m_j!) (y_j x_j)^(m_j) with y_j = j+1, -(j+1) or 1
// depending on the mode. x[j-1] holds x_j. Cost stays within 5*norm ops
// (3*norm for unit weights).
template <class R>
R q_product(const std::vector<R>& x, WeightMode mode, const MVector& mv, OpCounter* ops) {
    using T = RingTraits<R>;
    bool have = false;
    R acc{};
    for (std::size_t idx = 0; idx < mv.m.size(); ++idx) {
        const int mj = mv.m[idx];
        if (mj == 0) continue;
        const int j = static_cast<int>(idx) + 1;
        if (idx >= x.size()) throw RangeError("q_product: x too short for the index vector");
        R base = x[idx];
        if (mode != WeightMode::Unit) {
            const long w = mode == WeightMode::Successor ? (j + 1) : -(j + 1);
            detail::count_add(ops); // forming the weight
            base = base * T::from_rational(Rational(w));
            detail::count_mul(ops);
        }
        R power = base;
        for (int e = 1; e < mj; ++e) {
            power = power * base;
            detail::count_mul(ops);
        }
        detail::count_lookup(ops);
        detail::count_div(ops);
        power = power * T::from_rational(Rational(1, factorial(mj)));
        if (!have) {
            acc = power;
            have = true;
        } else {
            acc = acc * power;
            detail::count_mul(ops);
        }
    }
    if (!have) return T::from_rational(Rational(1));
    return acc;
}

// sum over M(n) of (n + norm - 2)! * Q(-b; successor weights; m).
// b[0] holds the order-2 coefficient.
template <class R>
R mayer_polynomial_sum(const std::vector<R>& b, int n, OpCounter* ops = nullptr) {
    using T = RingTraits<R>;
    if (static_cast<int>(b.size()) < n - 1) throw RangeError("mayer_polynomial_sum: need b_2..b_n");
    std::vector<R> x;
    x.reserve(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        x.push_back(b[i] * T::from_rational(Rational(-1)));
        detail::count_add(ops); // sign flip
    }
    bool have = false;
    R total{};
    for (const MVector& mv : enumerate_m_vectors(n)) {
        R term = q_product(x, WeightMode::Successor, mv, ops);
        detail::count_lookup(ops);
        detail::count_mul(ops);
        term = term * T::from_rational(Rational(factorial(n + mv.norm() - 2)));
        if (!have) {
            total = term;
            have = true;
        } else {
            total = total + term;
            detail::count_add(ops);
        }
    }
    return total;
}

// Virial coefficient from the activity-series coefficients b_2..b_n.
template <class R>
R b_to_B(const std::vector<R>& b, int n, OpCounter* ops = nullptr) {
    using T = RingTraits<R>;
    if (n < 2) throw RangeError("b_to_B: n must be at least 2");
    R sum = mayer_polynomial_sum(b, n, ops);
    detail::count_lookup(ops);
    detail::count_div(ops);
    detail::count_mul(ops);
    return sum * T::from_rational(Rational(n - 1, factorial(n)));
}

// beta_mu of the classical polynomial relation B_n = -((n-1)/n) beta_{n-1};
// needs b_2..b_{mu+1}.
template <class R>
R beta_mu(const std::vector<R>& b, int mu, OpCounter* ops = nullptr) {
    using T = RingTraits<R>;
    if (mu < 1) throw RangeError("beta_mu: mu must be at least 1");
    R sum = mayer_polynomial_sum(b, mu + 1, ops);
    return sum * T::from_rational(Rational(-1, factorial(mu)));
}

// e_1..e_n from a_2..a_n (a[0] holds the order-2 coefficient).
template <class R>
std::vector<R> e_coeffs(const std::vector<R>& a, int n, OpCounter* ops = nullptr) {
    using T = RingTraits<R>;
    if (n < 1) throw RangeError("e_coeffs: n must be at least 1");
    if (static_cast<int>(a.size()) < n - 1) throw RangeError("e_coeffs: need a_2..a_n");
    std::vector<R> e;
    e.reserve(n);
    e.push_back(T::from_rational(Rational(1)));
    for (int mu = 2; mu <= n; ++mu) {
        bool have = false;
        R total{};
        for (const MVector& mv : enumerate_m_vectors(mu)) {
            R term = q_product(a, WeightMode::Successor, mv, ops);
            detail::count_lookup(ops);
            detail::count_mul(ops);
            term = term * T::from_rational(Rational(factorial(mv.norm())));
            if (!have) {
                total = term;
                have = true;
            } else {
                total = total + term;
                detail::count_add(ops);
            }
        }
        detail::count_div(ops);
        e.push_back(total * T::from_rational(Rational(1, mu)));
    }
    return e;
}

// tau_1..tau_n from a_2..a_n, using the negated weight vector.
template <class R>
std::vector<R> tau_coeffs(const std::vector<R>& a, int n, OpCounter* ops = nullptr) {
    using T = RingTraits<R>;
    if (n < 1) throw RangeError("tau_coeffs: n must be at least 1");
    if (static_cast<int>(a.size()) < n - 1) throw RangeError("tau_coeffs: need a_2..a_n");
    std::vector<R> tau;
    tau.reserve(n);
    tau.push_back(T::from_rational(Rational(1)));
    for (int mu = 2; mu <= n; ++mu) {
        bool have = false;
        R total{};
        for (const MVector& mv : enumerate_m_vectors(mu)) {
            R term = q_product(a, WeightMode::NegatedSuccessor, mv, ops);
            detail::count_lookup(ops);
            detail::count_div(ops);
            term = term * T::from_rational(Rational(1, factorial(mu - mv.norm())));
            if (!have) {
                total = term;
                have = true;
            } else {
                total = total + term;
                detail::count_add(ops);
            }
        }
        detail::count_lookup(ops);
        detail::count_mul(ops);
        tau.push_back(total * T::from_rational(Rational(factorial(mu - 1))));
    }
    return tau;
}

template <class R>
struct ARouteResult {
    R value{};
    OpCounter stage2, stage3, stage4;
    OpCounter total() const {
        OpCounter t = stage2;
        t += stage3;
        t += stage4;
        return t;
    }
};

// Stages 2-4: e coefficients, tau coefficients, then the closing polynomial
// with unit weights and x_j = tau_j.
template <class R>
ARouteResult<R> a_to_B_staged(const std::vector<R>& a, int n) {
    using T = RingTraits<R>;
    if (n < 2) throw RangeError("a_to_B: n must be at least 2");
    ARouteResult<R> result;
    std::vector<R> e = e_coeffs(a, n, &result.stage2);
    std::vector<R> tau = tau_coeffs(a, n, &result.stage3);

    OpCounter* ops = &result.stage4;
    const std::vector<R>& x = tau; // x_j = tau_j, j = 1..n
    bool have = false;
    R total{};
    for (const MVector& mv : enumerate_m_vectors(n + 1)) {
        R term = q_product(x, WeightMode::Unit, mv, ops);
        detail::count_lookup(ops);
        detail::count_mul(ops);
        term = term * T::from_rational(Rational(factorial(mv.norm())));
        detail::count_mul(ops);
        term = term * e[mv.norm() - 1];
        if (!have) {
            total = term;
            have = true;
        } else {
            total = total + term;
            detail::count_add(ops);
        }
    }
    result.value = total;
    return result;
}

template <class R>
R a_to_B(const std::vector<R>& a, int n, OpCounter* ops = nullptr) {
    ARouteResult<R> r = a_to_B_staged(a, n);
    if (ops) *ops += r.total();
    return r.value;
}

// n b_n - sum_q (q+1) a_{q+1} (n-q) b_{n-q}; zero for consistent inputs.
// a[0] and b[0] hold the order-2 coefficients; order-1 values are 1.
template <class R>
R ab_recurrence_residual(const std::vector<R>& a, const std::vector<R>& b, int n) {
    using T = RingTraits<R>;
    if (n < 2) throw RangeError("ab_recurrence_residual: n must be at least 2");
    if (static_cast<int>(a.size()) < n - 1 || static_cast<int>(b.size()) < n - 1)
        throw RangeError("ab_recurrence_residual: need orders 2..n");
    const R one = T::from_rational(Rational(1));
    auto coeff = [&](const std::vector<R>& v, int order) -> R {
        return order == 1 ? one : v[order - 2];
    };
    R total = coeff(b, n) * T::from_rational(Rational(n));
    for (int q = 1; q <= n - 1; ++q) {
        R term = coeff(a, q + 1) * coeff(b, n - q);
        term = term * T::from_rational(Rational((q + 1) * (n - q)));
        total = total - term;
    }
    return total;
}

enum class Route { BRoute, ARoute };

// 7 p(n-1) n (n-1) + 5 n p(n) for the a-route; the sigma-based accounting
// for the b-route polynomial.
Int op_bound(Route route, int n);

} // namespace vlab
