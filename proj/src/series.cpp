#include "vlab/series.hpp"

namespace vlab {

std::vector<MVector> enumerate_m_vectors(int n) {
    if (n < 2) throw RangeError("enumerate_m_vectors: n must be at least 2");
    std::vector<MVector> out;
    std::vector<int> cur(n - 1, 0);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == n - 1) {
            if (left == 0) out.push_back(MVector{n, cur});
            return;
        }
        const int weight = j + 1; // component index is 1-based
        for (int mj = left / weight; mj >= 0; --mj) {
            cur[j] = mj;
            self(self, j + 1, left - mj * weight);
        }
        cur[j] = 0;
    };
    rec(rec, 0, n - 1);
    return out;
}

EstVal operator+(const EstVal& a, const EstVal& b) {
    EstVal r(a.v + b.v);
    if (a.g.empty()) {
        r.g = b.g;
    } else if (b.g.empty()) {
        r.g = a.g;
    } else {
        if (a.g.size() != b.g.size()) throw RangeError("EstVal: gradient sizes differ");
        r.g = a.g;
        for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] += b.g[i];
    }
    return r;
}

EstVal operator-(const EstVal& a, const EstVal& b) {
    EstVal neg = b;
    neg.v = -neg.v;
    for (double& x : neg.g) x = -x;
    return a + neg;
}

EstVal operator*(const EstVal& a, const EstVal& b) {
    EstVal r(a.v * b.v);
    if (!a.g.empty() && !b.g.empty() && a.g.size() != b.g.size())
        throw RangeError("EstVal: gradient sizes differ");
    const std::size_t dims = std::max(a.g.size(), b.g.size());
    if (dims) {
        r.g.assign(dims, 0.0);
        for (std::size_t i = 0; i < a.g.size(); ++i) r.g[i] += a.g[i] * b.v;
        for (std::size_t i = 0; i < b.g.size(); ++i) r.g[i] += b.g[i] * a.v;
    }
    return r;
}

double propagated_variance(const EstVal& value, const std::vector<double>& input_variances) {
    double var = 0;
    for (std::size_t i = 0; i < value.g.size(); ++i) {
        if (i >= input_variances.size()) break;
        var += value.g[i] * value.g[i] * input_variances[i];
    }
    return var;
}

Int op_bound(Route route, int n) {
    if (n < 2) throw RangeError("op_bound: n must be at least 2");
    if (route == Route::ARoute)
        return Int(7) * partition_count(n - 1) * n * (n - 1) + Int(5) * n * partition_count(n);
    // b-route: per-term 5*norm plus the factorial lookup and multiply, the
    // inter-term additions, the input sign flips, and the closing prefactor.
    Int total = 0;
    for (const MVector& mv : enumerate_m_vectors(n)) total += 5 * mv.norm() + 2;
    total += partition_count(n - 1) - 1;
    total += n - 1;
    total += 3;
    return total;
}

} // namespace vlab
