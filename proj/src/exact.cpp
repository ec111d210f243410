#include "vlab/exact.hpp"

#include <array>
#include <vector>

namespace vlab {

namespace {

constexpr int kTableMax = 64;

std::vector<Int> build_factorials() {
    std::vector<Int> t(kTableMax + 1);
    t[0] = 1;
    for (int k = 1; k <= kTableMax; ++k) t[k] = t[k - 1] * k;
    return t;
}

std::vector<Int> build_partition_counts() {
    // p(k) via the coin-counting recurrence over part sizes.
    std::vector<Int> p(kTableMax + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= kTableMax; ++part)
        for (int k = part; k <= kTableMax; ++k) p[k] += p[k - part];
    return p;
}

} // namespace

const Int& factorial(int k) {
    static const std::vector<Int> table = build_factorials();
    if (k < 0 || k > kTableMax) throw RangeError("factorial: k outside 0..64");
    return table[k];
}

const Int& partition_count(int k) {
    static const std::vector<Int> table = build_partition_counts();
    if (k < 0 || k > kTableMax) throw RangeError("partition_count: k outside 0..64");
    return table[k];
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const Int& v) { return v.convert_to<double>(); }

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

} // namespace vlab
