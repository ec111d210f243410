#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EdgeOverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotBaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncomparableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownSuiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k! for 0 <= k <= 64, built once.
const Int& factorial(int k);

// Number of integer partitions p(k), memoized for 0 <= k <= 64.
const Int& partition_count(int k);

double to_double(const Rational& r);
double to_double(const Int& v);
long long to_ll(const Int& v);

} // namespace vlab
