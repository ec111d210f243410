#pragma once

#include <string>
#include <vector>

#include "vlab/graphs.hpp"

namespace vlab {

// Integration-domain descriptor. Improper means the space R^(dim*(n-1))
// with one coordinate pinned; a box means a side^n product domain.
struct Domain {
    enum class Kind { ImproperSpace, BoundedBox } kind = Kind::ImproperSpace;
    double box_side = 0.0;

    friend bool operator==(const Domain&, const Domain&) = default;
};

inline Domain improper_space() { return Domain{Domain::Kind::ImproperSpace, 0.0}; }
inline Domain bounded_box(double side) { return Domain{Domain::Kind::BoundedBox, side}; }

// A base linear combination: shared domain plus (graph label, coefficient)
// entries whose Mayer subgraphs are connected.
struct BaseLinearCombination {
    int n = 0;
    Domain domain;
    std::vector<std::pair<TwoColorGraph, Rational>> entries;
};

// Validates entry labels (order n, Mayer-connected, pairwise distinct,
// non-empty); throws NotBaseError / RangeError.
BaseLinearCombination make_base_linear_combination(
    int n, Domain domain, std::vector<std::pair<TwoColorGraph, Rational>> entries);

// Members either all improper or all over one shared box side.
struct BaseSet {
    std::vector<BaseLinearCombination> members;
};

BaseSet make_base_set(std::vector<BaseLinearCombination> members);
int order_of(const BaseSet& s);

Int cr1(const BaseLinearCombination& L);
Int cr2(const BaseLinearCombination& L);
Int cr3(const BaseLinearCombination& L); // DomainError over a bounded box
Int criterion_value(int i, const BaseLinearCombination& L);
Int cr_prime(int i, const BaseSet& S);

bool is_comparable(const BaseLinearCombination& a, const BaseLinearCombination& b);
bool is_comparable(const BaseSet& a, const BaseSet& b);
bool is_comparable(const BaseSet& a, const BaseLinearCombination& b);

enum class Verdict { ConsiderablyMoreComplicated, ConsiderablySimpler, ApproximatelyEqual };

std::string verdict_name(Verdict v);

// Verdict for the first operand relative to the second.
Verdict verdict_of(const Int& lhs, const Int& rhs);
Verdict compare(const BaseLinearCombination& a, const BaseLinearCombination& b, int criterion);
Verdict compare(const BaseSet& a, const BaseLinearCombination& b, int criterion);
Verdict compare(const BaseSet& a, const BaseSet& b, int criterion);

// True when every entry label of `small` occurs in `big` and `big` has more;
// lets the report layer refine an equal-criterion verdict.
bool entries_strict_superset(const BaseLinearCombination& big, const BaseLinearCombination& small);

} // namespace vlab
