#include "vlab/criteria.hpp"

#include <algorithm>
#include <set>

namespace vlab {

BaseLinearCombination make_base_linear_combination(
    int n, Domain domain, std::vector<std::pair<TwoColorGraph, Rational>> entries) {
    if (entries.empty()) throw NotBaseError("linear combination has no entries");
    std::set<TwoColorGraph> seen;
    for (const auto& [g, coeff] : entries) {
        (void)coeff;
        if (g.n != n) throw RangeError("entry order differs from combination order");
        if (!is_connected(g.mayer, g.n))
            throw NotBaseError("entry label has a disconnected Mayer subgraph");
        if (!seen.insert(g).second) throw NotBaseError("duplicate entry label");
    }
    return BaseLinearCombination{n, domain, std::move(entries)};
}

BaseSet make_base_set(std::vector<BaseLinearCombination> members) {
    if (members.empty()) throw RangeError("base set has no members");
    const Domain::Kind kind = members.front().domain.kind;
    for (const auto& m : members) {
        if (m.domain.kind != kind)
            throw DomainError("base set mixes improper-space and box members");
        if (kind == Domain::Kind::BoundedBox &&
            m.domain.box_side != members.front().domain.box_side)
            throw DomainError("base set members disagree on the box side");
    }
    return BaseSet{std::move(members)};
}

int order_of(const BaseSet& s) {
    int n = 0;
    for (const auto& m : s.members) n = std::max(n, m.n);
    return n;
}

Int cr1(const BaseLinearCombination& L) { return Int(L.entries.size()); }

Int cr2(const BaseLinearCombination& L) {
    Int total = 0;
    for (const auto& [g, coeff] : L.entries) {
        (void)coeff;
        total += Int(g.mayer.size()) + Int(g.boltzmann.size());
    }
    return total;
}

Int cr3(const BaseLinearCombination& L) {
    if (L.domain.kind != Domain::Kind::ImproperSpace)
        throw DomainError("cr3 is defined only over improper-space combinations");
    Int total = 0;
    for (const auto& [g, coeff] : L.entries) {
        (void)coeff;
        total += n1_complexity(g);
    }
    return total;
}

Int criterion_value(int i, const BaseLinearCombination& L) {
    switch (i) {
        case 1: return cr1(L);
        case 2: return cr2(L);
        case 3: return cr3(L);
        default: throw RangeError("criterion index must be 1, 2 or 3");
    }
}

Int cr_prime(int i, const BaseSet& S) {
    Int total = 0;
    for (const auto& m : S.members) total += criterion_value(i, m);
    return total;
}

bool is_comparable(const BaseLinearCombination& a, const BaseLinearCombination& b) {
    return a.n == b.n && a.domain == b.domain;
}

bool is_comparable(const BaseSet& a, const BaseSet& b) {
    if (order_of(a) != order_of(b)) return false;
    const Domain::Kind ka = a.members.front().domain.kind;
    const Domain::Kind kb = b.members.front().domain.kind;
    if (ka != kb) return false;
    if (ka == Domain::Kind::BoundedBox)
        return a.members.front().domain.box_side == b.members.front().domain.box_side;
    return true;
}

bool is_comparable(const BaseSet& a, const BaseLinearCombination& b) {
    if (order_of(a) != b.n) return false;
    for (const auto& m : a.members)
        if (m.n == b.n && !is_comparable(m, b)) return false;
    return true;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ConsiderablyMoreComplicated: return "considerably-more-complicated";
        case Verdict::ConsiderablySimpler: return "considerably-simpler";
        case Verdict::ApproximatelyEqual: return "approximately-equal";
    }
    return "?";
}

Verdict verdict_of(const Int& lhs, const Int& rhs) {
    if (lhs > rhs) return Verdict::ConsiderablyMoreComplicated;
    if (lhs < rhs) return Verdict::ConsiderablySimpler;
    return Verdict::ApproximatelyEqual;
}

Verdict compare(const BaseLinearCombination& a, const BaseLinearCombination& b, int criterion) {
    if (!is_comparable(a, b)) throw IncomparableError("combinations are not comparable");
    return verdict_of(criterion_value(criterion, a), criterion_value(criterion, b));
}

Verdict compare(const BaseSet& a, const BaseLinearCombination& b, int criterion) {
    if (!is_comparable(a, b)) throw IncomparableError("set and combination are not comparable");
    return verdict_of(cr_prime(criterion, a), criterion_value(criterion, b));
}

Verdict compare(const BaseSet& a, const BaseSet& b, int criterion) {
    if (!is_comparable(a, b)) throw IncomparableError("base sets are not comparable");
    return verdict_of(cr_prime(criterion, a), cr_prime(criterion, b));
}

bool entries_strict_superset(const BaseLinearCombination& big,
                             const BaseLinearCombination& small) {
    if (big.entries.size() <= small.entries.size()) return false;
    std::set<TwoColorGraph> labels;
    for (const auto& [g, c] : big.entries) {
        (void)c;
        labels.insert(g);
    }
    for (const auto& [g, c] : small.entries) {
        (void)c;
        if (!labels.count(g)) return false;
    }
    return true;
}

} // namespace vlab
