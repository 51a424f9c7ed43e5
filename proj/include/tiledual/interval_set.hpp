#pragma once

#include "tiledual/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiledual {

/// Half-open interval [lo, hi) with rational endpoints. Empty intervals are
/// never stored, so lo < hi always holds.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (!(lo < hi))
            throw std::invalid_argument("Interval: requires lo < hi, got [" + lo.str() + ", " + hi.str() + ")");
    }

    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Canonical finite union of half-open rational intervals: sorted, pairwise
/// disjoint and non-adjacent (abutting intervals are merged on construction).
/// Set equality is therefore structural equality.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Normalizes an arbitrary list of intervals into canonical form.
    explicit IntervalSet(std::vector<Interval> raw);

    static IntervalSet single(Rational lo, Rational hi) {
        std::vector<Interval> v;
        v.emplace_back(std::move(lo), std::move(hi));
        return IntervalSet(std::move(v));
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    /// Exact Lebesgue measure.
    Rational measure() const;

    /// The set shifted by t; measure-preserving.
    IntervalSet translated(const Rational& t) const;

    /// Convex hull endpoints, or nullopt when empty.
    std::optional<Interval> hull() const;

    /// True when every part already satisfies the canonical-form invariant.
    bool is_canonical() const;

    std::string str() const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) { return !(a == b); }

private:
    std::vector<Interval> parts_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);

/// measure(a ∩ b); zero iff a and b are disjoint up to measure zero.
Rational overlap_measure(const IntervalSet& a, const IntervalSet& b);

/// inner ⊆ outer as point sets.
bool contains(const IntervalSet& outer, const IntervalSet& inner);

/// lcm of all endpoint denominators (1 for the empty set).
BigInt denominator_lcm(const IntervalSet& s);

}  // namespace tiledual
