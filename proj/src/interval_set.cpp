#include "tiledual/interval_set.hpp"

#include <algorithm>
#include <limits>

namespace tiledual {

long long Rational::floor_ll() const {
    BigInt f = floor();
    if (f > std::numeric_limits<long long>::max() || f < std::numeric_limits<long long>::min())
        throw std::overflow_error("Rational: floor out of machine range");
    return f.convert_to<long long>();
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty()) throw std::invalid_argument("Rational: empty component in \"" + text + "\"");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("Rational: sign without digits in \"" + text + "\"");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("Rational: invalid character in \"" + text + "\"");
        return BigInt(part);
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text), BigInt(1));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive in \"" + text + "\"");
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

IntervalSet::IntervalSet(std::vector<Interval> raw) {
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (Interval& iv : raw) {
        if (!parts_.empty() && iv.lo <= parts_.back().hi) {
            if (parts_.back().hi < iv.hi) parts_.back().hi = std::move(iv.hi);
        } else {
            parts_.push_back(std::move(iv));
        }
    }
}

Rational IntervalSet::measure() const {
    Rational m;
    for (const Interval& iv : parts_) m += iv.hi - iv.lo;
    return m;
}

IntervalSet IntervalSet::translated(const Rational& t) const {
    IntervalSet out;
    out.parts_.reserve(parts_.size());
    for (const Interval& iv : parts_) out.parts_.emplace_back(iv.lo + t, iv.hi + t);
    return out;
}

std::optional<Interval> IntervalSet::hull() const {
    if (parts_.empty()) return std::nullopt;
    return Interval(parts_.front().lo, parts_.back().hi);
}

bool IntervalSet::is_canonical() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (!(parts_[i].lo < parts_[i].hi)) return false;
        if (i > 0 && !(parts_[i - 1].hi < parts_[i].lo)) return false;
    }
    return true;
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " u ";
        s += "[" + parts_[i].lo.str() + "," + parts_[i].hi.str() + ")";
    }
    return s;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        Rational lo = max(pa[i].lo, pb[j].lo);
        Rational hi = min(pa[i].hi, pb[j].hi);
        if (lo < hi) out.emplace_back(std::move(lo), std::move(hi));
        if (pa[i].hi < pb[j].hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet(std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all;
    all.reserve(a.size() + b.size());
    all.insert(all.end(), a.parts().begin(), a.parts().end());
    all.insert(all.end(), b.parts().begin(), b.parts().end());
    return IntervalSet(std::move(all));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    const auto& pb = b.parts();
    std::size_t j = 0;
    for (const Interval& iv : a.parts()) {
        Rational cur = iv.lo;
        while (j < pb.size() && pb[j].hi <= cur) ++j;
        for (std::size_t k = j; k < pb.size() && pb[k].lo < iv.hi; ++k) {
            if (cur < pb[k].lo) out.emplace_back(cur, pb[k].lo);
            cur = max(cur, pb[k].hi);
            if (!(cur < iv.hi)) break;
        }
        if (cur < iv.hi) out.emplace_back(std::move(cur), iv.hi);
    }
    return IntervalSet(std::move(out));
}

Rational overlap_measure(const IntervalSet& a, const IntervalSet& b) {
    return intersect(a, b).measure();
}

bool contains(const IntervalSet& outer, const IntervalSet& inner) {
    return difference(inner, outer).is_empty();
}

BigInt denominator_lcm(const IntervalSet& s) {
    BigInt l = 1;
    for (const Interval& iv : s.parts()) {
        l = boost::multiprecision::lcm(l, iv.lo.denominator());
        l = boost::multiprecision::lcm(l, iv.hi.denominator());
    }
    return l;
}

}  // namespace tiledual
