#include "tiledual/tiling.hpp"

#include <algorithm>

namespace tiledual {

namespace {

void validate_base(int p, const IntervalSet& base) {
    if (p < 2) throw std::invalid_argument("PeriodicSet: p must be >= 2");
    if (!contains(IntervalSet::single(0, p), base))
        throw std::invalid_argument("PeriodicSet: base " + base.str() + " not contained in [0," + std::to_string(p) + ")");
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

PeriodicSet::PeriodicSet(int p_, IntervalSet base_) : p(p_), base(std::move(base_)) {
    validate_base(p, base);
}

CompletionError::CompletionError(long long j_, Rational overlap_)
    : std::runtime_error("complete_to_tile: translate by " + std::to_string(j_) +
                         " overlaps the set with measure " + overlap_.str()),
      j(j_),
      overlap(std::move(overlap_)) {}

TilingReport tiles_window(const IntervalSet& tile, const TranslationSet& shifts, const IntervalSet& target) {
    TilingReport report;
    if (target.is_empty()) {
        report.verdict = true;
        return report;
    }

    std::vector<Rational> candidates;
    if (const auto* fs = std::get_if<FiniteShifts>(&shifts)) {
        std::vector<Rational> sorted = fs->shifts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("tiles_window: finite shifts must be distinct");
        candidates = std::move(sorted);
    } else {
        const auto& ls = std::get<LatticeShifts>(shifts);
        if (!(Rational(0) < ls.step)) throw std::invalid_argument("tiles_window: lattice step must be positive");
        auto th = tile.hull();
        auto wh = target.hull();
        if (th && wh) {
            // k*step in (target.lo - tile.hi, target.hi - tile.lo)
            long long klo = ((wh->lo - th->hi) / ls.step).floor_ll();
            long long khi = ((wh->hi - th->lo) / ls.step).floor_ll() + 1;
            for (long long k = klo; k <= khi; ++k) candidates.push_back(Rational(k) * ls.step);
        }
    }

    std::vector<std::pair<Rational, IntervalSet>> clipped;
    for (const Rational& t : candidates) {
        IntervalSet piece = intersect(tile.translated(t), target);
        if (!piece.is_empty()) clipped.emplace_back(t, std::move(piece));
    }

    IntervalSet covered;
    for (std::size_t i = 0; i < clipped.size(); ++i) {
        for (std::size_t j = i + 1; j < clipped.size(); ++j) {
            IntervalSet ov = intersect(clipped[i].second, clipped[j].second);
            if (!ov.is_empty() && !report.overlap) {
                report.overlap = OverlapViolation{clipped[i].first, clipped[j].first, std::move(ov)};
            }
        }
        covered = unite(covered, clipped[i].second);
    }
    report.uncovered = difference(target, covered);
    report.verdict = !report.overlap && report.uncovered.is_empty();
    return report;
}

TilingReport tiles_by_residues(const PeriodicSet& omega) {
    const IntervalSet window = IntervalSet::single(0, omega.p);
    FiniteShifts shifts;
    // Translates base + j + p*k meeting [0, p) have k in {-1, 0, 1}; the rest
    // clip to nothing and are dropped inside tiles_window.
    for (int j = 0; j < omega.p; ++j)
        for (int k = -1; k <= 1; ++k) shifts.shifts.push_back(Rational(j + static_cast<long long>(omega.p) * k));
    return tiles_window(omega.base, TranslationSet(std::move(shifts)), window);
}

IntervalSet fundamental_domain(const PeriodicSet& omega) {
    validate_base(omega.p, omega.base);
    return omega.base;
}

std::pair<CongruenceDecomposition, bool> congruence_mod_one(const IntervalSet& s) {
    CongruenceDecomposition dec;
    if (s.is_empty()) return {dec, false};
    const Interval h = *s.hull();
    const long long k_lo = h.lo.floor_ll();
    const long long k_hi = h.hi.floor_ll() + 1;
    Rational piece_total;
    IntervalSet merged;
    for (long long k = k_lo; k <= k_hi; ++k) {
        IntervalSet piece = intersect(s, IntervalSet::single(Rational(k), Rational(k + 1)));
        if (piece.is_empty()) continue;
        IntervalSet shifted = piece.translated(Rational(-k));
        piece_total += shifted.measure();
        merged = unite(merged, shifted);
        dec.pieces.emplace(k, std::move(shifted));
    }
    const bool disjoint = merged.measure() == piece_total;
    const bool covers = merged == IntervalSet::single(0, 1);
    return {dec, disjoint && covers};
}

IntervalSet build_omega_n(const IntervalSet& omega0, int p, int n) {
    if (p < 2) throw std::invalid_argument("build_omega_n: p must be >= 2");
    if (n < 0) throw std::invalid_argument("build_omega_n: n must be >= 0");
    if (!contains(IntervalSet::single(0, p), omega0))
        throw std::invalid_argument("build_omega_n: omega0 not contained in [0," + std::to_string(p) + ")");
    IntervalSet out;
    for (int l = -n; l <= n; ++l) out = unite(out, omega0.translated(Rational(static_cast<long long>(p) * l)));
    return out;
}

Rational translate_disjointness(const PeriodicSet& omega, long long j) {
    const IntervalSet window = IntervalSet::single(0, omega.p);
    // (Omega + j) ∩ [0, p): translates base + j + p*k with j + p*k in (-p, p).
    const long long p = omega.p;
    IntervalSet shifted_in_window;
    for (long long k = floor_div(-p - j, p); k <= floor_div(p - j, p) + 1; ++k) {
        IntervalSet piece = intersect(omega.base.translated(Rational(j + p * k)), window);
        shifted_in_window = unite(shifted_in_window, piece);
    }
    return overlap_measure(omega.base, shifted_in_window);
}

Completion complete_to_tile(const PeriodicSet& omega) {
    for (long long j = 1; j < omega.p; ++j) {
        Rational ov = translate_disjointness(omega, j);
        if (!ov.is_zero()) throw CompletionError(j, std::move(ov));
    }

    // R = [0,1) \ ((base + Z) ∩ [0,1)); the congruence pieces are exactly the
    // integer translates of base that meet [0,1).
    IntervalSet occupied;
    auto [dec, ok] = congruence_mod_one(omega.base);
    (void)ok;
    for (const auto& [k, piece] : dec.pieces) occupied = unite(occupied, piece);
    IntervalSet residue = difference(IntervalSet::single(0, 1), occupied);

    PeriodicSet tilde(omega.p, unite(omega.base, residue));
    if (!tiles_by_residues(tilde).verdict)
        throw std::logic_error("complete_to_tile: completed set failed the tiling check");
    if (!contains(tilde.base, omega.base))
        throw std::logic_error("complete_to_tile: completed set does not contain the input");
    return Completion{std::move(residue), std::move(tilde)};
}

IntervalSet periodic_clip(const PeriodicSet& omega, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) return IntervalSet();
    const IntervalSet window = IntervalSet::single(lo, hi);
    const long long p = omega.p;
    // base + p*k ⊆ [p*k, p*k + p) meets [lo, hi) only for k in this range.
    const long long k_lo = (lo / Rational(p)).floor_ll() - 1;
    const long long k_hi = (hi / Rational(p)).floor_ll() + 1;
    IntervalSet out;
    for (long long k = k_lo; k <= k_hi; ++k)
        out = unite(out, intersect(omega.base.translated(Rational(p * k)), window));
    return out;
}

}  // namespace tiledual
