#pragma once

#include "tiledual/interval_set.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace tiledual {

/// A p-periodic subset of the line, Omega = base + p*Z, described by its
/// fundamental part inside [0, p).
struct PeriodicSet {
    int p = 2;
    IntervalSet base;

    PeriodicSet(int p_, IntervalSet base_);
};

struct FiniteShifts {
    std::vector<Rational> shifts;  // distinct
};

struct LatticeShifts {
    Rational step;  // positive
};

using TranslationSet = std::variant<FiniteShifts, LatticeShifts>;

struct OverlapViolation {
    Rational shift_a;
    Rational shift_b;
    IntervalSet overlap;  // nonempty, clipped to the checked window
};

/// Result of a tiling check: verdict true iff no violation was found.
struct TilingReport {
    bool verdict = false;
    std::optional<OverlapViolation> overlap;
    IntervalSet uncovered;  // nonempty only when coverage fails
};

/// Decomposition of a set into the pieces I_k = (s ∩ [k, k+1)) - k.
struct CongruenceDecomposition {
    std::map<long long, IntervalSet> pieces;
};

/// Thrown by complete_to_tile when some translate Omega + j, 0 < j < p,
/// meets Omega on a set of positive measure.
class CompletionError : public std::runtime_error {
public:
    CompletionError(long long j, Rational overlap);
    long long j;
    Rational overlap;
};

/// Do the translates of `tile` by `shifts` partition `target` exactly?
/// Translates are clipped to the target window; for lattice shifts only
/// those meeting the target are enumerated. A true verdict certifies the
/// partition of the window only, not of the whole line.
TilingReport tiles_window(const IntervalSet& tile, const TranslationSet& shifts, const IntervalSet& target);

/// Does Omega = base + p*Z tile the line by {0, ..., p-1}? Decided exactly
/// on a single period window [0, p), which suffices by periodicity.
TilingReport tiles_by_residues(const PeriodicSet& omega);

/// Returns the stored base after re-validating base ⊆ [0, p).
IntervalSet fundamental_domain(const PeriodicSet& omega);

/// Splits s into pieces I_k = (s ∩ [k,k+1)) - k. The flag is true iff the
/// pieces are pairwise disjoint and together cover [0, 1) exactly, i.e. s is
/// congruent to [0,1) modulo the integers.
std::pair<CongruenceDecomposition, bool> congruence_mod_one(const IntervalSet& s);

/// Omega_n = omega0 + p*{-n, ..., n}. Requires omega0 ⊆ [0, p) and n >= 0.
IntervalSet build_omega_n(const IntervalSet& omega0, int p, int n);

/// Exact measure of (Omega ∩ (Omega + j)) ∩ [0, p); zero certifies that the
/// translate by j is disjoint from Omega up to measure zero.
Rational translate_disjointness(const PeriodicSet& omega, long long j);

struct Completion {
    IntervalSet residue;    // R ⊆ [0,1), the part added to the base
    PeriodicSet omega_tilde;  // (base ∪ R) + p*Z, always a tiling
};

/// Completes Omega to a superset that tiles by {0, ..., p-1} by filling the
/// part of [0,1) not covered by base + Z. Requires pairwise disjoint
/// translates (translate_disjointness == 0 for j = 1..p-1), otherwise throws
/// CompletionError naming the offending shift.
Completion complete_to_tile(const PeriodicSet& omega);

/// Omega ∩ [lo, hi) as an explicit interval set.
IntervalSet periodic_clip(const PeriodicSet& omega, const Rational& lo, const Rational& hi);

}  // namespace tiledual
