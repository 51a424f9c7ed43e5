// Acceptance suite: end-to-end checks of the identities and constructions the
// library is built around, each printed as one PASS/FAIL line. Exits nonzero
// when any criterion fails.

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace tiledual;
using ts::iset;
using ts::rat;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& why, const std::string& message) {
    if (!ok && why.empty()) why = message;
    return ok;
}

// 1. comb identity: sum of squared Dirichlet-kernel samples equals (2n+1)^2
//    to 1e-9 relative for p in {2,3,5}, n <= 10, 100 random t each.
bool criterion_comb_identity(std::string& why) {
    std::mt19937_64 rng(101);
    bool ok = true;
    for (int p : {2, 3, 5}) {
        for (int n = 0; n <= 10; ++n) {
            const double want = static_cast<double>((2 * n + 1) * (2 * n + 1));
            for (int i = 0; i < 100; ++i) {
                const double t = ts::uniform01(rng);
                const double got = comb_plancherel_check(p, n, t);
                ok = check(std::abs(got - want) <= 1e-9 * want, why,
                           "p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t) +
                               " value " + std::to_string(got)) &&
                     ok;
            }
        }
    }
    return ok;
}

// 2. spectrum-Z identity: the truncated lattice sum returns 1 within
//    tol + tail for ten distinct bases congruent to [0,1) mod Z,
//    101 samples each at tol = 1e-6.
bool criterion_unit_lattice_sum(std::string& why) {
    const std::vector<IntervalSet> bases = ts::congruent_bases();
    if (!check(bases.size() == 10, why, "expected 10 bases")) return false;
    bool ok = true;
    std::mt19937_64 rng(202);
    for (const IntervalSet& base : bases) {
        ok = check(congruence_mod_one(base).second, why, "base not congruent: " + base.str()) && ok;
        for (int i = 0; i < 101; ++i) {
            const double t = ts::uniform01(rng);
            const LatticeSumResult r = plancherel_sum(base, {Rational(0)}, t, 1e-6);
            ok = check(std::abs(r.value - 1.0) <= 1e-6 + r.tail_bound, why,
                       "base " + base.str() + " t=" + std::to_string(t) + " value " + std::to_string(r.value)) &&
                 ok;
        }
    }
    return ok;
}

// 3. tiling chain: generated tiling sets have measure-one bases congruent to
//    [0,1) mod Z, exactly.
bool criterion_tiling_chain(std::string& why) {
    std::mt19937_64 rng(303);
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const int p = (i % 3 == 0) ? 5 : ((i % 3 == 1) ? 3 : 2);
        const PeriodicSet omega(p, ts::random_tiling_base(rng, p, 4));
        ok = check(tiles_by_residues(omega).verdict, why, "generated set does not tile: " + omega.base.str()) && ok;
        ok = check(omega.base.measure() == Rational(1), why, "measure != 1: " + omega.base.str()) && ok;
        ok = check(congruence_mod_one(omega.base).second, why, "not congruent: " + omega.base.str()) && ok;
    }
    return ok;
}

// 4. spectra of the truncations: lattice sums over Lambda_n sit within 1e-4
//    of (2n+1)^2 for n <= 2, p in {2,3}, across the tiling corpus.
bool criterion_lambda_n(std::string& why) {
    bool ok = true;
    for (const PeriodicSet& omega : ts::bundled_corpus().tiling) {
        if (omega.p > 3) continue;
        for (int n = 0; n <= 2; ++n) {
            const IntervalSet s = build_omega_n(omega.base, omega.p, n);
            const auto lat = spectrum_lambda_n(omega.p, n);
            const double expected = static_cast<double>((2 * n + 1) * (2 * n + 1));
            const CheckReport rep =
                verify_finite_spectrum(s, lat.offsets, 3, 4e-5, 404 + static_cast<std::uint64_t>(n), kDefaultKMax,
                                       expected);
            ok = check(rep.worst < 1e-4, why,
                       "base " + omega.base.str() + " n=" + std::to_string(n) + " deviation " +
                           std::to_string(rep.worst)) &&
                 ok;
        }
    }
    return ok;
}

// 5. isometry convergence for Omega = [0,1) + 2Z, f = chi_{[0,1)}: the
//    spectral sums approach ||f||^2 = 1 and the band integral matches it.
bool criterion_isometry_convergence(std::string& why) {
    const PeriodicSet omega(2, iset({{"0", "1"}}));
    const TestFunction f = IndicatorCombination::indicator(iset({{"0", "1"}}));
    const IsometryReport rep = isometry_check(omega, f, 32, 1e-6);
    bool ok = check(std::abs(rep.lhs - 1.0) < 1e-15, why, "lhs " + std::to_string(rep.lhs));
    double err8 = 1.0, err32 = 1.0;
    for (const RiemannValue& rv : rep.riemann_values) {
        if (rv.n == 8) err8 = rv.error;
        if (rv.n == 32) err32 = rv.error;
    }
    ok = check(err8 < 1e-2, why, "error at n=8: " + std::to_string(err8)) && ok;
    ok = check(err32 < 1e-3, why, "error at n=32: " + std::to_string(err32)) && ok;
    ok = check(rep.residual < 1e-4, why, "band residual " + std::to_string(rep.residual)) && ok;
    return ok;
}

// 6. surjectivity witnesses: after the integer-frequency gate, the witness
//    sum reproduces the bump to 1e-5 for five bump/k0 pairs on two tiling
//    sets.
bool criterion_surjectivity(std::string& why) {
    const std::vector<PeriodicSet> sets = {PeriodicSet(2, iset({{"0", "1"}})),
                                           PeriodicSet(2, iset({{"0", "1/2"}, {"3/2", "2"}}))};
    struct Combo {
        const char* center;
        const char* halfwidth;
        long long k0;
    };
    const std::vector<Combo> combos = {{"0", "1/8", 0}, {"0", "1/16", 0}, {"2", "1/8", 2},
                                       {"-1", "1/12", -1}, {"1/16", "1/8", 0}};
    bool ok = true;
    for (const PeriodicSet& omega : sets) {
        ok = check(integer_frequency_residual(omega.base, 8) < 1e-10, why,
                   "integer-frequency gate failed for " + omega.base.str()) &&
             ok;
        for (const Combo& combo : combos) {
            const BumpFunction g =
                BumpFunction::unit(rat(combo.center) + Rational(combo.k0), rat(combo.halfwidth));
            const CheckReport rep = surjectivity_witness(omega, g, combo.k0, 40);
            ok = check(rep.worst < 1e-5, why,
                       "residual " + std::to_string(rep.worst) + " for k0=" + std::to_string(combo.k0)) &&
                 ok;
        }
    }
    return ok;
}

// 7. separation: over the bundled corpus the exact tiling verdict and the
//    spectral diagnostic battery agree on every set.
bool criterion_separation(std::string& why) {
    const ts::Corpus& corpus = ts::bundled_corpus();
    bool ok = check(corpus.tiling.size() >= 20 && corpus.non_tiling.size() >= 20, why, "corpus too small");
    const VerdictConfig cfg;  // pinned battery defaults
    for (const PeriodicSet& omega : corpus.tiling) {
        const Verdict v = duality_verdict(omega, cfg);
        ok = check(v.tiling.verdict, why, "corpus tiling set rejected: " + omega.base.str()) && ok;
        ok = check(v.consistent, why, "inconsistent on tiling set: " + omega.base.str()) && ok;
    }
    for (const PeriodicSet& omega : corpus.non_tiling) {
        const Verdict v = duality_verdict(omega, cfg);
        ok = check(!v.tiling.verdict, why, "corpus non-tiling set accepted: " + omega.base.str()) && ok;
        ok = check(v.consistent, why, "inconsistent on non-tiling set: " + omega.base.str()) && ok;
    }
    return ok;
}

// 8. completion: translate-disjoint inputs always complete to an exact tiling
//    superset.
bool criterion_completion(std::string& why) {
    std::mt19937_64 rng(808);
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const int p = 2 + static_cast<int>(rng() % 4);
        IntervalSet base = ts::random_tiling_base(rng, p, 3);
        if (i % 4 != 3) {
            const Interval cut = ts::middle_half(ts::longest_part(base));
            base = difference(base, IntervalSet::single(cut.lo, cut.hi));
        }
        const PeriodicSet omega(p, base);
        const Completion completion = complete_to_tile(omega);
        ok = check(tiles_by_residues(completion.omega_tilde).verdict, why,
                   "completion does not tile for " + base.str()) &&
             ok;
        ok = check(overlap_measure(omega.base, completion.omega_tilde.base) == omega.base.measure(), why,
                   "completion does not contain " + base.str()) &&
             ok;
    }
    return ok;
}

// 9. oracle equivalence: exact interval verdicts match grid bitsets on the
//    whole corpus, and the closed-form transform matches adaptive quadrature
//    to 1e-10 on 100 random cases.
bool criterion_oracles(std::string& why) {
    bool ok = true;
    const ts::Corpus& corpus = ts::bundled_corpus();
    auto raster_check = [&](const PeriodicSet& omega) {
        const long long n = ts::raster_resolution(omega.base);
        const bool exact = tiles_by_residues(omega).verdict;
        const bool grid = ts::raster_tiles_by_residues(omega, n);
        ok = check(exact == grid, why, "raster disagreement on " + omega.base.str()) && ok;
    };
    for (const PeriodicSet& omega : corpus.tiling) raster_check(omega);
    for (const PeriodicSet& omega : corpus.non_tiling) raster_check(omega);

    std::mt19937_64 rng(909);
    for (int i = 0; i < 100; ++i) {
        std::vector<Interval> raw;
        const int pieces = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < pieces; ++k) {
            const long long den = 1 + static_cast<long long>(rng() % 12);
            const long long a = static_cast<long long>(rng() % 48) - 24;
            const long long len = 1 + static_cast<long long>(rng() % 8);
            raw.emplace_back(Rational(a, den), Rational(a + len, den));
        }
        const IntervalSet s(std::move(raw));
        const double t = (ts::uniform01(rng) - 0.5) * 20.0;
        const double diff = std::abs(ft_indicator(s, t) - ts::ft_quadrature(s, t));
        ok = check(diff < 1e-10, why, "quadrature gap " + std::to_string(diff)) && ok;
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"comb Plancherel identity equals (2n+1)^2 (p in {2,3,5}, n <= 10)", criterion_comb_identity},
        {"unit lattice sum for congruent bases (10 sets, 101 samples, tol 1e-6)", criterion_unit_lattice_sum},
        {"tiling sets have measure-one congruent bases (20 generated, exact)", criterion_tiling_chain},
        {"Lambda_n spectra verified within 1e-4 (n <= 2, p in {2,3})", criterion_lambda_n},
        {"isometry convergence for the unit tile (n = 32, band residual)", criterion_isometry_convergence},
        {"surjectivity witnesses below 1e-5 (5 bumps x 2 tiling sets)", criterion_surjectivity},
        {"tiling/spectral separation over the bundled corpus (>= 20 + 20)", criterion_separation},
        {"completion always tiles and contains its input (20 random inputs)", criterion_completion},
        {"raster and quadrature oracles agree with the exact/closed forms", criterion_oracles},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), secs,
                    why.empty() ? "" : " -- ", why.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
