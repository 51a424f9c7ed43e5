#include "tiledual/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tiledual {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

// Largest table we build for periodic numerators; beyond this the terms are
// evaluated one by one.
constexpr long long kMaxNumeratorPeriod = 4096;

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + (x2 * x2) / 120.0;
    }
    return std::sin(x) / x;
}

// P(v) = sum_e coef_e * e^{-2 pi i freq_e v}; for an indicator combination f
// this is the numerator in f^(v) = P(v) / (2 pi i v).
struct ExpSum {
    struct Atom {
        double coef;
        Rational freq;
        double freq_d;
    };
    std::vector<Atom> atoms;
};

ExpSum numerator_of(const IndicatorCombination& f) {
    ExpSum p;
    for (const auto& [coef, set] : f.terms) {
        const double c = coef.to_double();
        if (c == 0.0) continue;
        for (const Interval& iv : set.parts()) {
            p.atoms.push_back({c, iv.lo, iv.lo.to_double()});
            p.atoms.push_back({-c, iv.hi, iv.hi.to_double()});
        }
    }
    return p;
}

ComplexValue eval_expsum(const ExpSum& p, double v) {
    double re = 0.0, im = 0.0;
    for (const auto& a : p.atoms) {
        const double ang = -kTwoPi * a.freq_d * v;
        re += a.coef * std::cos(ang);
        im += a.coef * std::sin(ang);
    }
    return {re, im};
}

// Integer period of v -> P(v): lcm of the frequency denominators. Returns 0
// when the period exceeds the cap (callers then fall back to direct sums).
long long expsum_period(const ExpSum& p, long long cap) {
    BigInt l = 1;
    for (const auto& a : p.atoms) {
        l = boost::multiprecision::lcm(l, a.freq.denominator());
        if (l > cap) return 0;
    }
    return l.convert_to<long long>();
}

long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// sum over k in [-K, K], k != k_skip, of M[k mod q] / (u0 + k)^2, where the
// numerator table M has period q. All included k satisfy |u0 + k| >= 1/2, so
// the denominators are well away from zero; the caller handles k_skip with
// the stable closed form.
ComplexValue residue_stream(const std::vector<ComplexValue>& m, double u0, long long K, long long k_skip) {
    const long long q = static_cast<long long>(m.size());
    ComplexValue total{0.0, 0.0};
    for (long long r = 0; r < q; ++r) {
        const long long j0 = -floor_div_ll(K + r, q);  // ceil((-K - r)/q)
        const long long j1 = floor_div_ll(K - r, q);
        if (j0 > j1) continue;
        const double x = u0 + static_cast<double>(r);
        const double qd = static_cast<double>(q);
        double s = 0.0;
        auto accumulate = [&](long long a, long long b) {
            for (long long j = a; j <= b; ++j) {
                const double v = x + static_cast<double>(j) * qd;
                s += 1.0 / (v * v);
            }
        };
        if ((k_skip - r) % q == 0) {
            const long long j_skip = (k_skip - r) / q;
            accumulate(j0, std::min(j1, j_skip - 1));
            accumulate(std::max(j0, j_skip + 1), j1);
        } else {
            accumulate(j0, j1);
        }
        total += m[r] * s;
    }
    return total;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("truncation tolerance must be positive");
}

long long pick_truncation(double terms_needed, long long k_max) {
    if (!(terms_needed >= 0.0)) throw std::invalid_argument("invalid truncation bound");
    if (terms_needed > static_cast<double>(k_max))
        throw TruncationError(static_cast<long long>(std::min(terms_needed, 9e18)), k_max);
    long long K = static_cast<long long>(std::ceil(terms_needed)) + 1;
    if (K > k_max) throw TruncationError(K, k_max);
    return std::max<long long>(K, 2);
}

}  // namespace

TruncationError::TruncationError(long long needed_, long long cap_)
    : std::runtime_error("lattice sum needs K = " + std::to_string(needed_) +
                         " terms, above the iteration cap " + std::to_string(cap_)),
      needed(needed_),
      cap(cap_) {}

ComplexValue ft_indicator(const IntervalSet& s, double t) {
    if (t == 0.0) return {s.measure().to_double(), 0.0};
    double re = 0.0, im = 0.0;
    for (const Interval& iv : s.parts()) {
        // integral over [a,b) of e^{-2 pi i x t} = (b-a) e^{-i pi (a+b) t} sinc(pi (b-a) t)
        const double len = (iv.hi - iv.lo).to_double();
        const double sum2 = (iv.lo + iv.hi).to_double();
        const double w = len * sinc(kPi * len * t);
        const double ph = -kPi * sum2 * t;
        re += w * std::cos(ph);
        im += w * std::sin(ph);
    }
    return {re, im};
}

ComplexValue dirac_comb_ft(int p, int n, double t) {
    if (p < 2) throw std::invalid_argument("dirac_comb_ft: p must be >= 2");
    if (n < 0) throw std::invalid_argument("dirac_comb_ft: n must be >= 0");
    const double x = static_cast<double>(p) * t;
    const double den = std::sin(kPi * x);
    if (std::abs(den) < 1e-8) {
        // removable singularity at p t near an integer: sum the terms directly
        double acc = 1.0;
        for (int l = 1; l <= n; ++l) acc += 2.0 * std::cos(kTwoPi * l * x);
        return {acc, 0.0};
    }
    return {std::sin(kPi * (2 * n + 1) * x) / den, 0.0};
}

double comb_plancherel_check(int p, int n, double t) {
    const double step = 1.0 / (static_cast<double>(p) * (2 * n + 1));
    double total = 0.0;
    for (int j = -n; j <= n; ++j) total += std::norm(dirac_comb_ft(p, n, t + j * step));
    return total;
}

IndicatorCombination IndicatorCombination::indicator(IntervalSet s) {
    IndicatorCombination f;
    f.terms.emplace_back(Rational(1), std::move(s));
    return f;
}

ComplexValue IndicatorCombination::ft(double t) const {
    ComplexValue acc{0.0, 0.0};
    for (const auto& [coef, set] : terms) acc += coef.to_double() * ft_indicator(set, t);
    return acc;
}

IntervalSet IndicatorCombination::support() const {
    IntervalSet s;
    for (const auto& [coef, set] : terms)
        if (!coef.is_zero()) s = unite(s, set);
    return s;
}

bool IndicatorCombination::is_zero() const { return support().is_empty(); }

Rational IndicatorCombination::l2_norm_sq() const {
    Rational acc;
    for (const auto& [ci, ei] : terms)
        for (const auto& [cj, ej] : terms) acc += ci * cj * overlap_measure(ei, ej);
    return acc;
}

double IndicatorCombination::sup_bound() const {
    double a = 0.0;
    for (const auto& [coef, set] : terms) a += std::abs(coef.to_double()) * set.measure().to_double();
    return a;
}

double IndicatorCombination::decay_bound() const {
    // |f^(v)| = |P(v)| / (2 pi |v|) and |P(v)| <= sum of |atom coefficients|
    double s = 0.0;
    for (const auto& [coef, set] : terms) s += 2.0 * std::abs(coef.to_double()) * static_cast<double>(set.size());
    return s / kTwoPi;
}

LatticeSumResult ft_square_sum(const IndicatorCombination& f, const std::vector<Rational>& offsets, double t,
                               double tol, long long k_max) {
    check_tol(tol);
    if (offsets.empty()) throw std::invalid_argument("ft_square_sum: offsets must be non-empty");
    {
        std::vector<Rational> sorted = offsets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("ft_square_sum: offsets must be distinct");
    }
    const double b = f.decay_bound();
    if (b == 0.0) return {0.0, 0, 0.0};

    // per offset, after reducing t + o mod 1: sum_{|k|>K} B^2/(u+k)^2 <= 2 B^2/(K-1)
    const double bound_num = 2.0 * static_cast<double>(offsets.size()) * b * b;
    const long long K = pick_truncation(bound_num / tol, k_max);
    const double tail = bound_num / static_cast<double>(K - 1);

    const ExpSum p = numerator_of(f);
    const long long q = expsum_period(p, kMaxNumeratorPeriod);

    double total = 0.0;
    for (const Rational& off : offsets) {
        const double u0d = t + off.to_double();
        const double u0 = u0d - std::nearbyint(u0d);
        const long long k_near = std::llround(-u0);
        if (std::abs(k_near) <= K) total += std::norm(f.ft(u0 + static_cast<double>(k_near)));
        if (q > 0) {
            std::vector<ComplexValue> m(static_cast<std::size_t>(q));
            for (long long r = 0; r < q; ++r)
                m[static_cast<std::size_t>(r)] = {std::norm(eval_expsum(p, u0 + static_cast<double>(r))), 0.0};
            total += residue_stream(m, u0, K, k_near).real() / kFourPiSq;
        } else {
            for (long long k = -K; k <= K; ++k) {
                if (k == k_near) continue;
                const double v = u0 + static_cast<double>(k);
                total += std::norm(eval_expsum(p, v)) / (kFourPiSq * v * v);
            }
        }
    }
    return {total, K, tail};
}

LatticeSumResult plancherel_sum(const IntervalSet& s, const std::vector<Rational>& spectrum_offsets, double t,
                                double tol, long long k_max) {
    return ft_square_sum(IndicatorCombination::indicator(s), spectrum_offsets, t, tol, k_max);
}

PeriodizationResult periodization(const std::function<ComplexValue(double)>& f, double decay_c, double t, double tol,
                                  long long k_max) {
    check_tol(tol);
    if (!(decay_c > 0.0) || !std::isfinite(decay_c))
        throw std::invalid_argument("periodization: decay constant must be positive and finite");
    // sum_{|k|>K} C/(1+(t+k)^2) <= 2C/(K - |t|)
    const long long K = pick_truncation(2.0 * decay_c / tol + std::abs(t), k_max);
    const double tail = 2.0 * decay_c / (static_cast<double>(K) - std::abs(t));
    ComplexValue acc{0.0, 0.0};
    for (long long k = -K; k <= K; ++k) acc += f(t + static_cast<double>(k));
    return {acc, K, tail};
}

PeriodizationResult periodized_ft_product(const IndicatorCombination& f, const IndicatorCombination& g, double t,
                                          double tol, long long k_max) {
    check_tol(tol);
    const double b = f.decay_bound() * g.decay_bound();
    if (b == 0.0) return {{0.0, 0.0}, 0, 0.0};
    // |f^ conj(g^)|(v) <= B/v^2; sum_{|k|>K} B/(t+k)^2 <= 2B/(K - |t|)
    const long long K = pick_truncation(2.0 * b / tol + std::abs(t), k_max);
    const double tail = 2.0 * b / (static_cast<double>(K) - std::abs(t));

    const ExpSum pf = numerator_of(f);
    const ExpSum pg = numerator_of(g);
    long long q = 0;
    {
        const long long qf = expsum_period(pf, kMaxNumeratorPeriod);
        const long long qg = expsum_period(pg, kMaxNumeratorPeriod);
        if (qf > 0 && qg > 0) {
            const BigInt l = boost::multiprecision::lcm(BigInt(qf), BigInt(qg));
            if (l <= kMaxNumeratorPeriod) q = l.convert_to<long long>();
        }
    }

    const long long k_near = std::llround(-t);
    ComplexValue acc{0.0, 0.0};
    if (std::abs(k_near) <= K) {
        const double v = t + static_cast<double>(k_near);
        acc += f.ft(v) * std::conj(g.ft(v));
    }
    if (q > 0) {
        std::vector<ComplexValue> m(static_cast<std::size_t>(q));
        for (long long r = 0; r < q; ++r) {
            const double v = t + static_cast<double>(r);
            m[static_cast<std::size_t>(r)] = eval_expsum(pf, v) * std::conj(eval_expsum(pg, v));
        }
        acc += residue_stream(m, t, K, k_near) / kFourPiSq;
    } else {
        for (long long k = -K; k <= K; ++k) {
            if (k == k_near) continue;
            const double v = t + static_cast<double>(k);
            acc += eval_expsum(pf, v) * std::conj(eval_expsum(pg, v)) / (kFourPiSq * v * v);
        }
    }
    return {acc, K, tail};
}

std::vector<ComplexValue> periodic_ft_coefficients(const PeriodicSet& omega, int k_range) {
    if (k_range < 0) throw std::invalid_argument("periodic_ft_coefficients: k_range must be >= 0");
    std::vector<ComplexValue> out;
    out.reserve(2 * static_cast<std::size_t>(k_range) + 1);
    const double inv_p = 1.0 / static_cast<double>(omega.p);
    for (int k = -k_range; k <= k_range; ++k)
        out.push_back(inv_p * ft_indicator(omega.base, static_cast<double>(k) * inv_p));
    return out;
}

}  // namespace tiledual
