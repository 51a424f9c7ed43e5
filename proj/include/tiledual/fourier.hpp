#pragma once

#include "tiledual/tiling.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace tiledual {

using ComplexValue = std::complex<double>;

constexpr long long kDefaultKMax = 10'000'000;

/// Thrown when a requested truncation tolerance would need more lattice
/// terms than the iteration cap allows.
class TruncationError : public std::runtime_error {
public:
    TruncationError(long long needed, long long cap);
    long long needed;
    long long cap;
};

/// Truncated lattice sum with a rigorous bound on the discarded tail: the
/// exact infinite sum lies in [value - tail_bound, value + tail_bound].
struct LatticeSumResult {
    double value = 0.0;
    long long truncation_K = 0;
    double tail_bound = 0.0;
};

struct PeriodizationResult {
    ComplexValue value{0.0, 0.0};
    long long truncation_K = 0;
    double tail_bound = 0.0;
};

/// Function values tabulated on an exact rational grid.
struct SampledFunction {
    std::vector<Rational> grid;  // strictly increasing
    std::vector<ComplexValue> values;
};

/// Fourier transform of the indicator of s at frequency t, evaluated in the
/// closed form (b-a) e^{-i pi (a+b) t} sinc(pi (b-a) t) per interval.
/// At t = 0 this is the measure of s.
ComplexValue ft_indicator(const IntervalSet& s, double t);

/// Transform of the Dirac comb on p*{-n..n}: the exponential sum
/// sum_{l=-n}^{n} e^{-2 pi i p l t}, evaluated through the Dirichlet kernel
/// sin(pi p (2n+1) t) / sin(pi p t) away from the removable singularities.
ComplexValue dirac_comb_ft(int p, int n, double t);

/// sum_{j=-n}^{n} |comb_ft(t + j/(p(2n+1)))|^2; a finite identity equal to
/// (2n+1)^2 for every real t.
double comb_plancherel_check(int p, int n, double t);

/// Finite linear combination of indicators of rational interval unions,
/// f = sum c_i chi_{E_i}. Rational coefficients keep the L^2 norm exact;
/// the transform is closed-form.
struct IndicatorCombination {
    std::vector<std::pair<Rational, IntervalSet>> terms;

    static IndicatorCombination indicator(IntervalSet s);

    ComplexValue ft(double t) const;
    IntervalSet support() const;
    bool is_zero() const;

    /// Exact squared L^2 norm sum_{i,j} c_i c_j |E_i ∩ E_j|.
    Rational l2_norm_sq() const;

    /// A with |f^(t)| <= A for all t.
    double sup_bound() const;
    /// B with |f^(t)| <= B / |t| for all t != 0.
    double decay_bound() const;
};

/// Truncated sum over offsets o and |k| <= K of |f^(t + o + k)|^2, with K
/// chosen so the analytic tail bound falls below tol. The bound per offset
/// uses |f^(v)| <= B/|v| after reducing t + o modulo 1.
LatticeSumResult ft_square_sum(const IndicatorCombination& f, const std::vector<Rational>& offsets, double t,
                               double tol, long long k_max = kDefaultKMax);

/// Specialization to f = chi_s with the interval-count tail bound
/// 2 |offsets| m^2 / (pi^2 (K-1)), m = number of intervals of s.
LatticeSumResult plancherel_sum(const IntervalSet& s, const std::vector<Rational>& spectrum_offsets, double t,
                                double tol, long long k_max = kDefaultKMax);

/// sum_{|k| <= K} f(t + k) for a caller-supplied f with |f(u)| <= C/(1+u^2);
/// K is chosen from C so that the tail bound falls below tol.
PeriodizationResult periodization(const std::function<ComplexValue(double)>& f, double decay_c, double t, double tol,
                                  long long k_max = kDefaultKMax);

/// Truncated periodization of f^ * conj(g^) for indicator combinations,
/// with tail bound from the product decay B_f B_g / v^2.
PeriodizationResult periodized_ft_product(const IndicatorCombination& f, const IndicatorCombination& g, double t,
                                          double tol, long long k_max = kDefaultKMax);

/// Atom weights (1/p) chi^_base(k/p) of the distributional transform of the
/// p-periodic indicator, for |k| <= k_range (returned in increasing k).
std::vector<ComplexValue> periodic_ft_coefficients(const PeriodicSet& omega, int k_range);

}  // namespace tiledual
