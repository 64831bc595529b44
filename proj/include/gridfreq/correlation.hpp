#ifndef GRIDFREQ_CORRELATION_HPP
#define GRIDFREQ_CORRELATION_HPP

#include "gridfreq/series.hpp"

#include <cstddef>
#include <vector>

namespace gridfreq {

/// Autocorrelation pooled across segments (Eq. 5).
struct AcfResult {
    std::vector<double> lags;        ///< s, starting at 0
    std::vector<double> acf;         ///< in [-1, 1]; acf[0] == 1 exactly
    std::vector<std::size_t> n_effective; ///< cross-product pairs per lag
    double dt = 1.0;
};

/// Exponential-decay fit e^{-lambda tau} to the ACF (paper §VI).
struct ExpDecayFit {
    double lambda = 0.0;   ///< 1/s
    double fit_lo = 0.0;   ///< s
    double fit_hi = 0.0;   ///< s
    double r_squared = 0.0;
};

/// DFA fluctuation function and log-log slope.
struct DfaResult {
    std::vector<std::size_t> window_sizes;
    std::vector<double> fluctuation; ///< F(n), Hz
    double slope = 0.0;
    double hurst = 0.0;              ///< = slope - 1, paper convention
    double fit_lo = 0.0;
    double fit_hi = 0.0;
};

/// Lag-k correlation with per-segment cross-products, global mean and
/// normalization; FFT-based. Longest segment must cover 4*max_lag/dt
/// (LagExceedsSeries); zero variance -> DegenerateDistribution.
AcfResult acf(const SegmentedSeries& series, double max_lag);

/// Nonlinear least squares of e^{-lambda tau} to acf values on
/// [dt, fit_window]: log-grid scan plus golden-section refinement on the
/// raw ACF (log-ACF is undefined where the ACF goes negative).
ExpDecayFit fit_exp_decay(const AcfResult& acf, double fit_window);

/// DFA of the longest segment: profile = cumsum(x - mean); per window size
/// F(n) = RMS residual of degree-`order` polynomial detrending over
/// non-overlapping windows from both ends; slope from log F vs log n.
/// Throws InsufficientScales with fewer than 2 usable sizes.
DfaResult dfa(const SegmentedSeries& series,
              const std::vector<std::size_t>& windows, int order = 1);

/// Default window ladder: 24 log-spaced sizes in [5, min(1e6, len/4)].
std::vector<std::size_t> dfa_default_windows(std::size_t segment_length,
                                             std::size_t min_scale = 5,
                                             std::size_t max_scale = 1000000);

} // namespace gridfreq

#endif // GRIDFREQ_CORRELATION_HPP
