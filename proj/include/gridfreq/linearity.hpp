#ifndef GRIDFREQ_LINEARITY_HPP
#define GRIDFREQ_LINEARITY_HPP

#include "gridfreq/series.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gridfreq {

/// Amplitude/phase view of a real signal's spectrum (Eqs. 3-4).
struct SpectrumRepresentation {
    std::vector<double> amplitudes; ///< Hz*s, bins 0..n/2
    std::vector<double> phases;     ///< radians
    std::size_t n = 0;              ///< original signal length
};

/// LT curve over lags for the data and the surrogate ensemble (Fig. 5).
struct LinearityResult {
    std::vector<double> lags;              ///< s, strictly increasing from dt
    std::vector<double> lt_data;           ///< Hz
    std::vector<double> lt_surrogate_mean; ///< Hz
    double rmse = 0.0;                     ///< Hz
    std::size_t n_surrogates = 0;
};

/// Time-reversal-asymmetry statistic over the lag grid dt..max_lag:
/// LT(tau) = <(f(t)-f(t+tau))^3>_t / <(f(t)-f(t+tau))^2>_t  (Eq. 2, the
/// time-averaged reading). Throws DegenerateDistribution if some lag has a
/// zero denominator.
std::pair<std::vector<double>, std::vector<double>>
lt_curve(const FrequencySeries& series, double max_lag);

SpectrumRepresentation spectrum(const FrequencySeries& series);

/// Fourier phase-randomized surrogate: identical amplitude spectrum,
/// uniformly random phases, Hermitian symmetry, DC and Nyquist left real
/// (mean preserved). Requires length >= 16.
FrequencySeries phase_surrogate(const FrequencySeries& series, std::uint64_t seed);

/// LT RMSE of the series against the mean LT curve of n_surrogates
/// phase-randomized surrogates (per-replicate derived seeds; parallel and
/// deterministic).
LinearityResult lt_rmse(const FrequencySeries& series, std::size_t n_surrogates,
                        double max_lag, std::uint64_t seed);

} // namespace gridfreq

#endif // GRIDFREQ_LINEARITY_HPP
