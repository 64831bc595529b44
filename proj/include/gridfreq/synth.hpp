#ifndef GRIDFREQ_SYNTH_HPP
#define GRIDFREQ_SYNTH_HPP

#include "gridfreq/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gridfreq {

enum class ModelKind { OU, FBM, FBM_OU, DEADBAND_OU, BIMODAL_MIXTURE };

/// Parameters of a synthetic generator (Eq. 1 instantiations).
struct ModelConfig {
    ModelKind kind = ModelKind::OU;
    double theta = 0.01;   ///< damping, 1/s
    double mu = 50.0;      ///< mean level, Hz
    double sigma = 0.002;  ///< noise amplitude (Hz*s^-1/2 white; Hz*s^-H fBm)
    double hurst_h = 0.5;  ///< in (0, 1)
    double deadband_halfwidth = 0.0; ///< Hz
    std::vector<double> mixture_centers; ///< Hz
    std::vector<double> mixture_weights; ///< sum to 1
    std::vector<double> mixture_widths;  ///< Hz
    std::size_t n = 86400;
    double dt = 1.0;       ///< s
    std::uint64_t seed = 1;
    std::string region;    ///< label for the emitted series
};

/// Euler-Maruyama OU: df = -theta (f - mu) dt + sigma dW, started from the
/// stationary law N(mu, sigma^2/(2 theta)). theta*dt >= 2 ->
/// UnstableDiscretization. Deterministic in (config, seed).
FrequencySeries gen_ou(const ModelConfig& config);

/// Fractional Gaussian noise with Var = scale^2 * dt^(2H) per step, exact
/// covariance via Davies-Harte circulant embedding (any n; Hosking
/// recursion fallback if the embedding is numerically non-PSD). H = 0.5 is
/// special-cased to direct iid draws so white-noise paths match gen_ou's
/// draw-for-draw.
std::vector<double> gen_fgn(std::size_t n, double hurst_h, double dt,
                            double scale, std::uint64_t seed);

/// fBm path: mu + cumulative sum of fGn; Var[B_H(t)] = sigma^2 * t^(2H).
FrequencySeries gen_fbm(const ModelConfig& config);

/// OU drift driven by fractional noise: df = -theta (f - mu) dt + sigma dB_H.
/// H = 0.5 reproduces gen_ou exactly (same seed mapping).
FrequencySeries gen_fbm_ou(const ModelConfig& config);

/// Deadband drift: zero restoring force for |f - mu| <= d, linear
/// (continuous at the band edges) outside; white noise. d = 0 reproduces
/// gen_ou exactly.
FrequencySeries gen_deadband_ou(const ModelConfig& config);

/// i.i.d. draws from a Gaussian mixture (distribution-only reference of
/// Fig. 3a; not a time series).
std::vector<double> gen_bimodal_mixture(const ModelConfig& config);

/// Dispatch on config.kind (BIMODAL_MIXTURE not included: not a series).
FrequencySeries generate(const ModelConfig& config);

} // namespace gridfreq

#endif // GRIDFREQ_SYNTH_HPP
