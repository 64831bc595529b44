#ifndef GRIDFREQ_MOMENTS_HPP
#define GRIDFREQ_MOMENTS_HPP

#include <cstddef>
#include <vector>

namespace gridfreq {

/// Population-normalized central moments; kurtosis is non-excess
/// (Gaussian = 3), matching the paper's kappa^Gauss = 3 convention.
struct MomentSummary {
    std::size_t n = 0;
    double mean = 0.0;     ///< Hz
    double variance = 0.0; ///< Hz^2
    double skewness = 0.0; ///< dimensionless
    double kurtosis = 0.0; ///< dimensionless, non-excess
};

/// Gaussian-kernel density estimate on a uniform grid.
struct DensityEstimate {
    std::vector<double> grid;    ///< ascending, Hz
    std::vector<double> density; ///< 1/Hz, non-negative
    double bandwidth = 0.0;      ///< Hz
};

/// Sample moments. Requires n >= 4 (TooFewSamples) and at least two
/// distinct values (DegenerateDistribution).
MomentSummary moments(const std::vector<double>& samples);

/// Gaussian KDE on [min-3h, max+3h] with at least 512 grid points.
/// bandwidth <= 0 selects Silverman's rule h = 0.9*min(sigma, IQR/1.34)*
/// n^{-1/5}. Requires n >= 10 and non-degenerate samples.
DensityEstimate kde(const std::vector<double>& samples, double bandwidth = 0.0);

/// Trapezoidal integral of a density estimate (should be ~1).
double density_integral(const DensityEstimate& d);

/// Number of strict local maxima of the evaluated density.
std::size_t density_local_maxima(const DensityEstimate& d);

} // namespace gridfreq

#endif // GRIDFREQ_MOMENTS_HPP
