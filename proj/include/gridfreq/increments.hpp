#ifndef GRIDFREQ_INCREMENTS_HPP
#define GRIDFREQ_INCREMENTS_HPP

#include "gridfreq/moments.hpp"
#include "gridfreq/series.hpp"

namespace gridfreq {

/// Increment-distribution analysis of one lag tau.
struct IncrementReport {
    double tau = 1.0;          ///< s
    MomentSummary moments;
    DensityEstimate density;
    double exceed_3sigma = 0.0; ///< fraction of |df| > 3 sigma
    double exceed_5sigma = 0.0; ///< fraction of |df| > 5 sigma
};

/// Increments per segment (never crossing gaps), concatenated; then
/// moments, KDE and sigma-exceedance fractions of the pooled increments.
IncrementReport increment_report(const SegmentedSeries& series, double tau);

/// Same analysis for an already-extracted increment series.
IncrementReport increment_report(const IncrementSeries& increments);

} // namespace gridfreq

#endif // GRIDFREQ_INCREMENTS_HPP
