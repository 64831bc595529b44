#ifndef GRIDFREQ_BIMODALITY_HPP
#define GRIDFREQ_BIMODALITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gridfreq {

/// Hartigan dip statistic result.
struct DipResult {
    double dip = 0.0;            ///< in (0, 0.25]; floor is 1/(2n)
    std::size_t n = 0;
    double modal_lo = 0.0;       ///< modal interval, Hz
    double modal_hi = 0.0;
    std::optional<double> p_value; ///< bootstrap-vs-uniform, when requested
};

/// Sup-norm distance between the empirical CDF and the nearest unimodal
/// CDF, via the Hartigan & Hartigan (1985) greatest-convex-minorant /
/// least-concave-majorant algorithm: O(n) after an O(n log n) sort.
/// Requires n >= 2 (TooFewSamples) and two distinct values
/// (DegenerateDistribution). Ties are handled by the ECDF jumps directly.
DipResult dip_statistic(const std::vector<double>& samples);

/// dip_statistic plus a bootstrap p-value against the uniform null:
/// p = (1 + #{dip_boot >= dip}) / (n_boot + 1). Replicates use derived
/// per-replicate seeds and may run in parallel (result is deterministic).
DipResult dip_statistic_pvalue(const std::vector<double>& samples,
                               std::size_t n_boot, std::uint64_t seed);

} // namespace gridfreq

#endif // GRIDFREQ_BIMODALITY_HPP
