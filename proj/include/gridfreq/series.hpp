#ifndef GRIDFREQ_SERIES_HPP
#define GRIDFREQ_SERIES_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace gridfreq {

/// Uniformly sampled frequency values; the paper's f(t).
struct FrequencySeries {
    std::vector<double> values; ///< Hz
    double start_epoch = 0.0;   ///< UTC seconds
    double dt = 1.0;            ///< sampling interval, s
    std::string region;         ///< free-text label
};

/// Time-ordered gap-free segments produced by ingestion/segmentation.
struct SegmentedSeries {
    std::vector<FrequencySeries> segments;
    std::string source;
    std::size_t dropped_samples = 0;

    std::size_t total_samples() const {
        std::size_t n = 0;
        for (const auto& s : segments) n += s.values.size();
        return n;
    }
    /// Index of the longest segment (first on ties).
    std::size_t longest_segment() const;
};

/// Lagged differences Delta f_tau = f(t+tau) - f(t).
struct IncrementSeries {
    std::vector<double> values; ///< Hz
    double tau = 1.0;           ///< lag, s
    std::string parent_region;
};

/// One timestamped raw sample before segmentation.
struct RawSample {
    double epoch = 0.0; ///< UTC seconds
    double value = 0.0; ///< Hz
};

struct IngestConfig {
    double dt = 1.0;      ///< expected sampling interval, s
    double max_gap = 0.0; ///< segment-splitting gap threshold; 0 -> 1*dt
    std::string region;   ///< label attached to all segments
};

/// Parse CSV (timestamp, frequency-Hz), sort, deduplicate, gap-segment.
/// Timestamps are ISO-8601 UTC or Unix seconds. `#` comment lines and an
/// optional header are skipped. Aborts with MalformedInput if more than 1%
/// of data rows are malformed; throws InputEmpty when no data rows exist.
SegmentedSeries ingest_csv(std::istream& source, const IngestConfig& format);

/// Split timestamped samples into gap-free segments. Samples must be
/// strictly increasing in time after dedup (InternalOrderingError
/// otherwise). Gaps larger than max_gap (or off-grid jitter beyond 1% of
/// dt) start a new segment; dedup keeps the first of equal timestamps.
SegmentedSeries segment(std::vector<RawSample> raw, double dt, double max_gap,
                        const std::string& region = "");

/// Increments at lag tau for one segment. tau must be a positive integer
/// multiple of dt (LagNotAligned) with tau/dt < length (LagExceedsSeries).
IncrementSeries to_increments(const FrequencySeries& series, double tau);

/// Increments computed per segment and concatenated, never differencing
/// across segment boundaries. Segments shorter than tau/dt+1 are skipped;
/// LagExceedsSeries if no segment is long enough.
IncrementSeries to_increments(const SegmentedSeries& series, double tau);

} // namespace gridfreq

#endif // GRIDFREQ_SERIES_HPP
