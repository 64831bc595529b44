#ifndef GRIDFREQ_REPORT_HPP
#define GRIDFREQ_REPORT_HPP

#include "gridfreq/bimodality.hpp"
#include "gridfreq/correlation.hpp"
#include "gridfreq/increments.hpp"
#include "gridfreq/linearity.hpp"
#include "gridfreq/moments.hpp"
#include "gridfreq/series.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridfreq {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Parameters of the full characterization battery.
struct AnalysisConfig {
    double tau = 1.0;             ///< increment lag, s
    double acf_max_lag = 3600.0;  ///< s
    double acf_fit_window = 3600.0; ///< s
    double lt_max_lag = 60.0;     ///< s
    std::size_t n_surrogates = 19;
    std::size_t dfa_min_scale = 5;
    std::size_t dfa_max_scale = 1000000;
    int dfa_order = 1;
    bool dip_pvalue = false;
    std::size_t n_boot = 2000;
    std::uint64_t seed = 1;

    /// FNV-1a digest of the canonical parameter string; deterministically
    /// identifies all analysis parameters.
    std::string digest() const;
};

template <typename T>
struct Outcome {
    std::optional<T> value;
    std::string skip_reason; ///< non-empty iff value is absent

    bool ok() const { return value.has_value(); }
};

struct CharacterizationReport {
    std::string region;
    double span_start = 0.0;
    double span_end = 0.0;
    std::size_t n_samples = 0;
    Outcome<MomentSummary> moments;
    Outcome<IncrementReport> increment;
    Outcome<DipResult> dip;
    Outcome<LinearityResult> linearity;
    Outcome<ExpDecayFit> acf_fit;
    Outcome<DfaResult> dfa;
    std::string tool_version = kToolVersion;
    std::string config_digest;

    bool has_skips() const;
};

struct ComparisonTable {
    std::vector<CharacterizationReport> rows;
    /// metric name -> region labels sorted by value descending, ties by label
    nlohmann::ordered_json rankings;
};

/// Run the full battery; partial failures become skip-reasons. Throws
/// ReportEmpty only when every analysis fails.
CharacterizationReport characterize(const SegmentedSeries& data,
                                    const AnalysisConfig& config);

/// Per-metric rankings (dip, rmse, lambda, hurst, kappa) over >= 2 reports.
/// Duplicate region labels -> DuplicateLabel.
ComparisonTable compare(const std::vector<CharacterizationReport>& reports);

nlohmann::ordered_json to_json(const MomentSummary& m);
nlohmann::ordered_json to_json(const DipResult& d);
nlohmann::ordered_json to_json(const IncrementReport& r);
nlohmann::ordered_json to_json(const LinearityResult& r);
nlohmann::ordered_json to_json(const ExpDecayFit& f);
nlohmann::ordered_json to_json(const AcfResult& a);
nlohmann::ordered_json to_json(const DfaResult& d);
nlohmann::ordered_json to_json(const CharacterizationReport& r);
nlohmann::ordered_json to_json(const ComparisonTable& t);

} // namespace gridfreq

#endif // GRIDFREQ_REPORT_HPP
