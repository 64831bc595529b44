#include "gridfreq/report.hpp"

#include "gridfreq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gridfreq {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace

std::string AnalysisConfig::digest() const {
    std::ostringstream os;
    os.precision(17);
    os << "tau=" << tau << ";acf_max_lag=" << acf_max_lag
       << ";acf_fit_window=" << acf_fit_window << ";lt_max_lag=" << lt_max_lag
       << ";n_surrogates=" << n_surrogates << ";dfa_min_scale=" << dfa_min_scale
       << ";dfa_max_scale=" << dfa_max_scale << ";dfa_order=" << dfa_order
       << ";dip_pvalue=" << dip_pvalue << ";n_boot=" << n_boot
       << ";seed=" << seed;
    return hex64(fnv1a(os.str()));
}

bool CharacterizationReport::has_skips() const {
    return !moments.ok() || !increment.ok() || !dip.ok() || !linearity.ok() ||
           !acf_fit.ok() || !dfa.ok();
}

namespace {

/// Run one analysis, converting library errors into a skip reason.
template <typename T, typename Fn>
Outcome<T> attempt(Fn&& fn) {
    Outcome<T> out;
    try {
        out.value = fn();
    } catch (const Error& e) {
        out.skip_reason = e.what();
    }
    return out;
}

std::vector<double> pooled_values(const SegmentedSeries& data) {
    std::vector<double> all;
    all.reserve(data.total_samples());
    for (const auto& seg : data.segments)
        all.insert(all.end(), seg.values.begin(), seg.values.end());
    return all;
}

} // namespace

CharacterizationReport characterize(const SegmentedSeries& data,
                                    const AnalysisConfig& config) {
    if (data.segments.empty())
        throw ReportEmpty("characterize: no segments in input");
    CharacterizationReport rep;
    rep.config_digest = config.digest();
    rep.region = data.segments.front().region;
    rep.n_samples = data.total_samples();
    rep.span_start = data.segments.front().start_epoch;
    const auto& last = data.segments.back();
    rep.span_end = last.start_epoch +
                   last.dt * static_cast<double>(last.values.size() - 1);

    const std::vector<double> all = pooled_values(data);
    rep.moments = attempt<MomentSummary>([&] { return moments(all); });
    rep.increment =
        attempt<IncrementReport>([&] { return increment_report(data, config.tau); });
    rep.dip = attempt<DipResult>([&] {
        if (config.dip_pvalue)
            return dip_statistic_pvalue(all, config.n_boot, config.seed);
        return dip_statistic(all);
    });
    rep.linearity = attempt<LinearityResult>([&] {
        const auto& seg = data.segments[data.longest_segment()];
        return lt_rmse(seg, config.n_surrogates, config.lt_max_lag, config.seed);
    });
    rep.acf_fit = attempt<ExpDecayFit>([&] {
        const AcfResult a = acf(data, config.acf_max_lag);
        return fit_exp_decay(a, config.acf_fit_window);
    });
    rep.dfa = attempt<DfaResult>([&] {
        const auto& seg = data.segments[data.longest_segment()];
        const auto windows = dfa_default_windows(
            seg.values.size(), config.dfa_min_scale, config.dfa_max_scale);
        return dfa(data, windows, config.dfa_order);
    });

    if (!rep.moments.ok() && !rep.increment.ok() && !rep.dip.ok() &&
        !rep.linearity.ok() && !rep.acf_fit.ok() && !rep.dfa.ok())
        throw ReportEmpty("characterize: every analysis failed");
    return rep;
}

namespace {

struct Metric {
    const char* name;
    /// value for ranking, or NaN when the sub-result was skipped
    double (*get)(const CharacterizationReport&);
};

double metric_dip(const CharacterizationReport& r) {
    return r.dip.ok() ? r.dip.value->dip : NAN;
}
double metric_rmse(const CharacterizationReport& r) {
    return r.linearity.ok() ? r.linearity.value->rmse : NAN;
}
double metric_lambda(const CharacterizationReport& r) {
    return r.acf_fit.ok() ? r.acf_fit.value->lambda : NAN;
}
double metric_hurst(const CharacterizationReport& r) {
    return r.dfa.ok() ? r.dfa.value->hurst : NAN;
}
double metric_kappa(const CharacterizationReport& r) {
    return r.increment.ok() ? r.increment.value->moments.kurtosis : NAN;
}

} // namespace

ComparisonTable compare(const std::vector<CharacterizationReport>& reports) {
    if (reports.size() < 2)
        throw TooFewSamples("compare: need at least 2 reports");
    std::set<std::string> labels;
    for (const auto& r : reports)
        if (!labels.insert(r.region).second)
            throw DuplicateLabel("compare: duplicate region label '" + r.region + "'");

    ComparisonTable table;
    table.rows = reports;
    const Metric metrics[] = {
        {"dip", metric_dip},         {"rmse", metric_rmse},
        {"lambda", metric_lambda},   {"hurst", metric_hurst},
        {"kappa_incr", metric_kappa},
    };
    for (const auto& m : metrics) {
        std::vector<std::pair<double, std::string>> rows;
        for (const auto& r : reports) {
            const double v = m.get(r);
            if (!std::isnan(v)) rows.emplace_back(v, r.region);
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first; // descending
            return a.second < b.second;                       // ties by label
        });
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [v, label] : rows)
            arr.push_back({{"region", label}, {"value", v}});
        table.rankings[m.name] = arr;
    }
    return table;
}

nlohmann::ordered_json to_json(const MomentSummary& m) {
    return {{"n", m.n},
            {"mean", m.mean},
            {"variance", m.variance},
            {"skewness", m.skewness},
            {"kurtosis", m.kurtosis}};
}

nlohmann::ordered_json to_json(const DipResult& d) {
    nlohmann::ordered_json j = {{"dip", d.dip},
                                {"n", d.n},
                                {"modal_interval", {d.modal_lo, d.modal_hi}}};
    if (d.p_value) j["p_value"] = *d.p_value;
    return j;
}

nlohmann::ordered_json to_json(const IncrementReport& r) {
    return {{"tau", r.tau},
            {"moments", to_json(r.moments)},
            {"bandwidth", r.density.bandwidth},
            {"exceed_3sigma", r.exceed_3sigma},
            {"exceed_5sigma", r.exceed_5sigma}};
}

nlohmann::ordered_json to_json(const LinearityResult& r) {
    return {{"rmse", r.rmse},
            {"n_surrogates", r.n_surrogates},
            {"lags", r.lags},
            {"lt_data", r.lt_data},
            {"lt_surrogate_mean", r.lt_surrogate_mean}};
}

nlohmann::ordered_json to_json(const ExpDecayFit& f) {
    return {{"lambda", f.lambda},
            {"fit_range", {f.fit_lo, f.fit_hi}},
            {"r_squared", f.r_squared}};
}

nlohmann::ordered_json to_json(const AcfResult& a) {
    return {{"dt", a.dt},
            {"lags", a.lags},
            {"acf", a.acf},
            {"n_effective", a.n_effective}};
}

nlohmann::ordered_json to_json(const DfaResult& d) {
    return {{"window_sizes", d.window_sizes},
            {"fluctuation", d.fluctuation},
            {"slope", d.slope},
            {"hurst", d.hurst},
            {"fit_range", {d.fit_lo, d.fit_hi}}};
}

namespace {

template <typename T>
nlohmann::ordered_json outcome_json(const Outcome<T>& o) {
    if (o.ok()) return to_json(*o.value);
    return {{"skipped", o.skip_reason}};
}

} // namespace

nlohmann::ordered_json to_json(const CharacterizationReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = r.tool_version;
    j["config_digest"] = r.config_digest;
    j["region"] = r.region;
    j["span"] = {r.span_start, r.span_end};
    j["n_samples"] = r.n_samples;
    j["moments"] = outcome_json(r.moments);
    j["increment"] = outcome_json(r.increment);
    j["dip"] = outcome_json(r.dip);
    j["linearity"] = outcome_json(r.linearity);
    j["acf_fit"] = outcome_json(r.acf_fit);
    j["dfa"] = outcome_json(r.dfa);
    return j;
}

nlohmann::ordered_json to_json(const ComparisonTable& t) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    j["rows"] = rows;
    j["rankings"] = t.rankings;
    return j;
}

} // namespace gridfreq
