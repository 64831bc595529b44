#include "gridfreq/series.hpp"

#include "gridfreq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gridfreq {

namespace {

/// Days since 1970-01-01 for a civil date (proleptic Gregorian).
long long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const long long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
        static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long long>(doe) - 719468;
}

/// Parse an ISO-8601 UTC timestamp ("YYYY-MM-DD[T ]HH:MM:SS[.frac][Z]") or a
/// plain decimal Unix-seconds value. Returns false on failure.
bool parse_timestamp(const std::string& tok, double& epoch) {
    int y, mo, d, h, mi;
    double sec;
    char sep;
    if (std::sscanf(tok.c_str(), "%d-%d-%d%c%d:%d:%lf", &y, &mo, &d, &sep,
                    &h, &mi, &sec) == 7 &&
        (sep == 'T' || sep == ' ')) {
        if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 ||
            mi < 0 || mi > 59 || sec < 0.0 || sec >= 61.0)
            return false;
        epoch = static_cast<double>(days_from_civil(y, mo, d)) * 86400.0 +
                h * 3600.0 + mi * 60.0 + sec;
        return true;
    }
    char* end = nullptr;
    epoch = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || !std::isfinite(epoch)) return false;
    while (*end == ' ') ++end;
    return *end == '\0';
}

bool parse_value(const std::string& tok, double& value) {
    char* end = nullptr;
    value = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || !std::isfinite(value)) return false;
    while (*end == ' ') ++end;
    return *end == '\0';
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

std::size_t SegmentedSeries::longest_segment() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < segments.size(); ++i)
        if (segments[i].values.size() > segments[best].values.size()) best = i;
    return best;
}

SegmentedSeries ingest_csv(std::istream& source, const IngestConfig& format) {
    const double dt = format.dt;
    if (dt <= 0.0) throw MalformedInput("ingest_csv: dt must be positive");
    std::vector<RawSample> raw;
    std::size_t malformed = 0, rows = 0;
    std::vector<std::string> row_errors;
    std::string line;
    bool first_data_candidate = true;
    while (std::getline(source, line)) {
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t comma = t.find(',');
        std::string c1 = comma == std::string::npos ? t : strip(t.substr(0, comma));
        std::string c2 = comma == std::string::npos ? "" : strip(t.substr(comma + 1));
        RawSample s;
        const bool ok = comma != std::string::npos &&
                        parse_timestamp(c1, s.epoch) && parse_value(c2, s.value);
        if (!ok && first_data_candidate) {
            // optional header line
            first_data_candidate = false;
            continue;
        }
        first_data_candidate = false;
        ++rows;
        if (!ok) {
            ++malformed;
            if (row_errors.size() < 8) row_errors.push_back(t);
            continue;
        }
        raw.push_back(s);
    }
    if (rows == 0) throw InputEmpty("ingest_csv: no data rows");
    if (malformed * 100 > rows) {
        std::ostringstream msg;
        msg << "ingest_csv: " << malformed << "/" << rows
            << " rows malformed (>1%); first offenders:";
        for (const auto& r : row_errors) msg << "\n  " << r;
        throw MalformedInput(msg.str());
    }
    if (raw.empty()) throw InputEmpty("ingest_csv: all rows malformed");
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawSample& a, const RawSample& b) {
                         return a.epoch < b.epoch;
                     });
    const double max_gap = format.max_gap > 0.0 ? format.max_gap : dt;
    SegmentedSeries out = segment(std::move(raw), dt, max_gap, format.region);
    out.dropped_samples += malformed;
    return out;
}

SegmentedSeries segment(std::vector<RawSample> raw, double dt, double max_gap,
                        const std::string& region) {
    if (dt <= 0.0) throw MalformedInput("segment: dt must be positive");
    if (max_gap < dt) throw MalformedInput("segment: max_gap must be >= dt");
    SegmentedSeries out;
    if (raw.empty()) throw InputEmpty("segment: no samples");
    // dedup: keep first occurrence of equal timestamps
    std::vector<RawSample> kept;
    kept.reserve(raw.size());
    for (const auto& s : raw) {
        if (!kept.empty() && s.epoch == kept.back().epoch) {
            ++out.dropped_samples;
            continue;
        }
        kept.push_back(s);
    }
    for (std::size_t i = 1; i < kept.size(); ++i)
        if (kept[i].epoch <= kept[i - 1].epoch)
            throw InternalOrderingError(
                "segment: timestamps not strictly increasing after dedup");

    const double jitter = 0.01 * dt;
    FrequencySeries cur;
    cur.dt = dt;
    cur.region = region;
    auto flush = [&]() {
        if (!cur.values.empty()) out.segments.push_back(cur);
        cur.values.clear();
    };
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (cur.values.empty()) {
            cur.start_epoch = kept[i].epoch;
            cur.values.push_back(kept[i].value);
            continue;
        }
        const double step = kept[i].epoch - kept[i - 1].epoch;
        // Segments must stay uniformly sampled, so only a single on-grid dt
        // step (within the jitter tolerance) continues a segment. Every gap
        // larger than max_gap therefore starts a new segment, and so do
        // smaller off-grid steps: samples are never modified or bridged.
        if (std::fabs(step - dt) <= jitter) {
            cur.values.push_back(kept[i].value);
        } else {
            flush();
            cur.start_epoch = kept[i].epoch;
            cur.values.push_back(kept[i].value);
        }
    }
    flush();
    return out;
}

IncrementSeries to_increments(const FrequencySeries& series, double tau) {
    if (tau <= 0.0) throw LagNotAligned("to_increments: tau must be positive");
    const double ratio = tau / series.dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::fabs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
        throw LagNotAligned("to_increments: tau is not a positive integer multiple of dt");
    const std::size_t k = static_cast<std::size_t>(rounded);
    if (k >= series.values.size())
        throw LagExceedsSeries("to_increments: tau/dt >= series length");
    IncrementSeries inc;
    inc.tau = tau;
    inc.parent_region = series.region;
    inc.values.resize(series.values.size() - k);
    for (std::size_t i = 0; i + k < series.values.size(); ++i)
        inc.values[i] = series.values[i + k] - series.values[i];
    return inc;
}

IncrementSeries to_increments(const SegmentedSeries& series, double tau) {
    IncrementSeries out;
    out.tau = tau;
    bool any = false;
    for (const auto& seg : series.segments) {
        const double ratio = tau / seg.dt;
        if (std::round(ratio) >= static_cast<double>(seg.values.size())) continue;
        IncrementSeries part = to_increments(seg, tau);
        out.parent_region = part.parent_region;
        out.values.insert(out.values.end(), part.values.begin(), part.values.end());
        any = true;
    }
    if (!any)
        throw LagExceedsSeries("to_increments: no segment longer than tau/dt");
    return out;
}

} // namespace gridfreq
