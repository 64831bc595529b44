#include "gridfreq/correlation.hpp"

#include "gridfreq/errors.hpp"
#include "gridfreq/fft.hpp"
#include "gridfreq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

namespace gridfreq {

AcfResult acf(const SegmentedSeries& series, double max_lag) {
    if (series.segments.empty()) throw InputEmpty("acf: no segments");
    const double dt = series.segments.front().dt;
    const std::size_t kmax = static_cast<std::size_t>(std::floor(max_lag / dt + 1e-9));
    const std::size_t longest = series.segments[series.longest_segment()].values.size();
    if (longest < 4 * kmax || kmax < 1)
        throw LagExceedsSeries("acf: longest segment must cover 4*max_lag/dt");

    // global mean over all segments
    double mean = 0.0;
    std::size_t total = 0;
    for (const auto& seg : series.segments) {
        for (double v : seg.values) mean += v;
        total += seg.values.size();
    }
    mean /= static_cast<double>(total);

    // per-segment cross products via FFT (zero-padded autocorrelation)
    std::vector<double> num(kmax + 1, 0.0);
    std::vector<std::size_t> pairs(kmax + 1, 0);
    for (const auto& seg : series.segments) {
        const std::size_t n = seg.values.size();
        if (n < 2) continue;
        std::size_t m = 1;
        while (m < 2 * n) m <<= 1;
        std::vector<double> padded(m, 0.0);
        for (std::size_t i = 0; i < n; ++i) padded[i] = seg.values[i] - mean;
        auto spec = rfft(padded);
        for (auto& c : spec) c = c * std::conj(c);
        const auto corr = irfft(spec, m);
        const std::size_t upto = std::min(kmax, n - 1);
        for (std::size_t k = 0; k <= upto; ++k) {
            num[k] += corr[k];
            pairs[k] += n - k;
        }
    }
    if (num[0] <= 0.0) throw DegenerateDistribution("acf: zero variance");

    AcfResult out;
    out.dt = dt;
    out.lags.resize(kmax + 1);
    out.acf.resize(kmax + 1);
    out.n_effective = pairs;
    for (std::size_t k = 0; k <= kmax; ++k) {
        out.lags[k] = static_cast<double>(k) * dt;
        out.acf[k] = k == 0 ? 1.0 : num[k] / num[0];
    }
    return out;
}

ExpDecayFit fit_exp_decay(const AcfResult& a, double fit_window) {
    if (a.lags.empty() || fit_window > a.lags.back() + 1e-9)
        throw LagExceedsSeries("fit_exp_decay: fit_window exceeds acf range");
    std::vector<double> taus, vals;
    for (std::size_t k = 1; k < a.lags.size(); ++k) {
        if (a.lags[k] > fit_window + 1e-9) break;
        taus.push_back(a.lags[k]);
        vals.push_back(a.acf[k]);
    }
    if (taus.size() < 2)
        throw FitDiverged("fit_exp_decay: fewer than 2 lags in the fit window");

    auto sse = [&](double lam) {
        double acc = 0.0;
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const double d = vals[i] - std::exp(-lam * taus[i]);
            acc += d * d;
        }
        return acc;
    };
    // coarse log-grid scan, then golden-section refinement
    const double lo_lam = 1e-8, hi_lam = 1e3;
    double best = lo_lam, best_sse = sse(lo_lam);
    const int grid = 400;
    for (int i = 1; i <= grid; ++i) {
        const double lam = lo_lam * std::pow(hi_lam / lo_lam,
                                             static_cast<double>(i) / grid);
        const double s = sse(lam);
        if (s < best_sse) {
            best_sse = s;
            best = lam;
        }
    }
    double a0 = best / 2.0, b0 = best * 2.0;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b0 - phi * (b0 - a0), d = a0 + phi * (b0 - a0);
    double fc = sse(c), fd = sse(d);
    for (int it = 0; it < 200 && (b0 - a0) > 1e-14 * best; ++it) {
        if (fc < fd) {
            b0 = d;
            d = c;
            fd = fc;
            c = b0 - phi * (b0 - a0);
            fc = sse(c);
        } else {
            a0 = c;
            c = d;
            fc = fd;
            d = a0 + phi * (b0 - a0);
            fd = sse(d);
        }
    }
    ExpDecayFit fit;
    fit.lambda = 0.5 * (a0 + b0);
    if (!std::isfinite(fit.lambda))
        throw FitDiverged("fit_exp_decay: lambda not finite");
    fit.fit_lo = taus.front();
    fit.fit_hi = taus.back();
    double meanv = 0.0;
    for (double v : vals) meanv += v;
    meanv /= static_cast<double>(vals.size());
    double ss_tot = 0.0;
    for (double v : vals) ss_tot += (v - meanv) * (v - meanv);
    fit.r_squared = ss_tot > 0.0 ? 1.0 - sse(fit.lambda) / ss_tot : 0.0;
    return fit;
}

std::vector<std::size_t> dfa_default_windows(std::size_t segment_length,
                                             std::size_t min_scale,
                                             std::size_t max_scale) {
    const std::size_t hi = std::min<std::size_t>(max_scale, segment_length / 4);
    std::set<std::size_t> sizes;
    if (hi >= min_scale) {
        const double llo = std::log(static_cast<double>(min_scale));
        const double lhi = std::log(static_cast<double>(hi));
        for (int i = 0; i < 24; ++i) {
            const double t = 24 == 1 ? 0.0 : static_cast<double>(i) / 23.0;
            sizes.insert(static_cast<std::size_t>(
                std::lround(std::exp(llo + t * (lhi - llo)))));
        }
    }
    return {sizes.begin(), sizes.end()};
}

namespace {

/// Mean squared residual of a degree-`order` least-squares polynomial fit
/// to y over t = 0..len-1 (t rescaled to [0,1] for conditioning).
double detrend_mse(const double* y, std::size_t len, int order) {
    const int p = order + 1;
    // normal equations in the monomial basis of t/len
    double ata[16] = {0};
    double atb[4] = {0};
    for (std::size_t i = 0; i < len; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(len);
        double pw[4] = {1.0, t, t * t, t * t * t};
        for (int r = 0; r < p; ++r) {
            atb[r] += pw[r] * y[i];
            for (int c = 0; c < p; ++c) ata[r * 4 + c] += pw[r] * pw[c];
        }
    }
    // Gaussian elimination with partial pivoting (p <= 4)
    double m[4][5];
    for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) m[r][c] = ata[r * 4 + c];
        m[r][p] = atb[r];
    }
    for (int col = 0; col < p; ++col) {
        int piv = col;
        for (int r = col + 1; r < p; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        for (int c = 0; c <= p; ++c) std::swap(m[col][c], m[piv][c]);
        const double diag = m[col][col];
        for (int r = col + 1; r < p; ++r) {
            const double f = m[r][col] / diag;
            for (int c = col; c <= p; ++c) m[r][c] -= f * m[col][c];
        }
    }
    double coef[4] = {0};
    for (int r = p - 1; r >= 0; --r) {
        double acc = m[r][p];
        for (int c = r + 1; c < p; ++c) acc -= m[r][c] * coef[c];
        coef[r] = acc / m[r][r];
    }
    double mse = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(len);
        double fit = coef[p - 1];
        for (int c = p - 2; c >= 0; --c) fit = fit * t + coef[c];
        const double r = y[i] - fit;
        mse += r * r;
    }
    return mse / static_cast<double>(len);
}

} // namespace

DfaResult dfa(const SegmentedSeries& series,
              const std::vector<std::size_t>& windows, int order) {
    if (series.segments.empty()) throw InputEmpty("dfa: no segments");
    if (order < 0 || order > 3)
        throw FitDiverged("dfa: polynomial order must be in [0, 3]");
    const auto& seg = series.segments[series.longest_segment()];
    const std::size_t n = seg.values.size();

    double mean = 0.0;
    for (double v : seg.values) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> profile(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += seg.values[i] - mean;
        profile[i] = acc;
    }

    std::vector<std::size_t> usable;
    for (std::size_t s : windows)
        if (s >= static_cast<std::size_t>(order) + 2 && s <= n / 4 && n / s >= 2)
            usable.push_back(s);
    std::sort(usable.begin(), usable.end());
    usable.erase(std::unique(usable.begin(), usable.end()), usable.end());
    if (usable.size() < 2)
        throw InsufficientScales("dfa: fewer than 2 usable window sizes");

    std::vector<double> fluct(usable.size(), 0.0);
    parallel_for(usable.size(), [&](std::size_t wi) {
        const std::size_t s = usable[wi];
        const std::size_t k = n / s;
        double total = 0.0;
        // non-overlapping windows from the start and from the end
        for (std::size_t w = 0; w < k; ++w)
            total += detrend_mse(profile.data() + w * s, s, order);
        const std::size_t off = n - k * s;
        for (std::size_t w = 0; w < k; ++w)
            total += detrend_mse(profile.data() + off + w * s, s, order);
        fluct[wi] = std::sqrt(total / static_cast<double>(2 * k));
    });

    DfaResult out;
    out.window_sizes = usable;
    out.fluctuation = fluct;
    out.fit_lo = static_cast<double>(usable.front());
    out.fit_hi = static_cast<double>(usable.back());
    // least-squares slope of log F vs log n
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < usable.size(); ++i) {
        if (fluct[i] <= 0.0) continue;
        const double x = std::log(static_cast<double>(usable[i]));
        const double y = std::log(fluct[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt < 2) throw InsufficientScales("dfa: fewer than 2 positive F(n)");
    const double denom = static_cast<double>(cnt) * sxx - sx * sx;
    out.slope = (static_cast<double>(cnt) * sxy - sx * sy) / denom;
    out.hurst = out.slope - 1.0;
    return out;
}

} // namespace gridfreq
