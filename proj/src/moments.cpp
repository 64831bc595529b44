#include "gridfreq/moments.hpp"

#include "gridfreq/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gridfreq {

MomentSummary moments(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    if (n < 4) throw TooFewSamples("moments: need at least 4 samples");
    // two-pass central moments with extended-precision accumulation: the
    // odd moments cancel heavily (e.g. samples at 50 Hz +- 1e-3), so plain
    // double sums lose the last digits of the skewness
    long double mean = 0.0L;
    for (double v : samples) mean += v;
    mean /= static_cast<long double>(n);
    long double m2 = 0.0L, m3 = 0.0L, m4 = 0.0L;
    for (double v : samples) {
        const long double d = v - mean;
        const long double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= static_cast<long double>(n);
    m3 /= static_cast<long double>(n);
    m4 /= static_cast<long double>(n);
    if (m2 <= 0.0L)
        throw DegenerateDistribution("moments: zero variance");
    MomentSummary s;
    s.n = n;
    s.mean = static_cast<double>(mean);
    s.variance = static_cast<double>(m2);
    s.skewness = static_cast<double>(m3 / (m2 * std::sqrt(m2)));
    s.kurtosis = static_cast<double>(m4 / (m2 * m2));
    return s;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

} // namespace

DensityEstimate kde(const std::vector<double>& samples, double bandwidth) {
    const std::size_t n = samples.size();
    if (n < 10) throw TooFewSamples("kde: need at least 10 samples");
    std::vector<double> sorted(samples);
    std::sort(sorted.begin(), sorted.end());
    const double lo_sample = sorted.front(), hi_sample = sorted.back();
    if (lo_sample == hi_sample)
        throw DegenerateDistribution("kde: zero variance");
    double h = bandwidth;
    if (h <= 0.0) {
        double mean = 0.0;
        for (double v : sorted) mean += v;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : sorted) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n);
        const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
        double spread = std::sqrt(var);
        if (iqr > 0.0) spread = std::min(spread, iqr / 1.34);
        h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
        if (h <= 0.0) h = std::sqrt(var) * std::pow(static_cast<double>(n), -0.2);
    }

    DensityEstimate out;
    out.bandwidth = h;
    const double lo = lo_sample - 3.0 * h;
    const double hi = hi_sample + 3.0 * h;
    // Grid fine enough that linear binning is negligible next to h: step
    // <= h/4, at least 512 points, capped to keep the kernel sweep cheap.
    std::size_t g = 512;
    const double span = hi - lo;
    if (span / static_cast<double>(g - 1) > h / 4.0) {
        const double want = span / (h / 4.0) + 1.0;
        g = static_cast<std::size_t>(std::min(want, 16384.0));
        g = std::max<std::size_t>(g, 512);
    }
    const double step = span / static_cast<double>(g - 1);
    out.grid.resize(g);
    for (std::size_t i = 0; i < g; ++i)
        out.grid[i] = lo + step * static_cast<double>(i);

    // linear binning of the samples onto the grid
    std::vector<double> weight(g, 0.0);
    for (double v : sorted) {
        const double pos = (v - lo) / step;
        std::size_t b = static_cast<std::size_t>(pos);
        if (b >= g - 1) b = g - 2;
        const double frac = pos - static_cast<double>(b);
        weight[b] += 1.0 - frac;
        weight[b + 1] += frac;
    }
    // direct convolution with the Gaussian kernel, truncated at 8h
    const std::size_t reach =
        std::min(g, static_cast<std::size_t>(8.0 * h / step) + 1);
    std::vector<double> kernel(reach + 1);
    const double norm = 1.0 / (std::sqrt(2.0 * M_PI) * h * static_cast<double>(n));
    for (std::size_t k = 0; k <= reach; ++k) {
        const double u = static_cast<double>(k) * step / h;
        kernel[k] = norm * std::exp(-0.5 * u * u);
    }
    out.density.assign(g, 0.0);
    for (std::size_t b = 0; b < g; ++b) {
        if (weight[b] == 0.0) continue;
        const std::size_t k0 = b > reach ? b - reach : 0;
        const std::size_t k1 = std::min(g - 1, b + reach);
        for (std::size_t i = k0; i <= k1; ++i) {
            const std::size_t d = i > b ? i - b : b - i;
            out.density[i] += weight[b] * kernel[d];
        }
    }
    return out;
}

double density_integral(const DensityEstimate& d) {
    double acc = 0.0;
    for (std::size_t i = 1; i < d.grid.size(); ++i)
        acc += 0.5 * (d.density[i] + d.density[i - 1]) * (d.grid[i] - d.grid[i - 1]);
    return acc;
}

std::size_t density_local_maxima(const DensityEstimate& d) {
    std::size_t count = 0;
    for (std::size_t i = 1; i + 1 < d.density.size(); ++i)
        if (d.density[i] > d.density[i - 1] && d.density[i] > d.density[i + 1])
            ++count;
    return count;
}

} // namespace gridfreq
