#include "gridfreq/linearity.hpp"

#include "gridfreq/errors.hpp"
#include "gridfreq/fft.hpp"
#include "gridfreq/parallel.hpp"
#include "gridfreq/rng.hpp"

#include <cmath>
#include <complex>

namespace gridfreq {

std::pair<std::vector<double>, std::vector<double>>
lt_curve(const FrequencySeries& series, double max_lag) {
    const std::vector<double>& f = series.values;
    const std::size_t n = f.size();
    const double dt = series.dt;
    if (max_lag >= static_cast<double>(n) * dt / 4.0)
        throw LagExceedsSeries("lt_curve: max_lag must be < length*dt/4");
    const std::size_t kmax = static_cast<std::size_t>(std::floor(max_lag / dt + 1e-9));
    if (kmax < 1) throw LagExceedsSeries("lt_curve: max_lag below dt");
    std::vector<double> lags(kmax), lt(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        double num = 0.0, den = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) {
            const double d = f[t] - f[t + k];
            num += d * d * d;
            den += d * d;
        }
        if (den == 0.0)
            throw DegenerateDistribution("lt_curve: zero denominator (constant series)");
        lags[k - 1] = static_cast<double>(k) * dt;
        lt[k - 1] = num / den;
    }
    return {lags, lt};
}

SpectrumRepresentation spectrum(const FrequencySeries& series) {
    const auto spec = rfft(series.values);
    SpectrumRepresentation out;
    out.n = series.values.size();
    out.amplitudes.reserve(spec.size());
    out.phases.reserve(spec.size());
    for (const auto& c : spec) {
        out.amplitudes.push_back(std::abs(c) * series.dt);
        out.phases.push_back(std::arg(c));
    }
    return out;
}

FrequencySeries phase_surrogate(const FrequencySeries& series, std::uint64_t seed) {
    const std::size_t n = series.values.size();
    if (n < 16) throw TooFewSamples("phase_surrogate: need length >= 16");
    // mean-only detrend: amplitudes must be preserved exactly, so no window
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = series.values[i] - mean;

    auto spec = rfft(centered);
    Rng rng(seed);
    // bin 0 (DC) stays real; the Nyquist bin (even n) stays real; interior
    // bins get fresh uniform phases. Hermitian symmetry is implicit in the
    // half-spectrum representation.
    const std::size_t last = spec.size() - 1;
    const bool has_nyquist = (n % 2 == 0);
    for (std::size_t k = 1; k < spec.size(); ++k) {
        if (has_nyquist && k == last) break;
        const double amp = std::abs(spec[k]);
        const double phi = 2.0 * M_PI * rng.uniform();
        spec[k] = std::polar(amp, phi);
    }
    auto values = irfft(spec, n);
    for (auto& v : values) v += mean;
    FrequencySeries out = series;
    out.values = std::move(values);
    return out;
}

LinearityResult lt_rmse(const FrequencySeries& series, std::size_t n_surrogates,
                        double max_lag, std::uint64_t seed) {
    if (n_surrogates < 1)
        throw TooFewSamples("lt_rmse: need at least one surrogate");
    LinearityResult res;
    auto [lags, lt] = lt_curve(series, max_lag);
    res.lags = std::move(lags);
    res.lt_data = std::move(lt);
    res.n_surrogates = n_surrogates;

    std::vector<std::vector<double>> curves(n_surrogates);
    parallel_for(n_surrogates, [&](std::size_t k) {
        const FrequencySeries sur = phase_surrogate(series, derive_seed(seed, k));
        curves[k] = lt_curve(sur, max_lag).second;
    });
    res.lt_surrogate_mean.assign(res.lags.size(), 0.0);
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.size(); ++i)
            res.lt_surrogate_mean[i] += c[i];
    for (auto& v : res.lt_surrogate_mean)
        v /= static_cast<double>(n_surrogates);

    double acc = 0.0;
    for (std::size_t i = 0; i < res.lags.size(); ++i) {
        const double d = res.lt_data[i] - res.lt_surrogate_mean[i];
        acc += d * d;
    }
    res.rmse = std::sqrt(acc / static_cast<double>(res.lags.size()));
    return res;
}

} // namespace gridfreq
