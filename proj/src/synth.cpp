#include "gridfreq/synth.hpp"

#include "gridfreq/errors.hpp"
#include "gridfreq/fft.hpp"
#include "gridfreq/rng.hpp"

#include <cmath>
#include <complex>

namespace gridfreq {

namespace {

void check_common(const ModelConfig& c) {
    if (c.dt <= 0.0) throw MalformedInput("synth: dt must be positive");
    if (c.n < 2) throw MalformedInput("synth: n must be >= 2");
    if (c.sigma <= 0.0) throw MalformedInput("synth: sigma must be positive");
}

void check_drift(const ModelConfig& c) {
    if (c.theta <= 0.0) throw MalformedInput("synth: theta must be positive");
    if (c.theta * c.dt >= 2.0)
        throw UnstableDiscretization("synth: theta*dt >= 2 (Euler scheme unstable)");
}

/// fGn autocovariance gamma(k) for Var = sig2 per step.
double fgn_gamma(std::size_t k, double hurst_h, double sig2) {
    const double kk = static_cast<double>(k);
    const double h2 = 2.0 * hurst_h;
    return 0.5 * sig2 *
           (std::pow(kk + 1.0, h2) - 2.0 * std::pow(kk, h2) +
            std::pow(std::fabs(kk - 1.0), h2));
}

/// Hosking recursion: O(n^2) exact fGn, used only when the circulant
/// embedding is numerically non-positive-definite.
std::vector<double> fgn_hosking(std::size_t n, double hurst_h, double sig2,
                                Rng& rng) {
    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k) gamma[k] = fgn_gamma(k, hurst_h, sig2);
    std::vector<double> x(n), phi(n, 0.0), prev(n, 0.0);
    double v = gamma[0];
    x[0] = rng.normal() * std::sqrt(v);
    for (std::size_t i = 1; i < n; ++i) {
        double acc = gamma[i];
        for (std::size_t j = 1; j < i; ++j) acc -= prev[j - 1] * gamma[i - j];
        const double phi_ii = acc / v;
        for (std::size_t j = 0; j + 1 < i; ++j)
            phi[j] = prev[j] - phi_ii * prev[i - 2 - j];
        phi[i - 1] = phi_ii;
        v *= (1.0 - phi_ii * phi_ii);
        double mean = 0.0;
        for (std::size_t j = 0; j < i; ++j) mean += phi[j] * x[i - 1 - j];
        x[i] = mean + rng.normal() * std::sqrt(v);
        std::swap(phi, prev);
    }
    return x;
}

} // namespace

std::vector<double> gen_fgn(std::size_t n, double hurst_h, double dt,
                            double scale, std::uint64_t seed) {
    if (hurst_h <= 0.0 || hurst_h >= 1.0)
        throw MalformedInput("gen_fgn: hurst_h must lie in (0, 1)");
    const double sig2 = scale * scale * std::pow(dt, 2.0 * hurst_h);
    Rng rng(seed);
    if (hurst_h == 0.5) {
        // white noise: direct draws, so OU-family generators consume the
        // identical normal stream at H = 0.5
        const double sd = std::sqrt(sig2);
        std::vector<double> x(n);
        for (auto& v : x) v = rng.normal() * sd;
        return x;
    }
    // Davies-Harte circulant embedding of size 2n
    const std::size_t m = 2 * n;
    std::vector<double> c(m);
    for (std::size_t k = 0; k <= n; ++k) c[k] = fgn_gamma(k, hurst_h, sig2);
    for (std::size_t k = n + 1; k < m; ++k) c[k] = c[m - k];
    auto spec = rfft(c);
    std::vector<double> lam(spec.size());
    double max_lam = 0.0, min_lam = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        lam[k] = spec[k].real();
        max_lam = std::max(max_lam, lam[k]);
        min_lam = std::min(min_lam, lam[k]);
    }
    if (min_lam < -1e-9 * max_lam) return fgn_hosking(n, hurst_h, sig2, rng);
    std::vector<std::complex<double>> w(n + 1);
    const double root_m = std::sqrt(static_cast<double>(m));
    const double root_half = std::sqrt(static_cast<double>(m) / 2.0);
    w[0] = rng.normal() * root_m;
    w[n] = rng.normal() * root_m;
    for (std::size_t k = 1; k < n; ++k) {
        const double re = rng.normal();
        const double im = rng.normal();
        w[k] = std::complex<double>(re, im) * root_half;
    }
    for (std::size_t k = 0; k <= n; ++k)
        w[k] *= std::sqrt(std::max(lam[k], 0.0));
    auto x = irfft(w, m);
    x.resize(n);
    return x;
}

FrequencySeries gen_ou(const ModelConfig& config) {
    check_common(config);
    check_drift(config);
    Rng rng(config.seed);
    FrequencySeries out;
    out.dt = config.dt;
    out.region = config.region.empty() ? "ou" : config.region;
    out.values.resize(config.n);
    const double sd_stat = config.sigma / std::sqrt(2.0 * config.theta);
    const double sd_step = config.sigma * std::sqrt(config.dt);
    out.values[0] = config.mu + rng.normal() * sd_stat;
    for (std::size_t i = 1; i < config.n; ++i) {
        const double f = out.values[i - 1];
        out.values[i] = f - config.theta * (f - config.mu) * config.dt +
                        sd_step * rng.normal();
    }
    return out;
}

FrequencySeries gen_fbm(const ModelConfig& config) {
    check_common(config);
    const auto fgn = gen_fgn(config.n, config.hurst_h, config.dt, config.sigma,
                             config.seed);
    FrequencySeries out;
    out.dt = config.dt;
    out.region = config.region.empty() ? "fbm" : config.region;
    out.values.resize(config.n);
    double acc = 0.0;
    for (std::size_t i = 0; i < config.n; ++i) {
        acc += fgn[i];
        out.values[i] = config.mu + acc;
    }
    return out;
}

FrequencySeries gen_fbm_ou(const ModelConfig& config) {
    check_common(config);
    check_drift(config);
    // Stationary-OU start, then the fGn block: at H = 0.5 this consumes the
    // same normal stream as gen_ou, giving bit-identical paths.
    Rng rng(config.seed);
    const double sd_stat = config.sigma / std::sqrt(2.0 * config.theta);
    const double x0 = config.mu + rng.normal() * sd_stat;
    std::vector<double> noise;
    if (config.hurst_h == 0.5) {
        const double sd_step = config.sigma * std::sqrt(config.dt);
        noise.resize(config.n - 1);
        for (auto& v : noise) v = rng.normal() * sd_step;
    } else {
        noise = gen_fgn(config.n - 1, config.hurst_h, config.dt, config.sigma,
                        derive_seed(config.seed, 1));
    }
    FrequencySeries out;
    out.dt = config.dt;
    out.region = config.region.empty() ? "fbm_ou" : config.region;
    out.values.resize(config.n);
    out.values[0] = x0;
    for (std::size_t i = 1; i < config.n; ++i) {
        const double f = out.values[i - 1];
        out.values[i] = f - config.theta * (f - config.mu) * config.dt +
                        noise[i - 1];
    }
    return out;
}

FrequencySeries gen_deadband_ou(const ModelConfig& config) {
    check_common(config);
    check_drift(config);
    if (config.deadband_halfwidth < 0.0)
        throw MalformedInput("gen_deadband_ou: deadband_halfwidth must be >= 0");
    Rng rng(config.seed);
    const double d = config.deadband_halfwidth;
    FrequencySeries out;
    out.dt = config.dt;
    out.region = config.region.empty() ? "deadband_ou" : config.region;
    out.values.resize(config.n);
    const double sd_stat = config.sigma / std::sqrt(2.0 * config.theta);
    const double sd_step = config.sigma * std::sqrt(config.dt);
    out.values[0] = config.mu + rng.normal() * sd_stat;
    for (std::size_t i = 1; i < config.n; ++i) {
        const double f = out.values[i - 1];
        const double dev = f - config.mu;
        double drift = 0.0;
        if (dev > d)
            drift = -config.theta * (dev - d);
        else if (dev < -d)
            drift = -config.theta * (dev + d);
        out.values[i] = f + drift * config.dt + sd_step * rng.normal();
    }
    return out;
}

std::vector<double> gen_bimodal_mixture(const ModelConfig& config) {
    const std::size_t k = config.mixture_centers.size();
    if (k == 0 || config.mixture_weights.size() != k ||
        config.mixture_widths.size() != k)
        throw MalformedInput("gen_bimodal_mixture: centers/weights/widths sizes disagree");
    double wsum = 0.0;
    for (double w : config.mixture_weights) {
        if (w < 0.0) throw MalformedInput("gen_bimodal_mixture: negative weight");
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > 1e-9)
        throw MalformedInput("gen_bimodal_mixture: weights must sum to 1");
    Rng rng(config.seed);
    std::vector<double> out(config.n);
    for (auto& v : out) {
        const double u = rng.uniform();
        double acc = 0.0;
        std::size_t comp = k - 1;
        for (std::size_t j = 0; j < k; ++j) {
            acc += config.mixture_weights[j];
            if (u < acc) {
                comp = j;
                break;
            }
        }
        v = config.mixture_centers[comp] +
            rng.normal() * config.mixture_widths[comp];
    }
    return out;
}

FrequencySeries generate(const ModelConfig& config) {
    switch (config.kind) {
        case ModelKind::OU: return gen_ou(config);
        case ModelKind::FBM: return gen_fbm(config);
        case ModelKind::FBM_OU: return gen_fbm_ou(config);
        case ModelKind::DEADBAND_OU: return gen_deadband_ou(config);
        case ModelKind::BIMODAL_MIXTURE:
            throw MalformedInput("generate: BIMODAL_MIXTURE is not a time series");
    }
    throw MalformedInput("generate: unknown model kind");
}

} // namespace gridfreq
