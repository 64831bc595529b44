#include <doctest.h>

#include "gridfreq/bimodality.hpp"
#include "gridfreq/correlation.hpp"
#include "gridfreq/errors.hpp"
#include "gridfreq/moments.hpp"
#include "gridfreq/synth.hpp"

#include <cmath>

using namespace gridfreq;

namespace {

SegmentedSeries wrap(FrequencySeries f) {
    SegmentedSeries s;
    s.segments.push_back(std::move(f));
    return s;
}

} // namespace

TEST_CASE("gen_ou: stationary variance and mean at n = 1e6") {
    ModelConfig c;
    c.theta = 0.01;
    c.mu = 50.0;
    c.sigma = 0.002;
    c.n = 1000000;
    c.seed = 2;
    const auto f = gen_ou(c);
    const auto m = moments(f.values);
    const double var_theory = c.sigma * c.sigma / (2.0 * c.theta); // 2e-4
    CHECK(std::fabs(m.variance - var_theory) < 0.05 * var_theory);
    // standard error of the mean of a correlated series ~ sqrt(2 var/(theta n))
    const double se = std::sqrt(2.0 * var_theory / (c.theta * 1e6));
    CHECK(std::fabs(m.mean - 50.0) < 3.0 * se);
}

TEST_CASE("gen_ou: increment variance matches sigma^2 dt for small theta*dt") {
    ModelConfig c;
    c.theta = 0.005;
    c.sigma = 0.002;
    c.n = 1000000;
    c.seed = 3;
    const auto f = gen_ou(c);
    const auto inc = to_increments(f, 1.0);
    const auto m = moments(inc.values);
    CHECK(std::fabs(m.variance - c.sigma * c.sigma) <
          0.02 * c.sigma * c.sigma);
}

TEST_CASE("gen_ou: deterministic and unstable-discretization guard") {
    ModelConfig c;
    c.n = 1000;
    const auto a = gen_ou(c);
    const auto b = gen_ou(c);
    CHECK(a.values == b.values);
    c.theta = 2.5;
    c.dt = 1.0;
    CHECK_THROWS_AS(gen_ou(c), UnstableDiscretization);
}

TEST_CASE("gen_fgn: H = 0.7 lag-1 autocorrelation matches theory") {
    // fGn lag-1 autocorrelation = 2^(2H-1) - 1
    const auto x = gen_fgn(1 << 17, 0.7, 1.0, 1.0, 17);
    SegmentedSeries s;
    FrequencySeries f;
    f.values = x;
    s.segments.push_back(f);
    const auto a = acf(s, 1.0);
    const double theory = std::pow(2.0, 0.4) - 1.0; // 0.3195
    CHECK(std::fabs(a.acf[1] - theory) < 0.02);
}

TEST_CASE("gen_fbm: H = 0.5 increments are white") {
    ModelConfig c;
    c.kind = ModelKind::FBM;
    c.hurst_h = 0.5;
    c.sigma = 1.0;
    c.mu = 0.0;
    c.n = 1 << 17;
    c.seed = 18;
    const auto f = gen_fbm(c);
    const auto inc = to_increments(f, 1.0);
    SegmentedSeries s;
    FrequencySeries g;
    g.values = inc.values;
    s.segments.push_back(g);
    const auto a = acf(s, 20.0);
    for (std::size_t k = 1; k < a.acf.size(); ++k)
        CHECK(std::fabs(a.acf[k]) < 0.01);
}

TEST_CASE("gen_fbm: variance growth Var[B_H(t)] ~ t^(2H)") {
    // ensemble variance at a few path positions over 200 seeds
    const double H = 0.7;
    const std::size_t n = 1024;
    const std::size_t checkpoints[] = {64, 256, 1024};
    double var[3] = {0, 0, 0};
    for (int seed = 0; seed < 200; ++seed) {
        ModelConfig c;
        c.kind = ModelKind::FBM;
        c.hurst_h = H;
        c.sigma = 1.0;
        c.mu = 0.0;
        c.n = n;
        c.seed = 1000 + static_cast<std::uint64_t>(seed);
        const auto f = gen_fbm(c);
        for (int j = 0; j < 3; ++j) {
            const double v = f.values[checkpoints[j] - 1];
            var[j] += v * v / 200.0;
        }
    }
    for (int j = 0; j < 3; ++j) {
        const double t = static_cast<double>(checkpoints[j]);
        const double ratio = var[j] / std::pow(t, 2.0 * H);
        CHECK(ratio > 0.8);
        CHECK(ratio < 1.2);
    }
}

TEST_CASE("gen_fbm_ou: H = 0.5 reproduces gen_ou exactly") {
    ModelConfig c;
    c.theta = 0.01;
    c.sigma = 0.002;
    c.n = 10000;
    c.seed = 44;
    const auto ou = gen_ou(c);
    c.kind = ModelKind::FBM_OU;
    c.hurst_h = 0.5;
    const auto fo = gen_fbm_ou(c);
    REQUIRE(fo.values.size() == ou.values.size());
    for (std::size_t i = 0; i < ou.values.size(); ++i)
        CHECK(std::fabs(fo.values[i] - ou.values[i]) <= 1e-12);
}

TEST_CASE("gen_fbm_ou: H = 0.75 path shows persistent DFA hurst") {
    ModelConfig c;
    c.kind = ModelKind::FBM_OU;
    c.theta = 0.001; // scales below 1/theta dominate
    c.sigma = 0.002;
    c.hurst_h = 0.75;
    c.n = 1 << 17;
    c.seed = 45;
    const auto f = gen_fbm_ou(c);
    const auto s = wrap(f);
    const auto d = dfa(s, dfa_default_windows(c.n, 5, 500));
    CHECK(d.hurst > 0.65);
    CHECK(d.hurst < 0.85);
}

TEST_CASE("gen_deadband_ou: d = 0 is exactly gen_ou") {
    ModelConfig c;
    c.theta = 0.01;
    c.sigma = 0.002;
    c.n = 10000;
    c.seed = 46;
    const auto ou = gen_ou(c);
    c.kind = ModelKind::DEADBAND_OU;
    c.deadband_halfwidth = 0.0;
    const auto db = gen_deadband_ou(c);
    CHECK(db.values == ou.values);
}

TEST_CASE("gen_deadband_ou: wide deadband raises the dip statistic") {
    int wins = 0;
    for (int rep = 0; rep < 30; ++rep) {
        ModelConfig c;
        c.theta = 0.1;
        c.sigma = 0.002;
        c.n = 20000;
        c.seed = 500 + static_cast<std::uint64_t>(rep);
        const auto plain = gen_ou(c);
        c.kind = ModelKind::DEADBAND_OU;
        c.deadband_halfwidth = 3.0 * c.sigma / std::sqrt(2.0 * c.theta);
        const auto banded = gen_deadband_ou(c);
        if (dip_statistic(banded.values).dip > dip_statistic(plain.values).dip)
            ++wins;
    }
    CHECK(wins >= 27); // >= 90%
}

TEST_CASE("gen_deadband_ou: symmetric stationary density") {
    ModelConfig c;
    c.kind = ModelKind::DEADBAND_OU;
    c.theta = 0.01;
    c.sigma = 0.002;
    c.deadband_halfwidth = 0.02;
    c.n = 1000000;
    c.seed = 47;
    const auto f = gen_deadband_ou(c);
    const auto m = moments(f.values);
    CHECK(std::fabs(m.skewness) < 0.05);
}

TEST_CASE("gen_bimodal_mixture: single component is a plain Gaussian") {
    ModelConfig c;
    c.kind = ModelKind::BIMODAL_MIXTURE;
    c.mixture_centers = {50.0};
    c.mixture_weights = {1.0};
    c.mixture_widths = {0.01};
    c.n = 100000;
    c.seed = 48;
    const auto x = gen_bimodal_mixture(c);
    const auto m = moments(x);
    CHECK(std::fabs(m.mean - 50.0) < 1e-3);
    CHECK(std::fabs(m.variance - 1e-4) < 5e-6);
    const auto d = dip_statistic(x);
    CHECK(d.dip < 0.005); // near the unimodal floor
}

TEST_CASE("gen_bimodal_mixture: two narrow components show two KDE maxima") {
    ModelConfig c;
    c.kind = ModelKind::BIMODAL_MIXTURE;
    c.mixture_centers = {49.95, 50.05};
    c.mixture_weights = {0.5, 0.5};
    c.mixture_widths = {0.01, 0.01};
    c.n = 50000;
    c.seed = 49;
    const auto x = gen_bimodal_mixture(c);
    CHECK(density_local_maxima(kde(x)) == 2);
    CHECK(dip_statistic(x).dip > 0.01);
}

TEST_CASE("gen_bimodal_mixture: weight validation") {
    ModelConfig c;
    c.kind = ModelKind::BIMODAL_MIXTURE;
    c.mixture_centers = {0.0, 1.0};
    c.mixture_weights = {0.5, 0.6};
    c.mixture_widths = {0.1, 0.1};
    c.n = 10;
    CHECK_THROWS_AS(gen_bimodal_mixture(c), MalformedInput);
}

TEST_CASE("generate: dispatch and determinism across generators") {
    for (ModelKind k : {ModelKind::OU, ModelKind::FBM, ModelKind::FBM_OU,
                        ModelKind::DEADBAND_OU}) {
        ModelConfig c;
        c.kind = k;
        c.hurst_h = 0.6;
        c.n = 2048;
        c.seed = 50;
        const auto a = generate(c);
        const auto b = generate(c);
        CHECK(a.values == b.values);
        CHECK(a.values.size() == 2048);
    }
}
