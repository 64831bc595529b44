#include <doctest.h>

#include "gridfreq/errors.hpp"
#include "gridfreq/linearity.hpp"
#include "gridfreq/rng.hpp"

#include <algorithm>
#include <cmath>

using namespace gridfreq;

namespace {

FrequencySeries ar1(std::size_t n, double phi, std::uint64_t seed) {
    Rng rng(seed);
    FrequencySeries f;
    f.values.resize(n);
    double x = 0.0;
    for (auto& v : f.values) {
        x = phi * x + rng.normal();
        v = x;
    }
    return f;
}

FrequencySeries cubed(const FrequencySeries& f) {
    FrequencySeries out = f;
    for (auto& v : out.values) v = v * v * v;
    return out;
}

} // namespace

TEST_CASE("lt_curve: AR(1) stays inside a small band") {
    const auto f = ar1(1 << 20, 0.9, 61);
    const auto [lags, lt] = lt_curve(f, 60.0);
    REQUIRE(lags.size() == 60);
    CHECK(lags.front() == doctest::Approx(1.0));
    // time-reversible linear process: LT should be statistical noise
    for (double v : lt) CHECK(std::fabs(v) < 0.05);
}

TEST_CASE("lt_curve: cubic distortion produces a clear signal") {
    const auto f = ar1(1 << 17, 0.9, 62);
    const auto [lags_lin, lt_lin] = lt_curve(f, 30.0);
    const auto [lags_cub, lt_cub] = lt_curve(cubed(f), 30.0);
    double max_lin = 0.0, max_cub = 0.0;
    for (double v : lt_lin) max_lin = std::max(max_lin, std::fabs(v));
    for (double v : lt_cub) max_cub = std::max(max_cub, std::fabs(v));
    CHECK(max_cub > 3.0 * max_lin);
}

TEST_CASE("lt_curve: constant series throws") {
    FrequencySeries f;
    f.values.assign(1000, 50.0);
    CHECK_THROWS_AS(lt_curve(f, 10.0), DegenerateDistribution);
}

TEST_CASE("lt_curve: max_lag beyond a quarter of the span throws") {
    FrequencySeries f;
    f.values.resize(100);
    for (std::size_t i = 0; i < 100; ++i)
        f.values[i] = static_cast<double>(i % 7);
    CHECK_THROWS_AS(lt_curve(f, 30.0), LagExceedsSeries);
}

TEST_CASE("lt_curve: odd under time reversal") {
    const auto f = ar1(4096, 0.8, 63);
    FrequencySeries rev = f;
    std::reverse(rev.values.begin(), rev.values.end());
    const auto [l1, a] = lt_curve(f, 20.0);
    const auto [l2, b] = lt_curve(rev, 20.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(b[i] == doctest::Approx(-a[i]).epsilon(1e-10));
}

TEST_CASE("lt_curve: shift invariance and linear scaling") {
    const auto f = ar1(4096, 0.8, 64);
    FrequencySeries shifted = f, scaled = f;
    for (auto& v : shifted.values) v += 123.0;
    for (auto& v : scaled.values) v *= 2.5;
    const auto [l0, base] = lt_curve(f, 20.0);
    const auto [l1, sh] = lt_curve(shifted, 20.0);
    const auto [l2, sc] = lt_curve(scaled, 20.0);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(sh[i] == doctest::Approx(base[i]).epsilon(1e-9));
        CHECK(sc[i] == doctest::Approx(2.5 * base[i]).epsilon(1e-10));
    }
}

TEST_CASE("phase_surrogate: amplitudes and mean preserved") {
    const auto f = ar1(1 << 14, 0.9, 65);
    const auto s = phase_surrogate(f, 99);
    REQUIRE(s.values.size() == f.values.size());
    const auto sp_f = spectrum(f);
    const auto sp_s = spectrum(s);
    double max_rel = 0.0, max_amp = 0.0;
    for (double a : sp_f.amplitudes) max_amp = std::max(max_amp, a);
    for (std::size_t i = 0; i < sp_f.amplitudes.size(); ++i)
        max_rel = std::max(
            max_rel, std::fabs(sp_s.amplitudes[i] - sp_f.amplitudes[i]) / max_amp);
    CHECK(max_rel < 1e-9);
    double mf = 0.0, ms = 0.0;
    for (double v : f.values) mf += v;
    for (double v : s.values) ms += v;
    CHECK(ms / static_cast<double>(s.values.size()) ==
          doctest::Approx(mf / static_cast<double>(f.values.size()))
              .epsilon(1e-9));
}

TEST_CASE("phase_surrogate: too-short input throws") {
    FrequencySeries f;
    f.values.assign(8, 1.0);
    CHECK_THROWS_AS(phase_surrogate(f, 1), TooFewSamples);
}

TEST_CASE("phase_surrogate: shrinks the cubic LT toward the linear band") {
    const auto f = cubed(ar1(1 << 16, 0.9, 66));
    const auto s = phase_surrogate(f, 7);
    const auto [l1, lt_f] = lt_curve(f, 20.0);
    const auto [l2, lt_s] = lt_curve(s, 20.0);
    double m_f = 0.0, m_s = 0.0;
    for (double v : lt_f) m_f = std::max(m_f, std::fabs(v));
    for (double v : lt_s) m_s = std::max(m_s, std::fabs(v));
    CHECK(m_s < 0.5 * m_f);
}

TEST_CASE("lt_rmse: linear process scores below its cubic distortion") {
    int wins = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const auto f = ar1(1 << 14, 0.9, 700 + static_cast<std::uint64_t>(rep));
        const auto rl = lt_rmse(f, 9, 30.0, 1);
        const auto rc = lt_rmse(cubed(f), 9, 30.0, 1);
        if (rl.rmse < rc.rmse) ++wins;
    }
    CHECK(wins >= 18);
}

TEST_CASE("lt_rmse: deterministic in the seed and rmse consistent") {
    const auto f = ar1(1 << 14, 0.8, 71);
    const auto a = lt_rmse(f, 5, 20.0, 3);
    const auto b = lt_rmse(f, 5, 20.0, 3);
    CHECK(a.rmse == b.rmse);
    CHECK(a.lt_surrogate_mean == b.lt_surrogate_mean);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.lags.size(); ++i) {
        const double d = a.lt_data[i] - a.lt_surrogate_mean[i];
        acc += d * d;
    }
    CHECK(a.rmse ==
          doctest::Approx(std::sqrt(acc / static_cast<double>(a.lags.size())))
              .epsilon(1e-12));
    CHECK(a.n_surrogates == 5);
}
