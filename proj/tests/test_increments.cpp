#include <doctest.h>

#include "gridfreq/errors.hpp"
#include "gridfreq/increments.hpp"
#include "gridfreq/rng.hpp"
#include "gridfreq/synth.hpp"

#include <cmath>

using namespace gridfreq;

namespace {

SegmentedSeries wrap(std::vector<double> values) {
    SegmentedSeries s;
    FrequencySeries f;
    f.values = std::move(values);
    s.segments.push_back(std::move(f));
    return s;
}

} // namespace

TEST_CASE("increment_report: iid Gaussian kurtosis near 3 at n = 1e6") {
    Rng rng(55);
    std::vector<double> x(1000001);
    for (auto& v : x) v = rng.normal();
    const auto rep = increment_report(wrap(std::move(x)), 1.0);
    CHECK(rep.moments.kurtosis > 2.9);
    CHECK(rep.moments.kurtosis < 3.1);
    CHECK(std::fabs(rep.moments.skewness) < 0.02);
}

TEST_CASE("increment_report: OU increments symmetric at n = 1e6") {
    ModelConfig c;
    c.theta = 0.01;
    c.sigma = 0.002;
    c.n = 1000000;
    c.seed = 4;
    const auto path = gen_ou(c);
    SegmentedSeries s;
    s.segments.push_back(path);
    const auto rep = increment_report(s, 1.0);
    CHECK(std::fabs(rep.moments.skewness) < 0.02);
}

TEST_CASE("increment_report: Gaussian 3-sigma exceedance near 0.27%") {
    Rng rng(56);
    std::vector<double> x(1000001);
    for (auto& v : x) v = rng.normal();
    const auto rep = increment_report(wrap(std::move(x)), 1.0);
    const double expected = 2.0 * (1.0 - 0.99865010196837); // 2*(1-Phi(3))
    CHECK(rep.exceed_3sigma > expected * 0.8);
    CHECK(rep.exceed_3sigma < expected * 1.2);
    CHECK(rep.exceed_5sigma <= rep.exceed_3sigma);
}

TEST_CASE("increment_report: sign flip flips skewness, preserves kurtosis") {
    Rng rng(57);
    std::vector<double> x(20000);
    double acc = 0.0;
    for (auto& v : x) {
        const double z = rng.normal();
        acc = 0.9 * acc + z + 0.3 * z * z; // asymmetric driving noise
        v = acc;
    }
    std::vector<double> y(x);
    for (auto& v : y) v = -v;
    const auto ra = increment_report(wrap(std::move(x)), 1.0);
    const auto rb = increment_report(wrap(std::move(y)), 1.0);
    CHECK(rb.moments.skewness ==
          doctest::Approx(-ra.moments.skewness).epsilon(1e-10));
    CHECK(rb.moments.kurtosis ==
          doctest::Approx(ra.moments.kurtosis).epsilon(1e-10));
}

TEST_CASE("increment_report: increment mean telescopes per segment") {
    Rng rng(58);
    FrequencySeries f;
    f.values.resize(1001);
    for (auto& v : f.values) v = 50.0 + 0.01 * rng.normal();
    const auto inc = to_increments(f, 1.0);
    const auto rep = increment_report(inc);
    const double expected = (f.values.back() - f.values.front()) /
                            static_cast<double>(inc.values.size());
    CHECK(rep.moments.mean == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("increment_report: no segment long enough") {
    SegmentedSeries s = wrap({1.0, 2.0});
    CHECK_THROWS_AS(increment_report(s, 5.0), LagExceedsSeries);
}
