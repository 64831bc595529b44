#include <doctest.h>

#include "dip_reference.hpp"
#include "gridfreq/bimodality.hpp"
#include "gridfreq/errors.hpp"
#include "gridfreq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace gridfreq;

TEST_CASE("dip: hand-checked small samples") {
    CHECK(dip_statistic({0.0, 1.0}).dip == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(dip_statistic({0.0, 0.0, 1.0}).dip ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(dip_statistic({0.0, 0.0, 1.0, 1.0}).dip ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(dip_statistic({0.0, 0.0, 0.0, 1.0}).dip ==
          doctest::Approx(0.125).epsilon(1e-14));
    CHECK(dip_statistic({0, 1, 2, 3, 4, 5, 6, 7}).dip ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("dip: range and floor invariants") {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 200);
        std::vector<double> x(n);
        for (auto& v : x) v = rng.normal();
        const auto r = dip_statistic(x);
        CHECK(r.dip >= 1.0 / (2.0 * static_cast<double>(n)) - 1e-15);
        CHECK(r.dip <= 0.25 + 1e-15);
        const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
        CHECK(r.modal_lo >= *mn);
        CHECK(r.modal_hi <= *mx);
        CHECK(r.modal_lo <= r.modal_hi);
    }
}

TEST_CASE("dip: error conditions") {
    CHECK_THROWS_AS(dip_statistic({1.0}), TooFewSamples);
    CHECK_THROWS_AS(dip_statistic({2.0, 2.0, 2.0, 2.0}), DegenerateDistribution);
}

TEST_CASE("dip: invariant under affine maps") {
    Rng rng(6);
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 10 + static_cast<std::size_t>(rng.uniform() * 100);
        std::vector<double> x(n);
        for (auto& v : x) v = rng.normal();
        const double base = dip_statistic(x).dip;
        std::vector<double> y(x);
        for (auto& v : y) v = 3.7 * v - 11.0;
        CHECK(dip_statistic(y).dip == doctest::Approx(base).epsilon(1e-12));
        // order-reversing affine maps also preserve the statistic
        std::vector<double> z(x);
        for (auto& v : z) v = -2.0 * v + 5.0;
        CHECK(dip_statistic(z).dip == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("dip: matches the quadratic brute-force reference") {
    Rng rng(7);
    int checked = 0;
    for (int k = 0; k < 120; ++k) {
        const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 76);
        std::vector<double> x(n);
        const int kind = k % 5;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = rng.normal();
            if (kind == 0) x[i] = z;
            else if (kind == 1) x[i] = (i < n / 2 ? -1.0 : 1.0) + 0.2 * z;
            else if (kind == 2) x[i] = std::floor(rng.uniform() * 6.0);
            else if (kind == 3) x[i] = rng.uniform();
            else x[i] = std::exp(2.0 * z);
        }
        if (*std::min_element(x.begin(), x.end()) ==
            *std::max_element(x.begin(), x.end()))
            continue;
        ++checked;
        const double fast = dip_statistic(x).dip;
        const double ref = gridfreq_tests::dip_reference(x);
        CHECK(std::fabs(fast - ref) < 1e-12);
    }
    CHECK(checked > 100);
}

TEST_CASE("dip: larger mixture separation never decreases median dip") {
    Rng seed_rng(8);
    const double seps[] = {0.0, 0.5, 1.0, 2.0, 4.0};
    std::vector<double> medians;
    for (double sep : seps) {
        std::vector<double> dips;
        for (int rep = 0; rep < 21; ++rep) {
            Rng rng(derive_seed(8, static_cast<std::uint64_t>(rep)));
            std::vector<double> x(400);
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = (i % 2 ? sep / 2 : -sep / 2) + 0.3 * rng.normal();
            dips.push_back(dip_statistic(x).dip);
        }
        std::sort(dips.begin(), dips.end());
        medians.push_back(dips[dips.size() / 2]);
    }
    for (std::size_t i = 1; i < medians.size(); ++i)
        CHECK(medians[i] >= medians[i - 1] - 1e-12);
}

TEST_CASE("dip: bootstrap p-value behaves and is deterministic") {
    Rng rng(9);
    std::vector<double> bimodal(500), flat(500);
    for (std::size_t i = 0; i < 500; ++i) {
        bimodal[i] = (i % 2 ? 1.0 : -1.0) + 0.05 * rng.normal();
        flat[i] = rng.uniform();
    }
    const auto pb = dip_statistic_pvalue(bimodal, 500, 1);
    const auto pf = dip_statistic_pvalue(flat, 500, 1);
    REQUIRE(pb.p_value.has_value());
    REQUIRE(pf.p_value.has_value());
    CHECK(*pb.p_value < 0.01);
    // the null p-value is itself ~uniform, so only a loose bound is sound
    CHECK(*pf.p_value > 0.01);
    CHECK(*pf.p_value > *pb.p_value);
    const auto pb2 = dip_statistic_pvalue(bimodal, 500, 1);
    CHECK(*pb2.p_value == *pb.p_value); // same seed, same answer
    CHECK(pb.dip == dip_statistic(bimodal).dip);
}
