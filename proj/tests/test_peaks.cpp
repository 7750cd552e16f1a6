// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lpi/rng.hpp"
#include "lpi/scenario.hpp"

using namespace lpi;
using constants::pi;

TEST_CASE("smoothing")
{
    std::vector<double> const d{0, 0, 5, 0, 0, 0, 0};
    auto const s = smooth_density(d, 5);
    CHECK(s[0] == doctest::Approx(5.0 / 3));
    CHECK(s[2] == doctest::Approx(1));
    CHECK(s[4] == doctest::Approx(1));
    CHECK(s[5] == 0);
}

TEST_CASE("single gaussian")
{
    std::vector<double> v(100000);
    CounterRng rng(5, 0);
    std::normal_distribution<double> n(1, 0.3);
    for (double& x : v)
        x = n(rng);
    auto const peaks = detect_peaks(estimate_pdf(v, 200));
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].location == doctest::Approx(1).epsilon(0.05));
}

TEST_CASE("arcsine samples have peaks at both ends")
{
    std::vector<double> v(100000);
    CounterRng rng(6, 0);
    std::uniform_real_distribution<double> u(0, 2 * pi);
    for (double& x : v)
        x = 2 * (1 + std::cos(u(rng)));
    auto const peaks = detect_peaks(estimate_pdf(v, 200));
    REQUIRE(peaks.size() == 2);
    CHECK(peaks[0].location < 0.1);
    CHECK(peaks[1].location > 3.9);
}

TEST_CASE("small features are not peaks")
{
    Histogram h;
    std::size_t const bins = 64;
    for (std::size_t i = 0; i <= bins; ++i)
        h.bin_edges.push_back(static_cast<double>(i));
    h.counts.assign(bins, 0);
    for (std::size_t i = 0; i < bins; ++i)
    {
        double const x = static_cast<double>(i);
        double d = std::exp(-0.5 * (x - 20) * (x - 20) / 9);
        d += 0.03 * std::exp(-0.5 * (x - 45) * (x - 45) / 4);
        d += 0.6 * std::exp(-0.5 * (x - 35) * (x - 35) / 4);
        h.density.push_back(d);
    }
    auto const peaks = detect_peaks(h);
    REQUIRE(peaks.size() == 2);
    CHECK(peaks[0].location == doctest::Approx(20.5).epsilon(0.05));
    CHECK(peaks[1].location == doctest::Approx(35.5).epsilon(0.05));
    CHECK(peaks[0].prominence > peaks[1].prominence);

    Histogram small = h;
    small.bin_edges.resize(11);
    small.density.resize(10);
    small.counts.resize(10);
    CHECK(detect_peaks(small).empty());
}
