// SPDX-License-Identifier: Apache-2.0
//! \file histogram.hpp
//! Equal-width PDF estimate of Monte-Carlo samples.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lpi
{

struct Histogram
{
    std::vector<double> bin_edges;  //!< size = bins + 1
    std::vector<std::size_t> counts;
    std::vector<double> density;  //!< integrates to one
    bool degenerate = false;  //!< all samples equal; single unit-width bin

    std::size_t bins() const { return counts.size(); }
    double bin_center(std::size_t i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
    double bin_width(std::size_t i) const { return bin_edges[i + 1] - bin_edges[i]; }
    std::size_t total() const;
    //! Riemann sum of density over bins.
    double integral() const;
};

inline constexpr std::size_t default_bins = 200;

/*!
 * Bin samples into \c bins equal-width bins spanning [min, max].
 *
 * The maximum lands in the last bin. If every sample is equal the result is
 * a single bin of unit width centred on that value, flagged degenerate.
 */
Histogram estimate_pdf(std::span<double const> samples, std::size_t bins = default_bins);

}  // namespace lpi

#include <functional>

namespace lpi
{
//! One-sample Kolmogorov-Smirnov distance sup |F_n(x) - cdf(x)|.
double ks_distance(std::span<double const> samples, std::function<double(double)> const& cdf);
}  // namespace lpi
