// SPDX-License-Identifier: Apache-2.0
#include "lpi/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lpi/error.hpp"

namespace lpi
{

std::size_t Histogram::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

double Histogram::integral() const
{
    double sum = 0;
    for (std::size_t i = 0; i < bins(); ++i)
        sum += density[i] * bin_width(i);
    return sum;
}

Histogram estimate_pdf(std::span<double const> samples, std::size_t bins)
{
    require(bins >= 2, "n_bins >= 2");
    require(!samples.empty(), "at least one sample to histogram");
    for (double v : samples)
        require(std::isfinite(v), "samples are finite");

    auto const [min_it, max_it] = std::minmax_element(samples.begin(), samples.end());
    double const lo = *min_it;
    double const hi = *max_it;

    Histogram h;
    if (!(hi > lo))
    {
        h.degenerate = true;
        h.bin_edges = {lo - 0.5, lo + 0.5};
        h.counts = {samples.size()};
        h.density = {1.0};
        return h;
    }

    double const width = (hi - lo) / static_cast<double>(bins);
    h.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.bin_edges[i] = lo + width * static_cast<double>(i);
    h.bin_edges.back() = hi;

    h.counts.assign(bins, 0);
    for (double v : samples)
    {
        auto idx = static_cast<std::size_t>((v - lo) / width);
        idx = std::min(idx, bins - 1);
        ++h.counts[idx];
    }

    double const n = static_cast<double>(samples.size());
    h.density.resize(bins);
    for (std::size_t i = 0; i < bins; ++i)
        h.density[i] = static_cast<double>(h.counts[i]) / (n * h.bin_width(i));
    return h;
}

}  // namespace lpi

namespace lpi
{
double ks_distance(std::span<double const> samples, std::function<double(double)> const& cdf)
{
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    double const n = static_cast<double>(sorted.size());
    double d = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        double const f = cdf(sorted[i]);
        double const above = static_cast<double>(i + 1) / n - f;
        double const below = f - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return d;
}
}  // namespace lpi
