// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "lpi/scenario.hpp"

namespace lpi
{

std::vector<double> smooth_density(std::vector<double> const& density, std::size_t window)
{
    std::size_t const n = density.size();
    std::size_t const half = window / 2;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t const lo = i >= half ? i - half : 0;
        std::size_t const hi = std::min(n - 1, i + half);
        double sum = 0;
        for (std::size_t j = lo; j <= hi; ++j)
            sum += density[j];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return out;
}

std::vector<Peak> detect_peaks(Histogram const& hist)
{
    if (hist.degenerate || hist.bins() < peak_min_bins)
        return {};
    std::vector<double> const s = smooth_density(hist.density, peak_smoothing_window);
    std::size_t const n = s.size();
    double const global = *std::max_element(s.begin(), s.end());
    double const threshold = peak_min_prominence * global;

    std::vector<Peak> peaks;
    for (std::size_t i = 0; i < n; ++i)
    {
        // Strict rise on the left, plateau allowed on the right.
        bool const left_ok = i == 0 || s[i] > s[i - 1];
        bool const right_ok = i + 1 == n || s[i] >= s[i + 1];
        if (!left_ok || !right_ok)
            continue;

        // Lowest point on each side before terrain rises above this peak.
        double left_base = s[i];
        for (std::size_t j = i; j-- > 0;)
        {
            if (s[j] > s[i])
                break;
            left_base = std::min(left_base, s[j]);
        }
        double right_base = s[i];
        for (std::size_t j = i + 1; j < n; ++j)
        {
            if (s[j] > s[i])
                break;
            right_base = std::min(right_base, s[j]);
        }
        // A peak touching the range boundary has no base on that side.
        if (i == 0)
            left_base = right_base;
        if (i + 1 == n)
            right_base = left_base;

        double const prominence = s[i] - std::max(left_base, right_base);
        if (prominence >= threshold)
            peaks.push_back({hist.bin_center(i), s[i], prominence});
    }
    return peaks;
}

}  // namespace lpi
