// SPDX-License-Identifier: Apache-2.0
#include "lpi/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "lpi/error.hpp"

namespace lpi
{
namespace
{
// FFTW planning is not thread safe; execution on distinct plans is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

//! Owning buffer plus plan for one 1-D complex transform.
class FftwTransform
{
  public:
    FftwTransform(std::size_t n, int sign) : n_(n)
    {
        data_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), data_, data_, sign, FFTW_ESTIMATE);
    }
    ~FftwTransform()
    {
        {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(data_);
    }
    FftwTransform(FftwTransform const&) = delete;
    FftwTransform& operator=(FftwTransform const&) = delete;

    std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(data_); }
    std::size_t size() const { return n_; }
    void execute() { fftw_execute(plan_); }

  private:
    std::size_t n_;
    fftw_complex* data_ = nullptr;
    fftw_plan plan_ = nullptr;
};

void check_uniform(ComplexFieldTrace const& field)
{
    bool ok = field.dt > 0 && field.times.size() == field.amplitude.size()
              && field.amplitude.size() >= 2;
    for (std::size_t i = 1; ok && i < field.times.size(); ++i)
        ok = std::abs(field.times[i] - field.times[i - 1] - field.dt) <= 1e-9 * field.dt;
    if (!ok)
        throw Error(ErrorKind::NonuniformGrid, "field samples are not on a uniform time grid");
}

bool is_smooth(std::size_t m)
{
    for (std::size_t f : {3u, 5u, 7u})
    {
        while (m % f == 0)
            m /= f;
    }
    return m == 1;
}

std::size_t padded_length(std::size_t n, std::size_t pad_factor)
{
    std::size_t m = std::max<std::size_t>(1, pad_factor) * n;
    m += (m % 2 == 0);
    while (!is_smooth(m))
        m += 2;
    return m;
}

//! Angular frequency of DFT bin k for length m and step dt.
double bin_frequency(std::size_t k, std::size_t m, double dt)
{
    auto const signed_k = k <= (m - 1) / 2 ? static_cast<double>(k)
                                           : static_cast<double>(k) - static_cast<double>(m);
    return constants::two_pi * signed_k / (static_cast<double>(m) * dt);
}

//! |DFT|^2 of the field zero-padded to length m, in natural FFT order.
std::vector<double> padded_power(ComplexFieldTrace const& field, std::size_t m)
{
    FftwTransform fft(m, FFTW_FORWARD);
    std::complex<double>* buf = fft.data();
    std::fill(buf, buf + m, std::complex<double>{});
    std::copy(field.amplitude.begin(), field.amplitude.end(), buf);
    fft.execute();
    std::vector<double> power(m);
    for (std::size_t k = 0; k < m; ++k)
        power[k] = std::norm(buf[k]);
    return power;
}

double moment(Spectrum const& s, double center, int order)
{
    double sum = 0, weight = 0;
    for (std::size_t i = 0; i < s.detunings.size(); ++i)
    {
        sum += s.density[i] * std::pow(s.detunings[i] - center, order);
        weight += s.density[i];
    }
    return sum / weight;
}
}  // namespace

//---------------------------------------------------------------------------//
double BandpassFilter::amplitude_transfer(double detuning) const
{
    double const x = 2 * (detuning - center_detuning) / fwhm;
    // Half the power exponent gives the amplitude transfer.
    return std::exp(-0.5 * std::log(2.0) * std::pow(x * x, static_cast<double>(shape_order)));
}

void BandpassFilter::validate() const
{
    require(fwhm > 0, "filter fwhm > 0");
    require(shape_order >= 1, "filter shape_order >= 1");
    require(std::isfinite(center_detuning), "filter center finite");
}

ComplexFieldTrace field_from_pulse(PulseWindow const& pulse)
{
    ComplexFieldTrace f;
    f.dt = pulse.dt;
    f.times = pulse.times;
    f.amplitude.resize(pulse.size());
    for (std::size_t i = 0; i < pulse.size(); ++i)
        f.amplitude[i] = std::polar(std::sqrt(pulse.power[i]), pulse.phase[i]);
    return f;
}

double field_energy(ComplexFieldTrace const& field)
{
    double sum = 0;
    for (auto const& a : field.amplitude)
        sum += std::norm(a);
    return sum * field.dt;
}

Spectrum power_spectrum(ComplexFieldTrace const& field, std::size_t pad_factor)
{
    check_uniform(field);
    std::size_t const m = padded_length(field.size(), pad_factor);
    std::vector<double> const power = padded_power(field, m);

    // Odd m: bins -(m-1)/2 .. (m-1)/2 are symmetric about zero detuning.
    std::size_t const half = (m - 1) / 2;
    Spectrum s;
    s.detunings.resize(m);
    s.density.resize(m);
    double total = 0;
    for (std::size_t i = 0; i < m; ++i)
    {
        std::size_t const k = i < half ? m - half + i : i - half;
        s.detunings[i] = bin_frequency(k, m, field.dt);
        s.density[i] = power[k];
        total += power[k];
    }
    require(total > 0, "field has nonzero energy");
    for (double& d : s.density)
        d /= total;
    return s;
}

double spectral_energy(ComplexFieldTrace const& field, std::size_t pad_factor)
{
    check_uniform(field);
    std::size_t const m = padded_length(field.size(), pad_factor);
    std::vector<double> const power = padded_power(field, m);
    double sum = 0;
    for (double p : power)
        sum += p;
    return sum * field.dt / static_cast<double>(m);
}

double spectral_centroid(Spectrum const& spectrum) { return moment(spectrum, 0.0, 1); }

double spectral_rms_width(Spectrum const& spectrum)
{
    return std::sqrt(moment(spectrum, spectral_centroid(spectrum), 2));
}

double spectral_skewness(Spectrum const& spectrum)
{
    double const c = spectral_centroid(spectrum);
    double const var = moment(spectrum, c, 2);
    return moment(spectrum, c, 3) / std::pow(var, 1.5);
}

ComplexFieldTrace apply_filter(ComplexFieldTrace const& field, BandpassFilter const& filter)
{
    check_uniform(field);
    filter.validate();
    std::size_t const n = field.size();

    FftwTransform forward(n, FFTW_FORWARD);
    FftwTransform backward(n, FFTW_BACKWARD);
    std::copy(field.amplitude.begin(), field.amplitude.end(), forward.data());
    forward.execute();
    for (std::size_t k = 0; k < n; ++k)
    {
        double const h = filter.amplitude_transfer(bin_frequency(k, n, field.dt));
        backward.data()[k] = forward.data()[k] * (h / static_cast<double>(n));
    }
    backward.execute();

    ComplexFieldTrace out;
    out.dt = field.dt;
    out.times = field.times;
    out.amplitude.assign(backward.data(), backward.data() + n);
    return out;
}

PulseWindow filtered_pulse(ComplexFieldTrace const& field)
{
    std::size_t const n = field.size();
    PulseWindow p;
    p.dt = field.dt;
    p.times = field.times;
    p.power.resize(n);
    p.phase.resize(n);

    double peak = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        p.power[i] = std::norm(field.amplitude[i]);
        peak = std::max(peak, p.power[i]);
    }
    double const floor = 1e-9 * peak;

    bool have_valid = false;
    double last_arg = 0, last_phase = 0;
    std::size_t leading = 0;  // samples before the first valid phase
    for (std::size_t i = 0; i < n; ++i)
    {
        if (p.power[i] > floor)
        {
            double const arg = std::arg(field.amplitude[i]);
            if (!have_valid)
            {
                last_phase = arg;
                have_valid = true;
                for (std::size_t j = 0; j < leading; ++j)
                    p.phase[j] = arg;
            }
            else
            {
                last_phase += std::remainder(arg - last_arg, constants::two_pi);
            }
            last_arg = arg;
            p.phase[i] = last_phase;
        }
        else if (have_valid)
        {
            p.phase[i] = last_phase;
        }
        else
        {
            ++leading;
        }
    }
    return p;
}

}  // namespace lpi
