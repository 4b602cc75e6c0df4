// SPDX-License-Identifier: Apache-2.0
//
// plcgen - statistical powerline communication channel generator
// Copyright (C) 2026 The plcgen authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PLCGEN_IMPULSE_RESPONSE_HPP
#define PLCGEN_IMPULSE_RESPONSE_HPP

#include "channel_synthesis.hpp"
#include "errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <new>
#include <type_traits>
#include <vector>

// Real impulse response from a one-sided frequency response.
//
// A response sampled on N uniform bins 0, df, ..., (N-1) df is extended with
// its Hermitian mirror to M = 2N - 1 bins and inverse transformed. M is odd,
// so there is no Nyquist bin that would have to be forced real, and the
// forward transform of the result reproduces all N input bins. The time step
// is dt = 1 / (M df).

namespace plcgen
{

struct ImpulseOptions
{
    // Allow non-uniform grids by linear interpolation onto a uniform grid.
    bool resample = false;
    // Relative tolerance on bin spacing when testing for uniformity.
    double uniform_tolerance = 1e-9;
};

struct ImpulseResponse
{
    double dt_s = 0.0;
    double df_hz = 0.0;
    std::size_t bins = 0;     // one-sided bin count N, including zero-filled low bins
    std::size_t first_bin = 0; // index of the first input grid point within the N bins
    std::vector<double> samples;
};

namespace detail
{
struct FftwFree
{
    void operator()(void *p) const { fftw_free(p); }
};
struct FftwPlanDestroy
{
    void operator()(fftw_plan p) const { fftw_destroy_plan(p); }
};
using FftwPlan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, FftwPlanDestroy>;

template <class T> std::unique_ptr<T[], FftwFree> fftw_buffer(std::size_t n)
{
    auto *p = static_cast<T *>(fftw_malloc(sizeof(T) * n));
    if (!p)
        throw std::bad_alloc();
    return std::unique_ptr<T[], FftwFree>(p);
}

// The FFTW planner is not reentrant.
inline std::mutex &fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

struct UniformSpectrum
{
    double df = 0.0;
    std::size_t first_bin = 0;
    std::vector<std::complex<double>> bins; // starting at f = 0
};

inline UniformSpectrum to_uniform_spectrum(const FrequencyResponse &fr, const ImpulseOptions &opt)
{
    const auto &f = fr.freq_grid_hz;
    if (f.size() != fr.h.size())
        throw grid_error("frequency grid and response have different lengths");
    if (f.size() < 2)
        throw grid_error("impulse response needs at least 2 frequency points");
    require_ascending_grid(f);

    const double df = (f.back() - f.front()) / static_cast<double>(f.size() - 1);
    bool uniform = true;
    for (std::size_t n = 1; n < f.size() && uniform; ++n)
        uniform = std::abs((f[n] - f[n - 1]) - df) <= opt.uniform_tolerance * df;

    // Uniform grid not starting at 0: zero-fill the bins below f_min when
    // f_min sits on the same lattice.
    if (uniform)
    {
        const double offset = f.front() / df;
        const double lattice = std::round(offset);
        if (std::abs(offset - lattice) <= opt.uniform_tolerance * std::max(1.0, lattice))
        {
            UniformSpectrum s;
            s.df = df;
            s.first_bin = static_cast<std::size_t>(lattice);
            s.bins.assign(s.first_bin, {0.0, 0.0});
            s.bins.insert(s.bins.end(), fr.h.begin(), fr.h.end());
            return s;
        }
    }
    if (!opt.resample)
        throw grid_error("impulse response needs a uniform grid on the lattice n * df (enable resampling otherwise)");

    // Linear interpolation onto 0, df', ..., f_max with the same point count;
    // zero below the first input frequency.
    UniformSpectrum s;
    const std::size_t n_out = f.size();
    s.df = f.back() / static_cast<double>(n_out - 1);
    s.first_bin = 0;
    s.bins.resize(n_out);
    std::size_t seg = 0;
    for (std::size_t n = 0; n < n_out; ++n)
    {
        const double x = n + 1 == n_out ? f.back() : s.df * static_cast<double>(n);
        if (x < f.front())
        {
            s.bins[n] = {0.0, 0.0};
            continue;
        }
        while (seg + 2 < f.size() && x > f[seg + 1])
            ++seg;
        const double w = (x - f[seg]) / (f[seg + 1] - f[seg]);
        s.bins[n] = (1.0 - w) * fr.h[seg] + w * fr.h[seg + 1];
    }
    return s;
}
} // namespace detail

inline ImpulseResponse impulse_response(const FrequencyResponse &fr, const ImpulseOptions &opt = {})
{
    auto spectrum = detail::to_uniform_spectrum(fr, opt);
    const std::size_t n_bins = spectrum.bins.size();
    const std::size_t m = 2 * n_bins - 1;

    auto in = detail::fftw_buffer<fftw_complex>(n_bins);
    auto out = detail::fftw_buffer<double>(m);
    detail::FftwPlan plan;
    {
        std::lock_guard lock(detail::fftw_planner_mutex());
        plan.reset(fftw_plan_dft_c2r_1d(static_cast<int>(m), in.get(), out.get(), FFTW_ESTIMATE));
    }
    if (!plan)
        throw error("FFTW planning failed");

    for (std::size_t n = 0; n < n_bins; ++n)
    {
        in[n][0] = spectrum.bins[n].real();
        in[n][1] = n == 0 ? 0.0 : spectrum.bins[n].imag(); // DC of a real signal is real
    }
    fftw_execute(plan.get());

    ImpulseResponse ir;
    ir.df_hz = spectrum.df;
    ir.dt_s = 1.0 / (static_cast<double>(m) * spectrum.df);
    ir.bins = n_bins;
    ir.first_bin = spectrum.first_bin;
    ir.samples.resize(m);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t n = 0; n < m; ++n)
        ir.samples[n] = out[n] * scale;
    return ir;
}

// Forward transform back to the N one-sided bins (f = 0, df, ...).
inline std::vector<std::complex<double>> forward_spectrum(const ImpulseResponse &ir)
{
    const std::size_t m = ir.samples.size();
    if (m == 0 || m % 2 == 0)
        throw grid_error("impulse response length must be odd and non-zero");
    const std::size_t n_bins = m / 2 + 1;

    auto in = detail::fftw_buffer<double>(m);
    auto out = detail::fftw_buffer<fftw_complex>(n_bins);
    detail::FftwPlan plan;
    {
        std::lock_guard lock(detail::fftw_planner_mutex());
        plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(m), in.get(), out.get(), FFTW_ESTIMATE));
    }
    if (!plan)
        throw error("FFTW planning failed");
    std::copy(ir.samples.begin(), ir.samples.end(), in.get());
    fftw_execute(plan.get());

    std::vector<std::complex<double>> h(n_bins);
    for (std::size_t n = 0; n < n_bins; ++n)
        h[n] = {out[n][0], out[n][1]};
    return h;
}

} // namespace plcgen

#endif
