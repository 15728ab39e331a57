// SPDX-License-Identifier: Apache-2.0
//
// icw - indoor mmWave / sub-THz channel workbench
// Copyright (C) 2026 The icw authors
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

#include "icw/pdp.hpp"

#include "icw/types.hpp"

#include <limits>
#include <string>

namespace icw
{

PowerDelayProfile::PowerDelayProfile(double resolution_ns, double start_delay_ns, double sample_spacing_ns,
                                     std::vector<double> power_dbm)
    : resolution_ns_(resolution_ns), start_ns_(start_delay_ns), spacing_ns_(sample_spacing_ns),
      power_dbm_(std::move(power_dbm))
{
    if (!(resolution_ns > 0.0) || !std::isfinite(resolution_ns))
        throw DomainError("PDP resolution must be positive");
    if (!(sample_spacing_ns > 0.0) || !std::isfinite(sample_spacing_ns))
        throw DomainError("PDP sample spacing must be positive");
    if (sample_spacing_ns > resolution_ns * (1.0 + 1e-9))
        throw DomainError("PDP sample spacing " + std::to_string(sample_spacing_ns) +
                          " ns is coarser than its resolution " + std::to_string(resolution_ns) + " ns");
    if (!std::isfinite(start_delay_ns))
        throw DomainError("PDP start delay must be finite");
    for (double p : power_dbm_)
        if (!std::isfinite(p))
            throw DomainError("PDP powers must be finite dBm values");
}

PowerDelayProfile::PowerDelayProfile(double resolution_ns, double start_delay_ns, std::vector<double> power_dbm)
    : PowerDelayProfile(resolution_ns, start_delay_ns, resolution_ns, std::move(power_dbm))
{
}

namespace
{

// The spacing within a few ulps of `estimate` that regenerates every delay
// bit for bit, so a written trace reads back as the same grid. Falls back to
// the estimate for delays that no binary spacing reproduces (e.g. 0.1 ns steps).
double exact_spacing(std::span<const PdpSample> samples, double estimate)
{
    const double t0 = samples.front().delay_ns;
    auto reproduces = [&](double spacing) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (t0 + static_cast<double>(i) * spacing != samples[i].delay_ns)
                return false;
        return true;
    };
    double down = estimate;
    double up = estimate;
    for (int ulp = 0; ulp <= 8; ++ulp)
    {
        if (reproduces(down))
            return down;
        if (reproduces(up))
            return up;
        down = std::nextafter(down, 0.0);
        up = std::nextafter(up, std::numeric_limits<double>::infinity());
    }
    return estimate;
}

} // namespace

PowerDelayProfile PowerDelayProfile::from_samples(double resolution_ns, std::span<const PdpSample> samples)
{
    std::vector<double> powers;
    powers.reserve(samples.size());
    for (const auto& s : samples)
        powers.push_back(s.power_dbm);

    if (samples.size() < 2)
        return {resolution_ns, samples.empty() ? 0.0 : samples.front().delay_ns, resolution_ns, std::move(powers)};

    const double t0 = samples.front().delay_ns;
    const double spacing = (samples.back().delay_ns - t0) / static_cast<double>(samples.size() - 1);
    if (!(spacing > 0.0))
        throw DomainError("PDP delays must be strictly increasing");
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double expected = t0 + static_cast<double>(i) * spacing;
        if (std::abs(samples[i].delay_ns - expected) > 1e-6 * spacing)
            throw DomainError("PDP delays are not uniformly spaced near " + std::to_string(samples[i].delay_ns) + " ns");
    }
    return {resolution_ns, t0, exact_spacing(samples, spacing), std::move(powers)};
}

std::vector<PdpSample> PowerDelayProfile::samples() const
{
    std::vector<PdpSample> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back({delay_ns(i), power_dbm_[i]});
    return out;
}

void PowerDelayProfile::set_noise_floor_dbm(double floor_dbm)
{
    if (!std::isfinite(floor_dbm))
        throw DomainError("noise floor must be finite");
    noise_floor_dbm_ = floor_dbm;
}

int ChannelStats::total_mpcs() const noexcept
{
    int total = 0;
    for (int n : mpcs_per_cluster)
        total += n;
    return total;
}

} // namespace icw
