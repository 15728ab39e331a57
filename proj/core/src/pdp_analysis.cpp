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

#include "icw/pdp_analysis.hpp"

#include "icw/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

namespace icw
{

namespace
{

// Neumaier-compensated sum over an already sorted sequence, so reductions
// are identical for any permutation of the inputs.
double stable_sum(const std::vector<double>& sorted)
{
    double sum = 0.0;
    double comp = 0.0;
    for (double x : sorted)
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

struct Moments
{
    double mean;
    double stddev;
};

Moments moments(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    const double mean = stable_sum(values) / n;
    std::vector<double> sq;
    sq.reserve(values.size());
    for (double v : values)
        sq.push_back((v - mean) * (v - mean));
    std::sort(sq.begin(), sq.end());
    return {mean, std::sqrt(stable_sum(sq) / n)};
}

double interpolated_percentile(const std::vector<double>& sorted, double q)
{
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Distribution describe(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    const Moments m = moments(values);
    return {values.front(), values.back(), m.mean, m.stddev, interpolated_percentile(values, 0.9)};
}

bool same_spacing(double a, double b)
{
    return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

} // namespace

double estimate_noise_floor(const PowerDelayProfile& pdp, double tail_fraction)
{
    if (pdp.empty())
        throw DomainError("cannot estimate the noise floor of an empty PDP");
    if (!(tail_fraction > 0.0 && tail_fraction <= 0.5))
        throw DomainError("tail fraction must lie in (0, 0.5]");

    const std::size_t n = pdp.size();
    const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(tail_fraction * static_cast<double>(n))));
    double acc = 0.0;
    for (std::size_t i = n - tail; i < n; ++i)
        acc += db_to_linear(pdp.power_dbm(i));
    return linear_to_db(acc / static_cast<double>(tail));
}

std::vector<MultipathComponent> detect_mpcs_with_floor(const PowerDelayProfile& pdp, double noise_floor_dbm, double threshold_db)
{
    if (!(threshold_db > 0.0))
        throw DomainError("detection threshold must be positive");

    const double level = noise_floor_dbm + threshold_db;
    const auto p = pdp.powers_dbm();
    const std::size_t n = p.size();

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (p[i] < level)
            continue;
        const bool above_left = i == 0 || p[i] > p[i - 1];
        const bool not_below_right = i + 1 == n || p[i] >= p[i + 1];
        if (above_left && not_below_right)
            candidates.push_back(i);
    }

    // Strongest first; ties go to the earlier arrival.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });

    const double min_gap = pdp.resolution_ns() * (1.0 + 1e-9);
    std::map<double, double> kept; // delay -> power
    for (std::size_t i : candidates)
    {
        const double t = pdp.delay_ns(i);
        auto next = kept.lower_bound(t);
        if (next != kept.end() && next->first - t <= min_gap)
            continue;
        if (next != kept.begin() && t - std::prev(next)->first <= min_gap)
            continue;
        kept.emplace(t, p[i]);
    }

    std::vector<MultipathComponent> out;
    out.reserve(kept.size());
    for (const auto& [t, pw] : kept)
        out.push_back({t, pw});
    return out;
}

std::vector<MultipathComponent> detect_mpcs(const PowerDelayProfile& pdp, double threshold_db)
{
    if (pdp.empty())
        return {};
    const double floor = pdp.noise_floor_dbm().value_or(estimate_noise_floor(pdp));
    return detect_mpcs_with_floor(pdp, floor, threshold_db);
}

double rms_delay_spread(std::span<const MultipathComponent> mpcs)
{
    if (mpcs.empty())
        throw DomainError("RMS delay spread needs at least one MPC");

    double peak = -std::numeric_limits<double>::infinity();
    for (const auto& m : mpcs)
        peak = std::max(peak, m.power_dbm);

    double sum_p = 0.0;
    double sum_pt = 0.0;
    for (const auto& m : mpcs)
    {
        const double w = db_to_linear(m.power_dbm - peak);
        sum_p += w;
        sum_pt += w * m.delay_ns;
    }
    const double mean_delay = sum_pt / sum_p;

    double sum_var = 0.0;
    for (const auto& m : mpcs)
    {
        const double dt = m.delay_ns - mean_delay;
        sum_var += db_to_linear(m.power_dbm - peak) * dt * dt;
    }
    return std::sqrt(sum_var / sum_p);
}

std::vector<TimeCluster> partition_clusters(std::span<const MultipathComponent> mpcs, double mti_ns)
{
    if (!(mti_ns > 0.0))
        throw DomainError("MTI must be positive");

    std::vector<TimeCluster> clusters;
    for (std::size_t i = 0; i < mpcs.size(); ++i)
    {
        if (i > 0 && mpcs[i].delay_ns < mpcs[i - 1].delay_ns)
            throw DomainError("MPCs must be sorted by delay before clustering");
        if (i == 0 || mpcs[i].delay_ns - mpcs[i - 1].delay_ns > mti_ns)
            clusters.emplace_back();
        clusters.back().mpcs.push_back(mpcs[i]);
    }
    return clusters;
}

std::optional<ChannelStats> summarize_mpcs(std::span<const MultipathComponent> mpcs, double mti_ns)
{
    if (mpcs.empty())
        return std::nullopt;

    ChannelStats stats;
    stats.rms_ds_ns = rms_delay_spread(mpcs);
    for (const auto& c : partition_clusters(mpcs, mti_ns))
        stats.mpcs_per_cluster.push_back(static_cast<int>(c.mpcs.size()));
    stats.num_clusters = static_cast<int>(stats.mpcs_per_cluster.size());
    return stats;
}

std::optional<ChannelStats> channel_stats(const PowerDelayProfile& pdp, double mti_ns, double threshold_db)
{
    const auto mpcs = detect_mpcs(pdp, threshold_db);
    return summarize_mpcs(mpcs, mti_ns);
}

PowerDelayProfile synthesize_omni(std::span<const DirectionalPdp> captures, DelayAlignment alignment)
{
    if (captures.empty())
        throw DomainError("omni synthesis needs at least one directional PDP");

    const double resolution = captures.front().pdp.resolution_ns();
    const double spacing = captures.front().pdp.sample_spacing_ns();
    for (const auto& c : captures)
    {
        if (!same_spacing(c.pdp.resolution_ns(), resolution))
            throw DomainError("directional PDPs have mismatched resolutions (" + std::to_string(resolution) +
                              " vs " + std::to_string(c.pdp.resolution_ns()) + " ns)");
        if (!same_spacing(c.pdp.sample_spacing_ns(), spacing))
            throw DomainError("directional PDPs have mismatched sample spacings");
    }

    std::vector<const DirectionalPdp*> unique;
    std::vector<std::pair<double, double>> seen;
    for (const auto& c : captures)
    {
        const std::pair<double, double> dir{std::fmod(std::fmod(c.azimuth_deg, 360.0) + 360.0, 360.0), c.elevation_deg};
        if (std::find(seen.begin(), seen.end(), dir) != seen.end())
            continue;
        seen.push_back(dir);
        if (!c.pdp.empty())
            unique.push_back(&c);
    }
    if (unique.empty())
        return {resolution, 0.0, spacing, {}};

    // Bin index of every sample after alignment.
    std::map<long long, double> bins;
    double fill = std::numeric_limits<double>::infinity();
    for (const DirectionalPdp* c : unique)
    {
        const auto& pdp = c->pdp;
        double shift = 0.0;
        if (alignment == DelayAlignment::FirstArrival)
        {
            const auto mpcs = detect_mpcs(pdp);
            shift = -(mpcs.empty() ? pdp.delay_ns(0) : mpcs.front().delay_ns);
        }
        const double gains = c->tx_gain_dbi + c->rx_gain_dbi;
        for (std::size_t i = 0; i < pdp.size(); ++i)
        {
            const auto bin = static_cast<long long>(std::llround((pdp.delay_ns(i) + shift) / spacing));
            const double stripped = pdp.power_dbm(i) - gains;
            bins[bin] += db_to_linear(stripped);
            fill = std::min(fill, stripped);
        }
    }

    const long long first = bins.begin()->first;
    const long long last = bins.rbegin()->first;
    std::vector<double> out(static_cast<std::size_t>(last - first + 1), fill);
    for (const auto& [bin, lin] : bins)
        out[static_cast<std::size_t>(bin - first)] = linear_to_db(lin);
    return {resolution, static_cast<double>(first) * spacing, spacing, std::move(out)};
}

double percentile(std::vector<double> values, double q)
{
    if (values.empty())
        throw DomainError("percentile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0))
        throw DomainError("percentile rank must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    return interpolated_percentile(values, q);
}

EnsembleSummary ensemble_summary(std::span<const ChannelStats> stats)
{
    if (stats.empty())
        throw DomainError("ensemble summary needs at least one channel");

    std::vector<double> ds;
    std::vector<double> nc;
    std::vector<double> mpc;
    ds.reserve(stats.size());
    nc.reserve(stats.size());
    for (const auto& s : stats)
    {
        ds.push_back(s.rms_ds_ns);
        nc.push_back(static_cast<double>(s.num_clusters));
        for (int m : s.mpcs_per_cluster)
            mpc.push_back(static_cast<double>(m));
    }

    EnsembleSummary out;
    out.count = stats.size();
    out.rms_ds_ns = describe(std::move(ds));
    out.num_clusters = describe(std::move(nc));
    if (!mpc.empty())
        out.mpcs_per_cluster = describe(std::move(mpc));
    return out;
}

} // namespace icw
