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

#include "icw/synthesis.hpp"

#include "icw/pathloss.hpp"
#include "icw/pdp_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace icw
{

namespace
{

constexpr double kTailShare = 0.75; // rendered MPCs occupy at most this share of the trace
constexpr double kGridSlack = 1e-9;

// Grid-step bounds for spacings strictly above `lower` and at most `upper`.
std::int64_t first_step_above(double lower, double spacing)
{
    return static_cast<std::int64_t>(std::floor(lower / spacing + kGridSlack)) + 1;
}

std::int64_t last_step_within(double upper, double spacing)
{
    return static_cast<std::int64_t>(std::floor(upper / spacing + kGridSlack));
}

ClusterCountSampler cluster_law_for(double mu_nc)
{
    if (mu_nc == 1.0)
        return ClusterCountSampler::single_cluster();
    return ClusterCountSampler{mu_nc};
}

} // namespace

// --- CalibratedDecay ---

void CalibratedDecay::validate() const
{
    if (!(cluster_decay_ns > 0.0) || !(intra_decay_ns > 0.0))
        throw DomainError("decay constants must be positive");
    if (!(void_mean_ns > 0.0) || !std::isfinite(void_mean_ns))
        throw DomainError("mean void must be positive and finite");
}

CalibratedDecay CalibratedDecay::scaled(double factor) const
{
    return {cluster_decay_ns * factor, intra_decay_ns * factor, void_mean_ns * factor};
}

CalibratedDecay CalibratedDecay::base_for_target(double target_mu_ds_ns)
{
    const double t = std::max(target_mu_ds_ns, 0.1);
    return {t, 2.0 * t, t};
}

// --- SynthesisConfig ---

double SynthesisConfig::effective_resolution_ns() const noexcept
{
    return resolution_ns > 0.0 ? resolution_ns : band_resolution_ns(band);
}

double SynthesisConfig::sample_spacing_ns() const noexcept
{
    return effective_resolution_ns() / static_cast<double>(oversampling);
}

void SynthesisConfig::validate() const
{
    if (!has_condition(mode, condition))
        throw DomainError("NLOS_Best is only defined for directional antennas");
    if (!(mti_ns > 0.0))
        throw DomainError("MTI must be positive");
    if (resolution_ns < 0.0 || !std::isfinite(resolution_ns))
        throw DomainError("resolution must be positive (or 0 for the band default)");
    if (oversampling < 1)
        throw DomainError("oversampling must be at least 1");
    const double spacing = sample_spacing_ns();
    if (last_step_within(mti_ns, spacing) < first_step_above(effective_resolution_ns(), spacing))
        throw DomainError("no intra-cluster spacing fits in (resolution, MTI]; raise the MTI or the oversampling");
    if (!(snr_margin_db > 0.0))
        throw DomainError("SNR margin must be positive");
    if (!(noise_ripple_db >= 0.0))
        throw DomainError("noise ripple must be non-negative");
    decay.validate();
}

// --- DropTruth ---

ChannelStats DropTruth::stats() const
{
    return {rms_ds_ns, num_clusters(), mpcs_per_cluster};
}

double DistanceRange::sample(Rng& rng) const
{
    if (!(min_m >= 1.0) || !(max_m >= min_m))
        throw DomainError("distance range must satisfy 1 <= min <= max");
    if (max_m == min_m)
        return min_m;
    return std::exp(uniform(rng, std::log(min_m), std::log(max_m)));
}

// --- Generator ---

ChannelGenerator::ChannelGenerator(SynthesisConfig config)
    : ChannelGenerator(config, lookup_channel_targets(config.band, config.condition, config.mode),
                       lookup_ci(config.band, config.condition, config.mode))
{
}

ChannelGenerator::ChannelGenerator(SynthesisConfig config, const ChannelTargets& targets, const CIParams& path_loss)
    : config_(config), targets_(targets), ci_(path_loss), clusters_(cluster_law_for(targets.mu_nc)),
      mpcs_(targets.mu_mpc, targets.sigma_mpc)
{
    config_.validate();
    ci_.validate();
}

void ChannelGenerator::set_decay(const CalibratedDecay& decay)
{
    decay.validate();
    config_.decay = decay;
}

DropTruth ChannelGenerator::sample_structure(Rng& rng) const
{
    const double spacing = config_.sample_spacing_ns();
    const std::int64_t step_lo = first_step_above(config_.effective_resolution_ns(), spacing);
    const std::int64_t step_hi = last_step_within(config_.mti_ns, spacing);
    const std::int64_t min_void = first_step_above(config_.mti_ns, spacing);

    DropTruth truth;
    const int n_clusters = clusters_(rng);
    truth.mpcs_per_cluster.reserve(static_cast<std::size_t>(n_clusters));

    std::int64_t index = 0;
    for (int c = 0; c < n_clusters; ++c)
    {
        if (c > 0)
        {
            const double gap_ns = config_.mti_ns + exponential(rng, config_.decay.void_mean_ns);
            index += std::max(min_void, static_cast<std::int64_t>(std::ceil(gap_ns / spacing - kGridSlack)));
        }
        const int n_mpcs = mpcs_(rng);
        truth.mpcs_per_cluster.push_back(n_mpcs);
        for (int m = 0; m < n_mpcs; ++m)
        {
            if (m > 0)
                index += uniform_int(rng, step_lo, step_hi);
            truth.mpcs.push_back({static_cast<double>(index) * spacing, 0.0});
        }
    }
    return truth;
}

DropTruth ChannelGenerator::sample_truth(Rng& rng, double total_power_dbm) const
{
    DropTruth truth = sample_structure(rng);
    assign_powers(truth, config_.decay, total_power_dbm);
    return truth;
}

Drop ChannelGenerator::generate_drop(Rng& rng, double d3d_m) const
{
    if (!(d3d_m >= 1.0))
        throw DomainError("drop distance must be at least the 1 m reference");

    DropTruth truth = sample_structure(rng);
    truth.d3d_m = d3d_m;
    truth.shadow_db = ci_.sigma_db * standard_normal(rng);
    truth.path_loss_db = ci_path_loss(ci_, band_frequency(config_.band), d3d_m, truth.shadow_db);
    assign_powers(truth, config_.decay, config_.tx_power_dbm - truth.path_loss_db);

    double weakest = std::numeric_limits<double>::infinity();
    for (const auto& m : truth.mpcs)
        weakest = std::min(weakest, m.power_dbm);

    PowerDelayProfile pdp = render_pdp(truth.mpcs, config_.effective_resolution_ns(), config_.sample_spacing_ns(),
                                       weakest - config_.snr_margin_db, config_.noise_ripple_db, rng);
    const double pl = truth.path_loss_db;
    return {std::move(pdp), std::move(truth), pl};
}

Drop ChannelGenerator::generate_drop(std::uint64_t index, const DistanceRange& distances) const
{
    Rng rng = substream(config_.seed, index);
    const double d = distances.sample(rng);
    return generate_drop(rng, d);
}

// --- Free functions ---

DropTruth sample_structure(Rng& rng, const SynthesisConfig& config)
{
    return ChannelGenerator{config}.sample_structure(rng);
}

void assign_powers(DropTruth& truth, const CalibratedDecay& decay, double total_power_dbm)
{
    decay.validate();
    if (truth.mpcs.empty())
        return;

    // Relative powers in dB keep very fast decays from underflowing.
    constexpr double db_per_neper = 4.342944819032518;
    std::vector<double> rel_db;
    rel_db.reserve(truth.mpcs.size());
    std::size_t k = 0;
    for (int count : truth.mpcs_per_cluster)
    {
        const double cluster_start = truth.mpcs[k].delay_ns;
        for (int j = 0; j < count; ++j, ++k)
        {
            const double offset = truth.mpcs[k].delay_ns - cluster_start;
            rel_db.push_back(-db_per_neper * (cluster_start / decay.cluster_decay_ns + offset / decay.intra_decay_ns));
        }
    }
    if (k != truth.mpcs.size())
        throw DomainError("cluster sizes do not add up to the MPC count");

    const double peak = *std::max_element(rel_db.begin(), rel_db.end());
    double total = 0.0;
    for (double r : rel_db)
        total += db_to_linear(r - peak);
    const double offset = total_power_dbm - peak - linear_to_db(total);
    for (std::size_t i = 0; i < rel_db.size(); ++i)
        truth.mpcs[i].power_dbm = rel_db[i] + offset;

    truth.rms_ds_ns = rms_delay_spread(truth.mpcs);
}

Drop generate_drop(Rng& rng, const SynthesisConfig& config, double d3d_m)
{
    return ChannelGenerator{config}.generate_drop(rng, d3d_m);
}

PowerDelayProfile render_pdp(std::span<const MultipathComponent> mpcs, double resolution_ns, double spacing_ns,
                             double noise_floor_dbm, double noise_ripple_db, Rng& rng)
{
    std::size_t last = 0;
    for (const auto& m : mpcs)
        last = std::max(last, static_cast<std::size_t>(std::llround(m.delay_ns / spacing_ns)));
    const auto occupied = static_cast<double>(last + 1);
    const std::size_t n = std::max(last + 9, static_cast<std::size_t>(std::ceil(occupied / kTailShare)));

    std::vector<double> power(n);
    for (double& p : power)
        p = noise_floor_dbm + uniform(rng, -noise_ripple_db, noise_ripple_db);
    for (const auto& m : mpcs)
        power[static_cast<std::size_t>(std::llround(m.delay_ns / spacing_ns))] = m.power_dbm;
    return {resolution_ns, 0.0, spacing_ns, std::move(power)};
}

} // namespace icw
