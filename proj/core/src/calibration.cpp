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
#include "icw/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace icw
{

double mean_delay_spread(const ChannelGenerator& generator, std::size_t drops, std::uint64_t seed, unsigned threads)
{
    if (drops == 0)
        throw DomainError("calibration needs at least one drop per probe");

    std::vector<double> ds(drops);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            Rng rng = substream(seed, i);
            ds[i] = generator.sample_truth(rng).rms_ds_ns;
        }
    };

    threads = std::clamp(threads, 1u, 64u);
    if (threads == 1)
        work(0, drops);
    else
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (drops + threads - 1) / threads;
        for (std::size_t begin = 0; begin < drops; begin += chunk)
            pool.emplace_back(work, begin, std::min(drops, begin + chunk));
    }

    // Summary-grade reduction: independent of how drops were split.
    std::vector<ChannelStats> stats;
    stats.reserve(drops);
    for (double v : ds)
        stats.push_back({v, 1, {}});
    return ensemble_summary(stats).rms_ds_ns.mean;
}

CalibrationResult calibrate_decay(const ChannelGenerator& generator, double target_mu_ds_ns,
                                  const CalibrationOptions& options)
{
    if (!(target_mu_ds_ns > 0.0))
        throw CalibrationError("calibration target must be a positive mean delay spread");
    if (!(options.min_multiplier > 0.0 && options.max_multiplier > options.min_multiplier))
        throw CalibrationError("invalid multiplier bracket");

    ChannelGenerator probe = generator;
    const CalibratedDecay base = CalibratedDecay::base_for_target(target_mu_ds_ns);

    CalibrationResult result;
    result.band = generator.config().band;
    result.condition = generator.config().condition;
    result.mode = generator.config().mode;
    result.target_mu_ds_ns = target_mu_ds_ns;
    result.drops = options.drops;
    result.seed = options.seed;

    auto evaluate = [&](double multiplier) {
        probe.set_decay(base.scaled(multiplier));
        ++result.iterations;
        return mean_delay_spread(probe, options.drops, options.seed, options.threads);
    };
    auto accept = [&](double multiplier, double achieved) {
        result.multiplier = multiplier;
        result.decay = base.scaled(multiplier);
        result.achieved_mu_ds_ns = achieved;
        return result;
    };
    auto close_enough = [&](double achieved) {
        return std::abs(achieved - target_mu_ds_ns) <= options.tolerance * target_mu_ds_ns;
    };

    double lo = options.min_multiplier;
    double hi = options.max_multiplier;
    const double at_lo = evaluate(lo);
    const double at_hi = evaluate(hi);
    if (close_enough(at_lo))
        return accept(lo, at_lo);
    if (close_enough(at_hi))
        return accept(hi, at_hi);
    if (at_lo > target_mu_ds_ns || at_hi < target_mu_ds_ns)
    {
        std::ostringstream msg;
        msg << "target mean RMS DS " << target_mu_ds_ns << " ns is outside the reachable range ["
            << at_lo << ", " << at_hi << "] ns for multipliers [" << lo << ", " << hi << "] ("
            << to_string(result.band) << " GHz " << to_string(result.condition) << " " << to_string(result.mode)
            << ", " << options.drops << " drops)";
        throw CalibrationError(msg.str());
    }

    for (int it = 0; it < options.max_iterations; ++it)
    {
        const double mid = std::sqrt(lo * hi);
        const double achieved = evaluate(mid);
        if (close_enough(achieved))
            return accept(mid, achieved);
        (achieved < target_mu_ds_ns ? lo : hi) = mid;
    }

    std::ostringstream msg;
    msg << "calibration did not converge within " << options.max_iterations << " bisection steps (bracket ["
        << lo << ", " << hi << "], target " << target_mu_ds_ns << " ns)";
    throw CalibrationError(msg.str());
}

CalibrationResult calibrate_decay(Band band, LinkCondition condition, AntennaMode mode,
                                  const CalibrationOptions& options)
{
    SynthesisConfig config;
    config.band = band;
    config.condition = condition;
    config.mode = mode;
    config.seed = options.seed;
    const ChannelGenerator generator{config};
    return calibrate_decay(generator, generator.targets().mu_ds_ns, options);
}

} // namespace icw
