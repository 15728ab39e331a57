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

#include "icw/fitting.hpp"
#include "icw/pdp_analysis.hpp"
#include "icw/random.hpp"
#include "icw/synthesis.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace icw;

namespace
{

ChannelGenerator nlos_generator(Band band)
{
    SynthesisConfig config;
    config.band = band;
    config.condition = LinkCondition::Nlos;
    config.mode = AntennaMode::Omnidirectional;
    config.decay = CalibratedDecay::base_for_target(lookup_channel_targets(band, config.condition, config.mode).mu_ds_ns);
    return ChannelGenerator(config);
}

std::vector<PowerDelayProfile> sample_pdps(std::size_t count)
{
    const ChannelGenerator gen = nlos_generator(Band::GHz28);
    std::vector<PowerDelayProfile> pdps;
    for (std::size_t i = 0; i < count; ++i)
        pdps.push_back(gen.generate_drop(i, DistanceRange{}).pdp);
    return pdps;
}

void BM_GenerateDrop(benchmark::State& state)
{
    const ChannelGenerator gen = nlos_generator(static_cast<Band>(state.range(0)));
    std::uint64_t index = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(gen.generate_drop(index++, DistanceRange{}));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GenerateDrop)->Arg(0)->Arg(1)->Arg(2);

void BM_DetectMpcs(benchmark::State& state)
{
    const auto pdps = sample_pdps(64);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_mpcs(pdps[i++ % pdps.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DetectMpcs);

void BM_ChannelStats(benchmark::State& state)
{
    const auto pdps = sample_pdps(64);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(channel_stats(pdps[i++ % pdps.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ChannelStats);

void BM_FitCi(benchmark::State& state)
{
    Rng rng = substream(kDefaultSeed, 1);
    std::vector<MeasurementRecord> records(static_cast<std::size_t>(state.range(0)));
    for (auto& r : records)
    {
        r.f_ghz = 73.0;
        r.d3d_m = std::exp(uniform(rng, std::log(2.0), std::log(40.0)));
        r.pr_dbm = -(69.67 + 20.0 * std::log10(r.d3d_m) + 3.0 * standard_normal(rng));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_ci(records));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitCi)->Arg(100)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
