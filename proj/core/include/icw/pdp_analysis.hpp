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

#ifndef ICW_PDP_ANALYSIS_HPP
#define ICW_PDP_ANALYSIS_HPP

#include "icw/pdp.hpp"

#include <optional>
#include <span>
#include <vector>

namespace icw
{

inline constexpr double kDefaultTailFraction = 0.2;
inline constexpr double kDefaultThresholdDb = 5.0;
inline constexpr double kDefaultMtiNs = 6.0;

/// Mean linear power of the trailing tail_fraction of samples, in dBm.
/// At least one sample is always used.
double estimate_noise_floor(const PowerDelayProfile& pdp, double tail_fraction = kDefaultTailFraction);

/// Peak detection against floor + threshold_db (compared in dB).
///
/// Candidates are local maxima (strictly above the left neighbour, at least
/// the right one). Candidates closer than or equal to one resolution interval
/// are resolved in favour of the stronger, so retained MPCs are pairwise
/// separated by more than resolution_ns. The result is sorted by delay.
std::vector<MultipathComponent> detect_mpcs_with_floor(const PowerDelayProfile& pdp, double noise_floor_dbm,
                                                       double threshold_db = kDefaultThresholdDb);

/// Same, using the PDP's cached floor or estimate_noise_floor() when absent.
std::vector<MultipathComponent> detect_mpcs(const PowerDelayProfile& pdp, double threshold_db = kDefaultThresholdDb);

/// Power-weighted standard deviation of MPC delays.
double rms_delay_spread(std::span<const MultipathComponent> mpcs);

/// Greedy left-to-right split wherever the delay gap exceeds mti_ns.
/// Input must be sorted by delay.
std::vector<TimeCluster> partition_clusters(std::span<const MultipathComponent> mpcs, double mti_ns = kDefaultMtiNs);

/// Summary statistics of a set of MPCs; nullopt when the list is empty.
std::optional<ChannelStats> summarize_mpcs(std::span<const MultipathComponent> mpcs, double mti_ns = kDefaultMtiNs);

/// detect -> cluster -> summarize. nullopt marks a PDP with no detectable MPC.
std::optional<ChannelStats> channel_stats(const PowerDelayProfile& pdp, double mti_ns = kDefaultMtiNs,
                                          double threshold_db = kDefaultThresholdDb);

/// Approximate omnidirectional PDP from directional captures: strip antenna
/// gains, align delay axes, sum linear power per delay bin over unique
/// pointing directions. Repeated (azimuth, elevation) pairs keep the first
/// capture only.
PowerDelayProfile synthesize_omni(std::span<const DirectionalPdp> captures,
                                  DelayAlignment alignment = DelayAlignment::Absolute);

/// Distribution of RMS DS, cluster count and MPCs per cluster over the
/// ensemble. Standard deviations divide by N; p90 interpolates
/// linearly between order statistics. Reductions sort before summing, so the
/// result does not depend on input order.
EnsembleSummary ensemble_summary(std::span<const ChannelStats> stats);

/// Linear-interpolated percentile (q in [0, 1]) of an unsorted sample.
double percentile(std::vector<double> values, double q);

} // namespace icw

#endif
