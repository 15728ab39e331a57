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

#ifndef ICW_PARAMETERS_HPP
#define ICW_PARAMETERS_HPP

#include "icw/pathloss.hpp"
#include "icw/types.hpp"

#include <variant>

namespace icw
{

/// Tabulated delay-spread and cluster statistics for one (band, condition, mode) cell.
struct ChannelTargets
{
    double min_ds_ns = 0.0;
    double max_ds_ns = 0.0;
    double mu_ds_ns = 0.0;
    double mu_nc = 0.0;
    double sigma_nc = 0.0;
    double mu_mpc = 0.0;
    double sigma_mpc = 0.0;

    friend bool operator==(const ChannelTargets&, const ChannelTargets&) = default;
};

/// 3GPP InH-Office constants quoted alongside the omnidirectional table.
/// Only 28 and 73 GHz carry a delay spread; 142 GHz is not specified.
struct ThreeGPPReference
{
    LinkCondition condition = LinkCondition::Los;
    double n = 0.0;
    double sigma_db = 0.0;
    double mu_ds_28_ns = 0.0;
    double mu_ds_73_ns = 0.0;
    int num_clusters = 0;
    int mpcs_per_cluster = 0;

    /// Throws NotAvailableError for 142 GHz.
    [[nodiscard]] double mu_ds_ns(Band band) const;
};

using PathLossParams = std::variant<CIParams, CIFParams>;

/// Exact printed values. CIF exists only as a multi-band fit; NLOS_Best only
/// for directional antennas. Missing cells throw NotAvailableError.
PathLossParams lookup_params(Band band, LinkCondition condition, AntennaMode mode, PathLossModel model,
                             FitScope scope);

CIParams lookup_ci(Band band, LinkCondition condition, AntennaMode mode, FitScope scope = FitScope::SingleBand);

/// Multi-band CIF fit; the band is irrelevant since one fit covers all three.
CIFParams lookup_cif(LinkCondition condition, AntennaMode mode);

ChannelTargets lookup_channel_targets(Band band, LinkCondition condition, AntennaMode mode);

/// Throws NotAvailableError for NLOS_Best.
ThreeGPPReference three_gpp_reference(LinkCondition condition);

/// Weighted average frequency of the multi-band campaigns.
inline constexpr double kMultiBandF0GHz = 81.0;

/// Conditions tabulated for a mode: three for directional, LOS/NLOS for omni.
bool has_condition(AntennaMode mode, LinkCondition condition) noexcept;

} // namespace icw

#endif
