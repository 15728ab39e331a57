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

#include "icw/parameters.hpp"

#include <array>
#include <string>

namespace icw
{

namespace
{

struct BandRow
{
    double ci_n;
    double ci_sigma;
    ChannelTargets targets;
};

struct ConditionBlock
{
    std::array<BandRow, 3> bands; // 28, 73, 142
    CIParams multi_ci;
    CIFParams multi_cif;
};

// Directional table: LOS, NLOS_Best, NLOS
constexpr std::array<ConditionBlock, 3> kDirectional{{
    {{{
         {1.90, 3.38, {0.87, 5.50, 3.85, 1.41, 0.85, 2.45, 2.19}},
         {1.63, 3.06, {0.76, 5.34, 3.53, 1.32, 0.96, 2.53, 2.27}},
         {2.05, 2.89, {0.69, 11.94, 2.71, 1.25, 0.94, 2.11, 1.43}},
     }},
     {1.86, 3.45},
     {1.86, 0.07, kMultiBandF0GHz, 3.45}},
    {{{
         {2.75, 7.00, {0.92, 44.49, 10.23, 1.65, 0.78, 2.56, 1.54}},
         {3.30, 8.76, {3.74, 31.37, 7.39, 1.48, 0.89, 2.44, 2.18}},
         {3.21, 6.03, {0.60, 10.76, 5.65, 1.16, 0.69, 1.98, 2.26}},
     }},
     {3.07, 7.67},
     {3.07, 0.05, kMultiBandF0GHz, 7.67}},
    {{{
         {4.39, 7.30, {0.57, 198.55, 17.64, 3.41, 1.96, 3.16, 4.56}},
         {5.51, 8.94, {0.51, 141.97, 12.50, 2.60, 1.70, 2.80, 5.20}},
         {4.60, 13.80, {0.28, 92.45, 8.86, 2.39, 1.48, 1.18, 2.21}},
     }},
     {5.02, 13.97},
     {5.02, 0.03, kMultiBandF0GHz, 13.85}},
}};

// Omnidirectional table: LOS, NLOS
constexpr std::array<ConditionBlock, 2> kOmni{{
    {{{
         {1.17, 2.72, {0.70, 134.40, 10.80, 4.60, 1.94, 4.70, 3.65}},
         {1.36, 2.30, {0.60, 101.90, 6.24, 2.76, 2.32, 3.43, 2.86}},
         {1.74, 3.62, {0.71, 11.94, 3.00, 1.90, 1.30, 2.40, 2.20}},
     }},
     {1.42, 3.71},
     {1.42, 0.29, kMultiBandF0GHz, 2.94}},
    {{{
         {2.37, 7.22, {0.60, 198.50, 17.10, 5.40, 1.96, 6.40, 4.58}},
         {2.81, 8.71, {0.50, 142.00, 12.30, 3.20, 1.70, 3.20, 5.20}},
         {2.83, 6.07, {0.60, 60.87, 9.20, 2.80, 1.65, 2.20, 2.47}},
     }},
     {2.66, 7.82},
     {2.66, 0.11, kMultiBandF0GHz, 7.53}},
}};

const ConditionBlock& block(LinkCondition condition, AntennaMode mode)
{
    if (mode == AntennaMode::Directional)
        return kDirectional[static_cast<std::size_t>(condition)];
    switch (condition)
    {
    case LinkCondition::Los:
        return kOmni[0];
    case LinkCondition::Nlos:
        return kOmni[1];
    case LinkCondition::NlosBest:
        break;
    }
    throw NotAvailableError("NLOS_Best is tabulated for directional antennas only");
}

const BandRow& row(Band band, LinkCondition condition, AntennaMode mode)
{
    return block(condition, mode).bands[static_cast<std::size_t>(band)];
}

} // namespace

bool has_condition(AntennaMode mode, LinkCondition condition) noexcept
{
    return mode == AntennaMode::Directional || condition != LinkCondition::NlosBest;
}

CIParams lookup_ci(Band band, LinkCondition condition, AntennaMode mode, FitScope scope)
{
    if (scope == FitScope::MultiBand)
        return block(condition, mode).multi_ci;
    const BandRow& r = row(band, condition, mode);
    return {r.ci_n, r.ci_sigma};
}

CIFParams lookup_cif(LinkCondition condition, AntennaMode mode)
{
    return block(condition, mode).multi_cif;
}

PathLossParams lookup_params(Band band, LinkCondition condition, AntennaMode mode, PathLossModel model,
                             FitScope scope)
{
    if (model == PathLossModel::Ci)
        return lookup_ci(band, condition, mode, scope);
    if (scope == FitScope::SingleBand)
        throw NotAvailableError("CIF parameters exist only as a multi-band fit");
    return lookup_cif(condition, mode);
}

ChannelTargets lookup_channel_targets(Band band, LinkCondition condition, AntennaMode mode)
{
    return row(band, condition, mode).targets;
}

double ThreeGPPReference::mu_ds_ns(Band band) const
{
    switch (band)
    {
    case Band::GHz28:
        return mu_ds_28_ns;
    case Band::GHz73:
        return mu_ds_73_ns;
    case Band::GHz142:
        break;
    }
    throw NotAvailableError("3GPP InH does not specify the RMS delay spread above 100 GHz");
}

ThreeGPPReference three_gpp_reference(LinkCondition condition)
{
    switch (condition)
    {
    case LinkCondition::Los:
        return {LinkCondition::Los, 1.73, 3.00, 20.40, 20.21, 15, 20};
    case LinkCondition::Nlos:
        return {LinkCondition::Nlos, 3.19, 8.29, 27.40, 21.52, 19, 20};
    case LinkCondition::NlosBest:
        break;
    }
    throw NotAvailableError("3GPP InH-Office has no NLOS_Best column");
}

} // namespace icw
