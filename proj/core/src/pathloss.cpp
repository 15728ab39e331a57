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

#include "icw/pathloss.hpp"

#include <cmath>
#include <string>

namespace icw
{

namespace
{

void require_reference_distance(double d3d_m)
{
    if (!(d3d_m >= 1.0) || !std::isfinite(d3d_m))
        throw DomainError("distance " + std::to_string(d3d_m) + " m is below the 1 m close-in reference");
}

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v))
        throw DomainError(std::string(name) + " must be finite");
}

} // namespace

void CIParams::validate() const
{
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("path loss exponent must be positive");
    if (!(sigma_db >= 0.0) || !std::isfinite(sigma_db))
        throw DomainError("shadow fading sigma must be non-negative");
}

void CIFParams::validate() const
{
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("path loss exponent must be positive");
    if (!(f0_ghz > 0.0) || !std::isfinite(f0_ghz))
        throw DomainError("CIF reference frequency f0 must be positive");
    if (!std::isfinite(b))
        throw DomainError("CIF slope b must be finite");
    if (!(sigma_db >= 0.0) || !std::isfinite(sigma_db))
        throw DomainError("shadow fading sigma must be non-negative");
}

void MeasurementRecord::validate() const
{
    FrequencyGHz{f_ghz};
    require_reference_distance(d3d_m);
    require_finite(pt_dbm, "pt_dbm");
    require_finite(gt_dbi, "gt_dbi");
    require_finite(gr_dbi, "gr_dbi");
    require_finite(pr_dbm, "pr_dbm");
    require_finite(gsym_db, "gsym_db");
    if (condition == LinkCondition::NlosBest && mode == AntennaMode::Omnidirectional)
        throw DomainError("NLOS_Best is only defined for directional measurements");
}

double fspl_1m(FrequencyGHz f)
{
    return 32.4 + 20.0 * std::log10(f.value());
}

double excess_loss_db(double n, double d3d_m)
{
    require_reference_distance(d3d_m);
    return 10.0 * n * std::log10(d3d_m);
}

double ci_path_loss(const CIParams& p, FrequencyGHz f, double d3d_m, double shadow_db)
{
    p.validate();
    return fspl_1m(f) + excess_loss_db(p.n, d3d_m) + shadow_db;
}

double cif_path_loss(const CIFParams& p, FrequencyGHz f, double d3d_m, double shadow_db)
{
    p.validate();
    const double ple = p.n * (1.0 + p.b * (f.value() - p.f0_ghz) / p.f0_ghz);
    return fspl_1m(f) + excess_loss_db(ple, d3d_m) + shadow_db;
}

double measured_path_loss(const MeasurementRecord& r)
{
    r.validate();
    return r.pt_dbm + r.gt_dbi + r.gr_dbi - r.pr_dbm + r.gsym_db;
}

} // namespace icw
