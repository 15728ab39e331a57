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

#ifndef ICW_PATHLOSS_HPP
#define ICW_PATHLOSS_HPP

#include "icw/types.hpp"

namespace icw
{

/// Close-in (1 m free-space reference) model coefficients.
struct CIParams
{
    double n = 2.0;        ///< path loss exponent
    double sigma_db = 0.0; ///< shadow fading standard deviation

    void validate() const;
    friend bool operator==(const CIParams&, const CIParams&) = default;
};

/// CI model with a frequency-weighted exponent n * (1 + b (f - f0) / f0).
struct CIFParams
{
    double n = 2.0;
    double b = 0.0;
    double f0_ghz = 1.0;
    double sigma_db = 0.0;

    void validate() const;
    friend bool operator==(const CIFParams&, const CIFParams&) = default;
};

/// One TX-RX link observation.
struct MeasurementRecord
{
    double f_ghz = 0.0;
    double d3d_m = 1.0;
    double pt_dbm = 0.0;  ///< power fed into the TX antenna
    double gt_dbi = 0.0;
    double gr_dbi = 0.0;
    double pr_dbm = 0.0;  ///< measured received power
    double gsym_db = 0.0; ///< sounder processing gain
    LinkCondition condition = LinkCondition::Los;
    AntennaMode mode = AntennaMode::Omnidirectional;

    /// Throws DomainError if d3d_m < 1 m, f <= 0, any dB field is not finite,
    /// or NLOS_Best is paired with the omnidirectional mode.
    void validate() const;
};

/// Free-space path loss at 1 m: 32.4 + 20 log10(f / 1 GHz).
double fspl_1m(FrequencyGHz f);

/// Mean CI path loss plus a caller-supplied shadowing term (0 for the mean).
double ci_path_loss(const CIParams& p, FrequencyGHz f, double d3d_m, double shadow_db = 0.0);

/// Mean CIF path loss plus a caller-supplied shadowing term.
double cif_path_loss(const CIFParams& p, FrequencyGHz f, double d3d_m, double shadow_db = 0.0);

/// PL = Pt + Gt + Gr - Pr + Gsym.
double measured_path_loss(const MeasurementRecord& r);

/// Loss beyond the 1 m reference, 10 n log10(d).
double excess_loss_db(double n, double d3d_m);

} // namespace icw

#endif
