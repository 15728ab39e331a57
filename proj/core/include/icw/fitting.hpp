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

#ifndef ICW_FITTING_HPP
#define ICW_FITTING_HPP

#include "icw/pathloss.hpp"

#include <span>
#include <vector>

namespace icw
{

/// Fitted parameters with per-record residuals (measured - model, dB).
/// params.sigma_db always equals rmse_db, the divide-by-N residual RMS.
template <typename Params>
struct FitResult
{
    Params params;
    std::vector<double> residuals_db;
    double rmse_db = 0.0;
};

using CIFit = FitResult<CIParams>;
using CIFFit = FitResult<CIFParams>;

/// f0 = sum_k f_k N_k / sum_k N_k over the distinct bands in the record list.
FrequencyGHz weighted_center_frequency(std::span<const MeasurementRecord> records);

/// Closed-form MMSE through-the-origin fit of (PL - FSPL) on 10 log10(d).
/// Requires >= 2 records and at least one record beyond 1 m.
CIFit fit_ci(std::span<const MeasurementRecord> records);

/// Two-regressor least squares on x1 = 10 log10(d) and x1 (f - f0) / f0 with
/// f0 fixed at the weighted centre frequency. Needs >= 2 distinct bands.
CIFFit fit_cif(std::span<const MeasurementRecord> records);

} // namespace icw

#endif
