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

#include <cmath>
#include <map>
#include <string>

namespace icw
{

namespace
{

// Loss beyond FSPL(f, 1 m) and the log-distance regressor for one record.
struct Regressors
{
    double excess_db;
    double log_term;
    double f_ghz;
};

std::vector<Regressors> regressors(std::span<const MeasurementRecord> records)
{
    std::vector<Regressors> out;
    out.reserve(records.size());
    for (const auto& r : records)
    {
        const double pl = measured_path_loss(r);
        out.push_back({pl - fspl_1m(FrequencyGHz{r.f_ghz}), 10.0 * std::log10(r.d3d_m), r.f_ghz});
    }
    return out;
}

double rms(const std::vector<double>& v)
{
    double acc = 0.0;
    for (double x : v)
        acc += x * x;
    return std::sqrt(acc / static_cast<double>(v.size()));
}

} // namespace

FrequencyGHz weighted_center_frequency(std::span<const MeasurementRecord> records)
{
    if (records.empty())
        throw DomainError("weighted centre frequency needs at least one record");

    std::map<double, std::size_t> counts;
    for (const auto& r : records)
        ++counts[FrequencyGHz{r.f_ghz}.value()];

    double num = 0.0;
    double den = 0.0;
    for (const auto& [f, n] : counts)
    {
        num += f * static_cast<double>(n);
        den += static_cast<double>(n);
    }
    return FrequencyGHz{num / den};
}

CIFit fit_ci(std::span<const MeasurementRecord> records)
{
    if (records.size() < 2)
        throw DomainError("CI fit needs at least 2 records, got " + std::to_string(records.size()));

    const auto rows = regressors(records);
    double sab = 0.0;
    double sbb = 0.0;
    for (const auto& x : rows)
    {
        sab += x.excess_db * x.log_term;
        sbb += x.log_term * x.log_term;
    }
    if (sbb == 0.0)
        throw DegenerateFitError("every record is at the 1 m reference distance; the exponent is unidentifiable");

    CIFit fit;
    fit.params.n = sab / sbb;
    fit.residuals_db.reserve(rows.size());
    for (const auto& x : rows)
        fit.residuals_db.push_back(x.excess_db - fit.params.n * x.log_term);
    fit.rmse_db = rms(fit.residuals_db);
    fit.params.sigma_db = fit.rmse_db;
    return fit;
}

CIFFit fit_cif(std::span<const MeasurementRecord> records)
{
    if (records.size() < 2)
        throw DomainError("CIF fit needs at least 2 records, got " + std::to_string(records.size()));

    const double f0 = weighted_center_frequency(records).value();
    const auto rows = regressors(records);

    bool multi_band = false;
    for (const auto& x : rows)
        multi_band = multi_band || x.f_ghz != rows.front().f_ghz;
    if (!multi_band)
        throw DegenerateFitError("CIF slope b is unidentifiable from single-band data");

    // Normal equations for y = a x1 + c x2.
    double s11 = 0.0, s12 = 0.0, s22 = 0.0, s1y = 0.0, s2y = 0.0;
    for (const auto& x : rows)
    {
        const double x1 = x.log_term;
        const double x2 = x1 * (x.f_ghz - f0) / f0;
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        s1y += x1 * x.excess_db;
        s2y += x2 * x.excess_db;
    }
    const double det = s11 * s22 - s12 * s12;
    if (!(std::abs(det) > 1e-12 * s11 * s22))
        throw DegenerateFitError("CIF design matrix is singular (distances at 1 m or no spread across bands)");

    const double a = (s22 * s1y - s12 * s2y) / det;
    const double c = (s11 * s2y - s12 * s1y) / det;
    if (a <= 0.0 || std::abs(a) < 1e-9)
        throw DegenerateFitError("CIF fit is ill-conditioned: fitted exponent at f0 is " + std::to_string(a));

    CIFFit fit;
    fit.params = {a, c / a, f0, 0.0};
    fit.residuals_db.reserve(rows.size());
    for (const auto& x : rows)
    {
        const double x1 = x.log_term;
        fit.residuals_db.push_back(x.excess_db - a * x1 - c * x1 * (x.f_ghz - f0) / f0);
    }
    fit.rmse_db = rms(fit.residuals_db);
    fit.params.sigma_db = fit.rmse_db;
    return fit;
}

} // namespace icw
