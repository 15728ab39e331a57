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

#ifndef ICW_TOOLS_REPORT_HPP
#define ICW_TOOLS_REPORT_HPP

#include "icw/parameters.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace icw::cli
{

using Cell = std::optional<double>;
using BandCells = std::array<Cell, 3>; // 28, 73, 142 GHz

/// One metric of the NYU vs 3GPP comparison. Metric names carry their unit.
struct ReportRow
{
    std::string metric;
    BandCells nyu;
    BandCells three_gpp;
    BandCells delta; ///< nyu - 3gpp where both exist
    BandCells simulated;
};

struct SimulatedCell
{
    Band band = Band::GHz28;
    double mu_ds_ns = 0.0;
    double mu_nc = 0.0;
    double mu_mpc = 0.0;
};

struct ComparisonReport
{
    LinkCondition condition = LinkCondition::Los;
    std::vector<ReportRow> rows;
    bool has_simulated = false;

    [[nodiscard]] const ReportRow& row(std::string_view metric) const;
};

/// Omnidirectional table against the 3GPP InH-Office constants.
/// Throws NotAvailableError for NLOS_Best.
ComparisonReport build_comparison(LinkCondition condition, std::span<const SimulatedCell> simulated = {});

/// Fixed-width ASCII table, two decimals, "N/A" for missing cells.
std::string render_text(const ComparisonReport& report);

std::string report_to_json(const ComparisonReport& report);

} // namespace icw::cli

#endif
