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

#include "report.hpp"

#include "json.hpp"

#include <cstdio>
#include <stdexcept>

namespace icw::cli
{

namespace
{

BandCells per_band(double v28, double v73, double v142)
{
    return {v28, v73, v142};
}

BandCells same_everywhere(double v)
{
    return {v, v, v};
}

BandCells difference(const BandCells& a, const BandCells& b)
{
    BandCells out;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (a[i] && b[i])
            out[i] = *a[i] - *b[i];
    return out;
}

std::string format_cell(const Cell& c)
{
    if (!c)
        return "N/A";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *c + 0.0); // + 0.0 folds -0.00 into 0.00
    std::string s = buf;
    if (s == "-0.00")
        s = "0.00";
    return s;
}

} // namespace

const ReportRow& ComparisonReport::row(std::string_view metric) const
{
    for (const auto& r : rows)
        if (r.metric == metric)
            return r;
    throw std::out_of_range("no report row " + std::string(metric));
}

ComparisonReport build_comparison(LinkCondition condition, std::span<const SimulatedCell> simulated)
{
    const ThreeGPPReference gpp = three_gpp_reference(condition);
    constexpr AntennaMode omni = AntennaMode::Omnidirectional;

    std::array<ChannelTargets, 3> t;
    std::array<CIParams, 3> ci;
    for (Band b : kAllBands)
    {
        t[static_cast<std::size_t>(b)] = lookup_channel_targets(b, condition, omni);
        ci[static_cast<std::size_t>(b)] = lookup_ci(b, condition, omni);
    }
    const CIParams multi = lookup_ci(Band::GHz28, condition, omni, FitScope::MultiBand);
    const CIFParams cif = lookup_cif(condition, omni);

    auto col = [&](auto member) { return per_band(t[0].*member, t[1].*member, t[2].*member); };
    const BandCells gpp_pair_only{gpp.mu_ds_28_ns, gpp.mu_ds_73_ns, std::nullopt};
    auto gpp_measured_bands = [](double v) { return BandCells{v, v, std::nullopt}; };

    ComparisonReport report;
    report.condition = condition;
    auto add = [&](std::string metric, BandCells nyu, BandCells three = {}) {
        ReportRow r{std::move(metric), nyu, three, difference(nyu, three), {}};
        report.rows.push_back(std::move(r));
    };

    add("n_ci_single", per_band(ci[0].n, ci[1].n, ci[2].n));
    add("sigma_ci_single_db", per_band(ci[0].sigma_db, ci[1].sigma_db, ci[2].sigma_db));
    add("n_ci_multi", same_everywhere(multi.n), gpp_measured_bands(gpp.n));
    add("sigma_ci_multi_db", same_everywhere(multi.sigma_db), gpp_measured_bands(gpp.sigma_db));
    add("n_cif", same_everywhere(cif.n));
    add("b_cif", same_everywhere(cif.b));
    add("f0_cif_ghz", same_everywhere(cif.f0_ghz));
    add("sigma_cif_db", same_everywhere(cif.sigma_db));
    add("min_ds_ns", col(&ChannelTargets::min_ds_ns));
    add("max_ds_ns", col(&ChannelTargets::max_ds_ns));
    add("mu_ds_ns", col(&ChannelTargets::mu_ds_ns), gpp_pair_only);
    add("mu_nc", col(&ChannelTargets::mu_nc), gpp_measured_bands(gpp.num_clusters));
    add("sigma_nc", col(&ChannelTargets::sigma_nc));
    add("mu_mpc", col(&ChannelTargets::mu_mpc), gpp_measured_bands(gpp.mpcs_per_cluster));
    add("sigma_mpc", col(&ChannelTargets::sigma_mpc));

    for (const auto& s : simulated)
    {
        const auto i = static_cast<std::size_t>(s.band);
        report.has_simulated = true;
        for (auto& r : report.rows)
        {
            if (r.metric == "mu_ds_ns")
                r.simulated[i] = s.mu_ds_ns;
            else if (r.metric == "mu_nc")
                r.simulated[i] = s.mu_nc;
            else if (r.metric == "mu_mpc")
                r.simulated[i] = s.mu_mpc;
        }
    }
    return report;
}

std::string render_text(const ComparisonReport& report)
{
    constexpr int metric_width = 20;
    constexpr int cell_width = 13;

    std::vector<std::pair<std::string, BandCells ReportRow::*>> groups{
        {"NYU", &ReportRow::nyu}, {"3GPP", &ReportRow::three_gpp}, {"DELTA", &ReportRow::delta}};
    if (report.has_simulated)
        groups.emplace_back("SIM", &ReportRow::simulated);

    std::string out = "InH-Office omnidirectional, " + std::string(to_string(report.condition)) +
                      ": NYU vs 3GPP (DELTA = NYU - 3GPP)\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s", metric_width, "metric");
    out += buf;
    for (const auto& [name, member] : groups)
        for (Band b : kAllBands)
        {
            std::snprintf(buf, sizeof buf, "%*s", cell_width, (name + "_" + std::string(to_string(b)) + "GHz").c_str());
            out += buf;
        }
    out += '\n';
    out += std::string(static_cast<std::size_t>(metric_width + cell_width * 3 * static_cast<int>(groups.size())), '-');
    out += '\n';

    for (const auto& r : report.rows)
    {
        std::snprintf(buf, sizeof buf, "%-*s", metric_width, r.metric.c_str());
        out += buf;
        for (const auto& [name, member] : groups)
            for (const auto& cell : r.*member)
            {
                std::snprintf(buf, sizeof buf, "%*s", cell_width, format_cell(cell).c_str());
                out += buf;
            }
        out += '\n';
    }
    return out;
}

std::string report_to_json(const ComparisonReport& report)
{
    using nlohmann::ordered_json;
    auto cells = [](const BandCells& c) {
        ordered_json j = ordered_json::object();
        for (Band b : kAllBands)
        {
            const auto& v = c[static_cast<std::size_t>(b)];
            j[std::string(to_string(b))] = v ? ordered_json(*v) : ordered_json(nullptr);
        }
        return j;
    };

    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows)
    {
        ordered_json row = {{"metric", r.metric}, {"nyu", cells(r.nyu)}, {"3gpp", cells(r.three_gpp)},
                            {"delta", cells(r.delta)}};
        if (report.has_simulated)
            row["simulated"] = cells(r.simulated);
        rows.push_back(std::move(row));
    }
    const ordered_json j = {{"condition", std::string(to_string(report.condition))},
                            {"mode", "omni"},
                            {"rows", rows}};
    return j.dump(2) + "\n";
}

} // namespace icw::cli
