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

#include "icw/io.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

namespace icw::io
{

using nlohmann::json;

namespace
{

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> lines(std::string_view text)
{
    std::vector<std::string_view> out;
    for (auto l : split(text, '\n'))
        out.push_back(trim(l));
    while (!out.empty() && out.back().empty())
        out.pop_back();
    return out;
}

json parse_json(std::string_view text, std::string_view what)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::exception& e)
    {
        throw DataError(std::string(what) + ": " + e.what());
    }
}

template <typename T>
T field(const json& j, const char* key, std::string_view what)
{
    if (!j.contains(key))
        throw DataError(std::string(what) + " is missing '" + key + "'");
    try
    {
        return j.at(key).get<T>();
    }
    catch (const json::exception& e)
    {
        throw DataError(std::string(what) + ": bad '" + key + "': " + e.what());
    }
}

json distribution_block(const Distribution& d)
{
    return {{"min", d.min}, {"max", d.max}, {"mean", d.mean}, {"std", d.std}, {"p90", d.p90}};
}

json summary_block(const EnsembleSummary& s)
{
    return {
        {"count", s.count},
        {"rms_ds_ns", distribution_block(s.rms_ds_ns)},
        {"num_clusters", distribution_block(s.num_clusters)},
        {"mpcs_per_cluster", distribution_block(s.mpcs_per_cluster)},
    };
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

double parse_double(std::string_view text, std::string_view what)
{
    text = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v))
        throw DataError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    return v;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw DataError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw DataError("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- PDP ---

std::string pdp_to_csv(const PowerDelayProfile& pdp)
{
    std::string out = "delay_ns,power_dbm\n";
    for (std::size_t i = 0; i < pdp.size(); ++i)
    {
        out += format_double(pdp.delay_ns(i));
        out += ',';
        out += format_double(pdp.power_dbm(i));
        out += '\n';
    }
    return out;
}

PowerDelayProfile pdp_from_csv(std::string_view csv, double resolution_ns)
{
    const auto rows = lines(csv);
    if (rows.empty() || rows.front() != "delay_ns,power_dbm")
        throw DataError("PDP CSV must start with the header 'delay_ns,power_dbm'");
    std::vector<PdpSample> samples;
    samples.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        const auto cols = split(rows[i], ',');
        if (cols.size() != 2)
            throw DataError("PDP CSV line " + std::to_string(i + 1) + " does not have 2 columns");
        samples.push_back({parse_double(cols[0], "delay_ns"), parse_double(cols[1], "power_dbm")});
    }
    try
    {
        return PowerDelayProfile::from_samples(resolution_ns, samples);
    }
    catch (const DomainError& e)
    {
        throw DataError(e.what());
    }
}

std::string metadata_to_json(const PdpMetadata& meta)
{
    json j = {
        {"resolution_ns", meta.resolution_ns}, {"tx_gain_dbi", meta.tx_gain_dbi},
        {"rx_gain_dbi", meta.rx_gain_dbi},     {"azimuth_deg", meta.azimuth_deg},
        {"elevation_deg", meta.elevation_deg},
    };
    if (meta.band)
        j["band_ghz"] = band_frequency(*meta.band).value();
    if (meta.condition)
        j["condition"] = std::string(to_string(*meta.condition));
    if (meta.mode)
        j["mode"] = std::string(to_string(*meta.mode));
    return j.dump(2) + "\n";
}

PdpMetadata metadata_from_json(std::string_view text)
{
    const json j = parse_json(text, "PDP sidecar");
    PdpMetadata meta;
    meta.resolution_ns = field<double>(j, "resolution_ns", "PDP sidecar");
    meta.tx_gain_dbi = j.value("tx_gain_dbi", 0.0);
    meta.rx_gain_dbi = j.value("rx_gain_dbi", 0.0);
    meta.azimuth_deg = j.value("azimuth_deg", 0.0);
    meta.elevation_deg = j.value("elevation_deg", 0.0);
    if (j.contains("band_ghz"))
        meta.band = band_from_frequency(FrequencyGHz{field<double>(j, "band_ghz", "PDP sidecar")});
    if (j.contains("condition"))
        meta.condition = parse_condition(field<std::string>(j, "condition", "PDP sidecar"));
    if (j.contains("mode"))
        meta.mode = parse_mode(field<std::string>(j, "mode", "PDP sidecar"));
    return meta;
}

void write_pdp(const std::filesystem::path& stem, const PowerDelayProfile& pdp, const PdpMetadata& meta)
{
    std::filesystem::path csv = stem;
    csv += ".csv";
    std::filesystem::path side = stem;
    side += ".json";
    write_file_atomic(side, metadata_to_json(meta));
    write_file_atomic(csv, pdp_to_csv(pdp));
}

PdpFile read_pdp(const std::filesystem::path& csv_path)
{
    std::filesystem::path side = csv_path;
    side.replace_extension(".json");
    if (!std::filesystem::exists(side))
        throw DataError("missing sidecar " + side.string());
    PdpMetadata meta = metadata_from_json(read_file(side));
    try
    {
        return {pdp_from_csv(read_file(csv_path), meta.resolution_ns), meta};
    }
    catch (const DomainError& e)
    {
        throw DataError(csv_path.string() + ": " + e.what());
    }
}

// --- Measurements ---

MeasurementTable measurements_from_csv(std::string_view csv)
{
    const auto rows = lines(csv);
    if (rows.empty())
        throw DataError("measurement CSV is empty");

    const auto header = split(rows.front(), ',');
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < header.size(); ++i)
        index.emplace(std::string(trim(header[i])), i);
    std::array<std::size_t, std::size(kMeasurementColumns)> col{};
    for (std::size_t c = 0; c < std::size(kMeasurementColumns); ++c)
    {
        const auto it = index.find(kMeasurementColumns[c]);
        if (it == index.end())
            throw DataError("measurement CSV is missing column '" + std::string(kMeasurementColumns[c]) + "'");
        col[c] = it->second;
    }

    MeasurementTable table;
    for (std::size_t line = 1; line < rows.size(); ++line)
    {
        if (rows[line].empty())
            continue;
        const auto cells = split(rows[line], ',');
        try
        {
            if (cells.size() != header.size())
                throw DataError("expected " + std::to_string(header.size()) + " fields, found " +
                                std::to_string(cells.size()));
            MeasurementRecord r;
            r.f_ghz = parse_double(cells[col[0]], "f_ghz");
            r.d3d_m = parse_double(cells[col[1]], "d3d_m");
            r.pt_dbm = parse_double(cells[col[2]], "pt_dbm");
            r.gt_dbi = parse_double(cells[col[3]], "gt_dbi");
            r.gr_dbi = parse_double(cells[col[4]], "gr_dbi");
            r.pr_dbm = parse_double(cells[col[5]], "pr_dbm");
            r.gsym_db = parse_double(cells[col[6]], "gsym_db");
            r.condition = parse_condition(trim(cells[col[7]]));
            r.mode = parse_mode(trim(cells[col[8]]));
            r.validate();
            table.records.push_back(r);
        }
        catch (const std::exception& e)
        {
            table.errors.push_back({line + 1, e.what()});
        }
    }
    return table;
}

std::string measurements_to_csv(const std::vector<MeasurementRecord>& records)
{
    std::string out;
    for (std::size_t c = 0; c < std::size(kMeasurementColumns); ++c)
    {
        out += kMeasurementColumns[c];
        out += c + 1 < std::size(kMeasurementColumns) ? ',' : '\n';
    }
    for (const auto& r : records)
    {
        for (double v : {r.f_ghz, r.d3d_m, r.pt_dbm, r.gt_dbi, r.gr_dbi, r.pr_dbm, r.gsym_db})
        {
            out += format_double(v);
            out += ',';
        }
        out += to_string(r.condition);
        out += ',';
        out += to_string(r.mode);
        out += '\n';
    }
    return out;
}

// --- Truth / calibration / summaries ---

std::string truth_to_json(const DropTruth& truth)
{
    json mpcs = json::array();
    for (const auto& m : truth.mpcs)
        mpcs.push_back({{"delay_ns", m.delay_ns}, {"power_dbm", m.power_dbm}});
    const json j = {
        {"num_clusters", truth.num_clusters()},
        {"mpcs_per_cluster", truth.mpcs_per_cluster},
        {"mpcs", mpcs},
        {"d3d_m", truth.d3d_m},
        {"shadow_db", truth.shadow_db},
        {"path_loss_db", truth.path_loss_db},
        {"rms_ds_ns", truth.rms_ds_ns},
    };
    return j.dump(2) + "\n";
}

DropTruth truth_from_json(std::string_view text)
{
    const json j = parse_json(text, "drop truth");
    DropTruth t;
    t.mpcs_per_cluster = field<std::vector<int>>(j, "mpcs_per_cluster", "drop truth");
    for (const auto& m : field<json>(j, "mpcs", "drop truth"))
        t.mpcs.push_back({field<double>(m, "delay_ns", "drop truth MPC"), field<double>(m, "power_dbm", "drop truth MPC")});
    t.d3d_m = field<double>(j, "d3d_m", "drop truth");
    t.shadow_db = field<double>(j, "shadow_db", "drop truth");
    t.path_loss_db = field<double>(j, "path_loss_db", "drop truth");
    t.rms_ds_ns = field<double>(j, "rms_ds_ns", "drop truth");
    return t;
}

std::string calibration_file_name(Band band, LinkCondition condition, AntennaMode mode)
{
    return "decay." + std::string(to_string(band)) + "." + std::string(to_string(condition)) + "." +
           std::string(to_string(mode)) + ".json";
}

std::string calibration_to_json(const CalibrationResult& r)
{
    const json j = {
        {"band_ghz", band_frequency(r.band).value()},
        {"condition", std::string(to_string(r.condition))},
        {"mode", std::string(to_string(r.mode))},
        {"cluster_decay_ns", r.decay.cluster_decay_ns},
        {"intra_decay_ns", r.decay.intra_decay_ns},
        {"void_mean_ns", r.decay.void_mean_ns},
        {"multiplier", r.multiplier},
        {"target_mu_ds_ns", r.target_mu_ds_ns},
        {"achieved_mu_ds_ns", r.achieved_mu_ds_ns},
        {"iterations", r.iterations},
        {"drops", r.drops},
        {"seed", r.seed},
    };
    return j.dump(2) + "\n";
}

CalibrationResult calibration_from_json(std::string_view text)
{
    constexpr std::string_view what = "calibration file";
    const json j = parse_json(text, what);
    CalibrationResult r;
    r.band = band_from_frequency(FrequencyGHz{field<double>(j, "band_ghz", what)});
    r.condition = parse_condition(field<std::string>(j, "condition", what));
    r.mode = parse_mode(field<std::string>(j, "mode", what));
    r.decay = {field<double>(j, "cluster_decay_ns", what), field<double>(j, "intra_decay_ns", what),
               field<double>(j, "void_mean_ns", what)};
    try
    {
        r.decay.validate();
    }
    catch (const DomainError& e)
    {
        throw DataError(std::string(what) + ": " + e.what());
    }
    r.multiplier = field<double>(j, "multiplier", what);
    r.target_mu_ds_ns = field<double>(j, "target_mu_ds_ns", what);
    r.achieved_mu_ds_ns = field<double>(j, "achieved_mu_ds_ns", what);
    r.iterations = field<int>(j, "iterations", what);
    r.drops = field<std::size_t>(j, "drops", what);
    r.seed = field<std::uint64_t>(j, "seed", what);
    return r;
}

std::string summary_to_json(const std::optional<EnsembleSummary>& summary, std::size_t absent,
                            const std::vector<std::string>& skipped)
{
    json j = summary ? summary_block(*summary) : json{{"count", 0}};
    j["absent"] = absent;
    j["all_absent"] = !summary.has_value();
    j["skipped"] = skipped;
    return j.dump(2) + "\n";
}

std::string ci_fit_to_json(const CIFit& fit, std::size_t records)
{
    const json j = {
        {"model", "ci"},
        {"records", records},
        {"n", fit.params.n},
        {"sigma_db", fit.params.sigma_db},
        {"rmse_db", fit.rmse_db},
    };
    return j.dump(2) + "\n";
}

std::string cif_fit_to_json(const CIFFit& fit, std::size_t records)
{
    const json j = {
        {"model", "cif"},
        {"records", records},
        {"n", fit.params.n},
        {"b", fit.params.b},
        {"f0_ghz", fit.params.f0_ghz},
        {"sigma_db", fit.params.sigma_db},
        {"rmse_db", fit.rmse_db},
    };
    return j.dump(2) + "\n";
}

} // namespace icw::io
