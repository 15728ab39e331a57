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

#include "cli.hpp"
#include "report.hpp"

#include "icw/fitting.hpp"
#include "icw/io.hpp"
#include "icw/pdp_analysis.hpp"
#include "icw/synthesis.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

namespace icw::cli
{

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

/// Bad flags or flag combinations detected after CLI11 parsing.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kDefaultCalibrationDir = "calibration";

struct Selectors
{
    std::string band;
    std::string condition;
    std::string mode;
};

void add_selectors(CLI::App* cmd, Selectors& s, bool required)
{
    cmd->add_option("--band", s.band, "Carrier band: 28, 73 or 142 (GHz)")->required(required);
    cmd->add_option("--condition", s.condition, "LOS, NLOS_Best or NLOS")->required(required);
    cmd->add_option("--mode", s.mode, "directional or omni")->required(required);
}

template <typename F>
auto parse_selector(F parse, const std::string& text, const char* flag)
{
    try
    {
        return parse(text);
    }
    catch (const DataError& e)
    {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

struct Cell
{
    Band band;
    LinkCondition condition;
    AntennaMode mode;
};

Cell parse_cell(const Selectors& s)
{
    const Cell c{parse_selector(parse_band, s.band, "--band"),
                 parse_selector(parse_condition, s.condition, "--condition"),
                 parse_selector(parse_mode, s.mode, "--mode")};
    if (!has_condition(c.mode, c.condition))
        throw UsageError(std::string(to_string(c.condition)) + " has no " + std::string(to_string(c.mode)) +
                         " data");
    return c;
}

std::string describe(const Cell& c)
{
    return std::string(to_string(c.band)) + " GHz " + std::string(to_string(c.condition)) + " " +
           std::string(to_string(c.mode));
}

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
/// independent, so the result never depends on the thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++)
                {
                    try
                    {
                        body(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next = n;
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

std::vector<fs::path> pdp_files(const fs::path& dir)
{
    if (!fs::is_directory(dir))
        throw DataError("'" + dir.string() + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
    {
        if (!entry.is_regular_file() || entry.path().extension() != ".csv")
            continue;
        const std::string name = entry.path().filename().string();
        if (name == "stats.csv" || name.ends_with(".residuals.csv"))
            continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

json parse_json_file(const fs::path& path)
{
    try
    {
        return json::parse(io::read_file(path));
    }
    catch (const json::exception& e)
    {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::string drop_stem(std::size_t index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "drop_%06zu", index);
    return buf;
}

std::string fmt(double v)
{
    return io::format_double(v);
}

// --- fit ---

struct FitOptions
{
    std::string input;
    std::string model;
    std::string out;
    Selectors filter;
};

int cmd_fit(const FitOptions& o, std::ostream& out, std::ostream& err)
{
    const PathLossModel model = parse_selector(parse_model, o.model, "--model");
    const fs::path input = o.input;
    const io::MeasurementTable table = io::measurements_from_csv(io::read_file(input));
    if (!table.errors.empty())
    {
        for (const auto& e : table.errors)
            err << input.string() << ":" << e.line << ": " << e.message << "\n";
        err << "error: " << table.errors.size() << " invalid row(s); nothing fitted\n";
        return kExitData;
    }

    std::vector<MeasurementRecord> records;
    for (const auto& r : table.records)
    {
        if (!o.filter.band.empty() &&
            !(FrequencyGHz(r.f_ghz) == band_frequency(parse_selector(parse_band, o.filter.band, "--band"))))
            continue;
        if (!o.filter.condition.empty() &&
            r.condition != parse_selector(parse_condition, o.filter.condition, "--condition"))
            continue;
        if (!o.filter.mode.empty() && r.mode != parse_selector(parse_mode, o.filter.mode, "--mode"))
            continue;
        records.push_back(r);
    }
    if (records.empty())
        throw DataError("no measurement records left to fit");

    std::string report;
    std::vector<double> residuals;
    if (model == PathLossModel::Ci)
    {
        const CIFit fit = fit_ci(records);
        report = io::ci_fit_to_json(fit, records.size());
        residuals = fit.residuals_db;
    }
    else
    {
        const CIFFit fit = fit_cif(records);
        report = io::cif_fit_to_json(fit, records.size());
        residuals = fit.residuals_db;
    }

    fs::path json_path = o.out;
    if (json_path.empty())
        json_path = input.parent_path() / (input.stem().string() + "." + std::string(to_string(model)) + ".fit.json");
    fs::path residual_path = json_path;
    residual_path.replace_extension(".residuals.csv");

    std::string csv = "record,f_ghz,d3d_m,path_loss_db,residual_db\n";
    for (std::size_t i = 0; i < records.size(); ++i)
        csv += std::to_string(i) + "," + fmt(records[i].f_ghz) + "," + fmt(records[i].d3d_m) + "," +
               fmt(measured_path_loss(records[i])) + "," + fmt(residuals[i]) + "\n";

    if (json_path.has_parent_path())
        fs::create_directories(json_path.parent_path());
    io::write_file_atomic(json_path, report);
    io::write_file_atomic(residual_path, csv);
    out << report;
    return kExitOk;
}

// --- calibrate ---

struct CalibrateOptions
{
    Selectors cell;
    bool all = false;
    std::size_t drops = 10000;
    double tolerance = 0.03;
    std::string out_dir = kDefaultCalibrationDir;
    std::optional<std::string> seed;
    unsigned threads = 1;
};

CalibrationResult calibrate_cell(const Cell& c, std::size_t drops, double tolerance, std::uint64_t seed,
                                 unsigned threads)
{
    CalibrationOptions opts;
    opts.drops = drops;
    opts.tolerance = tolerance;
    opts.seed = seed;
    opts.threads = threads;
    return calibrate_decay(c.band, c.condition, c.mode, opts);
}

int cmd_calibrate(const CalibrateOptions& o, std::ostream& out, std::ostream& err)
{
    const bool any_selector = !o.cell.band.empty() || !o.cell.condition.empty() || !o.cell.mode.empty();
    if (o.all == any_selector)
        throw UsageError("give either --all or all of --band, --condition and --mode");
    if (!(o.tolerance > 0.0))
        throw UsageError("--tolerance must be positive");
    const std::uint64_t seed = resolve_seed(o.seed, std::getenv("WORKBENCH_SEED"));

    std::vector<Cell> cells;
    if (o.all)
    {
        for (AntennaMode mode : {AntennaMode::Directional, AntennaMode::Omnidirectional})
            for (LinkCondition cond : {LinkCondition::Los, LinkCondition::NlosBest, LinkCondition::Nlos})
                if (has_condition(mode, cond))
                    for (Band band : kAllBands)
                        cells.push_back({band, cond, mode});
    }
    else
    {
        if (o.cell.band.empty() || o.cell.condition.empty() || o.cell.mode.empty())
            throw UsageError("give all of --band, --condition and --mode");
        cells.push_back(parse_cell(o.cell));
    }

    const fs::path dir = o.out_dir;
    fs::create_directories(dir);
    int failures = 0;
    for (const Cell& c : cells)
    {
        try
        {
            const CalibrationResult r = calibrate_cell(c, o.drops, o.tolerance, seed, o.threads);
            const fs::path path = dir / io::calibration_file_name(c.band, c.condition, c.mode);
            io::write_file_atomic(path, io::calibration_to_json(r));
            out << describe(c) << ": multiplier " << fmt(r.multiplier) << ", mean DS " << fmt(r.achieved_mu_ds_ns)
                << " ns (target " << fmt(r.target_mu_ds_ns) << " ns) -> " << path.string() << "\n";
        }
        catch (const CalibrationError& e)
        {
            ++failures;
            err << "error: " << describe(c) << ": " << e.what() << "\n";
        }
    }
    return failures == 0 ? kExitOk : kExitCalibration;
}

// --- simulate ---

/// Run-level settings shared by the ensemble commands.
struct WorkbenchConfig
{
    std::uint64_t seed = kDefaultSeed;
    std::size_t ensemble_size = 1;
    double tolerance = 0.03;
    unsigned threads = 1;
    fs::path output;

    void validate() const
    {
        if (ensemble_size < 1)
            throw UsageError("--drops must be at least 1");
        if (!(tolerance > 0.0))
            throw UsageError("--tolerance must be positive");
        if (output.empty())
            throw UsageError("an output path is required");
    }
};

struct SimulateOptions
{
    Selectors cell;
    std::size_t drops = 1000;
    std::optional<std::string> seed;
    std::string out;
    std::string calibration_dir = kDefaultCalibrationDir;
    bool calibrate = false;
    std::size_t calibration_drops = 10000;
    double tolerance = 0.03;
    unsigned threads = 1;
    double min_distance = DistanceRange{}.min_m;
    double max_distance = DistanceRange{}.max_m;
    double mti = kDefaultMtiNs;
    double threshold = kDefaultThresholdDb;
};

CalibrationResult load_calibration(const Cell& c, const fs::path& dir)
{
    const fs::path path = dir / io::calibration_file_name(c.band, c.condition, c.mode);
    if (!fs::exists(path))
        throw CalibrationError("no calibration for " + describe(c) + " at '" + path.string() +
                               "'; run `icw calibrate --band " + std::string(to_string(c.band)) + " --condition " +
                               std::string(to_string(c.condition)) + " --mode " + std::string(to_string(c.mode)) +
                               " --out-dir " + dir.string() + "` or pass --calibrate");
    CalibrationResult r = io::calibration_from_json(io::read_file(path));
    if (r.band != c.band || r.condition != c.condition || r.mode != c.mode)
        throw DataError("'" + path.string() + "' holds a calibration for a different cell");
    return r;
}

json stats_summary(const std::vector<std::optional<ChannelStats>>& stats)
{
    std::vector<ChannelStats> present;
    for (const auto& s : stats)
        if (s)
            present.push_back(*s);
    std::optional<EnsembleSummary> summary;
    if (!present.empty())
        summary = ensemble_summary(present);
    return json::parse(io::summary_to_json(summary, stats.size() - present.size()));
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream&)
{
    const Cell c = parse_cell(o.cell);
    WorkbenchConfig run;
    run.seed = resolve_seed(o.seed, std::getenv("WORKBENCH_SEED"));
    run.ensemble_size = o.drops;
    run.tolerance = o.tolerance;
    run.threads = o.threads;
    run.output = o.out;
    run.validate();
    if (!(o.min_distance >= 1.0 && o.max_distance >= o.min_distance))
        throw UsageError("distances must satisfy 1 <= --min-distance <= --max-distance");

    fs::create_directories(run.output);
    CalibrationResult calibration;
    if (o.calibrate)
    {
        calibration = calibrate_cell(c, o.calibration_drops, run.tolerance, run.seed, run.threads);
        io::write_file_atomic(run.output / io::calibration_file_name(c.band, c.condition, c.mode),
                              io::calibration_to_json(calibration));
    }
    else
    {
        calibration = load_calibration(c, o.calibration_dir);
    }

    SynthesisConfig config;
    config.band = c.band;
    config.condition = c.condition;
    config.mode = c.mode;
    config.seed = run.seed;
    config.decay = calibration.decay;
    const ChannelGenerator generator(config);
    const DistanceRange distances{o.min_distance, o.max_distance};

    io::PdpMetadata meta;
    meta.resolution_ns = config.effective_resolution_ns();
    meta.band = c.band;
    meta.condition = c.condition;
    meta.mode = c.mode;

    std::vector<std::optional<ChannelStats>> measured(run.ensemble_size);
    std::vector<std::optional<ChannelStats>> truth(run.ensemble_size);
    parallel_for(run.ensemble_size, run.threads, [&](std::size_t i) {
        const Drop drop = generator.generate_drop(i, distances);
        const fs::path stem = run.output / drop_stem(i);
        io::write_pdp(stem, drop.pdp, meta);
        io::write_file_atomic(fs::path(stem.string() + ".truth.json"), io::truth_to_json(drop.truth));
        measured[i] = channel_stats(drop.pdp, o.mti, o.threshold);
        truth[i] = drop.truth.stats();
    });

    json summary = stats_summary(measured);
    summary["truth"] = stats_summary(truth);
    summary["config"] = {
        {"band", std::string(to_string(c.band))},
        {"condition", std::string(to_string(c.condition))},
        {"mode", std::string(to_string(c.mode))},
        {"drops", run.ensemble_size},
        {"seed", run.seed},
        {"min_distance_m", o.min_distance},
        {"max_distance_m", o.max_distance},
        {"mti_ns", o.mti},
        {"threshold_db", o.threshold},
        {"resolution_ns", config.effective_resolution_ns()},
        {"cluster_decay_ns", config.decay.cluster_decay_ns},
        {"intra_decay_ns", config.decay.intra_decay_ns},
        {"void_mean_ns", config.decay.void_mean_ns},
    };
    const std::string text = summary.dump(2) + "\n";
    io::write_file_atomic(run.output / "summary.json", text);

    out << "wrote " << run.ensemble_size << " drop(s) for " << describe(c) << " to " << run.output.string() << "\n";
    if (!summary["all_absent"].get<bool>())
        out << "mean RMS DS " << fmt(summary["rms_ds_ns"]["mean"].get<double>()) << " ns, mean clusters "
            << fmt(summary["num_clusters"]["mean"].get<double>()) << ", mean MPCs/cluster "
            << fmt(summary["mpcs_per_cluster"]["mean"].get<double>()) << "\n";
    return kExitOk;
}

// --- analyze ---

struct AnalyzeOptions
{
    std::string input;
    std::string out;
    double mti = kDefaultMtiNs;
    double threshold = kDefaultThresholdDb;
    unsigned threads = 1;
};

struct AnalyzedPdp
{
    std::optional<ChannelStats> stats;
    std::optional<std::string> failure;
};

std::vector<AnalyzedPdp> analyze_files(const std::vector<fs::path>& files, double mti, double threshold,
                                       unsigned threads)
{
    std::vector<AnalyzedPdp> results(files.size());
    parallel_for(files.size(), threads, [&](std::size_t i) {
        try
        {
            const io::PdpFile f = io::read_pdp(files[i]);
            results[i].stats = channel_stats(f.pdp, mti, threshold);
        }
        catch (const std::exception& e)
        {
            results[i].failure = e.what();
        }
    });
    return results;
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err)
{
    if (!(o.mti > 0.0))
        throw UsageError("--mti must be positive");
    const fs::path input = o.input;
    const std::vector<fs::path> files = pdp_files(input);
    if (files.empty())
        throw DataError("no PDP CSV files in '" + input.string() + "'");

    const std::vector<AnalyzedPdp> results = analyze_files(files, o.mti, o.threshold, o.threads);

    std::string csv = "pdp,detected,rms_ds_ns,num_clusters,num_mpcs,mpcs_per_cluster\n";
    std::vector<ChannelStats> present;
    std::vector<std::string> skipped;
    std::size_t absent = 0;
    for (std::size_t i = 0; i < files.size(); ++i)
    {
        const std::string name = files[i].filename().string();
        if (results[i].failure)
        {
            err << "warning: skipping " << name << ": " << *results[i].failure << "\n";
            skipped.push_back(name + ": " + *results[i].failure);
            continue;
        }
        const auto& s = results[i].stats;
        if (!s)
        {
            ++absent;
            csv += name + ",0,,0,0,\n";
            continue;
        }
        present.push_back(*s);
        const double per_cluster = static_cast<double>(s->total_mpcs()) / static_cast<double>(s->num_clusters);
        csv += name + ",1," + fmt(s->rms_ds_ns) + "," + std::to_string(s->num_clusters) + "," +
               std::to_string(s->total_mpcs()) + "," + fmt(per_cluster) + "\n";
    }
    if (skipped.size() == files.size())
        throw DataError("none of the " + std::to_string(files.size()) + " PDP file(s) in '" + input.string() +
                        "' could be read");

    std::optional<EnsembleSummary> summary;
    if (!present.empty())
        summary = ensemble_summary(present);

    const fs::path out_dir = o.out.empty() ? input : fs::path(o.out);
    fs::create_directories(out_dir);
    io::write_file_atomic(out_dir / "stats.csv", csv);
    io::write_file_atomic(out_dir / "analysis_summary.json", io::summary_to_json(summary, absent, skipped));

    out << "analyzed " << files.size() - skipped.size() << " PDP(s): " << present.size() << " with MPCs, " << absent
        << " noise-only, " << skipped.size() << " skipped\n";
    return kExitOk;
}

// --- compare-3gpp ---

struct CompareOptions
{
    std::string condition;
    std::vector<std::string> simulated;
    std::string out;
    std::string json_out;
};

SimulatedCell read_simulated(const fs::path& path, LinkCondition condition)
{
    const json j = parse_json_file(path);
    try
    {
        const json& cfg = j.at("config");
        const Band band = parse_band(cfg.at("band").get<std::string>());
        if (parse_condition(cfg.at("condition").get<std::string>()) != condition ||
            parse_mode(cfg.at("mode").get<std::string>()) != AntennaMode::Omnidirectional)
            throw DataError(path.string() + ": simulated ensemble is not omni " + std::string(to_string(condition)));
        if (j.at("all_absent").get<bool>())
            throw DataError(path.string() + ": simulated ensemble has no detected MPCs");
        return {band, j.at("rms_ds_ns").at("mean").get<double>(), j.at("num_clusters").at("mean").get<double>(),
                j.at("mpcs_per_cluster").at("mean").get<double>()};
    }
    catch (const json::exception& e)
    {
        throw DataError(path.string() + ": not a simulate summary (" + e.what() + ")");
    }
}

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream&)
{
    const LinkCondition condition = parse_selector(parse_condition, o.condition, "--condition");
    if (condition == LinkCondition::NlosBest)
        throw UsageError("--condition: the 3GPP InH-Office model has LOS and NLOS only");

    std::vector<SimulatedCell> simulated;
    for (const auto& p : o.simulated)
    {
        fs::path path = p;
        if (fs::is_directory(path))
            path /= "summary.json";
        simulated.push_back(read_simulated(path, condition));
    }

    const ComparisonReport report = build_comparison(condition, simulated);
    const std::string text = render_text(report);
    if (!o.out.empty())
        io::write_file_atomic(o.out, text);
    if (!o.json_out.empty())
        io::write_file_atomic(o.json_out, report_to_json(report));
    out << text;
    return kExitOk;
}

// --- plotdata ---

struct PlotOptions
{
    std::string kind;
    std::string condition = "LOS";
    std::string mode = "omni";
    std::string band;
    std::string input;
    std::string out;
    double min_distance = 1.0;
    double max_distance = 50.0;
    std::size_t points = 50;
    double mti = kDefaultMtiNs;
    double threshold = kDefaultThresholdDb;
};

std::string pathloss_series(const PlotOptions& o)
{
    const LinkCondition cond = parse_selector(parse_condition, o.condition, "--condition");
    const AntennaMode mode = parse_selector(parse_mode, o.mode, "--mode");
    if (!has_condition(mode, cond))
        throw UsageError(std::string(to_string(cond)) + " has no " + std::string(to_string(mode)) + " data");
    if (!(o.min_distance >= 1.0 && o.max_distance > o.min_distance) || o.points < 2)
        throw UsageError("need 1 <= --min-distance < --max-distance and --points >= 2");

    std::vector<Band> bands(kAllBands.begin(), kAllBands.end());
    if (!o.band.empty())
        bands = {parse_selector(parse_band, o.band, "--band")};

    std::vector<double> distances;
    const double step = std::log10(o.max_distance / o.min_distance) / static_cast<double>(o.points - 1);
    for (std::size_t i = 0; i < o.points; ++i)
        distances.push_back(o.min_distance * std::pow(10.0, step * static_cast<double>(i)));
    distances.back() = o.max_distance;

    std::string csv = "series,band_ghz,d3d_m,path_loss_db\n";
    auto emit = [&](const char* series, Band band, double d, double pl) {
        csv += std::string(series) + "," + std::string(to_string(band)) + "," + fmt(d) + "," + fmt(pl) + "\n";
    };
    const CIParams multi = lookup_ci(Band::GHz28, cond, mode, FitScope::MultiBand);
    const CIFParams cif = lookup_cif(cond, mode);
    for (Band band : bands)
    {
        const FrequencyGHz f = band_frequency(band);
        const CIParams single = lookup_ci(band, cond, mode);
        for (double d : distances)
            emit("ci_single", band, d, ci_path_loss(single, f, d));
        for (double d : distances)
            emit("ci_multi", band, d, ci_path_loss(multi, f, d));
        for (double d : distances)
            emit("cif", band, d, cif_path_loss(cif, f, d));
    }

    if (o.input.empty())
        return csv;
    const fs::path dir = o.input;
    if (!fs::is_directory(dir))
        throw DataError("'" + dir.string() + "' is not a directory");
    std::vector<fs::path> truths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().filename().string().ends_with(".truth.json"))
            truths.push_back(entry.path());
    std::sort(truths.begin(), truths.end());
    for (const auto& path : truths)
    {
        const std::string name = path.filename().string();
        const fs::path sidecar = dir / (name.substr(0, name.size() - std::string(".truth.json").size()) + ".json");
        const io::PdpMetadata meta = io::metadata_from_json(io::read_file(sidecar));
        if (!meta.band || (meta.condition && *meta.condition != cond) || (meta.mode && *meta.mode != mode))
            continue;
        if (std::find(bands.begin(), bands.end(), *meta.band) == bands.end())
            continue;
        const DropTruth t = io::truth_from_json(io::read_file(path));
        emit("drops", *meta.band, t.d3d_m, t.path_loss_db);
    }
    return csv;
}

std::string ds_cdf_series(const PlotOptions& o)
{
    if (o.input.empty())
        throw UsageError("--kind ds_cdf needs --input with a directory of PDPs");
    const std::vector<fs::path> files = pdp_files(o.input);
    std::vector<double> ds;
    for (const auto& r : analyze_files(files, o.mti, o.threshold, 1))
        if (r.stats)
            ds.push_back(r.stats->rms_ds_ns);
    std::sort(ds.begin(), ds.end());
    std::string csv = "rms_ds_ns,cdf\n";
    for (std::size_t i = 0; i < ds.size(); ++i)
        csv += fmt(ds[i]) + "," + fmt(static_cast<double>(i + 1) / static_cast<double>(ds.size())) + "\n";
    return csv;
}

int cmd_plotdata(const PlotOptions& o, std::ostream& out, std::ostream&)
{
    std::string csv;
    if (o.kind == "pathloss")
        csv = pathloss_series(o);
    else if (o.kind == "ds_cdf")
        csv = ds_cdf_series(o);
    else
        throw UsageError("--kind must be pathloss or ds_cdf, not '" + o.kind + "'");
    if (o.out.empty())
        out << csv;
    else
        io::write_file_atomic(o.out, csv);
    return kExitOk;
}

} // namespace

std::uint64_t resolve_seed(const std::optional<std::string>& flag, const char* env_value)
{
    std::string_view text;
    const char* source = "--seed";
    if (flag)
        text = *flag;
    else if (env_value != nullptr && *env_value != '\0')
    {
        text = env_value;
        source = "WORKBENCH_SEED";
    }
    else
        return kDefaultSeed;

    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string(source) + " must be an unsigned 64-bit integer, got '" +
                                    std::string(text) + "'");
    return seed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Indoor mmWave / sub-THz channel workbench", "icw"};
    app.require_subcommand(1);
    std::function<int()> action;

    FitOptions fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit CI or CIF path loss parameters to a measurement CSV");
    fit_cmd->add_option("--input", fit.input, "Measurement CSV")->required();
    fit_cmd->add_option("--model", fit.model, "ci or cif")->required();
    fit_cmd->add_option("--out", fit.out, "Fit JSON path; residuals go next to it");
    add_selectors(fit_cmd, fit.filter, false);
    fit_cmd->callback([&] { action = [&] { return cmd_fit(fit, out, err); }; });

    CalibrateOptions cal;
    auto* cal_cmd = app.add_subcommand("calibrate", "Calibrate generator decay constants against mean RMS DS");
    add_selectors(cal_cmd, cal.cell, false);
    cal_cmd->add_flag("--all", cal.all, "Calibrate every tabulated cell");
    cal_cmd->add_option("--drops", cal.drops, "Drops per calibration probe")->capture_default_str();
    cal_cmd->add_option("--tolerance", cal.tolerance, "Relative tolerance on mean RMS DS")->capture_default_str();
    cal_cmd->add_option("--out-dir", cal.out_dir, "Directory for decay.*.json files")->capture_default_str();
    cal_cmd->add_option("--seed", cal.seed, "Seed (overrides WORKBENCH_SEED)");
    cal_cmd->add_option("--threads", cal.threads, "Worker threads")->capture_default_str();
    cal_cmd->callback([&] { action = [&] { return cmd_calibrate(cal, out, err); }; });

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a calibrated drop ensemble");
    add_selectors(sim_cmd, sim.cell, true);
    sim_cmd->add_option("--drops", sim.drops, "Number of drops")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Seed (overrides WORKBENCH_SEED)");
    sim_cmd->add_option("--out", sim.out, "Output directory")->required();
    sim_cmd->add_option("--calibration-dir", sim.calibration_dir, "Where decay.*.json files live")
        ->capture_default_str();
    sim_cmd->add_flag("--calibrate", sim.calibrate, "Calibrate this cell first and store the result in --out");
    sim_cmd->add_option("--calibration-drops", sim.calibration_drops, "Drops per probe with --calibrate")
        ->capture_default_str();
    sim_cmd->add_option("--tolerance", sim.tolerance, "Calibration tolerance with --calibrate")->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
    sim_cmd->add_option("--min-distance", sim.min_distance, "Smallest TX-RX distance, m")->capture_default_str();
    sim_cmd->add_option("--max-distance", sim.max_distance, "Largest TX-RX distance, m")->capture_default_str();
    sim_cmd->add_option("--mti", sim.mti, "Minimum inter-cluster void, ns")->capture_default_str();
    sim_cmd->add_option("--threshold", sim.threshold, "MPC threshold above the noise floor, dB")
        ->capture_default_str();
    sim_cmd->callback([&] { action = [&] { return cmd_simulate(sim, out, err); }; });

    AnalyzeOptions an;
    auto* an_cmd = app.add_subcommand("analyze", "Extract MPC and cluster statistics from a PDP directory");
    an_cmd->add_option("--input", an.input, "Directory of PDP CSV + JSON sidecar files")->required();
    an_cmd->add_option("--out", an.out, "Output directory (default: the input directory)");
    an_cmd->add_option("--mti", an.mti, "Minimum inter-cluster void, ns")->capture_default_str();
    an_cmd->add_option("--threshold", an.threshold, "MPC threshold above the noise floor, dB")->capture_default_str();
    an_cmd->add_option("--threads", an.threads, "Worker threads")->capture_default_str();
    an_cmd->callback([&] { action = [&] { return cmd_analyze(an, out, err); }; });

    CompareOptions cmp;
    auto* cmp_cmd = app.add_subcommand("compare-3gpp", "Compare omnidirectional statistics with 3GPP InH-Office");
    cmp_cmd->add_option("--condition", cmp.condition, "LOS or NLOS")->required();
    cmp_cmd->add_option("--simulated", cmp.simulated, "simulate output directories or summary.json files");
    cmp_cmd->add_option("--out", cmp.out, "Also write the text table here");
    cmp_cmd->add_option("--json", cmp.json_out, "Write the report as JSON here");
    cmp_cmd->callback([&] { action = [&] { return cmd_compare(cmp, out, err); }; });

    PlotOptions plot;
    auto* plot_cmd = app.add_subcommand("plotdata", "Emit CSV series for plotting");
    plot_cmd->add_option("--kind", plot.kind, "pathloss or ds_cdf")->required();
    plot_cmd->add_option("--condition", plot.condition, "LOS, NLOS_Best or NLOS")->capture_default_str();
    plot_cmd->add_option("--mode", plot.mode, "directional or omni")->capture_default_str();
    plot_cmd->add_option("--band", plot.band, "Restrict to one band");
    plot_cmd->add_option("--input", plot.input, "simulate output (drop scatter) or PDP directory (ds_cdf)");
    plot_cmd->add_option("--out", plot.out, "CSV path (default: stdout)");
    plot_cmd->add_option("--min-distance", plot.min_distance, "m")->capture_default_str();
    plot_cmd->add_option("--max-distance", plot.max_distance, "m")->capture_default_str();
    plot_cmd->add_option("--points", plot.points, "Curve points per series")->capture_default_str();
    plot_cmd->add_option("--mti", plot.mti, "Minimum inter-cluster void, ns")->capture_default_str();
    plot_cmd->add_option("--threshold", plot.threshold, "MPC threshold, dB")->capture_default_str();
    plot_cmd->callback([&] { action = [&] { return cmd_plotdata(plot, out, err); }; });

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try
    {
        return action();
    }
    catch (const UsageError& e)
    {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::invalid_argument& e) // also DomainError
    {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const CalibrationError& e)
    {
        err << "calibration error: " << e.what() << "\n";
        return kExitCalibration;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

} // namespace icw::cli
