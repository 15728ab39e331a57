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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include "support.hpp"

#include "cli.hpp"

#include "icw/fitting.hpp"
#include "icw/io.hpp"
#include "icw/parameters.hpp"
#include "icw/pathloss.hpp"
#include "icw/pdp_analysis.hpp"
#include "icw/random.hpp"
#include "icw/synthesis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace icw;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;
};

/// Collects failures; the first few are kept as the detail line.
class Checker
{
  public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok)
            return;
        ++failures_;
        if (failures_ <= 3)
            detail_ += (detail_.empty() ? "" : "; ") + what;
    }

    void near(double got, double want, double tol, const std::string& what)
    {
        std::ostringstream s;
        s << what << " = " << got << ", want " << want << " +- " << tol;
        expect(std::isfinite(got) && std::abs(got - want) <= tol, s.str());
    }

    [[nodiscard]] Outcome outcome(const std::string& summary) const
    {
        if (failures_ == 0)
            return {true, summary + " (" + std::to_string(checks_) + " checks)"};
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + detail_};
    }

  private:
    int checks_ = 0;
    int failures_ = 0;
    std::string detail_;
};

unsigned worker_count()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < worker_count(); ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                body(i);
        });
}

std::string fixed(double v, int digits = 2)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Cell
{
    Band band;
    LinkCondition condition;
    AntennaMode mode;

    [[nodiscard]] std::string name() const
    {
        return std::string(to_string(band)) + "GHz " + std::string(to_string(condition)) + " " +
               std::string(to_string(mode));
    }
};

std::vector<Cell> all_cells()
{
    std::vector<Cell> cells;
    for (AntennaMode mode : {AntennaMode::Directional, AntennaMode::Omnidirectional})
        for (LinkCondition c : {LinkCondition::Los, LinkCondition::NlosBest, LinkCondition::Nlos})
            if (has_condition(mode, c))
                for (Band b : kAllBands)
                    cells.push_back({b, c, mode});
    return cells;
}

MeasurementRecord record_for(double f_ghz, double d, double path_loss_db, LinkCondition c, AntennaMode m)
{
    MeasurementRecord r;
    r.f_ghz = f_ghz;
    r.d3d_m = d;
    r.pt_dbm = 10.0;
    r.gt_dbi = 2.0;
    r.gr_dbi = 3.0;
    r.gsym_db = 0.0;
    r.pr_dbm = r.pt_dbm + r.gt_dbi + r.gr_dbi + r.gsym_db - path_loss_db;
    r.condition = c;
    r.mode = m;
    return r;
}

double log_uniform(Rng& rng, double lo, double hi)
{
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

std::map<std::string, std::string> read_tree(const fs::path& root)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file())
            out[fs::relative(e.path(), root).generic_string()] = io::read_file(e.path());
    return out;
}

int run_cli(const std::vector<std::string>& args, std::string* stdout_text = nullptr)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (stdout_text)
        *stdout_text = out.str();
    if (code != 0)
        std::fprintf(stderr, "icw %s: %s", args.empty() ? "" : args[0].c_str(), err.str().c_str());
    return code;
}

// --- 1: free-space path loss at 1 m ---

Outcome fspl_constants()
{
    Checker c;
    const std::pair<double, double> expected[] = {{1.0, 32.40}, {28.0, 61.34}, {73.0, 69.67}, {142.0, 75.45}};
    for (auto [f, want] : expected)
        c.near(fspl_1m(FrequencyGHz(f)), want, 0.01, "FSPL(" + fixed(f, 0) + " GHz)");
    return c.outcome("32.40 / 61.34 / 69.67 / 75.45 dB");
}

// --- 2: CIF reduces to CI ---

Outcome cif_degeneracy()
{
    Checker c;
    Rng rng = substream(kDefaultSeed, 2);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        const FrequencyGHz f(uniform(rng, 0.5, 300.0));
        const double d = log_uniform(rng, 1.0, 1000.0);
        const double n = uniform(rng, 1.0, 5.0);
        const double f0 = uniform(rng, 1.0, 200.0);
        const CIParams ci{n, 0.0};

        const double flat = std::abs(cif_path_loss(CIFParams{n, 0.0, f0, 0.0}, f, d) - ci_path_loss(ci, f, d));
        const double at_f0 = std::abs(cif_path_loss(CIFParams{n, uniform(rng, -1.0, 1.0), f.value(), 0.0}, f, d) -
                                      ci_path_loss(ci, f, d));
        worst = std::max({worst, flat, at_f0});
        c.expect(flat <= 1e-9 && at_f0 <= 1e-9, "mismatch at f=" + fixed(f.value()) + " d=" + fixed(d));
    }
    std::ostringstream s;
    s << "max |CIF - CI| = " << worst << " dB over 10^4 points";
    return c.outcome(s.str());
}

// --- 3: parameter recovery from synthetic campaigns ---

Outcome fit_recovery()
{
    Checker c;
    std::vector<Cell> cells = all_cells();
    std::vector<std::string> failures(cells.size());
    std::vector<std::pair<double, double>> errors(cells.size());
    parallel_for(cells.size(), [&](std::size_t k) {
        const Cell& cell = cells[k];
        const CIParams truth = lookup_ci(cell.band, cell.condition, cell.mode);
        const FrequencyGHz f = band_frequency(cell.band);
        Rng rng = substream(kDefaultSeed, 300 + k);
        std::vector<MeasurementRecord> records;
        records.reserve(10000);
        for (int i = 0; i < 10000; ++i)
        {
            const double d = log_uniform(rng, 2.0, 40.0);
            records.push_back(record_for(f.value(), d, ci_path_loss(truth, f, d, truth.sigma_db * standard_normal(rng)),
                                         cell.condition, cell.mode));
        }
        const CIFit fit = fit_ci(records);
        errors[k] = {fit.params.n - truth.n, fit.params.sigma_db - truth.sigma_db};
    });
    double worst_n = 0.0;
    double worst_sigma = 0.0;
    for (std::size_t k = 0; k < cells.size(); ++k)
    {
        worst_n = std::max(worst_n, std::abs(errors[k].first));
        worst_sigma = std::max(worst_sigma, std::abs(errors[k].second));
        c.expect(std::abs(errors[k].first) <= 0.05, cells[k].name() + " n off by " + fixed(errors[k].first, 3));
        c.expect(std::abs(errors[k].second) <= 0.2, cells[k].name() + " sigma off by " + fixed(errors[k].second, 3));
    }

    double worst_cif = 0.0;
    for (LinkCondition cond : {LinkCondition::Los, LinkCondition::Nlos})
    {
        const CIFParams truth = lookup_cif(cond, AntennaMode::Omnidirectional);
        Rng rng = substream(kDefaultSeed, cond == LinkCondition::Los ? 350 : 351);
        std::vector<MeasurementRecord> records;
        for (Band b : kAllBands)
        {
            const FrequencyGHz f = band_frequency(b);
            for (int i = 0; i < 10000; ++i)
            {
                const double d = log_uniform(rng, 2.0, 40.0);
                records.push_back(record_for(f.value(), d,
                                             cif_path_loss(truth, f, d, truth.sigma_db * standard_normal(rng)), cond,
                                             AntennaMode::Omnidirectional));
            }
        }
        const CIFFit fit = fit_cif(records);
        const std::string tag = std::string(to_string(cond)) + " CIF ";
        c.near(fit.params.n, truth.n, 0.05, tag + "n");
        c.near(fit.params.b, truth.b, 0.05, tag + "b");
        worst_cif = std::max({worst_cif, std::abs(fit.params.n - truth.n), std::abs(fit.params.b - truth.b)});
    }
    return c.outcome("15 CI cells, worst |dn| " + fixed(worst_n, 3) + ", worst |dsigma| " + fixed(worst_sigma, 3) +
                     " dB; CIF LOS/NLOS worst " + fixed(worst_cif, 3));
}

// --- 4: count-weighted center frequency ---

Outcome weighted_f0()
{
    Checker c;
    std::vector<MeasurementRecord> records;
    for (Band b : kAllBands)
        for (int i = 0; i < 7; ++i)
            records.push_back(record_for(band_frequency(b).value(), 2.0 + i, 80.0, LinkCondition::Los,
                                         AntennaMode::Omnidirectional));
    const double f0 = weighted_center_frequency(records).value();
    c.expect(f0 == 81.0, "f0 = " + fixed(f0, 12));
    c.expect(f0 == kMultiBandF0GHz, "table f0 differs");
    return c.outcome("f0 = " + fixed(f0, 1) + " GHz");
}

// --- 5: excess loss differences between bands and antenna modes ---

Outcome excess_loss_claims()
{
    Checker c;
    auto n_of = [](Band b, AntennaMode m) { return lookup_ci(b, LinkCondition::Los, m).n; };
    auto delta = [](double n_hi, double n_lo, double d) { return excess_loss_db(n_hi, d) - excess_loss_db(n_lo, d); };

    const double n142 = n_of(Band::GHz142, AntennaMode::Directional);
    const double vs28_10 = delta(n142, n_of(Band::GHz28, AntennaMode::Directional), 10.0);
    const double vs73_10 = delta(n142, n_of(Band::GHz73, AntennaMode::Directional), 10.0);
    const double vs28_40 = delta(n142, n_of(Band::GHz28, AntennaMode::Directional), 40.0);
    const double vs73_40 = delta(n142, n_of(Band::GHz73, AntennaMode::Directional), 40.0);
    c.near(vs28_10, 1.5, 0.05, "142-28 @10 m");
    c.near(vs73_10, 4.2, 0.05, "142-73 @10 m");
    c.near(vs28_40, 2.4, 0.05, "142-28 @40 m");
    c.near(vs73_40, 6.7, 0.05, "142-73 @40 m");
    for (double v : {vs28_10, vs73_10})
        c.expect(v >= 1.5 - 0.05 && v <= 4.2 + 0.05, "10 m delta outside [1.5, 4.2]");
    for (double v : {vs28_40, vs73_40})
        c.expect(v >= 2.4 - 0.05 && v <= 6.7 + 0.05, "40 m delta outside [2.4, 6.7]");

    const double omni142 = n_of(Band::GHz142, AntennaMode::Omnidirectional);
    const double od10 = delta(n142, omni142, 10.0);
    const double od40 = delta(n142, omni142, 40.0);
    c.near(od10, 3.1, 0.05, "dir-omni 142 @10 m");
    c.near(od40, 5.0, 0.05, "dir-omni 142 @40 m");

    return c.outcome("142 vs 28/73: " + fixed(vs28_10) + "/" + fixed(vs73_10) + " dB @10 m, " + fixed(vs28_40) + "/" +
                     fixed(vs73_40) + " dB @40 m; omni saves " + fixed(od10) + "/" + fixed(od40) + " dB");
}

// --- 6: 3GPP comparison tables ---

Outcome table_reproduction()
{
    Checker c;
    const fs::path golden(ICW_GOLDEN_DIR);
    icw::test::TempDir dir("accept6");
    for (std::string cond : {"LOS", "NLOS"})
    {
        std::string text;
        const fs::path json = dir.path() / (cond + ".json");
        c.expect(run_cli({"compare-3gpp", "--condition", cond, "--json", json.string()}, &text) == 0,
                 "compare-3gpp " + cond + " failed");
        c.expect(text == io::read_file(golden / ("compare_3gpp_" + cond + ".txt")), cond + " text differs from golden");
        c.expect(fs::exists(json) &&
                     io::read_file(json) == io::read_file(golden / ("compare_3gpp_" + cond + ".json")),
                 cond + " JSON differs from golden");
    }

    struct Printed
    {
        LinkCondition cond;
        double n, sigma, ds28, ds73;
        int clusters, mpcs;
    };
    for (const Printed p : {Printed{LinkCondition::Los, 1.73, 3.00, 20.40, 20.21, 15, 20},
                            Printed{LinkCondition::Nlos, 3.19, 8.29, 27.40, 21.52, 19, 20}})
    {
        const ThreeGPPReference r = three_gpp_reference(p.cond);
        const std::string tag = "3GPP " + std::string(to_string(p.cond)) + " ";
        c.expect(r.n == p.n, tag + "n");
        c.expect(r.sigma_db == p.sigma, tag + "sigma");
        c.expect(r.mu_ds_ns(Band::GHz28) == p.ds28, tag + "DS 28");
        c.expect(r.mu_ds_ns(Band::GHz73) == p.ds73, tag + "DS 73");
        c.expect(r.num_clusters == p.clusters, tag + "clusters");
        c.expect(r.mpcs_per_cluster == p.mpcs, tag + "MPCs");
        bool unavailable = false;
        try
        {
            (void)r.mu_ds_ns(Band::GHz142);
        }
        catch (const NotAvailableError&)
        {
            unavailable = true;
        }
        c.expect(unavailable, tag + "DS at 142 GHz should be unavailable");
    }
    return c.outcome("LOS and NLOS reports match the golden tables");
}

// --- 7: calibrated synthesis ensembles through the analysis pipeline ---

struct EnsembleResult
{
    Cell cell;
    ChannelTargets targets;
    EnsembleSummary summary;
    std::size_t absent = 0;
};

EnsembleResult simulate_cell(const Cell& cell, std::size_t drops)
{
    CalibrationOptions opts;
    opts.drops = 10000;
    opts.threads = worker_count();
    const CalibrationResult cal = calibrate_decay(cell.band, cell.condition, cell.mode, opts);

    SynthesisConfig config;
    config.band = cell.band;
    config.condition = cell.condition;
    config.mode = cell.mode;
    config.decay = cal.decay;
    const ChannelGenerator generator(config);
    const DistanceRange distances;

    std::vector<std::optional<ChannelStats>> per_drop(drops);
    parallel_for(drops, [&](std::size_t i) {
        const Drop drop = generator.generate_drop(i, distances);
        per_drop[i] = channel_stats(drop.pdp, config.mti_ns);
    });

    EnsembleResult r{cell, generator.targets(), {}, 0};
    std::vector<ChannelStats> present;
    present.reserve(drops);
    for (auto& s : per_drop)
    {
        if (s)
            present.push_back(std::move(*s));
        else
            ++r.absent;
    }
    r.summary = ensemble_summary(present);
    return r;
}

Outcome synthesis_ensembles()
{
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    std::vector<EnsembleResult> results;
    for (const Cell& cell : all_cells())
        results.push_back(simulate_cell(cell, 100000));

    double worst_nc = 0.0;
    double worst_mpc = 0.0;
    double worst_ds = 0.0;
    for (const auto& r : results)
    {
        const double e_nc = r.summary.num_clusters.mean / r.targets.mu_nc - 1.0;
        const double e_mpc = r.summary.mpcs_per_cluster.mean / r.targets.mu_mpc - 1.0;
        const double e_ds = r.summary.rms_ds_ns.mean / r.targets.mu_ds_ns - 1.0;
        worst_nc = std::max(worst_nc, std::abs(e_nc));
        worst_mpc = std::max(worst_mpc, std::abs(e_mpc));
        worst_ds = std::max(worst_ds, std::abs(e_ds));
        const std::string n = r.cell.name();
        c.expect(r.absent == 0, n + ": " + std::to_string(r.absent) + " drops without MPCs");
        c.expect(std::abs(e_nc) <= 0.03, n + " mean NC " + fixed(r.summary.num_clusters.mean) + " vs " +
                                             fixed(r.targets.mu_nc));
        c.expect(std::abs(e_mpc) <= 0.05, n + " mean MPC " + fixed(r.summary.mpcs_per_cluster.mean) + " vs " +
                                              fixed(r.targets.mu_mpc));
        c.expect(std::abs(e_ds) <= 0.10, n + " mean DS " + fixed(r.summary.rms_ds_ns.mean) + " vs " +
                                             fixed(r.targets.mu_ds_ns));
    }
    for (std::size_t k = 0; k + 2 < results.size(); k += 3)
    {
        const double ds28 = results[k].summary.rms_ds_ns.mean;
        const double ds73 = results[k + 1].summary.rms_ds_ns.mean;
        const double ds142 = results[k + 2].summary.rms_ds_ns.mean;
        c.expect(ds28 > ds73 && ds73 > ds142, results[k].cell.name() + " DS not decreasing in frequency");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c.outcome("15 cells x 10^5 drops, worst rel. error NC " + fixed(100 * worst_nc, 1) + "%, MPC " +
                     fixed(100 * worst_mpc, 1) + "%, DS " + fixed(100 * worst_ds, 1) + "% in " + fixed(secs, 1) +
                     " s");
}

// --- 8: structural properties of the PDP pipeline ---

PowerDelayProfile random_pdp(Rng& rng, double& floor_dbm)
{
    const double resolution = std::array{1.0, 2.0, 2.5}[static_cast<std::size_t>(uniform_int(rng, 0, 2))];
    const double spacing = resolution / static_cast<double>(uniform_int(rng, 1, 4));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 60, 400));
    floor_dbm = uniform(rng, -120.0, -70.0);
    std::vector<double> lin(n);
    for (auto& v : lin)
        v = std::pow(10.0, (floor_dbm + uniform(rng, -1.0, 1.0)) / 10.0);
    const auto peaks = uniform_int(rng, 0, 12);
    for (std::int64_t k = 0; k < peaks; ++k)
    {
        // Peaks stay out of the tail used for the floor estimate.
        const auto at = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n * 7 / 10)));
        lin[at] += std::pow(10.0, (floor_dbm + uniform(rng, 0.0, 40.0)) / 10.0);
    }
    std::vector<double> db(n);
    std::transform(lin.begin(), lin.end(), db.begin(), [](double v) { return 10.0 * std::log10(v); });
    return PowerDelayProfile(resolution, uniform(rng, 0.0, 50.0), spacing, std::move(db));
}

double oracle_rms_ds(const std::vector<MultipathComponent>& mpcs)
{
    long double p = 0, m1 = 0;
    for (const auto& c : mpcs)
    {
        const long double w = std::pow(10.0L, static_cast<long double>(c.power_dbm) / 10.0L);
        p += w;
        m1 += w * c.delay_ns;
    }
    const long double mean = m1 / p;
    long double m2 = 0;
    for (const auto& c : mpcs)
        m2 += std::pow(10.0L, static_cast<long double>(c.power_dbm) / 10.0L) * (c.delay_ns - mean) * (c.delay_ns - mean);
    return static_cast<double>(std::sqrt(m2 / p));
}

Outcome structural_properties()
{
    Checker c;
    Rng rng = substream(kDefaultSeed, 8);
    const double threshold = kDefaultThresholdDb;
    const double mti = kDefaultMtiNs;
    std::size_t with_mpcs = 0;
    for (int trial = 0; trial < 10000; ++trial)
    {
        double floor_in = 0.0;
        const PowerDelayProfile pdp = random_pdp(rng, floor_in);
        const double floor = estimate_noise_floor(pdp);
        const auto mpcs = detect_mpcs_with_floor(pdp, floor, threshold);
        const std::string at = "PDP " + std::to_string(trial) + ": ";

        // Peak threshold and spacing.
        for (std::size_t i = 0; i < mpcs.size(); ++i)
        {
            c.expect(mpcs[i].power_dbm >= floor + threshold, at + "MPC below threshold");
            if (i > 0)
                c.expect(mpcs[i].delay_ns - mpcs[i - 1].delay_ns > pdp.resolution_ns(), at + "MPCs too close");
        }
        // Every qualifying local maximum is either kept or dominated by a kept MPC within one resolution.
        for (std::size_t i = 0; i < pdp.size(); ++i)
        {
            const double p = pdp.power_dbm(i);
            const bool local_max = (i == 0 || p > pdp.power_dbm(i - 1)) && (i + 1 == pdp.size() || p >= pdp.power_dbm(i + 1));
            if (!local_max || p < floor + threshold)
                continue;
            const bool covered = std::any_of(mpcs.begin(), mpcs.end(), [&](const MultipathComponent& m) {
                return std::abs(m.delay_ns - pdp.delay_ns(i)) <= pdp.resolution_ns() + 1e-9 && m.power_dbm >= p;
            });
            c.expect(covered, at + "qualifying peak dropped");
        }
        if (mpcs.empty())
        {
            c.expect(!channel_stats(pdp, mti).has_value(), at + "stats present without MPCs");
            continue;
        }
        ++with_mpcs;

        // Cluster gaps.
        const auto clusters = partition_clusters(mpcs, mti);
        std::vector<MultipathComponent> joined;
        for (std::size_t k = 0; k < clusters.size(); ++k)
        {
            const auto& cl = clusters[k].mpcs;
            c.expect(!cl.empty(), at + "empty cluster");
            for (std::size_t j = 1; j < cl.size(); ++j)
                c.expect(cl[j].delay_ns - cl[j - 1].delay_ns <= mti, at + "intra-cluster gap above MTI");
            if (k > 0)
                c.expect(cl.front().delay_ns - clusters[k - 1].mpcs.back().delay_ns > mti,
                         at + "inter-cluster gap within MTI");
            joined.insert(joined.end(), cl.begin(), cl.end());
        }
        c.expect(joined == mpcs, at + "clusters do not partition the MPCs");

        // RMS DS against an oracle, then under translation and power scaling.
        const double ds = rms_delay_spread(mpcs);
        const double tol = 1e-9 * (1.0 + ds);
        c.expect(std::abs(ds - oracle_rms_ds(mpcs)) <= tol, at + "RMS DS differs from oracle");
        const double shift = uniform(rng, -20.0, 200.0);
        const double gain = uniform(rng, -60.0, 60.0);
        auto moved = mpcs;
        for (auto& m : moved)
        {
            m.delay_ns += shift;
            m.power_dbm += gain;
        }
        c.expect(std::abs(rms_delay_spread(moved) - ds) <= 1e-7 * (1.0 + ds), at + "RMS DS not invariant");

        const auto stats = channel_stats(pdp, mti);
        c.expect(stats.has_value() && stats->num_clusters == static_cast<int>(clusters.size()) &&
                     stats->total_mpcs() == static_cast<int>(mpcs.size()),
                 at + "channel_stats disagrees with detect/partition");
    }

    // Omnidirectional synthesis against a per-bin linear sum.
    for (int trial = 0; trial < 10000; ++trial)
    {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 10, 80));
        const auto captures = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        std::vector<DirectionalPdp> dirs;
        std::vector<long double> expected(n, 0.0L);
        for (std::size_t k = 0; k < captures; ++k)
        {
            std::vector<double> p(n);
            for (auto& v : p)
                v = uniform(rng, -120.0, -40.0);
            DirectionalPdp d{static_cast<double>(k) * 30.0, 0.0, uniform(rng, 0.0, 25.0), uniform(rng, 0.0, 25.0),
                             PowerDelayProfile(2.0, 0.0, 0.5, p)};
            for (std::size_t i = 0; i < n; ++i)
                expected[i] += std::pow(10.0L, static_cast<long double>(p[i] - d.tx_gain_dbi - d.rx_gain_dbi) / 10.0L);
            dirs.push_back(std::move(d));
        }
        const PowerDelayProfile omni = synthesize_omni(dirs);
        c.expect(omni.size() == n, "omni length");
        for (std::size_t i = 0; i < std::min(n, omni.size()); ++i)
            c.expect(std::abs(omni.power_dbm(i) - static_cast<double>(10.0L * std::log10(expected[i]))) <= 1e-9,
                     "omni bin differs from linear sum");
    }
    return c.outcome("10^4 PDPs (" + std::to_string(with_mpcs) + " with MPCs) and 10^4 omni syntheses");
}

// --- 9: reproducible simulation output ---

Outcome determinism()
{
    Checker c;
    icw::test::TempDir dir("accept9");
    const std::vector<std::pair<std::string, std::string>> cells{{"28", "LOS"}, {"142", "NLOS"}};
    for (const auto& [band, cond] : cells)
    {
        auto simulate = [&](const std::string& out, const std::string& threads) {
            return run_cli({"simulate", "--band", band, "--condition", cond, "--mode", "omni", "--drops", "300",
                            "--seed", "424242", "--out", dir.str(out), "--calibrate", "--calibration-drops", "2000",
                            "--threads", threads});
        };
        const std::string tag = band + "_" + cond;
        c.expect(simulate(tag + "_a", "1") == 0, tag + " serial run failed");
        c.expect(simulate(tag + "_b", "1") == 0, tag + " repeat run failed");
        c.expect(simulate(tag + "_c", std::to_string(std::max(2u, worker_count()))) == 0, tag + " parallel run failed");
        const auto a = read_tree(dir.path() / (tag + "_a"));
        c.expect(a.size() > 300, tag + " tree incomplete");
        c.expect(a == read_tree(dir.path() / (tag + "_b")), tag + " repeated runs differ");
        c.expect(a == read_tree(dir.path() / (tag + "_c")), tag + " serial and parallel runs differ");
    }
    return c.outcome("repeat and parallel trees byte-identical for 2 cells x 300 drops");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"FSPL constants", fspl_constants},
        {"CIF degeneracy", cif_degeneracy},
        {"fit recovery", fit_recovery},
        {"weighted f0", weighted_f0},
        {"excess-loss claims", excess_loss_claims},
        {"table reproduction", table_reproduction},
        {"synthesis ensembles", synthesis_ensembles},
        {"structural properties", structural_properties},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
