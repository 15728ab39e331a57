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

#ifndef ICW_SYNTHESIS_HPP
#define ICW_SYNTHESIS_HPP

#include "icw/parameters.hpp"
#include "icw/pdp.hpp"
#include "icw/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace icw
{

/// Exponential power-decay and void constants of the generator.
/// Decay constants may be +infinity (flat powers); the void mean must be finite.
struct CalibratedDecay
{
    double cluster_decay_ns = 10.0; ///< e-folding of cluster power vs. cluster start delay
    double intra_decay_ns = 5.0;    ///< e-folding of MPC power vs. offset inside its cluster
    double void_mean_ns = 10.0;     ///< mean inter-cluster void beyond the MTI

    void validate() const;

    /// Every constant multiplied by `factor`.
    [[nodiscard]] CalibratedDecay scaled(double factor) const;

    /// Shape used at multiplier 1 for a target mean delay spread.
    static CalibratedDecay base_for_target(double target_mu_ds_ns);

    friend bool operator==(const CalibratedDecay&, const CalibratedDecay&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 20210614;

struct SynthesisConfig
{
    Band band = Band::GHz28;
    LinkCondition condition = LinkCondition::Los;
    AntennaMode mode = AntennaMode::Omnidirectional;
    double mti_ns = 6.0;
    double resolution_ns = 0.0; ///< 0 selects the band's sounder resolution
    int oversampling = 4;       ///< PDP samples per resolution interval
    double snr_margin_db = 10.0; ///< weakest MPC above the injected noise floor
    double noise_ripple_db = 1.0; ///< noise samples spread uniformly +- this around the floor
    double tx_power_dbm = 0.0;
    std::uint64_t seed = kDefaultSeed;
    CalibratedDecay decay;

    [[nodiscard]] double effective_resolution_ns() const noexcept;
    [[nodiscard]] double sample_spacing_ns() const noexcept;
    void validate() const;
};

/// Ground truth of one generated drop. MPCs are in delay order and sit on
/// the PDP sample grid.
struct DropTruth
{
    std::vector<int> mpcs_per_cluster;
    std::vector<MultipathComponent> mpcs;
    double d3d_m = 1.0;
    double shadow_db = 0.0;
    double path_loss_db = 0.0;
    double rms_ds_ns = 0.0;

    [[nodiscard]] int num_clusters() const noexcept { return static_cast<int>(mpcs_per_cluster.size()); }
    [[nodiscard]] ChannelStats stats() const;
};

struct Drop
{
    PowerDelayProfile pdp;
    DropTruth truth;
    double path_loss_db = 0.0;
};

/// Log-uniform distance law for ensembles.
struct DistanceRange
{
    double min_m = 3.9;
    double max_m = 40.0;

    double sample(Rng& rng) const;
};

/// Drop generator for one (band, condition, mode) cell.
///
/// Cluster counts follow a zero-truncated Poisson matched to mu_NC; MPCs per
/// cluster follow the delta-plus-geometric law matched to (mu_MPC, sigma_MPC).
/// The first cluster starts at excess delay 0, inter-cluster voids are
/// MTI + Exp(void_mean), intra-cluster spacings are uniform over the grid
/// points in (resolution, MTI].
class ChannelGenerator
{
  public:
    /// Uses the tabulated targets and single-band CI parameters of the cell.
    explicit ChannelGenerator(SynthesisConfig config);

    /// Explicit structural targets; mu_nc == 1 and mu_mpc == 1 select the
    /// degenerate one-cluster and one-MPC laws.
    ChannelGenerator(SynthesisConfig config, const ChannelTargets& targets, const CIParams& path_loss);

    [[nodiscard]] const SynthesisConfig& config() const noexcept { return config_; }
    [[nodiscard]] const ChannelTargets& targets() const noexcept { return targets_; }
    [[nodiscard]] const CIParams& path_loss_params() const noexcept { return ci_; }
    [[nodiscard]] const ClusterCountSampler& cluster_law() const noexcept { return clusters_; }
    [[nodiscard]] const MpcCountSampler& mpc_law() const noexcept { return mpcs_; }

    /// Delays only; powers are left at 0 dBm.
    DropTruth sample_structure(Rng& rng) const;

    /// Structure plus decay powers normalised to total_power_dbm; fills rms_ds_ns.
    DropTruth sample_truth(Rng& rng, double total_power_dbm = 0.0) const;

    /// Full drop at a given distance: CI path loss with N(0, sigma^2) shadowing,
    /// powers normalised to tx_power - PL, PDP rendered with an injected floor.
    Drop generate_drop(Rng& rng, double d3d_m) const;

    /// Drop `index` of the configured seed, distance drawn from `distances`.
    Drop generate_drop(std::uint64_t index, const DistanceRange& distances) const;

    /// Replace the decay constants (used by calibration probes).
    void set_decay(const CalibratedDecay& decay);

  private:
    SynthesisConfig config_;
    ChannelTargets targets_;
    CIParams ci_;
    ClusterCountSampler clusters_;
    MpcCountSampler mpcs_;
};

/// Free-function forms of the generator stages.
DropTruth sample_structure(Rng& rng, const SynthesisConfig& config);

/// Cluster k scales as exp(-t_k / cluster_decay), MPC j inside it as
/// exp(-(t_j - t_k) / intra_decay); total power is normalised to
/// total_power_dbm. Also refreshes truth.rms_ds_ns.
void assign_powers(DropTruth& truth, const CalibratedDecay& decay, double total_power_dbm = 0.0);

Drop generate_drop(Rng& rng, const SynthesisConfig& config, double d3d_m);

/// Renders MPCs on a uniform grid with noise at `noise_floor_dbm` +- ripple.
/// The trace is long enough that its trailing quarter holds noise only.
PowerDelayProfile render_pdp(std::span<const MultipathComponent> mpcs, double resolution_ns, double spacing_ns,
                             double noise_floor_dbm, double noise_ripple_db, Rng& rng);

// --- Calibration ---

struct CalibrationOptions
{
    std::size_t drops = 10000;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = 0.03; ///< relative error on the ensemble mean RMS DS
    double min_multiplier = 1e-3;
    double max_multiplier = 1e3;
    int max_iterations = 100;
    unsigned threads = 1;
};

struct CalibrationResult
{
    Band band = Band::GHz28;
    LinkCondition condition = LinkCondition::Los;
    AntennaMode mode = AntennaMode::Omnidirectional;
    CalibratedDecay decay;
    double multiplier = 1.0;
    double target_mu_ds_ns = 0.0;
    double achieved_mu_ds_ns = 0.0;
    int iterations = 0;
    std::size_t drops = 0;
    std::uint64_t seed = 0;
};

/// Ensemble mean RMS DS (from drop truth) of `drops` drops seeded by `seed`.
double mean_delay_spread(const ChannelGenerator& generator, std::size_t drops, std::uint64_t seed,
                         unsigned threads = 1);

/// Bisection in log space on one multiplier of CalibratedDecay::base_for_target
/// until the ensemble mean RMS DS is within tolerance of the target.
/// Throws CalibrationError when the bracket cannot reach the target.
CalibrationResult calibrate_decay(const ChannelGenerator& generator, double target_mu_ds_ns,
                                  const CalibrationOptions& options = {});

/// Calibrates the tabulated cell against its printed mu_DS.
CalibrationResult calibrate_decay(Band band, LinkCondition condition, AntennaMode mode,
                                  const CalibrationOptions& options = {});

} // namespace icw

#endif
