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

#ifndef ICW_PDP_HPP
#define ICW_PDP_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace icw
{

inline double db_to_linear(double db) noexcept { return std::pow(10.0, 0.1 * db); }
inline double linear_to_db(double lin) noexcept { return 10.0 * std::log10(lin); }

struct PdpSample
{
    double delay_ns;
    double power_dbm;
};

/// Uniformly sampled power delay profile.
///
/// resolution_ns is the sounder's time resolution (inverse RF bandwidth) and
/// governs how close two resolvable peaks may be. Samples are spaced at
/// sample_spacing_ns, which equals the resolution for a critically sampled
/// trace and may be finer for an oversampled one.
class PowerDelayProfile
{
  public:
    PowerDelayProfile(double resolution_ns, double start_delay_ns, double sample_spacing_ns,
                      std::vector<double> power_dbm);

    /// Critically sampled trace (spacing == resolution).
    PowerDelayProfile(double resolution_ns, double start_delay_ns, std::vector<double> power_dbm);

    /// Builds from explicit (delay, power) pairs; delays must be strictly
    /// increasing and uniformly spaced (relative tolerance 1e-6).
    static PowerDelayProfile from_samples(double resolution_ns, std::span<const PdpSample> samples);

    [[nodiscard]] double resolution_ns() const noexcept { return resolution_ns_; }
    [[nodiscard]] double sample_spacing_ns() const noexcept { return spacing_ns_; }
    [[nodiscard]] double start_delay_ns() const noexcept { return start_ns_; }
    [[nodiscard]] std::size_t size() const noexcept { return power_dbm_.size(); }
    [[nodiscard]] bool empty() const noexcept { return power_dbm_.empty(); }

    [[nodiscard]] double delay_ns(std::size_t i) const noexcept { return start_ns_ + static_cast<double>(i) * spacing_ns_; }
    [[nodiscard]] double power_dbm(std::size_t i) const noexcept { return power_dbm_[i]; }
    [[nodiscard]] std::span<const double> powers_dbm() const noexcept { return power_dbm_; }
    [[nodiscard]] std::vector<PdpSample> samples() const;

    [[nodiscard]] std::optional<double> noise_floor_dbm() const noexcept { return noise_floor_dbm_; }
    void set_noise_floor_dbm(double floor_dbm);

  private:
    double resolution_ns_;
    double start_ns_;
    double spacing_ns_;
    std::vector<double> power_dbm_;
    std::optional<double> noise_floor_dbm_;
};

/// One resolved multipath arrival.
struct MultipathComponent
{
    double delay_ns;
    double power_dbm;

    friend bool operator==(const MultipathComponent&, const MultipathComponent&) = default;
};

/// MPCs whose consecutive delay gaps are all within the MTI.
struct TimeCluster
{
    std::vector<MultipathComponent> mpcs;
};

/// Per-PDP summary.
struct ChannelStats
{
    double rms_ds_ns = 0.0;
    int num_clusters = 0;
    std::vector<int> mpcs_per_cluster;

    [[nodiscard]] int total_mpcs() const noexcept;
};

/// Order statistics and moments of one scalar over an ensemble.
struct Distribution
{
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std = 0.0; ///< population (divide-by-N)
    double p90 = 0.0; ///< linear interpolation between order statistics
};

struct EnsembleSummary
{
    std::size_t count = 0;
    Distribution rms_ds_ns;
    Distribution num_clusters;
    Distribution mpcs_per_cluster; ///< pooled over every cluster of every drop
};

/// A directional capture with its pointing and antenna gains.
struct DirectionalPdp
{
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    PowerDelayProfile pdp;
};

enum class DelayAlignment
{
    Absolute,     ///< delay axes already share an absolute propagation-delay origin
    FirstArrival, ///< shift each trace so its first detectable arrival sits at delay 0
};

} // namespace icw

#endif
