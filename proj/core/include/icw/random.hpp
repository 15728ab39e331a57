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

#ifndef ICW_RANDOM_HPP
#define ICW_RANDOM_HPP

#include <cstdint>
#include <random>

namespace icw
{

/// 64-bit Mersenne Twister; its output sequence is fixed by the standard, so
/// every draw below is reproducible across platforms and standard libraries.
using Rng = std::mt19937_64;

/// Independent generator for drop `index` of a run seeded with `seed`.
/// Keyed by (seed, index) only, so drops can be produced in any order.
Rng substream(std::uint64_t seed, std::uint64_t index);

/// Uniform in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// Uniform in [lo, hi).
double uniform(Rng& rng, double lo, double hi);

/// Exponential with the given mean (> 0).
double exponential(Rng& rng, double mean);

/// Standard normal via Box-Muller (two uniforms per call, no caching).
double standard_normal(Rng& rng);

/// Uniform integer in [lo, hi].
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Number of time clusters: Poisson conditioned on >= 1, with the Poisson
/// rate solved so the truncated mean equals the requested mean.
class ClusterCountSampler
{
  public:
    /// mean_clusters must exceed 1.
    explicit ClusterCountSampler(double mean_clusters);

    /// Degenerate law that always returns one cluster.
    static ClusterCountSampler single_cluster();

    [[nodiscard]] double rate() const noexcept { return lambda_; }
    [[nodiscard]] double mean() const noexcept;
    int operator()(Rng& rng) const;

  private:
    ClusterCountSampler() = default;
    double lambda_ = 0.0;
};

/// Solves lambda / (1 - exp(-lambda)) = mean for mean > 1.
double zero_truncated_poisson_rate(double mean);

/// MPCs per cluster: 1 with probability p (the delta at one), otherwise
/// 1 + G with G geometric on {1, 2, ...} of mean g.
///
/// (p, g) are matched to the requested mean and standard deviation when the
/// family can reach both; otherwise the mean is matched on the nearest
/// feasible boundary and achieved_stddev() reports what the law produces.
class MpcCountSampler
{
  public:
    /// mean_mpcs >= 1; stddev_mpcs < 0 requests a mean-only fit.
    explicit MpcCountSampler(double mean_mpcs, double stddev_mpcs = -1.0);

    [[nodiscard]] double delta_probability() const noexcept { return p_; }
    [[nodiscard]] double geometric_mean() const noexcept { return g_; }
    [[nodiscard]] bool matched_stddev() const noexcept { return matched_stddev_; }
    [[nodiscard]] double mean() const noexcept;
    [[nodiscard]] double achieved_stddev() const noexcept;
    int operator()(Rng& rng) const;

  private:
    double p_ = 1.0;
    double g_ = 1.0;
    bool matched_stddev_ = false;
};

/// One draw from a fresh ClusterCountSampler(mean_clusters).
int sample_num_clusters(Rng& rng, double mean_clusters);

/// One draw from a fresh mean-only MpcCountSampler(mean_mpcs).
int sample_mpcs_per_cluster(Rng& rng, double mean_mpcs);

} // namespace icw

#endif
