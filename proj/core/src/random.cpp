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

#include "icw/random.hpp"

#include "icw/types.hpp"

#include <cmath>
#include <string>

namespace icw
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

Rng substream(std::uint64_t seed, std::uint64_t index)
{
    return Rng{splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL))};
}

double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(Rng& rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

double exponential(Rng& rng, double mean)
{
    return -mean * std::log1p(-uniform01(rng));
}

double standard_normal(Rng& rng)
{
    constexpr double two_pi = 6.283185307179586476925;
    const double u1 = 1.0 - uniform01(rng); // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw DomainError("uniform_int needs lo <= hi");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) // full 64-bit range
        return static_cast<std::int64_t>(rng());
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

// --- Cluster counts ---

double zero_truncated_poisson_rate(double mean)
{
    if (!(mean > 1.0) || !std::isfinite(mean))
        throw DomainError("zero-truncated Poisson mean must exceed 1, got " + std::to_string(mean));

    // lambda / (1 - e^-lambda) is increasing with limit 1 at 0 and exceeds
    // lambda everywhere, so the root lies in (0, mean).
    auto truncated_mean = [](double lambda) { return lambda / -std::expm1(-lambda); };
    double lo = 0.0;
    double hi = mean;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * mean; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (truncated_mean(mid) < mean)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ClusterCountSampler::ClusterCountSampler(double mean_clusters) : lambda_(zero_truncated_poisson_rate(mean_clusters))
{
}

ClusterCountSampler ClusterCountSampler::single_cluster()
{
    return ClusterCountSampler{};
}

double ClusterCountSampler::mean() const noexcept
{
    return lambda_ == 0.0 ? 1.0 : lambda_ / -std::expm1(-lambda_);
}

int ClusterCountSampler::operator()(Rng& rng) const
{
    if (lambda_ == 0.0)
        return 1;
    // Inverse CDF over k >= 1 with pmf lambda^k e^-lambda / (k! (1 - e^-lambda)).
    const double u = uniform01(rng);
    const double norm = -std::expm1(-lambda_);
    double pmf = lambda_ * std::exp(-lambda_) / norm;
    double cdf = pmf;
    int k = 1;
    while (u >= cdf && k < 10000)
    {
        ++k;
        pmf *= lambda_ / k;
        cdf += pmf;
        if (pmf < 1e-300)
            break;
    }
    return k;
}

// --- MPCs per cluster ---

MpcCountSampler::MpcCountSampler(double mean_mpcs, double stddev_mpcs)
{
    if (!(mean_mpcs >= 1.0) || !std::isfinite(mean_mpcs))
        throw DomainError("mean MPCs per cluster must be at least 1, got " + std::to_string(mean_mpcs));

    const double excess = mean_mpcs - 1.0;
    if (excess == 0.0)
    {
        p_ = 1.0;
        g_ = 1.0;
        matched_stddev_ = stddev_mpcs == 0.0;
        return;
    }

    // E[X - 1] = (1 - p) g and Var X = (mu - 1)(2 g - mu) for G geometric on
    // {1, 2, ...} with mean g; feasibility needs g >= max(1, mu - 1).
    const double floor_g = std::max(1.0, excess);
    double g = floor_g;
    if (stddev_mpcs >= 0.0)
    {
        const double candidate = 0.5 * (stddev_mpcs * stddev_mpcs / excess + mean_mpcs);
        matched_stddev_ = candidate >= floor_g;
        g = std::max(candidate, floor_g);
    }
    g_ = g;
    p_ = 1.0 - excess / g_;
}

double MpcCountSampler::mean() const noexcept
{
    return 1.0 + (1.0 - p_) * g_;
}

double MpcCountSampler::achieved_stddev() const noexcept
{
    const double excess = (1.0 - p_) * g_;
    return std::sqrt(std::max(0.0, excess * (2.0 * g_ - 1.0 - excess)));
}

int MpcCountSampler::operator()(Rng& rng) const
{
    const double u = uniform01(rng);
    if (u < p_ || p_ >= 1.0)
        return 1;
    if (g_ <= 1.0)
        return 2;
    // Geometric on {1, 2, ...} with success probability q = 1 / g.
    const double q = 1.0 / g_;
    const double v = 1.0 - uniform01(rng); // (0, 1]
    const double draw = 1.0 + std::floor(std::log(v) / std::log1p(-q));
    return 1 + static_cast<int>(std::min(draw, 1.0e6));
}

int sample_num_clusters(Rng& rng, double mean_clusters)
{
    return ClusterCountSampler{mean_clusters}(rng);
}

int sample_mpcs_per_cluster(Rng& rng, double mean_mpcs)
{
    return MpcCountSampler{mean_mpcs}(rng);
}

} // namespace icw
