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

#ifndef ICW_TYPES_HPP
#define ICW_TYPES_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace icw
{

// --- Errors ---

/// Argument outside the domain of a model or operation.
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested table cell or reference value does not exist.
class NotAvailableError : public std::out_of_range
{
  public:
    using std::out_of_range::out_of_range;
};

/// Regression design cannot identify the requested parameters.
class DegenerateFitError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Decay calibration could not reach its target.
class CalibrationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV rows, sidecars, calibration files).
class DataError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// --- Frequencies ---

/// Carrier frequency in GHz, always strictly positive.
class FrequencyGHz
{
  public:
    explicit FrequencyGHz(double ghz);

    [[nodiscard]] double value() const noexcept { return ghz_; }

    friend bool operator==(FrequencyGHz, FrequencyGHz) = default;

  private:
    double ghz_;
};

/// The three measured bands.
enum class Band
{
    GHz28,
    GHz73,
    GHz142,
};

inline constexpr std::array<Band, 3> kAllBands{Band::GHz28, Band::GHz73, Band::GHz142};

FrequencyGHz band_frequency(Band band) noexcept;

/// Exact-match lookup; any other frequency throws NotAvailableError.
Band band_from_frequency(FrequencyGHz f);

/// Time resolution of the sounder at this band (inverse null-to-null bandwidth), ns.
double band_resolution_ns(Band band) noexcept;

// --- Link classification ---

enum class LinkCondition
{
    Los,
    NlosBest, ///< best TX/RX pointing at an NLOS location; directional only
    Nlos,
};

enum class AntennaMode
{
    Directional,
    Omnidirectional,
};

enum class PathLossModel
{
    Ci,
    Cif,
};

enum class FitScope
{
    SingleBand,
    MultiBand,
};

std::string_view to_string(Band band) noexcept;
std::string_view to_string(LinkCondition c) noexcept;
std::string_view to_string(AntennaMode m) noexcept;
std::string_view to_string(PathLossModel m) noexcept;

/// Parsers accept the to_string() spellings plus a few common aliases
/// ("omni", "dir", "nlos-best", "142", "142ghz"); anything else is a DataError.
Band parse_band(std::string_view text);
LinkCondition parse_condition(std::string_view text);
AntennaMode parse_mode(std::string_view text);
PathLossModel parse_model(std::string_view text);

} // namespace icw

#endif
