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

#ifndef ICW_IO_HPP
#define ICW_IO_HPP

#include "icw/fitting.hpp"
#include "icw/pdp.hpp"
#include "icw/synthesis.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icw::io
{

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Strict full-string number parse; throws DataError naming `what`.
double parse_double(std::string_view text, std::string_view what = "value");

/// Writes to a sibling temp file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// --- PDP files: <stem>.csv (delay_ns,power_dbm) + <stem>.json sidecar ---

struct PdpMetadata
{
    double resolution_ns = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
    std::optional<Band> band;
    std::optional<LinkCondition> condition;
    std::optional<AntennaMode> mode;
};

std::string pdp_to_csv(const PowerDelayProfile& pdp);
PowerDelayProfile pdp_from_csv(std::string_view csv, double resolution_ns);

std::string metadata_to_json(const PdpMetadata& meta);
PdpMetadata metadata_from_json(std::string_view json);

/// Writes <stem>.csv and <stem>.json.
void write_pdp(const std::filesystem::path& stem, const PowerDelayProfile& pdp, const PdpMetadata& meta);

struct PdpFile
{
    PowerDelayProfile pdp;
    PdpMetadata meta;
};

/// Reads a PDP CSV and the sidecar next to it (same stem, .json).
PdpFile read_pdp(const std::filesystem::path& csv_path);

// --- Measurement records ---

inline constexpr std::string_view kMeasurementColumns[] = {"f_ghz",  "d3d_m",  "pt_dbm",  "gt_dbi",   "gr_dbi",
                                                           "pr_dbm", "gsym_db", "condition", "mode"};

struct RowError
{
    std::size_t line; ///< 1-based line number in the file
    std::string message;
};

struct MeasurementTable
{
    std::vector<MeasurementRecord> records;
    std::vector<RowError> errors;
};

/// Parses a measurement CSV. A missing column throws DataError naming it;
/// malformed rows are collected in `errors` and skipped.
MeasurementTable measurements_from_csv(std::string_view csv);
std::string measurements_to_csv(const std::vector<MeasurementRecord>& records);

// --- Drop truth and calibration files ---

std::string truth_to_json(const DropTruth& truth);
DropTruth truth_from_json(std::string_view json);

std::string calibration_file_name(Band band, LinkCondition condition, AntennaMode mode);
std::string calibration_to_json(const CalibrationResult& result);
CalibrationResult calibration_from_json(std::string_view json);

/// `summary` is empty when no drop had a detectable MPC.
std::string summary_to_json(const std::optional<EnsembleSummary>& summary, std::size_t absent = 0,
                            const std::vector<std::string>& skipped = {});

std::string ci_fit_to_json(const CIFit& fit, std::size_t records);
std::string cif_fit_to_json(const CIFFit& fit, std::size_t records);

} // namespace icw::io

#endif
