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

#include "icw/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace icw
{

FrequencyGHz::FrequencyGHz(double ghz) : ghz_(ghz)
{
    if (!(ghz > 0.0) || !std::isfinite(ghz))
        throw DomainError("frequency must be a finite positive number of GHz, got " + std::to_string(ghz));
}

FrequencyGHz band_frequency(Band band) noexcept
{
    switch (band)
    {
    case Band::GHz28:
        return FrequencyGHz{28.0};
    case Band::GHz73:
        return FrequencyGHz{73.0};
    case Band::GHz142:
        break;
    }
    return FrequencyGHz{142.0};
}

Band band_from_frequency(FrequencyGHz f)
{
    for (Band b : kAllBands)
        if (band_frequency(b) == f)
            return b;
    throw NotAvailableError("no tabulated band at " + std::to_string(f.value()) + " GHz (expected 28, 73 or 142)");
}

double band_resolution_ns(Band band) noexcept
{
    // 0.8 GHz null-to-null at 28/73 GHz, 1.0 GHz at 142 GHz
    return band == Band::GHz142 ? 2.0 : 2.5;
}

std::string_view to_string(Band band) noexcept
{
    switch (band)
    {
    case Band::GHz28:
        return "28";
    case Band::GHz73:
        return "73";
    case Band::GHz142:
        break;
    }
    return "142";
}

std::string_view to_string(LinkCondition c) noexcept
{
    switch (c)
    {
    case LinkCondition::Los:
        return "LOS";
    case LinkCondition::NlosBest:
        return "NLOS_Best";
    case LinkCondition::Nlos:
        break;
    }
    return "NLOS";
}

std::string_view to_string(AntennaMode m) noexcept
{
    return m == AntennaMode::Directional ? "directional" : "omni";
}

std::string_view to_string(PathLossModel m) noexcept
{
    return m == PathLossModel::Ci ? "ci" : "cif";
}

namespace
{

std::string normalized(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
    {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        out.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace

Band parse_band(std::string_view text)
{
    std::string s = normalized(text);
    if (s.size() > 3 && s.ends_with("ghz"))
        s.resize(s.size() - 3);
    if (s == "28" || s == "28.0")
        return Band::GHz28;
    if (s == "73" || s == "73.0")
        return Band::GHz73;
    if (s == "142" || s == "142.0" || s == "140")
        return Band::GHz142;
    throw DataError("unknown band '" + std::string(text) + "' (expected 28, 73 or 142)");
}

LinkCondition parse_condition(std::string_view text)
{
    const std::string s = normalized(text);
    if (s == "los")
        return LinkCondition::Los;
    if (s == "nlos_best" || s == "nlosbest")
        return LinkCondition::NlosBest;
    if (s == "nlos")
        return LinkCondition::Nlos;
    throw DataError("unknown link condition '" + std::string(text) + "' (expected LOS, NLOS_Best or NLOS)");
}

AntennaMode parse_mode(std::string_view text)
{
    const std::string s = normalized(text);
    if (s == "directional" || s == "dir")
        return AntennaMode::Directional;
    if (s == "omni" || s == "omnidirectional")
        return AntennaMode::Omnidirectional;
    throw DataError("unknown antenna mode '" + std::string(text) + "' (expected directional or omni)");
}

PathLossModel parse_model(std::string_view text)
{
    const std::string s = normalized(text);
    if (s == "ci")
        return PathLossModel::Ci;
    if (s == "cif")
        return PathLossModel::Cif;
    throw DataError("unknown path loss model '" + std::string(text) + "' (expected ci or cif)");
}

} // namespace icw
