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

#ifndef ICW_TOOLS_CLI_HPP
#define ICW_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace icw::cli
{

enum ExitCode : int
{
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitCalibration = 3,
};

/// Runs one `icw` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `--seed` if given, else WORKBENCH_SEED if set, else kDefaultSeed.
/// Throws std::invalid_argument on a malformed value.
std::uint64_t resolve_seed(const std::optional<std::string>& flag, const char* env_value);

} // namespace icw::cli

#endif
