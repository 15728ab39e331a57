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

#ifndef ICW_TESTS_SUPPORT_HPP
#define ICW_TESTS_SUPPORT_HPP

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <string>
#include <system_error>

namespace icw::test
{

inline bool near(double a, double b, double tol)
{
    return std::abs(a - b) <= tol;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir
{
  public:
    explicit TempDir(const std::string& tag)
    {
        static std::atomic<unsigned> counter{0};
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() /
                ("icw-" + tag + "-" + std::to_string(stamp) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }
    [[nodiscard]] std::string str(const std::string& child = {}) const
    {
        return child.empty() ? path_.string() : (path_ / child).string();
    }

  private:
    std::filesystem::path path_;
};

} // namespace icw::test

#endif
