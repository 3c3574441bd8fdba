// Copyright 2026 The choiwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOIWIT_RUN_CONFIG_H
#define CHOIWIT_RUN_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "choiwit/dephasing.h"
#include "choiwit/witnesses.h"

namespace choiwit {

/// Invalid configuration value or file (CLI exit code 1).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Output could not be written (CLI exit code 2).
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double gamma0 = 1;
    double lambda = 1;
    double epsilon = 1e-4;
    double t_max = 10;
    double grid_step = 0.01;
    std::vector<int> renyi_orders{2, 5, 10};
    double pole_exclusion = kDefaultPoleExclusion;
    std::filesystem::path output_dir = ".";
    std::uint64_t seed = 42;
    ScanMode mode = ScanMode::closed_form;

    DephasingParams params() const {
        return DephasingParams{gamma0, lambda, epsilon};
    }

    /// Throws ConfigError on non-positive numbers or Renyi orders below 2.
    void validate() const;

    /// Applies one `key=value` setting. Keys match the long flag names
    /// without dashes: gamma0, lambda, epsilon, t-max, grid-step,
    /// renyi-orders (comma separated), pole-exclusion, out, seed, mode.
    void set(std::string_view key, std::string_view value);
};

/// Flat `key=value` text; blank lines and lines starting with '#' are ignored.
/// Returns the settings in file order.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);

/// Reads and applies a config file on top of `base`.
RunConfig load_config_file(const std::filesystem::path &path, RunConfig base = {});

std::vector<int> parse_orders(std::string_view text);
ScanMode parse_mode(std::string_view text);

}  // namespace choiwit

#endif
