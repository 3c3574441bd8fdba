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

#include "choiwit/run_config.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace choiwit {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
    const std::string buf(trim(value));
    char *end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
        throw ConfigError("invalid number for '" + std::string(key) + "': '" + buf + "'");
    }
    return v;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view value) {
    const std::string_view v = trim(value);
    Int out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("invalid integer for '" + std::string(key) + "': '" + std::string(v) + "'");
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    if (!positive(gamma0)) throw ConfigError("gamma0 must be positive");
    if (!positive(lambda)) throw ConfigError("lambda must be positive");
    if (!positive(epsilon)) throw ConfigError("epsilon must be positive");
    if (!positive(t_max)) throw ConfigError("t-max must be positive");
    if (!positive(grid_step)) throw ConfigError("grid-step must be positive");
    if (!positive(pole_exclusion)) throw ConfigError("pole-exclusion must be positive");
    if (renyi_orders.empty()) throw ConfigError("renyi-orders must not be empty");
    for (int a : renyi_orders) {
        if (a < 2) {
            throw ConfigError("renyi-orders must all be >= 2, got " + std::to_string(a));
        }
    }
}

std::vector<int> parse_orders(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        out.push_back(parse_integer<int>("renyi-orders", item));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

ScanMode parse_mode(std::string_view text) {
    const auto v = trim(text);
    if (v == "closed_form" || v == "closed") return ScanMode::closed_form;
    if (v == "numerical") return ScanMode::numerical;
    if (v == "both") return ScanMode::both;
    throw ConfigError("mode must be one of closed_form, numerical, both; got '" + std::string(v) + "'");
}

void RunConfig::set(std::string_view key, std::string_view value) {
    if (key == "gamma0") {
        gamma0 = parse_double(key, value);
    } else if (key == "lambda") {
        lambda = parse_double(key, value);
    } else if (key == "epsilon") {
        epsilon = parse_double(key, value);
    } else if (key == "t-max") {
        t_max = parse_double(key, value);
    } else if (key == "grid-step") {
        grid_step = parse_double(key, value);
    } else if (key == "renyi-orders") {
        renyi_orders = parse_orders(value);
    } else if (key == "pole-exclusion") {
        pole_exclusion = parse_double(key, value);
    } else if (key == "out") {
        output_dir = std::string(trim(value));
    } else if (key == "seed") {
        seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "mode") {
        mode = parse_mode(value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        out.emplace_back(std::string(key), std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

RunConfig load_config_file(const std::filesystem::path &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    for (const auto &[key, value] : parse_config_text(buf.str())) {
        base.set(key, value);
    }
    return base;
}

}  // namespace choiwit
