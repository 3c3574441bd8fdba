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

// choiwit: dephasing-channel witness scans, accumulated measures and the
// verification suite.
//
//   choiwit scan     [flags]   -> <out>/scan.csv, <out>/scan.svg
//   choiwit measures [flags]   -> <out>/measures.csv, <out>/measures.svg
//   choiwit verify   [flags]   -> report on stdout, exit 3 on any failure

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "choiwit/commands.h"
#include "choiwit/run_config.h"

namespace {

// Flags that map one-to-one onto RunConfig keys.
constexpr const char *kKeys[] = {
    "gamma0", "lambda", "epsilon", "t-max", "grid-step", "renyi-orders", "pole-exclusion", "out", "seed", "mode",
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Non-Markovianity witnesses from Choi-matrix entropies of the dephasing channel"};
    app.require_subcommand(1);

    std::map<std::string, std::string> values;
    std::string config_path;

    auto add_common = [&](CLI::App *sub) {
        for (const char *key : kKeys) {
            sub->add_option(std::string("--") + key, values[key]);
        }
        sub->add_option("--config", config_path, "flat key=value file; flags override it");
    };

    CLI::App *scan = app.add_subcommand("scan", "witness values on a time grid (scan.csv, scan.svg)");
    CLI::App *measures = app.add_subcommand("measures", "accumulated N_S and N_e (measures.csv, measures.svg)");
    CLI::App *verify = app.add_subcommand("verify", "run the invariant suite");
    for (CLI::App *sub : {scan, measures, verify}) {
        add_common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? choiwit::kExitOk : choiwit::kExitConfig;
    }

    CLI::App *active = app.get_subcommands().front();
    try {
        choiwit::RunConfig cfg;
        if (!config_path.empty()) {
            cfg = choiwit::load_config_file(config_path, cfg);
        }
        for (const char *key : kKeys) {
            if (active->count(std::string("--") + key) > 0) {
                cfg.set(key, values[key]);
            }
        }
        cfg.validate();

        if (active == scan) {
            choiwit::run_scan(cfg, std::cerr);
            return choiwit::kExitOk;
        }
        if (active == measures) {
            choiwit::run_measures(cfg, std::cerr);
            return choiwit::kExitOk;
        }
        return choiwit::run_verify_command(cfg, std::cout);
    } catch (const choiwit::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return choiwit::kExitConfig;
    } catch (const choiwit::IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return choiwit::kExitIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return choiwit::kExitConfig;
    }
}
