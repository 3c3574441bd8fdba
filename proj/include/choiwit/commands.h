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

#ifndef CHOIWIT_COMMANDS_H
#define CHOIWIT_COMMANDS_H

#include <iosfwd>

#include "choiwit/run_config.h"

namespace choiwit {

/// Process exit codes of the `choiwit` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitIo = 2,
    kExitInvariant = 3,
};

/// Writes scan.csv and scan.svg into cfg.output_dir. Skipped pole points are
/// reported on `log`. Throws ConfigError or IoError.
void run_scan(const RunConfig &cfg, std::ostream &log);

/// Writes measures.csv and measures.svg (t0 on the scan grid).
void run_measures(const RunConfig &cfg, std::ostream &log);

/// Runs the verification suite, prints the report, returns kExitOk or kExitInvariant.
int run_verify_command(const RunConfig &cfg, std::ostream &report);

}  // namespace choiwit

#endif
