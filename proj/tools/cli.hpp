// Copyright 2026 The Boxsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOXSEARCH_TOOLS_CLI_HPP_
#define BOXSEARCH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "boxsearch/density.hpp"

namespace boxsearch::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidInput = 2,
  kDomain = 3,
};

// Reads a density file: either a JSON array of masses (labels 1..N) or an
// object {"labels": [...], "p": [...]}. Boxes with exactly zero mass are
// dropped. With `renormalize`, masses are rescaled to sum to 1 instead of
// being required to.
HidingDensity read_density_file(const std::string& path, bool renormalize);
HidingDensity parse_density(const std::string& text, bool renormalize);

// Entry point behind the boxsearch binary. Writes results to `out`,
// diagnostics to `err`, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace boxsearch::cli

#endif  // BOXSEARCH_TOOLS_CLI_HPP_
