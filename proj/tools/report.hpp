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

#ifndef BOXSEARCH_TOOLS_REPORT_HPP_
#define BOXSEARCH_TOOLS_REPORT_HPP_

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace boxsearch::cli {

using Report = nlohmann::ordered_json;

// JSON with every floating-point number printed at 17 significant digits
// (so it parses back to the same double). Non-finite numbers become null.
void write_json(std::ostream& os, const Report& report);

// "key  value" lines; nested objects flatten to dotted keys and arrays print
// space-separated.
void write_text(std::ostream& os, const Report& report);

std::string format_double(double v);

}  // namespace boxsearch::cli

#endif  // BOXSEARCH_TOOLS_REPORT_HPP_
