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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace boxsearch::cli {
namespace {

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

std::string quoted(const std::string& s) {
  return Report(s).dump();
}

void write_value(std::ostream& os, const Report& v, int depth) {
  switch (v.type()) {
    case Report::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) os << ",\n";
        first = false;
        indent(os, depth + 1);
        os << quoted(key) << ": ";
        write_value(os, item, depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "}";
      return;
    }
    case Report::value_t::array: {
      os << "[";
      bool first = true;
      for (const auto& item : v) {
        if (!first) os << ", ";
        first = false;
        write_value(os, item, depth + 1);
      }
      os << "]";
      return;
    }
    case Report::value_t::number_float: {
      const double d = v.get<double>();
      os << (std::isfinite(d) ? format_double(d) : "null");
      return;
    }
    default:
      os << v.dump();
  }
}

void write_flat(std::ostream& os, const Report& v, const std::string& key) {
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) {
      write_flat(os, item, key.empty() ? k : key + "." + k);
    }
    return;
  }
  os << key;
  if (key.size() < 28) os << std::string(28 - key.size(), ' ');
  os << "  ";
  if (v.is_array()) {
    bool first = true;
    for (const auto& item : v) {
      if (!first) os << ' ';
      first = false;
      if (item.is_string()) {
        os << item.get<std::string>();
      } else {
        write_value(os, item, 0);
      }
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    write_value(os, v, 0);
  }
  os << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep integral values recognizably floating point.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write_json(std::ostream& os, const Report& report) {
  write_value(os, report, 0);
  os << '\n';
}

void write_text(std::ostream& os, const Report& report) {
  write_flat(os, report, "");
}

}  // namespace boxsearch::cli
