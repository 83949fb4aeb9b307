// Copyright 2026 The scopwb Authors
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

#include "scop/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace scop {

std::string format_fixed9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  std::string out = buf;
  if (out == "-0.000000000") out = "0.000000000";
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string RunReport::to_text() const {
  std::string out = "command: " + command_ + "\n";
  for (const auto& [path, digest] : inputs_) {
    out += "input: " + path + " fnv64=" + digest + "\n";
  }
  if (seed_) out += "seed: " + std::to_string(*seed_) + "\n";
  out += "--- results\n";
  for (const auto& item : items_) {
    if (item.is_kv) {
      out += item.key + " = " + item.value + "\n";
    } else {
      out += item.value + "\n";
    }
  }
  if (validation_) {
    out += "--- validation\n";
    out += validation_->to_string();
  }
  return out;
}

std::string RunReport::to_structured() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : inputs_) {
    j["inputs"].push_back({{"path", path}, {"fnv64", digest}});
  }
  if (seed_) j["seed"] = *seed_;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& item : items_) {
    if (item.is_kv) {
      j["results"].push_back({{"key", item.key}, {"value", item.value}});
    } else {
      j["results"].push_back({{"text", item.value}});
    }
  }
  if (validation_) {
    nlohmann::ordered_json v;
    v["ok"] = validation_->ok();
    v["violations"] = nlohmann::ordered_json::array();
    for (const auto& violation : validation_->violations) {
      v["violations"].push_back(
          {{"rule", violation.rule}, {"detail", violation.detail}});
    }
    v["notes"] = validation_->notes;
    j["validation"] = std::move(v);
  }
  return j.dump(2) + "\n";
}

}  // namespace scop
