// Copyright 2026 The opeq Authors. All rights reserved.
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

#include <array>
#include <sstream>

#include "opeq/error.hpp"
#include "opeq/refine/concepts.hpp"

namespace opeq::refine {

namespace {
constexpr std::array<std::pair<Concept, std::string_view>, 5> kNames{{
    {Concept::kNash, "nash"},
    {Concept::kOpe, "ope"},
    {Concept::kOsqpe, "osqpe"},
    {Concept::kEfthpe, "efthpe"},
    {Concept::kPerturbed, "perturbed"},
}};
}  // namespace

std::string_view concept_name(Concept c) {
  for (const auto& [k, name] : kNames) {
    if (k == c) return name;
  }
  return "unknown";
}

Concept parse_concept(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw Error(Errc::kInvalidArgument, "unknown concept '" + std::string(name) + "'");
}

std::string format_trace(const SequenceForm& sf, const std::vector<TraceEntry>& trace) {
  std::ostringstream os;
  for (const auto& t : trace) {
    os << "  eps=" << t.eps << " value=" << t.game_value << " x2=[";
    for (std::size_t s = 1; s < t.x2.x.size(); ++s) {
      if (s > 1) os << ", ";
      os << sf.sequence_name(Player::kTwo, static_cast<int>(s)) << '=' << t.x2.x[s];
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace opeq::refine
