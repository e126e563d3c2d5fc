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

#ifndef OPEQ_EFG_GAME_IO_HPP_
#define OPEQ_EFG_GAME_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "opeq/efg/game.hpp"

namespace opeq::efg {

// Line-oriented text format, one record per line:
//
//   game efg-v1
//   chance <id> { <p/q> -> <child> ; ... }
//   decision <id> player=<1|2> infoset=<name> { <label> -> <child> ; ... }
//   terminal <id> payoff=<p/q>
//   root <id>
//
// Blank lines and lines starting with '#' are ignored. Tokens may be
// separated by any amount of whitespace, including none around the
// punctuation. Errors are Error{kParse} (syntax) or Error{kMalformedGame}
// (duplicate/unknown ids).
Game parse_game(std::string_view text);
Game load_game_file(const std::filesystem::path& path);

// Emits nodes in index order followed by the root record. Deterministic.
std::string write_game(const Game& game);

}  // namespace opeq::efg

#endif  // OPEQ_EFG_GAME_IO_HPP_
