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

#include "opeq/efg/game_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "opeq/error.hpp"

namespace opeq::efg {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '{' || ch == '}' || ch == ';' || ch == '=') {
      tokens.emplace_back(1, ch);
      ++i;
    } else if (line.substr(i, 2) == "->") {
      tokens.emplace_back("->");
      i += 2;
    } else {
      std::size_t j = i;
      while (j < line.size()) {
        const char c = line[j];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' ||
            c == ';' || c == '=' || line.substr(j, 2) == "->") {
          break;
        }
        ++j;
      }
      tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<std::string> tokens, int line_no)
      : tokens_(std::move(tokens)), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::kParse, "line " + std::to_string(line_no_) + ": " + msg);
  }

  bool done() const { return pos_ == tokens_.size(); }
  const std::string& peek() const {
    if (done()) fail("unexpected end of line");
    return tokens_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view token) {
    if (next() != token) fail("expected '" + std::string(token) + "'");
  }
  std::string keyed(std::string_view key) {
    if (next() != key) fail("expected '" + std::string(key) + "='");
    expect("=");
    return next();
  }
  Rat rational() {
    const std::string t = next();
    try {
      return Rat::parse(t);
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  void finish() {
    if (!done()) fail("trailing token '" + peek() + "'");
  }

  // { <head> -> <child> ; ... } with an optional trailing ';'.
  std::vector<std::pair<std::string, std::string>> arrow_list() {
    std::vector<std::pair<std::string, std::string>> items;
    expect("{");
    while (peek() != "}") {
      std::string head = next();
      expect("->");
      std::string child = next();
      items.emplace_back(std::move(head), std::move(child));
      if (peek() == ";") {
        next();
      } else if (peek() != "}") {
        fail("expected ';' or '}'");
      }
    }
    expect("}");
    return items;
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  int line_no_;
};

}  // namespace

Game parse_game(std::string_view text) {
  GameBuilder builder;
  bool header = false;
  bool root = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().starts_with("#")) continue;
    LineParser p(std::move(tokens), line_no);
    const std::string kind = p.next();
    if (!header) {
      if (kind != "game") p.fail("expected 'game efg-v1' header");
      if (p.next() != "efg-v1") p.fail("unsupported game format version");
      p.finish();
      header = true;
      continue;
    }
    if (kind == "chance") {
      std::string id = p.next();
      std::vector<std::pair<Rat, std::string>> outcomes;
      for (auto& [prob, child] : p.arrow_list()) {
        try {
          outcomes.emplace_back(Rat::parse(prob), std::move(child));
        } catch (const Error& e) {
          p.fail(e.what());
        }
      }
      p.finish();
      builder.chance(std::move(id), std::move(outcomes));
    } else if (kind == "decision") {
      std::string id = p.next();
      const std::string player = p.keyed("player");
      if (player != "1" && player != "2") p.fail("player must be 1 or 2");
      std::string infoset = p.keyed("infoset");
      auto actions = p.arrow_list();
      p.finish();
      builder.decision(std::move(id), player == "1" ? Player::kOne : Player::kTwo,
                       std::move(infoset), std::move(actions));
    } else if (kind == "terminal") {
      std::string id = p.next();
      p.expect("payoff");
      p.expect("=");
      Rat payoff = p.rational();
      p.finish();
      builder.terminal(std::move(id), std::move(payoff));
    } else if (kind == "root") {
      if (root) p.fail("duplicate root record");
      builder.root(p.next());
      p.finish();
      root = true;
    } else {
      p.fail("unknown record '" + kind + "'");
    }
  }
  if (!header) throw Error(Errc::kParse, "missing 'game efg-v1' header");
  return builder.build();
}

Game load_game_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open game file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

std::string write_game(const Game& game) {
  std::ostringstream out;
  out << "game efg-v1\n";
  for (const Node& n : game.nodes()) {
    switch (n.kind) {
      case NodeKind::kChance: {
        out << "chance " << n.id << " {";
        for (std::size_t i = 0; i < n.outcomes.size(); ++i) {
          out << (i ? " ; " : " ") << n.outcomes[i].probability << " -> "
              << game.node(n.outcomes[i].child).id;
        }
        out << " }\n";
        break;
      }
      case NodeKind::kDecision: {
        out << "decision " << n.id << " player=" << player_number(n.player)
            << " infoset=" << game.infoset(n.infoset).name << " {";
        for (std::size_t i = 0; i < n.actions.size(); ++i) {
          out << (i ? " ; " : " ") << n.actions[i].label << " -> "
              << game.node(n.actions[i].child).id;
        }
        out << " }\n";
        break;
      }
      case NodeKind::kTerminal:
        out << "terminal " << n.id << " payoff=" << n.payoff << "\n";
        break;
    }
  }
  out << "root " << game.node(game.root()).id << "\n";
  return out.str();
}

}  // namespace opeq::efg
