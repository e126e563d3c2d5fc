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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opeq/efg/game_io.hpp"
#include "opeq/efg/generators.hpp"
#include "opeq/error.hpp"
#include "opeq/refine/concepts.hpp"
#include "opeq/seqform/strategy_io.hpp"
#include "opeq/verify/best_response.hpp"
#include "opeq/verify/grid_oracle.hpp"

namespace opeq::cli {

namespace {

using efg::Player;
using seqform::BehavioralStrategy;
using seqform::RealizationPlan;
using seqform::SequenceForm;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string game;
  std::string concept_name = "nash";
  std::string observe;
  std::string eps;
  std::string eps_schedule;
  int grid_denominator = 0;
  std::string format = "text";
  std::string dump_game;
  std::string strategy;
  int machine = 2;
  std::string write_strategy;
};

class Report {
 public:
  void add(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const Rat& value) { add(std::move(key), value.str()); }
  void add_bool(std::string key, bool value) { add(std::move(key), value ? "true" : "false"); }

  void add_strategy(const std::string& prefix, const BehavioralStrategy& b) {
    const std::string head = prefix + ".p" + std::to_string(efg::player_number(b.player)) + ".";
    for (const auto& d : b.infosets) {
      for (std::size_t a = 0; a < d.labels.size(); ++a) {
        add(head + d.infoset + "." + d.labels[a], d.probs[a]);
      }
    }
  }

  void emit(std::ostream& out, const std::string& format) const {
    if (format == "structured") {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& [k, v] : rows_) j[k] = v;
      out << j.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : rows_) out << k << " = " << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path + "'");
}

std::vector<std::vector<Rat>> parse_matrix(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream cells(line);
    std::vector<Rat> row;
    for (std::string cell; cells >> cell;) row.push_back(Rat::parse(cell));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

efg::Game load_game(const std::string& source) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (!source.starts_with(kBuiltin)) return efg::load_game_file(source);
  const std::string_view rest = std::string_view(source).substr(kBuiltin.size());
  if (rest == "kuhn") return efg::make_kuhn();
  if (rest.starts_with("clairvoyance:n=")) {
    const auto digits = rest.substr(std::string_view("clairvoyance:n=").size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw UsageError("bad clairvoyance size in '" + source + "'");
    }
    return efg::make_clairvoyance(n);
  }
  if (rest.starts_with("matrix:")) {
    return efg::make_matrix_game(parse_matrix(read_file(std::string(rest.substr(7)))));
  }
  throw UsageError("unknown builtin game '" + source + "'");
}

Rat parse_rat_arg(const std::string& flag, const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const Error&) {
    throw UsageError(flag + ": '" + text + "' is not a rational");
  }
}

std::vector<std::string> split_list(const std::string& flag, const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError(flag + ": empty list item");
    items.push_back(item.substr(b, e - b + 1));
  }
  if (items.empty()) throw UsageError(flag + ": empty list");
  return items;
}

void add_verification(Report& report, const SequenceForm& sf, const RealizationPlan& x1,
                      const RealizationPlan& x2) {
  const auto rep = verify::certify_nash(sf, x1, x2);
  report.add("br_value_1", rep.br_value_1);
  report.add("br_value_2", rep.br_value_2);
  report.add("verified_gap", rep.gap);
}

void add_certificate(Report& report, const refine::ConceptResult& r, bool with_w) {
  if (with_w) report.add("certificate.w", r.w);
  for (std::size_t k = 0; k < r.v.size(); ++k) report.add("certificate.v." + std::to_string(k), r.v[k]);
  report.add_bool("nonunique", r.nonunique);
}

void run_solve(const Options& opt, refine::Concept concept_tag, Report& report) {
  const auto sf = seqform::to_sequence_form(efg::validate_game(load_game(opt.game)));
  if (!opt.dump_game.empty()) write_file(opt.dump_game, efg::write_game(sf.game()));

  report.add("command", "solve");
  report.add("game", opt.game);
  report.add("concept", std::string(refine::concept_name(concept_tag)));

  RealizationPlan x1;
  RealizationPlan x2;
  Player solved = Player::kTwo;
  std::optional<refine::ConceptResult> result;
  bool with_w = false;

  switch (concept_tag) {
    case refine::Concept::kNash:
      result = refine::solve_nash(sf);
      break;
    case refine::Concept::kOpe: {
      if (opt.observe.empty()) throw UsageError("concept ope needs --observe");
      const auto labels = split_list("--observe", opt.observe);
      const auto c = refine::build_observation_vector(sf, Player::kOne, labels);
      report.add("observed", opt.observe);
      if (!opt.eps.empty()) {
        const Rat eps = parse_rat_arg("--eps", opt.eps);
        const auto e = refine::solve_ope_at_eps(sf, c, eps);
        report.add("eps", eps);
        report.add("solved_player", "2");
        report.add("game_value", -e.objective);
        report.add_strategy("strategy", seqform::realization_to_behavioral(sf, e.x1));
        report.add_strategy("strategy", seqform::realization_to_behavioral(sf, e.x2));
        report.add("certificate.w", e.w);
        for (std::size_t k = 0; k < e.v.size(); ++k) {
          report.add("certificate.v." + std::to_string(k), e.v[k]);
        }
        add_verification(report, sf, e.x1, e.x2);
        x1 = e.x1;
        x2 = e.x2;
        break;
      }
      result = refine::solve_ope(sf, c);
      with_w = true;
      break;
    }
    case refine::Concept::kOsqpe: {
      if (opt.machine != 1 && opt.machine != 2) throw UsageError("--machine must be 1 or 2");
      solved = efg::player_from_int(opt.machine);
      result = refine::solve_osqpe(sf, solved, std::max(1, sf.max_depth(opponent(solved))));
      break;
    }
    case refine::Concept::kEfthpe: {
      auto schedule = refine::TrembleSchedule::standard();
      if (!opt.eps_schedule.empty()) {
        std::vector<Rat> eps;
        for (const auto& e : split_list("--eps-schedule", opt.eps_schedule)) {
          eps.push_back(parse_rat_arg("--eps-schedule", e));
        }
        try {
          schedule = refine::TrembleSchedule(std::move(eps));
        } catch (const Error& e) {
          throw UsageError(std::string("--eps-schedule: ") + e.what());
        }
      }
      result = refine::efthpe_limit(sf, schedule);
      break;
    }
    case refine::Concept::kPerturbed: {
      if (opt.eps.empty()) throw UsageError("concept perturbed needs --eps");
      const Rat eps = parse_rat_arg("--eps", opt.eps);
      if (eps.sign() <= 0) throw UsageError("--eps must be positive");
      const auto p = refine::solve_perturbed(sf, refine::tremble_bounds(sf, Player::kOne, eps),
                                             refine::tremble_bounds(sf, Player::kTwo, eps));
      report.add("eps", eps);
      report.add("game_value", p.value);
      report.add_strategy("strategy", seqform::realization_to_behavioral(sf, p.x1));
      report.add_strategy("strategy", seqform::realization_to_behavioral(sf, p.x2));
      add_verification(report, sf, p.x1, p.x2);
      x1 = p.x1;
      x2 = p.x2;
      break;
    }
  }

  if (result) {
    const auto& r = *result;
    x1 = solved == Player::kOne ? r.strategy : *r.opponent_witness;
    x2 = solved == Player::kTwo ? r.strategy : *r.opponent_witness;
    report.add("solved_player", std::to_string(efg::player_number(solved)));
    report.add("game_value", r.game_value);
    report.add_strategy("strategy", seqform::realization_to_behavioral(sf, x1));
    report.add_strategy("strategy", seqform::realization_to_behavioral(sf, x2));
    if (concept_tag == refine::Concept::kEfthpe) {
      report.add("converged_at", *r.converged_at);
      report.add("trace_length", std::to_string(r.trace.size()));
    } else {
      add_certificate(report, r, with_w);
    }
    add_verification(report, sf, x1, x2);
  }

  if (!opt.write_strategy.empty()) {
    const std::vector<BehavioralStrategy> both{seqform::realization_to_behavioral(sf, x1),
                                               seqform::realization_to_behavioral(sf, x2)};
    write_file(opt.write_strategy, seqform::write_strategies(both));
  }
}

void run_verify(const Options& opt, Report& report) {
  const auto sf = seqform::to_sequence_form(efg::validate_game(load_game(opt.game)));
  const auto profile = seqform::parse_strategies(sf, read_file(opt.strategy));
  const auto x1 = seqform::behavioral_to_realization(sf, profile.player1);
  const auto x2 = seqform::behavioral_to_realization(sf, profile.player2);
  const auto rep = verify::certify_nash(sf, x1, x2);
  report.add("command", "verify");
  report.add("game", opt.game);
  report.add("strategy_file", opt.strategy);
  report.add("game_value", rep.value_1);
  report.add("br_value_1", rep.br_value_1);
  report.add("br_value_2", rep.br_value_2);
  report.add("verified_gap", rep.gap);
  report.add_bool("nash", rep.gap.is_zero());
}

void run_oracle(const Options& opt, Report& report) {
  if (opt.grid_denominator < 1) throw UsageError("--grid-denominator must be positive");
  const auto sf = seqform::to_sequence_form(efg::validate_game(load_game(opt.game)));
  const auto res = verify::grid_oracle(sf, opt.grid_denominator);
  report.add("command", "oracle");
  report.add("game", opt.game);
  report.add("grid_denominator", std::to_string(opt.grid_denominator));
  report.add("grid_size.p1", std::to_string(res.grid_size_1));
  report.add("grid_size.p2", std::to_string(res.grid_size_2));
  report.add_bool("exact", res.exact);
  report.add("profiles", std::to_string(res.profiles.size()));
  for (std::size_t i = 0; i < res.profiles.size(); ++i) {
    const auto& p = res.profiles[i];
    const std::string prefix = "profile." + std::to_string(i);
    report.add_strategy(prefix, p.b1);
    report.add_strategy(prefix, p.b2);
    report.add(prefix + ".gap", p.gap);
  }
}

void run_dump(const Options& opt, std::ostream& out, Report& report) {
  const auto game = load_game(opt.game);
  efg::validate_game(game);
  const auto text = efg::write_game(game);
  if (opt.dump_game.empty()) {
    out << text;
    return;
  }
  write_file(opt.dump_game, text);
  report.add("command", "dump-game");
  report.add("game", opt.game);
  report.add("written", opt.dump_game);
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact equilibrium refinements for two-player zero-sum extensive-form games",
               "opeq"};
  app.require_subcommand(1);

  const auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", opt.game, "builtin:clairvoyance:n=<k>, builtin:kuhn, "
                                        "builtin:matrix:<path>, or a game file")
        ->required();
    sub->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--dump-game", opt.dump_game, "also write the game file here");
  };

  auto* solve = app.add_subcommand("solve", "solve for an equilibrium concept");
  add_game(solve);
  solve->add_option("--concept", opt.concept_name, "nash, ope, osqpe, efthpe or perturbed");
  solve->add_option("--observe", opt.observe, "comma-separated player-1 action labels");
  solve->add_option("--eps", opt.eps, "tremble magnitude p/q");
  solve->add_option("--eps-schedule", opt.eps_schedule, "decreasing p/q list for efthpe");
  solve->add_option("--machine", opt.machine, "osqpe machine player (1 or 2)");
  solve->add_option("--write-strategy", opt.write_strategy, "write both strategies here");

  auto* observe = app.add_subcommand("observe-solve", "OPE conditioned on observed actions");
  add_game(observe);
  observe->add_option("--observe", opt.observe, "comma-separated player-1 action labels")
      ->required();
  observe->add_option("--eps", opt.eps, "solve at this tremble magnitude instead of the limit");
  observe->add_option("--write-strategy", opt.write_strategy, "write both strategies here");

  auto* verify_cmd = app.add_subcommand("verify", "certify a strategy file");
  add_game(verify_cmd);
  verify_cmd->add_option("--strategy", opt.strategy, "strategy file")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force grid search for equilibria");
  add_game(oracle);
  oracle->add_option("--grid-denominator", opt.grid_denominator, "grid resolution")->required();

  auto* dump = app.add_subcommand("dump-game", "print or write the game file");
  add_game(dump);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report;
  try {
    if (solve->parsed()) {
      refine::Concept concept_tag;
      try {
        concept_tag = refine::parse_concept(opt.concept_name);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      run_solve(opt, concept_tag, report);
    } else if (observe->parsed()) {
      run_solve(opt, refine::Concept::kOpe, report);
    } else if (verify_cmd->parsed()) {
      run_verify(opt, report);
    } else if (oracle->parsed()) {
      run_oracle(opt, report);
    } else {
      run_dump(opt, out, report);
      if (opt.dump_game.empty()) return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  report.emit(out, opt.format);
  return 0;
}

}  // namespace opeq::cli
