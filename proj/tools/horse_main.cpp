#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "horse/emit.hpp"

namespace {

using horse::DomainError;
using horse::EmitOptions;
using horse::GameMode;
using horse::OutputFormat;
using horse::RuleSet;

const std::map<std::string, RuleSet> kRulesMap{{"tr", RuleSet::Traditional},
                                               {"pr", RuleSet::Pops}};
const std::map<std::string, OutputFormat> kFormatMap{{"csv", OutputFormat::Csv},
                                                     {"json", OutputFormat::Json}};
const std::map<std::string, GameMode> kModeMap{{"exact", GameMode::Exact},
                                               {"mc", GameMode::MonteCarlo}};
const std::map<std::string, horse::Player> kPlayerMap{{"one", horse::Player::One},
                                                      {"two", horse::Player::Two}};

std::string join_command_line(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) os << ' ';
    os << argv[i];
  }
  return os.str();
}

// Shared matchup flags: --p, or --p1 --p2, or --d --p1, or --r --p1.
struct MatchupFlags {
  std::optional<double> p, p1, p2, d, r;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--p", p, "shared make probability (equal matchup)");
    cmd->add_option("--p1", p1, "Player One make probability");
    cmd->add_option("--p2", p2, "Player Two make probability");
    cmd->add_option("--d", d, "skill difference, p2 = p1 - d");
    cmd->add_option("--r", r, "skill ratio, p2 = p1 / r");
  }

  horse::Matchup build() const {
    using horse::ShotProbability;
    if (p && !p1 && !p2 && !d && !r) {
      return horse::EqualMatchup{ShotProbability(*p)};
    }
    if (p1 && p2 && !p && !d && !r) {
      return horse::FreeMatchup{ShotProbability(*p1), ShotProbability(*p2)};
    }
    if (d && p1 && !p && !p2 && !r) {
      return horse::LinearDiffMatchup(*d, ShotProbability(*p1));
    }
    if (r && p1 && !p && !p2 && !d) {
      return horse::RatioMatchup(*r, ShotProbability(*p1));
    }
    throw DomainError(
        "specify a matchup as --p, or --p1 --p2, or --d --p1, or --r --p1");
  }
};

// Output destination: stdout by default, --out otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw DomainError("cannot open output file: " + path);
      }
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Path of the companion overlay CSV: stem + "_overlays" + extension.
std::string overlay_path(const std::string& out_path) {
  const auto slash = out_path.find_last_of('/');
  const auto dot = out_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out_path + "_overlays.csv";
  }
  return out_path.substr(0, dot) + "_overlays" + out_path.substr(dot);
}

struct CommonFlags {
  std::string out_path;
  OutputFormat format;
  int precision = 6;

  void add_to(CLI::App* cmd, OutputFormat default_format) {
    format = default_format;
    cmd->add_option("--out", out_path, "write the payload to this file instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatMap, CLI::ignore_case));
    cmd->add_option("--precision", precision, "decimal places for CSV cells")
        ->check(CLI::Range(0, 17));
  }

  EmitOptions emit_options(const std::string& command_line) const {
    return EmitOptions{format, precision, command_line};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "horse: scoring probabilities, optimal shot difficulty, and full-game "
      "simulation for the basketball game Horse under Traditional and Pops rules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", horse::kToolVersion);
  const std::string command_line = join_command_line(argc, argv);

  // score
  auto* score_cmd = app.add_subcommand("score", "scoring probability for one matchup");
  RuleSet score_rules{};
  MatchupFlags score_matchup;
  CommonFlags score_common;
  score_cmd->add_option("--rules", score_rules, "rule set")
      ->required()
      ->transform(CLI::CheckedTransformer(kRulesMap, CLI::ignore_case));
  score_matchup.add_to(score_cmd);
  score_common.add_to(score_cmd, OutputFormat::Json);

  // curve
  auto* curve_cmd =
      app.add_subcommand("curve", "equal-ability scoring curves A(p) and B(p)");
  double curve_step = 0.01;
  CommonFlags curve_common;
  curve_cmd->add_option("--step", curve_step, "grid step in (0,1)");
  curve_common.add_to(curve_cmd, OutputFormat::Csv);

  // heatmap
  auto* heatmap_cmd =
      app.add_subcommand("heatmap", "scoring probability grid over (p1, p2)");
  double heatmap_step = 0.01;
  bool with_overlays = false;
  CommonFlags heatmap_common;
  heatmap_cmd->add_option("--step", heatmap_step, "grid step in (0,1)");
  heatmap_cmd->add_flag("--overlays", with_overlays,
                        "also emit the five matchup overlay lines with their optima");
  heatmap_common.add_to(heatmap_cmd, OutputFormat::Csv);

  // table
  auto* table_cmd = app.add_subcommand("table", "summary table of optimal p1 per case");
  CommonFlags table_common;
  table_common.add_to(table_cmd, OutputFormat::Csv);

  // optimize
  auto* optimize_cmd =
      app.add_subcommand("optimize", "optimal p1 for a matchup family and rule set");
  RuleSet optimize_rules{};
  std::string optimize_case;
  std::optional<double> optimize_d, optimize_r;
  CommonFlags optimize_common;
  optimize_cmd->add_option("--rules", optimize_rules, "rule set")
      ->required()
      ->transform(CLI::CheckedTransformer(kRulesMap, CLI::ignore_case));
  optimize_cmd->add_option("--case", optimize_case, "matchup family: equal, diff or ratio")
      ->required()
      ->check(CLI::IsMember({"equal", "diff", "ratio"}));
  optimize_cmd->add_option("--d", optimize_d, "skill difference for --case diff");
  optimize_cmd->add_option("--r", optimize_r, "skill ratio for --case ratio");
  optimize_common.add_to(optimize_cmd, OutputFormat::Json);

  // simulate
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo turn oracle vs. the closed form");
  RuleSet simulate_rules{};
  MatchupFlags simulate_matchup;
  std::int64_t simulate_n = 1000000;
  std::uint64_t simulate_seed = 0;
  CommonFlags simulate_common;
  simulate_cmd->add_option("--rules", simulate_rules, "rule set")
      ->required()
      ->transform(CLI::CheckedTransformer(kRulesMap, CLI::ignore_case));
  simulate_matchup.add_to(simulate_cmd);
  simulate_cmd->add_option("--n", simulate_n, "number of simulated turns");
  simulate_cmd->add_option("--seed", simulate_seed, "random seed");
  simulate_common.add_to(simulate_cmd, OutputFormat::Json);

  // game
  auto* game_cmd = app.add_subcommand("game", "full-game H-O-R-S-E win probability");
  RuleSet game_rules{};
  GameMode game_mode = GameMode::Exact;
  double game_p1 = 0.0, game_p2 = 0.0;
  std::optional<double> game_p2s, game_p1f;
  int game_letters = 5;
  horse::Player game_first = horse::Player::One;
  std::int64_t game_n = 100000;
  std::uint64_t game_seed = 0;
  CommonFlags game_common;
  game_cmd->add_option("--rules", game_rules, "rule set")
      ->required()
      ->transform(CLI::CheckedTransformer(kRulesMap, CLI::ignore_case));
  game_cmd->add_option("--p1", game_p1, "Player One make probability on One's shot choice")
      ->required();
  game_cmd->add_option("--p2", game_p2, "Player Two make probability on One's shot choice")
      ->required();
  game_cmd->add_option("--p2s", game_p2s,
                       "Player Two make probability on Two's own shot choice "
                       "(default: --p2)");
  game_cmd->add_option("--p1f", game_p1f,
                       "Player One make probability when following Two's shot "
                       "(default: --p1)");
  game_cmd->add_option("--letters", game_letters, "letters that lose the game");
  game_cmd->add_option("--first", game_first, "who shoots first")
      ->transform(CLI::CheckedTransformer(kPlayerMap, CLI::ignore_case));
  game_cmd->add_option("--mode", game_mode, "exact solve or Monte Carlo")
      ->transform(CLI::CheckedTransformer(kModeMap, CLI::ignore_case));
  game_cmd->add_option("--n", game_n, "number of simulated games for --mode mc");
  game_cmd->add_option("--seed", game_seed, "random seed for --mode mc");
  game_common.add_to(game_cmd, OutputFormat::Json);

  try {
    app.parse(argc, argv);

    if (*score_cmd) {
      OutputTarget target(score_common.out_path);
      emit_score(target.stream(), score_rules, score_matchup.build(),
                 score_common.emit_options(command_line));
    } else if (*curve_cmd) {
      OutputTarget target(curve_common.out_path);
      emit_curve(target.stream(), curve_step, curve_common.emit_options(command_line));
    } else if (*heatmap_cmd) {
      if (with_overlays && heatmap_common.format == OutputFormat::Csv &&
          heatmap_common.out_path.empty()) {
        throw DomainError("--overlays with CSV output needs --out to name the files");
      }
      OutputTarget target(heatmap_common.out_path);
      if (with_overlays && heatmap_common.format == OutputFormat::Csv) {
        OutputTarget overlay_target(overlay_path(heatmap_common.out_path));
        emit_heatmap(target.stream(), heatmap_step, true, &overlay_target.stream(),
                     heatmap_common.emit_options(command_line));
      } else {
        emit_heatmap(target.stream(), heatmap_step, with_overlays, nullptr,
                     heatmap_common.emit_options(command_line));
      }
    } else if (*table_cmd) {
      OutputTarget target(table_common.out_path);
      emit_table(target.stream(), table_common.emit_options(command_line));
    } else if (*optimize_cmd) {
      horse::FreeCase c;
      if (optimize_case == "equal") {
        c = horse::EqualCase{};
      } else if (optimize_case == "diff") {
        if (!optimize_d) throw DomainError("--case diff needs --d");
        c = horse::LinearDiffCase{*optimize_d};
      } else {
        if (!optimize_r) throw DomainError("--case ratio needs --r");
        c = horse::RatioCase{*optimize_r};
      }
      OutputTarget target(optimize_common.out_path);
      emit_optimum(target.stream(), optimize_rules, c,
                   optimize_common.emit_options(command_line));
    } else if (*simulate_cmd) {
      OutputTarget target(simulate_common.out_path);
      emit_simulate(target.stream(), simulate_rules, simulate_matchup.build(), simulate_n,
                    simulate_seed, simulate_common.emit_options(command_line));
    } else if (*game_cmd) {
      using horse::ShotProbability;
      const horse::GameConfig cfg{
          game_rules,
          {ShotProbability(game_p1), ShotProbability(game_p2)},
          {ShotProbability(game_p2s.value_or(game_p2)),
           ShotProbability(game_p1f.value_or(game_p1))},
          game_letters,
          game_first};
      OutputTarget target(game_common.out_path);
      emit_game(target.stream(), cfg, game_mode, game_n, game_seed,
                game_common.emit_options(command_line));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
