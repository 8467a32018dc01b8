#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "horse/model.hpp"
#include "horse/optimize.hpp"
#include "horse/simulate.hpp"

namespace horse {

inline constexpr const char* kToolName = "horse";
inline constexpr const char* kToolVersion = "0.1.0";

// Boundary suprema never serialize as the number 1: downstream consumers get
// this token in the p1 slot plus separate numeric limit fields.
inline constexpr const char* kSupremumToken = "sup->1";

enum class OutputFormat { Csv, Json };

enum class GameMode { Exact, MonteCarlo };

// Envelope settings shared by every command. CSV payloads are plain
// header-plus-rows with fixed-decimal cells; JSON payloads carry tool,
// version and command metadata (and the seed, when a command is stochastic).
struct EmitOptions {
  OutputFormat format = OutputFormat::Csv;
  int precision = 6;         // decimal places for CSV cells
  std::string command_line;  // echoed into JSON metadata
};

std::string format_fixed(double x, int precision);

std::string rules_token(RuleSet rules);  // "tr" / "pr"

// score: scoring probability plus the scenario split for a matchup.
void emit_score(std::ostream& out, RuleSet rules, const Matchup& matchup,
                const EmitOptions& opt);

// curve: p, A_tr, B_pr over the grid p = step, 2*step, ... < 1.
void emit_curve(std::ostream& out, double step, const EmitOptions& opt);

// heatmap: p1, p2, A_tr, B_pr over the same grid squared. With overlays the
// five matchup lines of the unequal-players figure are written with their
// optima under both rule sets: to overlays_out as a second CSV, or inline
// for JSON.
void emit_heatmap(std::ostream& out, double step, bool with_overlays,
                  std::ostream* overlays_out, const EmitOptions& opt);

// table: the six-row summary of optimal p1 per case and rule set, symbolic
// forms plus numeric values at the worked example parameters.
void emit_table(std::ostream& out, const EmitOptions& opt);

// optimize: closed-form optimum for one family and rule set.
void emit_optimum(std::ostream& out, RuleSet rules, const FreeCase& c,
                  const EmitOptions& opt);

// simulate: Monte Carlo turn oracle vs. the closed form, with a z-score.
void emit_simulate(std::ostream& out, RuleSet rules, const Matchup& matchup,
                   std::int64_t n, std::uint64_t seed, const EmitOptions& opt);

// game: full-game win probability, exact solve or Monte Carlo.
void emit_game(std::ostream& out, const GameConfig& cfg, GameMode mode, std::int64_t n,
               std::uint64_t seed, const EmitOptions& opt);

// The overlay lines drawn on the unequal-players heatmap, top to bottom.
struct OverlayLine {
  std::string label;  // e.g. "p2=p1+0.2"
  FreeCase line;
};
std::vector<OverlayLine> figure_overlay_lines();

// One row of the summary table. Example fields are empty for rows whose
// optima are parameter-dependent with no worked example.
struct TableRow {
  std::string case_label;
  std::string tr_form;  // symbolic optimal p1 under Traditional
  std::string pr_form;  // symbolic optimal p1 under Pops
  std::string example;  // e.g. "d=0.2", possibly empty
  std::optional<Optimum> tr_at_example;
  std::optional<Optimum> pr_at_example;
};
std::vector<TableRow> summary_table();

}  // namespace horse
