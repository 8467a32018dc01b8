#include "horse/emit.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace horse {

namespace {

using nlohmann::json;

json envelope(const EmitOptions& opt) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  if (!opt.command_line.empty()) {
    j["command"] = opt.command_line;
  }
  return j;
}

json optimum_json(const Optimum& o) {
  json j;
  if (o.kind == OptimumKind::BoundarySupremum) {
    j["kind"] = "boundary_supremum";
    j["optimal_p1"] = kSupremumToken;
    j["limit_point"] = o.argmax;
    j["limit_value"] = o.value;
  } else {
    j["kind"] = "interior";
    j["optimal_p1"] = o.argmax;
    j["value"] = o.value;
  }
  return j;
}

// p1 cell of an optimum: the supremum token, never the number 1.
std::string optimum_p1_cell(const Optimum& o, int precision) {
  return o.kind == OptimumKind::BoundarySupremum ? std::string(kSupremumToken)
                                                 : format_fixed(o.argmax, precision);
}

struct CaseInfo {
  std::string name;          // equal / diff / ratio
  std::string param_name;    // "", "d" or "r"
  double param = 0.0;
};

CaseInfo case_info(const FreeCase& c) {
  return std::visit(
      [](const auto& k) -> CaseInfo {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, EqualCase>) {
          return {"equal", "", 0.0};
        } else if constexpr (std::is_same_v<T, LinearDiffCase>) {
          return {"diff", "d", k.d};
        } else {
          return {"ratio", "r", k.r};
        }
      },
      c);
}

json matchup_json(const Matchup& matchup) {
  const ResolvedMatchup m = resolve(matchup);
  json j;
  std::visit(
      [&j](const auto& mm) {
        using T = std::decay_t<decltype(mm)>;
        if constexpr (std::is_same_v<T, EqualMatchup>) {
          j["case"] = "equal";
        } else if constexpr (std::is_same_v<T, FreeMatchup>) {
          j["case"] = "free";
        } else if constexpr (std::is_same_v<T, LinearDiffMatchup>) {
          j["case"] = "diff";
          j["d"] = mm.d();
        } else {
          j["case"] = "ratio";
          j["r"] = mm.r();
        }
      },
      matchup);
  j["p1"] = m.p1.value();
  j["p2"] = m.p2.value();
  return j;
}

void check_step(double step) {
  if (!(step > 0.0 && step < 1.0)) {
    throw DomainError("grid step must lie in (0,1), got " + std::to_string(step));
  }
}

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

std::string format_fixed(double x, int precision) {
  if (precision < 0) precision = 0;
  if (precision > 17) precision = 17;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

std::string rules_token(RuleSet rules) {
  return rules == RuleSet::Traditional ? "tr" : "pr";
}

void emit_score(std::ostream& out, RuleSet rules, const Matchup& matchup,
                const EmitOptions& opt) {
  const ResolvedMatchup m = resolve(matchup);
  const double score = score_prob(rules, m.p1, m.p2);
  const ScenarioDistribution s = scenario_probs(m.p1, m.p2);
  if (opt.format == OutputFormat::Csv) {
    const int p = opt.precision;
    out << "rules,p1,p2,score,s1,s2,s3\n"
        << rules_token(rules) << ',' << format_fixed(m.p1.value(), p) << ','
        << format_fixed(m.p2.value(), p) << ',' << format_fixed(score, p) << ','
        << format_fixed(s.s1, p) << ',' << format_fixed(s.s2, p) << ','
        << format_fixed(s.s3, p) << '\n';
    return;
  }
  json j = envelope(opt);
  j["rules"] = rules_token(rules);
  j["matchup"] = matchup_json(matchup);
  j["score"] = score;
  j["scenarios"] = {{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}};
  dump(out, j);
}

void emit_curve(std::ostream& out, double step, const EmitOptions& opt) {
  check_step(step);
  if (opt.format == OutputFormat::Csv) {
    out << "p,A_tr,B_pr\n";
    for (int k = 1;; ++k) {
      const double p = k * step;
      if (!(p < 1.0)) break;
      const ShotProbability sp(p);
      out << format_fixed(p, opt.precision) << ','
          << format_fixed(score_prob_equal(RuleSet::Traditional, sp), opt.precision) << ','
          << format_fixed(score_prob_equal(RuleSet::Pops, sp), opt.precision) << '\n';
    }
    return;
  }
  json j = envelope(opt);
  j["step"] = step;
  j["columns"] = {"p", "A_tr", "B_pr"};
  json rows = json::array();
  for (int k = 1;; ++k) {
    const double p = k * step;
    if (!(p < 1.0)) break;
    const ShotProbability sp(p);
    rows.push_back({p, score_prob_equal(RuleSet::Traditional, sp),
                    score_prob_equal(RuleSet::Pops, sp)});
  }
  j["rows"] = std::move(rows);
  dump(out, j);
}

std::vector<OverlayLine> figure_overlay_lines() {
  return {
      {"p2=p1+0.2", LinearDiffCase{-0.2}},
      {"p2=p1/0.8", RatioCase{0.8}},
      {"p2=p1", EqualCase{}},
      {"p2=p1/1.1", RatioCase{1.1}},
      {"p2=p1-0.2", LinearDiffCase{0.2}},
  };
}

namespace {

void write_overlays_csv(std::ostream& out, int precision) {
  out << "line,case,param,tr_p1,tr_value,pr_p1,pr_value\n";
  for (const OverlayLine& ov : figure_overlay_lines()) {
    const CaseInfo info = case_info(ov.line);
    const Optimum tr = optimal_p1(RuleSet::Traditional, ov.line);
    const Optimum pr = optimal_p1(RuleSet::Pops, ov.line);
    out << ov.label << ',' << info.name << ','
        << (info.param_name.empty() ? std::string() : format_fixed(info.param, precision))
        << ',' << optimum_p1_cell(tr, precision) << ',' << format_fixed(tr.value, precision)
        << ',' << optimum_p1_cell(pr, precision) << ',' << format_fixed(pr.value, precision)
        << '\n';
  }
}

json overlays_json() {
  json arr = json::array();
  for (const OverlayLine& ov : figure_overlay_lines()) {
    const CaseInfo info = case_info(ov.line);
    json j;
    j["line"] = ov.label;
    j["case"] = info.name;
    if (!info.param_name.empty()) {
      j[info.param_name] = info.param;
    }
    j["tr"] = optimum_json(optimal_p1(RuleSet::Traditional, ov.line));
    j["pr"] = optimum_json(optimal_p1(RuleSet::Pops, ov.line));
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

void emit_heatmap(std::ostream& out, double step, bool with_overlays,
                  std::ostream* overlays_out, const EmitOptions& opt) {
  check_step(step);
  if (opt.format == OutputFormat::Csv) {
    out << "p1,p2,A_tr,B_pr\n";
    for (int i = 1;; ++i) {
      const double p1 = i * step;
      if (!(p1 < 1.0)) break;
      for (int k = 1;; ++k) {
        const double p2 = k * step;
        if (!(p2 < 1.0)) break;
        const ShotProbability a(p1), b(p2);
        out << format_fixed(p1, opt.precision) << ',' << format_fixed(p2, opt.precision)
            << ',' << format_fixed(score_prob(RuleSet::Traditional, a, b), opt.precision)
            << ',' << format_fixed(score_prob(RuleSet::Pops, a, b), opt.precision) << '\n';
      }
    }
    if (with_overlays) {
      if (overlays_out == nullptr) {
        throw DomainError("overlays requested but no overlay output destination given");
      }
      write_overlays_csv(*overlays_out, opt.precision);
    }
    return;
  }
  json j = envelope(opt);
  j["step"] = step;
  j["columns"] = {"p1", "p2", "A_tr", "B_pr"};
  json rows = json::array();
  for (int i = 1;; ++i) {
    const double p1 = i * step;
    if (!(p1 < 1.0)) break;
    for (int k = 1;; ++k) {
      const double p2 = k * step;
      if (!(p2 < 1.0)) break;
      const ShotProbability a(p1), b(p2);
      rows.push_back({p1, p2, score_prob(RuleSet::Traditional, a, b),
                      score_prob(RuleSet::Pops, a, b)});
    }
  }
  j["rows"] = std::move(rows);
  if (with_overlays) {
    j["overlays"] = overlays_json();
  }
  dump(out, j);
}

std::vector<TableRow> summary_table() {
  const auto tr = [](const FreeCase& c) { return optimal_p1(RuleSet::Traditional, c); };
  const auto pr = [](const FreeCase& c) { return optimal_p1(RuleSet::Pops, c); };
  std::vector<TableRow> rows;
  rows.push_back({"p2=p1", kSupremumToken, "1/2", "", tr(EqualCase{}), pr(EqualCase{})});
  rows.push_back({"p2=p1-d (d>=0)", kSupremumToken, "(1+d)/2", "d=0.2",
                  tr(LinearDiffCase{0.2}), pr(LinearDiffCase{0.2})});
  rows.push_back({"p2=p1-d (d<0)", "1-sqrt(-d)", "(1+d)/2", "d=-0.2",
                  tr(LinearDiffCase{-0.2}), pr(LinearDiffCase{-0.2})});
  rows.push_back({"p2=p1/r (r>=2)", kSupremumToken, kSupremumToken, "", std::nullopt,
                  std::nullopt});
  rows.push_back({"p2=p1/r (1<=r<2)", kSupremumToken, "r/2", "r=1.1", tr(RatioCase{1.1}),
                  pr(RatioCase{1.1})});
  rows.push_back({"p2=p1/r (0<r<1)", "1-sqrt(1-r)", "r/2", "r=0.8", tr(RatioCase{0.8}),
                  pr(RatioCase{0.8})});
  return rows;
}

void emit_table(std::ostream& out, const EmitOptions& opt) {
  const std::vector<TableRow> rows = summary_table();
  if (opt.format == OutputFormat::Csv) {
    out << "case,tr_optimal_p1,pr_optimal_p1,example,tr_p1,tr_value,pr_p1,pr_value\n";
    for (const TableRow& row : rows) {
      out << row.case_label << ',' << row.tr_form << ',' << row.pr_form << ','
          << row.example << ',';
      if (row.tr_at_example) {
        out << optimum_p1_cell(*row.tr_at_example, opt.precision) << ','
            << format_fixed(row.tr_at_example->value, opt.precision) << ',';
      } else {
        out << ",,";
      }
      if (row.pr_at_example) {
        out << optimum_p1_cell(*row.pr_at_example, opt.precision) << ','
            << format_fixed(row.pr_at_example->value, opt.precision);
      } else {
        out << ',';
      }
      out << '\n';
    }
    return;
  }
  json j = envelope(opt);
  json arr = json::array();
  for (const TableRow& row : rows) {
    json r;
    r["case"] = row.case_label;
    r["tr_optimal_p1"] = row.tr_form;
    r["pr_optimal_p1"] = row.pr_form;
    if (!row.example.empty()) {
      r["example"] = row.example;
    }
    if (row.tr_at_example) {
      r["tr_at_example"] = optimum_json(*row.tr_at_example);
    }
    if (row.pr_at_example) {
      r["pr_at_example"] = optimum_json(*row.pr_at_example);
    }
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  dump(out, j);
}

void emit_optimum(std::ostream& out, RuleSet rules, const FreeCase& c,
                  const EmitOptions& opt) {
  const Optimum o = optimal_p1(rules, c);
  const CaseInfo info = case_info(c);
  if (opt.format == OutputFormat::Csv) {
    out << "rules,case,param,kind,optimal_p1,value\n";
    out << rules_token(rules) << ',' << info.name << ','
        << (info.param_name.empty() ? std::string() : format_fixed(info.param, opt.precision))
        << ','
        << (o.kind == OptimumKind::BoundarySupremum ? "boundary_supremum" : "interior")
        << ',' << optimum_p1_cell(o, opt.precision) << ','
        << format_fixed(o.value, opt.precision) << '\n';
    return;
  }
  json j = envelope(opt);
  j["rules"] = rules_token(rules);
  j["case"] = info.name;
  if (!info.param_name.empty()) {
    j[info.param_name] = info.param;
  }
  j["optimum"] = optimum_json(o);
  dump(out, j);
}

void emit_simulate(std::ostream& out, RuleSet rules, const Matchup& matchup,
                   std::int64_t n, std::uint64_t seed, const EmitOptions& opt) {
  if (n < 1) {
    throw DomainError("number of simulated turns must be at least 1, got " +
                      std::to_string(n));
  }
  const ResolvedMatchup m = resolve(matchup);
  Rng rng(seed);
  std::int64_t scored = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    scored += simulate_turn(rules, m.p1, m.p2, rng).scored ? 1 : 0;
  }
  const double estimate = static_cast<double>(scored) / static_cast<double>(n);
  const double closed = score_prob(rules, m.p1, m.p2);
  const double std_error =
      std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(n));
  // z uses the closed-form standard error, which never degenerates to zero.
  const double z = (estimate - closed) /
                   std::sqrt(closed * (1.0 - closed) / static_cast<double>(n));
  if (opt.format == OutputFormat::Csv) {
    const int p = opt.precision;
    out << "rules,p1,p2,n,seed,rng,estimate,std_error,closed_form,z\n"
        << rules_token(rules) << ',' << format_fixed(m.p1.value(), p) << ','
        << format_fixed(m.p2.value(), p) << ',' << n << ',' << seed << ',' << kRngAlgorithm
        << ',' << format_fixed(estimate, p) << ',' << format_fixed(std_error, p) << ','
        << format_fixed(closed, p) << ',' << format_fixed(z, p) << '\n';
    return;
  }
  json j = envelope(opt);
  j["rules"] = rules_token(rules);
  j["matchup"] = matchup_json(matchup);
  j["n"] = n;
  j["seed"] = seed;
  j["rng"] = kRngAlgorithm;
  j["estimate"] = estimate;
  j["std_error"] = std_error;
  j["closed_form"] = closed;
  j["z"] = z;
  dump(out, j);
}

void emit_game(std::ostream& out, const GameConfig& cfg, GameMode mode, std::int64_t n,
               std::uint64_t seed, const EmitOptions& opt) {
  const char* first = cfg.first_shooter == Player::One ? "one" : "two";
  if (mode == GameMode::Exact) {
    const double win = game_win_prob_exact(cfg);
    if (opt.format == OutputFormat::Csv) {
      const int p = opt.precision;
      out << "rules,mode,p1_shoot,p2_follow,p2_shoot,p1_follow,letters,first,win_prob\n"
          << rules_token(cfg.rules) << ",exact,"
          << format_fixed(cfg.when_one_shoots.shooter.value(), p) << ','
          << format_fixed(cfg.when_one_shoots.follower.value(), p) << ','
          << format_fixed(cfg.when_two_shoots.shooter.value(), p) << ','
          << format_fixed(cfg.when_two_shoots.follower.value(), p) << ','
          << cfg.letters_to_lose << ',' << first << ',' << format_fixed(win, p) << '\n';
      return;
    }
    json j = envelope(opt);
    j["rules"] = rules_token(cfg.rules);
    j["mode"] = "exact";
    j["config"] = {{"p1_shoot", cfg.when_one_shoots.shooter.value()},
                   {"p2_follow", cfg.when_one_shoots.follower.value()},
                   {"p2_shoot", cfg.when_two_shoots.shooter.value()},
                   {"p1_follow", cfg.when_two_shoots.follower.value()},
                   {"letters", cfg.letters_to_lose},
                   {"first", first}};
    j["win_prob"] = win;
    dump(out, j);
    return;
  }
  const McEstimate mc = game_win_prob_mc(cfg, n, seed);
  if (opt.format == OutputFormat::Csv) {
    const int p = opt.precision;
    out << "rules,mode,p1_shoot,p2_follow,p2_shoot,p1_follow,letters,first,n,seed,rng,"
           "estimate,std_error\n"
        << rules_token(cfg.rules) << ",mc,"
        << format_fixed(cfg.when_one_shoots.shooter.value(), p) << ','
        << format_fixed(cfg.when_one_shoots.follower.value(), p) << ','
        << format_fixed(cfg.when_two_shoots.shooter.value(), p) << ','
        << format_fixed(cfg.when_two_shoots.follower.value(), p) << ','
        << cfg.letters_to_lose << ',' << first << ',' << n << ',' << seed << ','
        << kRngAlgorithm << ',' << format_fixed(mc.estimate, p) << ','
        << format_fixed(mc.std_error, p) << '\n';
    return;
  }
  json j = envelope(opt);
  j["rules"] = rules_token(cfg.rules);
  j["mode"] = "mc";
  j["config"] = {{"p1_shoot", cfg.when_one_shoots.shooter.value()},
                 {"p2_follow", cfg.when_one_shoots.follower.value()},
                 {"p2_shoot", cfg.when_two_shoots.shooter.value()},
                 {"p1_follow", cfg.when_two_shoots.follower.value()},
                 {"letters", cfg.letters_to_lose},
                 {"first", first}};
  j["n"] = n;
  j["seed"] = seed;
  j["rng"] = kRngAlgorithm;
  j["estimate"] = mc.estimate;
  j["std_error"] = mc.std_error;
  dump(out, j);
}

}  // namespace horse
