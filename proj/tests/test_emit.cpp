#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "horse/emit.hpp"

using namespace horse;
using nlohmann::json;

namespace {

ShotProbability sp(double v) { return ShotProbability(v); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

EmitOptions csv_options(int precision = 6) {
  return EmitOptions{OutputFormat::Csv, precision, "test"};
}

EmitOptions json_options() { return EmitOptions{OutputFormat::Json, 6, "test"}; }

}  // namespace

TEST_CASE("fixed formatting uses a dot and the requested decimals") {
  CHECK(format_fixed(0.5, 6) == "0.500000");
  CHECK(format_fixed(1.0 / 3.0, 6) == "0.333333");
  CHECK(format_fixed(0.5527864045000421, 6) == "0.552786");
  CHECK(format_fixed(0.25, 2) == "0.25");
  CHECK(format_fixed(0.25, 0) == "0");
}

TEST_CASE("score emits the probability and the scenario split") {
  std::ostringstream csv;
  emit_score(csv, RuleSet::Traditional, EqualMatchup{sp(0.5)}, csv_options());
  const auto lines = lines_of(csv.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "rules,p1,p2,score,s1,s2,s3");
  CHECK(lines[1] == "tr,0.500000,0.500000,0.333333,0.500000,0.250000,0.250000");

  std::ostringstream js;
  emit_score(js, RuleSet::Pops, Matchup{LinearDiffMatchup(0.2, sp(0.6))}, json_options());
  const json j = json::parse(js.str());
  CHECK(j["tool"] == "horse");
  CHECK(j["command"] == "test");
  CHECK(j["rules"] == "pr");
  CHECK(j["matchup"]["case"] == "diff");
  CHECK(j["matchup"]["d"] == 0.2);
  CHECK(std::abs(j["score"].get<double>() - 0.36) < 1e-12);
  CHECK(std::abs(j["scenarios"]["s1"].get<double>() - 0.4) < 1e-12);
}

TEST_CASE("curve spans the open interval with the closed-form columns") {
  std::ostringstream out;
  emit_curve(out, 0.01, csv_options());
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 100);  // header + 99 rows, p=1 excluded
  CHECK(lines[0] == "p,A_tr,B_pr");
  CHECK(lines[50] == "0.500000,0.333333,0.250000");

  double max_b = 0.0;
  double prev_a = 0.0;
  std::string argmax_p;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    REQUIRE(cells.size() == 3);
    const double a = std::stod(cells[1]);
    const double b = std::stod(cells[2]);
    REQUIRE(a >= b);
    REQUIRE(a > prev_a);  // A(p) increases all the way up the grid
    prev_a = a;
    if (b > max_b) {
      max_b = b;
      argmax_p = cells[0];
    }
  }
  CHECK(max_b == doctest::Approx(0.25));
  CHECK(argmax_p == "0.500000");

  CHECK_THROWS_AS(emit_curve(out, 0.0, csv_options()), DomainError);
  CHECK_THROWS_AS(emit_curve(out, 1.0, csv_options()), DomainError);
}

TEST_CASE("heatmap grid covers the square and repeats the closed forms") {
  std::ostringstream out;
  emit_heatmap(out, 0.25, false, nullptr, csv_options());
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 1 + 3 * 3);
  CHECK(lines[0] == "p1,p2,A_tr,B_pr");
  bool found_center = false;
  for (const auto& line : lines) {
    if (line == "0.500000,0.500000,0.333333,0.250000") found_center = true;
  }
  CHECK(found_center);
}

TEST_CASE("heatmap overlays carry the five lines with optima under both rules") {
  std::ostringstream grid, overlays;
  emit_heatmap(grid, 0.25, true, &overlays, csv_options());
  const auto lines = lines_of(overlays.str());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "line,case,param,tr_p1,tr_value,pr_p1,pr_value");
  CHECK(lines[1] == "p2=p1+0.2,diff,-0.200000,0.552786,0.234053,0.400000,0.160000");
  CHECK(lines[2] == "p2=p1/0.8,ratio,0.800000,0.552786,0.276393,0.400000,0.200000");
  CHECK(lines[3] == "p2=p1,equal,,sup->1,0.500000,0.500000,0.250000");
  CHECK(lines[4] == "p2=p1/1.1,ratio,1.100000,sup->1,1.000000,0.550000,0.275000");
  CHECK(lines[5] == "p2=p1-0.2,diff,0.200000,sup->1,1.000000,0.600000,0.360000");

  // Overlays requested without a destination is a usage error in CSV mode.
  std::ostringstream sink;
  CHECK_THROWS_AS(emit_heatmap(sink, 0.25, true, nullptr, csv_options()), DomainError);

  // JSON keeps the overlays inline.
  std::ostringstream js;
  emit_heatmap(js, 0.25, true, nullptr, json_options());
  const json j = json::parse(js.str());
  REQUIRE(j["overlays"].size() == 5);
  CHECK(j["overlays"][3]["tr"]["kind"] == "boundary_supremum");
  CHECK(j["overlays"][3]["tr"]["optimal_p1"] == kSupremumToken);
  CHECK(j["overlays"][3]["tr"]["limit_point"] == 1.0);
  CHECK(j["overlays"][3]["pr"]["optimal_p1"] == 0.55);
}

TEST_CASE("summary table reproduces all six rows") {
  std::ostringstream out;
  emit_table(out, csv_options());
  const std::string expected =
      "case,tr_optimal_p1,pr_optimal_p1,example,tr_p1,tr_value,pr_p1,pr_value\n"
      "p2=p1,sup->1,1/2,,sup->1,0.500000,0.500000,0.250000\n"
      "p2=p1-d (d>=0),sup->1,(1+d)/2,d=0.2,sup->1,1.000000,0.600000,0.360000\n"
      "p2=p1-d (d<0),1-sqrt(-d),(1+d)/2,d=-0.2,0.552786,0.234053,0.400000,0.160000\n"
      "p2=p1/r (r>=2),sup->1,sup->1,,,,,\n"
      "p2=p1/r (1<=r<2),sup->1,r/2,r=1.1,sup->1,1.000000,0.550000,0.275000\n"
      "p2=p1/r (0<r<1),1-sqrt(1-r),r/2,r=0.8,0.552786,0.276393,0.400000,0.200000\n";
  CHECK(out.str() == expected);

  std::ostringstream js;
  emit_table(js, json_options());
  const json j = json::parse(js.str());
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][0]["tr_optimal_p1"] == kSupremumToken);
  CHECK(j["rows"][0]["pr_at_example"]["optimal_p1"] == 0.5);
  CHECK(j["rows"][3]["pr_optimal_p1"] == kSupremumToken);
  CHECK(!j["rows"][3].contains("example"));
}

TEST_CASE("optimum serialization distinguishes suprema from attained argmaxes") {
  std::ostringstream sup;
  emit_optimum(sup, RuleSet::Traditional, RatioCase{1.1}, json_options());
  const json js = json::parse(sup.str());
  CHECK(js["optimum"]["kind"] == "boundary_supremum");
  CHECK(js["optimum"]["optimal_p1"] == kSupremumToken);
  CHECK(js["optimum"]["limit_point"] == 1.0);
  CHECK(js["optimum"]["limit_value"] == 1.0);
  CHECK(!js["optimum"].contains("value"));

  std::ostringstream inter;
  emit_optimum(inter, RuleSet::Pops, LinearDiffCase{0.2}, json_options());
  const json ji = json::parse(inter.str());
  CHECK(ji["optimum"]["kind"] == "interior");
  CHECK(std::abs(ji["optimum"]["optimal_p1"].get<double>() - 0.6) < 1e-12);
  CHECK(std::abs(ji["optimum"]["value"].get<double>() - 0.36) < 1e-12);

  std::ostringstream csv;
  emit_optimum(csv, RuleSet::Traditional, EqualCase{}, csv_options());
  const auto lines = lines_of(csv.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "rules,case,param,kind,optimal_p1,value");
  CHECK(lines[1] == "tr,equal,,boundary_supremum,sup->1,0.500000");
}

TEST_CASE("simulate envelope carries the seed and a small z-score") {
  std::ostringstream out;
  emit_simulate(out, RuleSet::Traditional, EqualMatchup{sp(0.5)}, 100000, 7,
                json_options());
  const json j = json::parse(out.str());
  CHECK(j["seed"] == 7);
  CHECK(j["rng"] == std::string(kRngAlgorithm));
  CHECK(j["n"] == 100000);
  CHECK(std::abs(j["closed_form"].get<double>() - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(j["z"].get<double>()) < 4.0);

  std::ostringstream again;
  emit_simulate(again, RuleSet::Traditional, EqualMatchup{sp(0.5)}, 100000, 7,
                json_options());
  CHECK(again.str() == out.str());  // same command + seed, same bytes

  std::ostringstream csv;
  emit_simulate(csv, RuleSet::Pops, EqualMatchup{sp(0.5)}, 1000, 3, csv_options());
  const auto lines = lines_of(csv.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "rules,p1,p2,n,seed,rng,estimate,std_error,closed_form,z");
  CHECK(split_csv(lines[1])[4] == "3");  // the seed rides along in the payload

  CHECK_THROWS_AS(emit_simulate(csv, RuleSet::Pops, EqualMatchup{sp(0.5)}, 0, 3,
                                csv_options()),
                  DomainError);
}

TEST_CASE("game envelopes for both modes") {
  const GameConfig cfg{RuleSet::Pops, {sp(0.5), sp(0.5)}, {sp(0.5), sp(0.5)}, 1,
                       Player::One};
  std::ostringstream exact;
  emit_game(exact, cfg, GameMode::Exact, 0, 0, json_options());
  const json je = json::parse(exact.str());
  CHECK(je["mode"] == "exact");
  CHECK(std::abs(je["win_prob"].get<double>() - 4.0 / 7.0) < 1e-12);
  CHECK(!je.contains("seed"));

  std::ostringstream mc;
  emit_game(mc, cfg, GameMode::MonteCarlo, 50000, 11, json_options());
  const json jm = json::parse(mc.str());
  CHECK(jm["mode"] == "mc");
  CHECK(jm["seed"] == 11);
  CHECK(jm["rng"] == std::string(kRngAlgorithm));
  const double est = jm["estimate"].get<double>();
  const double band = 4.0 * std::sqrt((4.0 / 7.0) * (3.0 / 7.0) / 50000.0);
  CHECK(std::abs(est - 4.0 / 7.0) < band);

  std::ostringstream mc2;
  emit_game(mc2, cfg, GameMode::MonteCarlo, 50000, 11, json_options());
  CHECK(mc2.str() == mc.str());
}

TEST_CASE("csv output uses LF line endings and a trailing newline") {
  std::ostringstream out;
  emit_table(out, csv_options());
  const std::string text = out.str();
  CHECK(text.find('\r') == std::string::npos);
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
}

TEST_CASE("precision override reshapes CSV cells") {
  std::ostringstream out;
  emit_curve(out, 0.5, csv_options(3));
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "0.500,0.333,0.250");
}
