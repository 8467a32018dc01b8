#include "horse/model.hpp"

#include <string>

namespace horse {

namespace {

std::string bad_probability_message(const char* what, double value) {
  return std::string(what) + " must lie strictly between 0 and 1, got " +
         std::to_string(value);
}

}  // namespace

ShotProbability::ShotProbability(double value) : value_(value) {
  // Strict comparisons; NaN fails both and is rejected as well.
  if (!(value > 0.0 && value < 1.0)) {
    throw DomainError(bad_probability_message("shot probability", value));
  }
}

LinearDiffMatchup::LinearDiffMatchup(double d, ShotProbability p1) : d_(d), p1_(p1) {
  if (!(d > -1.0 && d < 1.0)) {
    throw DomainError("skill difference d must lie in (-1,1), got " + std::to_string(d));
  }
  const double p2 = p1.value() - d;
  if (!(p2 > 0.0 && p2 < 1.0)) {
    throw DomainError("p1=" + std::to_string(p1.value()) + " with d=" + std::to_string(d) +
                      " puts the opponent probability p1-d outside (0,1)");
  }
}

RatioMatchup::RatioMatchup(double r, ShotProbability p1) : r_(r), p1_(p1) {
  if (!(r > 0.0)) {
    throw DomainError("skill ratio r must be positive, got " + std::to_string(r));
  }
  const double p2 = p1.value() / r;
  if (!(p2 > 0.0 && p2 < 1.0)) {
    throw DomainError("p1=" + std::to_string(p1.value()) + " with r=" + std::to_string(r) +
                      " puts the opponent probability p1/r outside (0,1)");
  }
}

ResolvedMatchup resolve(const Matchup& matchup) {
  return std::visit(
      [](const auto& m) -> ResolvedMatchup {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, EqualMatchup>) {
          return {m.p, m.p};
        } else if constexpr (std::is_same_v<T, FreeMatchup>) {
          return {m.p1, m.p2};
        } else if constexpr (std::is_same_v<T, LinearDiffMatchup>) {
          return {m.p1(), ShotProbability(m.p1().value() - m.d())};
        } else {
          return {m.p1(), ShotProbability(m.p1().value() / m.r())};
        }
      },
      matchup);
}

ScenarioDistribution scenario_probs(ShotProbability p1, ShotProbability p2) {
  const double a = p1.value();
  const double b = p2.value();
  return {1.0 - a, a * (1.0 - b), a * b};
}

double score_prob(RuleSet rules, ShotProbability p1, ShotProbability p2) {
  const double a = p1.value();
  const double b = p2.value();
  const double first_point = a * (1.0 - b);  // P(S2)
  if (rules == RuleSet::Pops) {
    return first_point;
  }
  // 1 - p1 p2 > 0 on the open domain, so the division is always defined.
  return first_point / (1.0 - a * b);
}

double score_prob_equal(RuleSet rules, ShotProbability p) {
  return score_prob(rules, p, p);
}

}  // namespace horse
