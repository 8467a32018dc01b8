#pragma once

#include <stdexcept>
#include <variant>

namespace horse {

// Thrown whenever a value falls outside the open domains the model is
// defined on. The math itself is total once inputs are validated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A make probability, restricted to the strict open interval (0,1).
// Both endpoints are rejected: a shot nobody ever makes carries no game,
// and a shot nobody ever misses leads to a turn that never ends.
class ShotProbability {
 public:
  explicit ShotProbability(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

enum class RuleSet {
  Traditional,  // after S3 (both players make the shot) the shooter's turn restarts
  Pops,         // after S3 the turn "pops" over to the opponent
};

// p2 = p1: both players make the chosen shot with the same probability.
struct EqualMatchup {
  ShotProbability p;
};

// Independent make probabilities for the two players.
struct FreeMatchup {
  ShotProbability p1;
  ShotProbability p2;
};

// p2 = p1 - d for a fixed skill gap d in (-1,1). p1 is restricted so that
// both probabilities land in (0,1), i.e. p1 in (max(0,d), min(1,1+d)).
class LinearDiffMatchup {
 public:
  LinearDiffMatchup(double d, ShotProbability p1);

  double d() const noexcept { return d_; }
  ShotProbability p1() const noexcept { return p1_; }

 private:
  double d_;
  ShotProbability p1_;
};

// p2 = p1 / r for a fixed skill ratio r > 0, with p1 in (0, min(1,r)).
class RatioMatchup {
 public:
  RatioMatchup(double r, ShotProbability p1);

  double r() const noexcept { return r_; }
  ShotProbability p1() const noexcept { return p1_; }

 private:
  double r_;
  ShotProbability p1_;
};

using Matchup = std::variant<EqualMatchup, FreeMatchup, LinearDiffMatchup, RatioMatchup>;

struct ResolvedMatchup {
  ShotProbability p1;
  ShotProbability p2;
};

// Probabilities of the three ways one round of a turn can go.
// Components always sum to 1.
struct ScenarioDistribution {
  double s1;  // shooter misses
  double s2;  // shooter makes, opponent misses: a point is scored
  double s3;  // both make
};

// Concrete (p1, p2) pair for any matchup variant.
ResolvedMatchup resolve(const Matchup& matchup);

ScenarioDistribution scenario_probs(ShotProbability p1, ShotProbability p2);

// Probability that the shooter scores a point on their turn.
//   Pops:        B(p1,p2) = p1 (1 - p2)
//   Traditional: A(p1,p2) = p1 (1 - p2) / (1 - p1 p2),
// the solution of the restart recurrence A = P(S2) + P(S3) A.
double score_prob(RuleSet rules, ShotProbability p1, ShotProbability p2);

// Equal-ability special case; delegates to score_prob(rules, p, p).
double score_prob_equal(RuleSet rules, ShotProbability p);

}  // namespace horse
