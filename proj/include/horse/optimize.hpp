#pragma once

#include <variant>

#include "horse/model.hpp"

namespace horse {

// Matchup families with p1 left free, the quantity being optimized.
struct EqualCase {};                  // p2 = p1
struct LinearDiffCase { double d; };  // p2 = p1 - d, d in (-1,1)
struct RatioCase { double r; };       // p2 = p1 / r, r > 0

using FreeCase = std::variant<EqualCase, LinearDiffCase, RatioCase>;

enum class OptimumKind {
  Interior,           // argmax attained strictly inside the domain
  BoundarySupremum,   // objective increases toward the open upper endpoint
};

// Result of maximizing the scoring probability over p1. For a boundary
// supremum, argmax is the limit point (the open upper endpoint of the p1
// domain) and value is the limit of the score there; the value is never
// attained. The two are kept distinct on purpose: an optimum "near 1" and
// a supremum "at 1" are different answers.
struct Optimum {
  OptimumKind kind;
  double argmax;
  double value;
};

struct Interval {
  double lo;
  double hi;
};

// Open interval of legal p1 values for the family. Validates d and r.
Interval p1_domain(const FreeCase& c);

// Opponent probability induced by the family at a given p1.
double opponent_prob(const FreeCase& c, double p1);

// Concrete matchup at a given p1 (validated on construction).
Matchup case_matchup(const FreeCase& c, double p1);

// Scoring probability along the family's curve, as a function of p1 alone.
double case_score(RuleSet rules, const FreeCase& c, double p1);

// Closed-form optimal p1:
//   Equal:      TR sup p1->1 (limit 1/2);            PR argmax 1/2 (value 1/4)
//   LinearDiff: TR sup p1->1 if d >= 0, else argmax 1 - sqrt(-d);
//               PR argmax (1+d)/2 for every d in (-1,1)
//   Ratio:      TR sup p1->1 if r >= 1, else argmax 1 - sqrt(1-r);
//               PR sup p1->1 if r >= 2, else argmax r/2
Optimum optimal_p1(RuleSet rules, const FreeCase& c);

// Derivative of the scoring probability with respect to p1 at p1.
// Traditional uses the closed forms
//   d/dp1 A(p1, p1-d)  = ((1-p1)^2 + d) / (1 + d p1 - p1^2)^2
//   d/dp1 A(p1, p1/r)  = r (p1^2 - 2 p1 + r) / (p1^2 - r)^2
// and Pops the elementary (1+d) - 2 p1 and 1 - 2 p1 / r. The equal family
// is the d = 0 linear-difference case.
double d_score_dp1(RuleSet rules, const FreeCase& c, double p1);

// Independent numeric maximizer: coarse grid scan at the given resolution,
// golden-section refinement of the best cell to the given tolerance. If the
// refined argmax lands within one grid step of the open upper endpoint and
// the objective is still increasing there, the result is reported as a
// boundary supremum with the limit value estimated by Richardson
// extrapolation toward the endpoint.
Optimum numeric_optimal_p1(RuleSet rules, const FreeCase& c, double resolution,
                           double tolerance);

struct RuleComparison {
  Optimum traditional;
  Optimum pops;
  bool pops_smaller;  // PR optimal p1 strictly below TR optimal p1
};

// Optima under both rule sets, plus the "Pops pushes toward harder shots"
// comparison of their argmax / limit points.
RuleComparison pr_pushes_harder(const FreeCase& c);

}  // namespace horse
