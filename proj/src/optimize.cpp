#include "horse/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "horse/golden_section.hpp"

namespace horse {

namespace {

double square(double x) { return x * x; }

void check_inside(const Interval& dom, double p1) {
  if (!(p1 > dom.lo && p1 < dom.hi)) {
    throw DomainError("p1=" + std::to_string(p1) + " outside the restricted domain (" +
                      std::to_string(dom.lo) + ", " + std::to_string(dom.hi) + ")");
  }
}

}  // namespace

Interval p1_domain(const FreeCase& c) {
  return std::visit(
      [](const auto& k) -> Interval {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, EqualCase>) {
          return {0.0, 1.0};
        } else if constexpr (std::is_same_v<T, LinearDiffCase>) {
          if (!(k.d > -1.0 && k.d < 1.0)) {
            throw DomainError("skill difference d must lie in (-1,1), got " +
                              std::to_string(k.d));
          }
          // Both p1 and p2 = p1 - d must stay in (0,1).
          return {std::max(0.0, k.d), std::min(1.0, 1.0 + k.d)};
        } else {
          if (!(k.r > 0.0)) {
            throw DomainError("skill ratio r must be positive, got " + std::to_string(k.r));
          }
          return {0.0, std::min(1.0, k.r)};
        }
      },
      c);
}

double opponent_prob(const FreeCase& c, double p1) {
  return std::visit(
      [p1](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, EqualCase>) {
          return p1;
        } else if constexpr (std::is_same_v<T, LinearDiffCase>) {
          return p1 - k.d;
        } else {
          return p1 / k.r;
        }
      },
      c);
}

Matchup case_matchup(const FreeCase& c, double p1) {
  return std::visit(
      [p1](const auto& k) -> Matchup {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, EqualCase>) {
          return EqualMatchup{ShotProbability(p1)};
        } else if constexpr (std::is_same_v<T, LinearDiffCase>) {
          return LinearDiffMatchup(k.d, ShotProbability(p1));
        } else {
          return RatioMatchup(k.r, ShotProbability(p1));
        }
      },
      c);
}

double case_score(RuleSet rules, const FreeCase& c, double p1) {
  const ResolvedMatchup m = resolve(case_matchup(c, p1));
  return score_prob(rules, m.p1, m.p2);
}

Optimum optimal_p1(RuleSet rules, const FreeCase& c) {
  p1_domain(c);  // validates d / r
  return std::visit(
      [&](const auto& k) -> Optimum {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, EqualCase>) {
          if (rules == RuleSet::Traditional) {
            // A(p) = p/(1+p) increases toward 1/2 as p -> 1.
            return {OptimumKind::BoundarySupremum, 1.0, 0.5};
          }
          return {OptimumKind::Interior, 0.5, 0.25};
        } else if constexpr (std::is_same_v<T, LinearDiffCase>) {
          if (rules == RuleSet::Pops) {
            const double p = (1.0 + k.d) / 2.0;
            return {OptimumKind::Interior, p, case_score(rules, c, p)};
          }
          if (k.d >= 0.0) {
            // A(p1, p1-d) -> 1 as p1 -> 1 for d > 0; the d = 0 limit is the
            // equal-case 1/2.
            return {OptimumKind::BoundarySupremum, 1.0, k.d > 0.0 ? 1.0 : 0.5};
          }
          const double p = 1.0 - std::sqrt(-k.d);
          return {OptimumKind::Interior, p, case_score(rules, c, p)};
        } else {
          if (rules == RuleSet::Pops) {
            if (k.r >= 2.0) {
              // Vertex r/2 sits at or beyond the open endpoint 1.
              return {OptimumKind::BoundarySupremum, 1.0, 1.0 - 1.0 / k.r};
            }
            const double p = k.r / 2.0;
            return {OptimumKind::Interior, p, case_score(rules, c, p)};
          }
          if (k.r >= 1.0) {
            return {OptimumKind::BoundarySupremum, 1.0, k.r > 1.0 ? 1.0 : 0.5};
          }
          const double p = 1.0 - std::sqrt(1.0 - k.r);
          return {OptimumKind::Interior, p, case_score(rules, c, p)};
        }
      },
      c);
}

double d_score_dp1(RuleSet rules, const FreeCase& c, double p1) {
  const Interval dom = p1_domain(c);
  check_inside(dom, p1);
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, RatioCase>) {
          if (rules == RuleSet::Traditional) {
            return k.r * (p1 * p1 - 2.0 * p1 + k.r) / square(p1 * p1 - k.r);
          }
          return 1.0 - 2.0 * p1 / k.r;
        } else {
          // The equal family is the d = 0 linear-difference case.
          double d = 0.0;
          if constexpr (std::is_same_v<T, LinearDiffCase>) d = k.d;
          if (rules == RuleSet::Traditional) {
            return (square(1.0 - p1) + d) / square(1.0 + d * p1 - p1 * p1);
          }
          return (1.0 + d) - 2.0 * p1;
        }
      },
      c);
}

Optimum numeric_optimal_p1(RuleSet rules, const FreeCase& c, double resolution,
                           double tolerance) {
  if (!(resolution > 0.0)) {
    throw DomainError("resolution must be positive, got " + std::to_string(resolution));
  }
  if (!(tolerance > 0.0)) {
    throw DomainError("tolerance must be positive, got " + std::to_string(tolerance));
  }
  const Interval dom = p1_domain(c);
  const double width = dom.hi - dom.lo;
  // On domains narrower than a few steps, shrink the step so the grid still
  // sees the objective's shape.
  const double step = std::min(resolution, width / 10.0);
  const auto f = [&](double x) { return case_score(rules, c, x); };

  // Coarse scan; on a plateau the smallest p1 wins.
  double best_x = dom.lo + step;
  double best_f = f(best_x);
  for (int k = 2;; ++k) {
    const double x = dom.lo + k * step;
    if (!(x < dom.hi)) break;
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
    }
  }

  const double bracket_lo = std::max(dom.lo, best_x - step);
  const double bracket_hi = std::min(dom.hi, best_x + step);
  auto [x_star, f_star] = golden_section_max(f, bracket_lo, bracket_hi, tolerance);

  // Boundary rule: within one step of the open upper endpoint and still
  // increasing there means the maximum is a supremum, not an attained argmax.
  if (dom.hi - x_star <= step) {
    const double eps = 1e-6 * width;
    if (f(dom.hi - eps) > f(dom.hi - 2.0 * eps)) {
      // Two-level Richardson extrapolation of f(hi - u) to u = 0.
      const double r1 = 2.0 * f(dom.hi - eps / 2.0) - f(dom.hi - eps);
      const double r2 = 2.0 * f(dom.hi - eps / 4.0) - f(dom.hi - eps / 2.0);
      return {OptimumKind::BoundarySupremum, dom.hi, (4.0 * r2 - r1) / 3.0};
    }
  }
  return {OptimumKind::Interior, x_star, f_star};
}

RuleComparison pr_pushes_harder(const FreeCase& c) {
  RuleComparison cmp{optimal_p1(RuleSet::Traditional, c), optimal_p1(RuleSet::Pops, c),
                     false};
  cmp.pops_smaller = cmp.pops.argmax < cmp.traditional.argmax;
  return cmp;
}

}  // namespace horse
