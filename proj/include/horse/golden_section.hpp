#pragma once

#include <utility>

namespace horse {

// Golden-section search for the maximum of a unimodal function on [lo, hi].
// Shrinks the bracket until its width drops below tol and returns
// {argmax, value}. Probe points stay strictly inside (lo, hi), so the
// endpoints themselves are never evaluated. Ties resolve to the smaller x.
template <typename F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  // The width shrinks by kInvPhi per step; the iteration cap only guards
  // against a tol below the floating-point spacing of the bracket.
  for (int iter = 0; b - a > tol && iter < 400; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace horse
