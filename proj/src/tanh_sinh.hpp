#ifndef HLZETA_TANH_SINH_HPP
#define HLZETA_TANH_SINH_HPP

// Double-exponential (tanh-sinh) quadrature on a finite interval.  The
// change of variable x = (a+b)/2 + (b-a)/2 * tanh((pi/2) sinh(u)) pushes
// endpoint singularities like x^(s-1) into super-exponentially decaying
// weights, so integrable singularities need no special casing.  Integrands
// receive the node together with its distance to each endpoint, computed
// in a cancellation-free form.

#include <cmath>
#include <limits>
#include <numbers>

#include "hlzeta/core.hpp"

namespace hlzeta::detail {

struct QuadOutcome {
  Complex value{0.0, 0.0};
  double err = 0.0;
  long long evals = 0;
  int levels = 0;
  bool converged = false;
};

struct TanhSinhNode {
  double x = 0.0;   // abscissa
  double dl = 0.0;  // x - a, exact near the left endpoint
  double dr = 0.0;  // b - x, exact near the right endpoint
  double w = 0.0;   // weight (already includes the interval scaling)
};

// Node for |u| at offset j*h on side sign (+1 right, -1 left).
inline bool tanh_sinh_node(double a, double b, double u, int sign,
                           TanhSinhNode& out) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const double t = kHalfPi * std::sinh(u);
  const double e = std::exp(-2.0 * t);  // in (0, 1] for u >= 0
  if (e == 0.0) return false;           // node indistinguishable from endpoint
  const double width = b - a;
  const double near_dist = width * e / (1.0 + e);  // distance to near endpoint
  const double far_dist = width / (1.0 + e);
  const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
  const double w = 0.5 * width * kHalfPi * std::cosh(u) * sech2;
  if (w == 0.0 || near_dist == 0.0) return false;
  if (sign > 0) {
    out.dl = far_dist;
    out.dr = near_dist;
    out.x = b - near_dist;
  } else {
    out.dl = near_dist;
    out.dr = far_dist;
    out.x = a + near_dist;
  }
  out.w = w;
  return true;
}

// F: Complex(double x, double dl, double dr)
template <class F>
QuadOutcome tanh_sinh(F&& f, double a, double b, double tol, int max_levels) {
  constexpr double kUMax = 7.0;  // abscissa offsets below 1e-300 beyond this
  QuadOutcome out;
  if (!(b > a)) throw DomainError("empty integration interval");

  double h = 1.0;
  Complex acc(0.0, 0.0);  // sum of w*f over all nodes seen so far, step h
  {
    TanhSinhNode n0;
    tanh_sinh_node(a, b, 0.0, +1, n0);
    acc = n0.w * f(n0.x, n0.dl, n0.dr);
    ++out.evals;
    for (int sign : {+1, -1}) {
      for (int j = 1; j * h <= kUMax; ++j) {
        TanhSinhNode n;
        if (!tanh_sinh_node(a, b, j * h, sign, n)) break;
        acc += n.w * f(n.x, n.dl, n.dr);
        ++out.evals;
        if (n.w < 1e-290) break;  // weights only collapse further out
      }
    }
  }
  Complex prev = h * acc;

  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (int sign : {+1, -1}) {
      for (int j = 1; j * h <= kUMax; j += 2) {  // odd multiples only
        TanhSinhNode n;
        if (!tanh_sinh_node(a, b, j * h, sign, n)) break;
        acc += n.w * f(n.x, n.dl, n.dr);
        ++out.evals;
        if (n.w < 1e-290) break;
      }
    }
    const Complex cur = h * acc;
    const double diff = std::abs(cur - prev);
    out.value = cur;
    out.err = diff + std::numeric_limits<double>::epsilon() * std::abs(cur);
    out.levels = level;
    prev = cur;
    if (level >= 2 && out.err <= tol * std::max(1.0, std::abs(cur))) {
      out.converged = true;
      return out;
    }
  }
  out.converged = false;
  return out;
}

}  // namespace hlzeta::detail

#endif  // HLZETA_TANH_SINH_HPP
