#include "hlzeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hlzeta {

namespace {

struct TermSpec {
  ParameterSet p;
  Complex z, t;
  bool with_weight = false;  // (k+l+a)^(-s)
  Complex s, a;
};

// One term, built from its own factors with numerator and denominator
// contributions interleaved so intermediate magnitudes stay balanced.
Complex term_value(const TermSpec& ts, int k, int l) {
  Complex acc(1.0, 0.0);
  for (int j = 0; j < k; ++j) {
    const double dj = static_cast<double>(j);
    acc *= (ts.p.eta + dj) * (ts.p.delta + dj) * ts.z /
           ((ts.p.xi + dj) * static_cast<double>(j + 1));
  }
  for (int j = 0; j < l; ++j) {
    const double dj = static_cast<double>(j);
    acc *= (ts.p.eta_p + dj) * (ts.p.delta_p + dj) * ts.t /
           ((ts.p.xi_p + dj) * static_cast<double>(j + 1));
  }
  for (int j = 0; j < k + l; ++j) {
    const double dj = static_cast<double>(j);
    acc *= (ts.p.mu + dj) / (ts.p.nu + dj);
  }
  if (ts.with_weight) {
    acc *= complex_power_neg_s(ts.a + static_cast<double>(k + l), ts.s);
  }
  return acc;
}

OracleResult sum_rectangle(const TermSpec& ts, int k_max, int l_max) {
  if (k_max < 0 || l_max < 0 || k_max > 5000 || l_max > 5000) {
    throw DomainError("oracle rectangle must fit in [0, 5000]^2");
  }
  if (std::abs(ts.z) > 0.9 || std::abs(ts.t) > 0.9) {
    throw DomainError("oracle requires |z|, |t| <= 0.9");
  }

  DoubleDouble re, im;
  OracleResult out;
  // boundary data for the tail majorant
  std::vector<double> last_col(k_max + 1, 0.0), prev_col(k_max + 1, 0.0);
  std::vector<double> last_row(l_max + 1, 0.0), prev_row(l_max + 1, 0.0);

  for (int k = 0; k <= k_max; ++k) {
    for (int l = 0; l <= l_max; ++l) {
      const Complex v = term_value(ts, k, l);
      re.add(v.real());
      im.add(v.imag());
      ++out.terms;
      const double av = std::abs(v);
      if (l == l_max) last_col[k] = av;
      if (l == l_max - 1) prev_col[k] = av;
      if (k == k_max) last_row[l] = av;
      if (k == k_max - 1) prev_row[l] = av;
    }
  }
  out.value = Complex(re.result(), im.result());

  // Majorant ratio: worst observed step ratio across the outer boundary,
  // floored by |z| and |t| (the ratios' limits when they increase toward
  // the arguments from below).
  double q = std::max(std::abs(ts.z), std::abs(ts.t));
  double boundary_sum = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    if (prev_col[k] > 0.0) q = std::max(q, last_col[k] / prev_col[k]);
    boundary_sum += last_col[k];
  }
  for (int l = 0; l <= l_max; ++l) {
    if (prev_row[l] > 0.0) q = std::max(q, last_row[l] / prev_row[l]);
    boundary_sum += last_row[l];
  }
  boundary_sum -= last_col[k_max];  // corner counted once

  if (boundary_sum == 0.0) {
    out.tail_bound = 0.0;  // boundary identically zero: series terminated
    return out;
  }
  if (q >= 1.0) {
    throw TailBoundUnavailable("term-ratio majorant is not below 1");
  }
  const double g = q / (1.0 - q);
  // second term covers the quadrant beyond both edges
  out.tail_bound = boundary_sum * g + last_col[k_max] * g * g;
  return out;
}

}  // namespace

OracleResult oracle_phi(const ParameterSet& p, const EvalPoint& pt, int k_max,
                        int l_max) {
  validate(p);
  validate(pt);
  TermSpec ts;
  ts.p = p;
  ts.z = pt.z;
  ts.t = pt.t;
  ts.with_weight = true;
  ts.s = pt.s;
  ts.a = pt.a;
  return sum_rectangle(ts, k_max, l_max);
}

OracleResult oracle_m4(const ParameterSet& p, Complex x, Complex y, int k_max,
                       int l_max) {
  validate(p);
  TermSpec ts;
  ts.p = p;
  ts.z = x;
  ts.t = y;
  return sum_rectangle(ts, k_max, l_max);
}

}  // namespace hlzeta
