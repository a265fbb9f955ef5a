#ifndef HLZETA_ORACLE_HPP
#define HLZETA_ORACLE_HPP

#include "hlzeta/core.hpp"

namespace hlzeta {

/// Compensated-pair accumulator (two_sum cascade); roughly 31 significant
/// digits when fed ordinary doubles.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  void add(double v) {
    double e1;
    const double t1 = two_sum(hi, v, e1);
    const double t2 = e1 + lo;
    hi = fast_two_sum(t1, t2, lo);
  }

  double result() const { return hi; }

 private:
  static double two_sum(double a, double b, double& err) {
    const double x = a + b;
    const double bv = x - a;
    err = (a - (x - bv)) + (b - bv);
    return x;
  }
  static double fast_two_sum(double a, double b, double& err) {
    const double x = a + b;
    err = (a - x) + b;
    return x;
  }
};

struct OracleResult {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;
  long long terms = 0;
};

/// Reference evaluation of the full zeta-family series over the rectangle
/// [0, k_max] x [0, l_max]: row-by-row summation, every term computed from
/// scratch, compensated accumulation.  The tail bound comes from a
/// geometric majorant of the boundary term ratios.  Test-time tool; no
/// performance contract.  Requires |z|, |t| <= 0.9 and k_max, l_max <= 5000.
OracleResult oracle_phi(const ParameterSet& p, const EvalPoint& pt, int k_max,
                        int l_max);

/// Same strategy for the M4 double series.
OracleResult oracle_m4(const ParameterSet& p, Complex x, Complex y, int k_max,
                       int l_max);

}  // namespace hlzeta

#endif  // HLZETA_ORACLE_HPP
