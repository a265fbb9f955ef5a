#ifndef HLZETA_SERIES_ENGINE_HPP
#define HLZETA_SERIES_ENGINE_HPP

// Shared summation engine for the double hypergeometric series in this
// library.  Every series handled here has the shape
//
//   sum_{k,l>=0} C(k+l) * U(k) * V(l) * w(k+l)
//
// with U(k) = prod_i (u_num_i)_k / (prod_j (u_den_j)_k * k!) * x^k, V(l)
// likewise in y, C(n) = prod (c_num)_n / prod (c_den)_n, and an optional
// per-diagonal weight w(n) such as (n+a)^(-s).  Summation runs along the
// diagonals n = k + l; factor sequences advance by forward recurrence
// (multiplication only, so exact zeros from terminating parameters persist)
// and are recomputed in log space every 64 diagonals to arrest drift.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hlzeta/core.hpp"

namespace hlzeta::detail {

struct FactorSeq {
  std::vector<Complex> num;  // Pochhammer parameters in the numerator
  std::vector<Complex> den;  // Pochhammer parameters in the denominator
  Complex arg{0.0, 0.0};     // x in x^k / k!
};

struct DoubleSeriesSpec {
  std::vector<Complex> coupled_num;  // (p)_{k+l} factors
  std::vector<Complex> coupled_den;
  FactorSeq u, v;
  std::function<Complex(int)> diagonal_weight;  // null means 1
};

// Index of the last structurally nonzero element of the sequence, or -1 if
// the sequence never terminates.  U(k) terminates when some numerator
// parameter is a non-positive integer (zero factor at k = |p| + 1) or when
// the argument is exactly zero.
inline int termination_index(const FactorSeq& f) {
  int cut = -1;
  if (f.arg == Complex(0.0, 0.0)) cut = 0;
  for (const Complex& p : f.num) {
    if (is_nonpositive_integer(p)) {
      const int k = static_cast<int>(-p.real());
      if (cut < 0 || k < cut) cut = k;
    }
  }
  return cut;
}

// Sum of Re(den) - Re(num) over a factor group; the boundary-convergence
// exponents are assembled from these.
inline double exponent_balance(const std::vector<Complex>& num,
                               const std::vector<Complex>& den) {
  double e = 0.0;
  for (const Complex& c : den) e += c.real();
  for (const Complex& c : num) e -= c.real();
  return e;
}

inline Complex factor_step(const FactorSeq& f, int k_next) {
  // multiplier taking U(k_next - 1) to U(k_next)
  const double j = static_cast<double>(k_next - 1);
  Complex m = f.arg / static_cast<double>(k_next);
  for (const Complex& p : f.num) m *= p + j;
  for (const Complex& p : f.den) m /= p + j;
  return m;
}

inline Complex factor_value_logspace(const FactorSeq& f, int k) {
  Complex lg = static_cast<double>(k) * std::log(f.arg);
  for (const Complex& p : f.num) lg += log_pochhammer(p, k);
  for (const Complex& p : f.den) lg -= log_pochhammer(p, k);
  lg -= log_gamma(Complex(static_cast<double>(k) + 1.0, 0.0));
  return std::exp(lg);
}

inline EvalResult sum_double_series(const DoubleSeriesSpec& spec,
                                    const SeriesConfig& cfg, Method tag) {
  validate(cfg);
  const int cut_u = termination_index(spec.u);
  const int cut_v = termination_index(spec.v);
  int cut_c = -1;  // coupled numerator termination: (p)_n dead beyond |p|
  for (const Complex& p : spec.coupled_num) {
    if (is_nonpositive_integer(p)) {
      const int n = static_cast<int>(-p.real());
      if (cut_c < 0 || n < cut_c) cut_c = n;
    }
  }

  std::vector<Complex> uval{Complex(1.0, 0.0)};
  std::vector<Complex> vval{Complex(1.0, 0.0)};
  uval.reserve(256);
  vval.reserve(256);

  Complex coupled(1.0, 0.0);
  Complex sum(0.0, 0.0);
  EvalResult res;
  res.method = tag;

  int stall = 0;
  double prev_abs_diag = -1.0;
  double window_max = 0.0;
  double ratio = 0.0;

  // Geometric tail model d_N * q / (1 - q), inflated by 3 to cover the
  // polynomially decaying boundary regime where q creeps toward 1.
  auto tail_estimate = [&](double last_abs) {
    const double q = std::min(ratio, 1.0 - 1e-8);
    double est = last_abs;
    if (q > 0.0) est = std::max(est, 3.0 * last_abs * q / (1.0 - q));
    return est + std::numeric_limits<double>::epsilon() * std::abs(sum);
  };

  for (int n = 0; n <= cfg.max_diagonal; ++n) {
    if (n > 0) {
      const bool refresh = (n % 64 == 0);
      if (cut_u >= 0 && n > cut_u) {
        uval.push_back(Complex(0.0, 0.0));
      } else if (refresh) {
        uval.push_back(factor_value_logspace(spec.u, n));
      } else {
        uval.push_back(uval[n - 1] * factor_step(spec.u, n));
      }
      if (cut_v >= 0 && n > cut_v) {
        vval.push_back(Complex(0.0, 0.0));
      } else if (refresh) {
        vval.push_back(factor_value_logspace(spec.v, n));
      } else {
        vval.push_back(vval[n - 1] * factor_step(spec.v, n));
      }
      if (refresh && cut_c < 0 &&
          (!spec.coupled_num.empty() || !spec.coupled_den.empty())) {
        Complex lg(0.0, 0.0);
        for (const Complex& p : spec.coupled_num) lg += log_pochhammer(p, n);
        for (const Complex& p : spec.coupled_den) lg -= log_pochhammer(p, n);
        coupled = std::exp(lg);
      } else {
        const double j = static_cast<double>(n - 1);
        for (const Complex& p : spec.coupled_num) coupled *= p + j;
        for (const Complex& p : spec.coupled_den) coupled /= p + j;
      }
    }

    int lo = 0, hi = n;
    if (cut_u >= 0) lo = std::max(lo, n - cut_u);
    if (cut_v >= 0) hi = std::min(hi, cut_v);
    Complex inner(0.0, 0.0);
    for (int l = lo; l <= hi; ++l) inner += uval[n - l] * vval[l];
    res.work += (hi >= lo) ? (hi - lo + 1) : 0;

    const Complex w =
        spec.diagonal_weight ? spec.diagonal_weight(n) : Complex(1.0, 0.0);
    const Complex diag = coupled * w * inner;
    sum += diag;

    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      res.value = sum;
      res.abs_err_estimate = std::numeric_limits<double>::infinity();
      res.converged = false;
      return res;
    }

    // Exact termination: every later diagonal is identically zero.
    if ((cut_u >= 0 && cut_v >= 0 && n >= cut_u + cut_v) ||
        (cut_c >= 0 && n >= cut_c)) {
      res.value = sum;
      res.abs_err_estimate =
          std::numeric_limits<double>::epsilon() * std::abs(sum);
      res.converged = true;
      return res;
    }

    const double ad = std::abs(diag);
    if (prev_abs_diag > 0.0 && ad > 0.0) {
      ratio = std::max(ratio * 0.5, ad / prev_abs_diag);
    }
    if (ad > 0.0) prev_abs_diag = ad;

    const double threshold = cfg.tol * std::max(1.0, std::abs(sum));
    if (n > 0 && ad <= threshold) {
      ++stall;
      window_max = std::max(window_max, ad);
      if (stall >= cfg.stall_count) {
        res.value = sum;
        res.abs_err_estimate = tail_estimate(std::max(window_max, ad));
        res.converged = res.abs_err_estimate <= 10.0 * threshold;
        return res;
      }
    } else {
      stall = 0;
      window_max = 0.0;
    }
  }

  res.value = sum;
  res.abs_err_estimate = tail_estimate(std::max(window_max, prev_abs_diag));
  res.converged = false;
  return res;
}

}  // namespace hlzeta::detail

#endif  // HLZETA_SERIES_ENGINE_HPP
