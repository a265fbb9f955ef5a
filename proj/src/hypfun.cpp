#include "hlzeta/hypfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "series_engine.hpp"

namespace hlzeta {

namespace {

using detail::DoubleSeriesSpec;
using detail::FactorSeq;

// Terminating index of a single pFq series, or -1.
int pfq_termination(const std::vector<Complex>& num) {
  int cut = -1;
  for (const Complex& p : num) {
    if (is_nonpositive_integer(p)) {
      const int k = static_cast<int>(-p.real());
      if (cut < 0 || k < cut) cut = k;
    }
  }
  return cut;
}

void check_denominators(const std::vector<Complex>& den, int cut) {
  for (const Complex& d : den) {
    if (!is_nonpositive_integer(d)) continue;
    const int reach = static_cast<int>(-d.real());
    if (cut < 0 || cut > reach) {
      throw DomainError(
          "denominator parameter is a non-positive integer inside the "
          "summation range");
    }
  }
}

// Direction is effectively a polynomial: its argument vanishes or a
// numerator parameter terminates it, so the |arg| < 1 restriction is moot.
bool direction_finite(const FactorSeq& f) {
  return detail::termination_index(f) >= 0;
}

void require_interior(const FactorSeq& f, const char* what) {
  if (std::abs(f.arg) < 1.0 || direction_finite(f)) return;
  throw DomainError(std::string(what) + " must satisfy |arg| < 1");
}

}  // namespace

EvalResult eval_pfq(const std::vector<Complex>& num,
                    const std::vector<Complex>& den, Complex z,
                    const SeriesConfig& cfg) {
  validate(cfg);
  const int cut = pfq_termination(num);
  check_denominators(den, cut);
  const bool terminating = cut >= 0 || z == Complex(0.0, 0.0);
  if (!terminating) {
    if (num.size() > den.size() + 1) {
      throw DomainError("divergent pFq: p > q + 1 and non-terminating");
    }
    if (num.size() == den.size() + 1 && std::abs(z) >= 1.0) {
      throw DomainError("pFq with p = q + 1 requires |z| < 1");
    }
  }

  // Reuse the diagonal engine with a dead second direction (arg 0 keeps
  // only l = 0 alive).
  DoubleSeriesSpec spec;
  spec.u.num = num;
  spec.u.den = den;
  spec.u.arg = z;
  spec.v.arg = Complex(0.0, 0.0);
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_appell_f1(Complex a, Complex b, Complex b_p, Complex c,
                          Complex z, Complex t, const SeriesConfig& cfg) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("F1 parameter c must not be a non-positive integer");
  }
  DoubleSeriesSpec spec;
  spec.coupled_num = {a};
  spec.coupled_den = {c};
  spec.u.num = {b};
  spec.u.arg = z;
  spec.v.num = {b_p};
  spec.v.arg = t;
  require_interior(spec.u, "F1 argument z");
  require_interior(spec.v, "F1 argument t");
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_humbert_phi1(Complex a, Complex b, Complex c, Complex z,
                             Complex t, const SeriesConfig& cfg) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("Phi1 parameter c must not be a non-positive integer");
  }
  DoubleSeriesSpec spec;
  spec.coupled_num = {a};
  spec.coupled_den = {c};
  spec.u.num = {b};
  spec.u.arg = z;
  spec.v.arg = t;
  require_interior(spec.u, "Phi1 argument z");
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_humbert_phi2(Complex b, Complex b_p, Complex c, Complex z,
                             Complex t, const SeriesConfig& cfg) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("Phi2 parameter c must not be a non-positive integer");
  }
  DoubleSeriesSpec spec;
  spec.coupled_den = {c};
  spec.u.num = {b};
  spec.u.arg = z;
  spec.v.num = {b_p};
  spec.v.arg = t;
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_humbert_phi3(Complex b, Complex c, Complex z, Complex t,
                             const SeriesConfig& cfg) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("Phi3 parameter c must not be a non-positive integer");
  }
  DoubleSeriesSpec spec;
  spec.coupled_den = {c};
  spec.u.num = {b};
  spec.u.arg = z;
  spec.v.arg = t;
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_m4(const ParameterSet& p, Complex x, Complex y,
                   const SeriesConfig& cfg) {
  validate(p);
  DoubleSeriesSpec spec;
  spec.coupled_num = {p.mu};
  spec.coupled_den = {p.nu};
  spec.u.num = {p.eta, p.delta};
  spec.u.den = {p.xi};
  spec.u.arg = x;
  spec.v.num = {p.eta_p, p.delta_p};
  spec.v.den = {p.xi_p};
  spec.v.arg = y;
  require_interior(spec.u, "M4 argument x");
  require_interior(spec.v, "M4 argument y");
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

Complex m4_closed_form(Complex eta, Complex eta_p, Complex x, Complex y) {
  const Complex one(1.0, 0.0);
  if (x == one || y == one) {
    throw DomainError("closed form is singular at x = 1 or y = 1");
  }
  Complex r(1.0, 0.0);
  if (eta != Complex(0.0, 0.0)) r *= complex_power_neg_s(one - x, eta);
  if (eta_p != Complex(0.0, 0.0)) r *= complex_power_neg_s(one - y, eta_p);
  return r;
}

}  // namespace hlzeta
