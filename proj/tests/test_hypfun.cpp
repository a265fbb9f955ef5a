#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "hlzeta/hypfun.hpp"
#include "hlzeta/oracle.hpp"

using hlzeta::Complex;
using hlzeta::EvalResult;
using hlzeta::SeriesConfig;

namespace {

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

SeriesConfig tight() {
  SeriesConfig cfg;
  cfg.tol = 1e-13;
  return cfg;
}

hlzeta::ParameterSet collapsed_m4(double eta, double eta_p) {
  hlzeta::ParameterSet p;
  p.mu = p.nu = Complex(1.7, 0.0);
  p.delta = p.xi = Complex(2.1, 0.0);
  p.delta_p = p.xi_p = Complex(1.4, 0.0);
  p.eta = Complex(eta, 0.0);
  p.eta_p = Complex(eta_p, 0.0);
  return p;
}

}  // namespace

TEST_CASE("1F0 is the binomial series") {
  const EvalResult r = hlzeta::eval_pfq({Complex(2.0, 0.0)}, {}, 0.5, tight());
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex(4.0, 0.0)) < 1e-12);
}

TEST_CASE("2F1(1,1;2;z) = -log(1-z)/z") {
  for (double z : {0.5, -0.7, 0.25}) {
    const EvalResult r = hlzeta::eval_pfq(
        {Complex(1.0, 0.0), Complex(1.0, 0.0)}, {Complex(2.0, 0.0)}, z, tight());
    const Complex want = -std::log(Complex(1.0 - z, 0.0)) / z;
    CHECK(r.converged);
    CHECK(rel_err(r.value, want) < 1e-12);
  }
  // the closed-form point: 2 ln 2
  const EvalResult r = hlzeta::eval_pfq(
      {Complex(1.0, 0.0), Complex(1.0, 0.0)}, {Complex(2.0, 0.0)}, 0.5, tight());
  CHECK(std::abs(r.value.real() - 1.3862943611198906) < 1e-12);
}

TEST_CASE("pFq with a zero numerator parameter is 1") {
  const EvalResult r = hlzeta::eval_pfq(
      {Complex(0.0, 0.0), Complex(3.3, 1.0)}, {Complex(1.5, 0.0)}, 0.9, tight());
  CHECK(r.converged);
  CHECK(r.value == Complex(1.0, 0.0));
}

TEST_CASE("terminating pFq sums the exact polynomial") {
  // 2F1(-3, b; c; z) enumerated directly
  const Complex b(1.3, 0.0), c(2.6, 0.0);
  const double z = 1.7;  // outside |z| < 1: legal because it terminates
  Complex want(0.0, 0.0);
  for (int n = 0; n <= 3; ++n) {
    want += hlzeta::pochhammer(Complex(-3.0, 0.0), n) * hlzeta::pochhammer(b, n) /
            (hlzeta::pochhammer(c, n) * std::tgamma(n + 1.0)) *
            std::pow(z, n);
  }
  const EvalResult r =
      hlzeta::eval_pfq({Complex(-3.0, 0.0), b}, {c}, z, tight());
  CHECK(r.converged);
  CHECK(rel_err(r.value, want) < 1e-13);
}

TEST_CASE("pFq domain errors") {
  // p > q + 1 and non-terminating
  CHECK_THROWS_AS((void)hlzeta::eval_pfq({Complex(1.0, 0.0), Complex(1.5, 0.0),
                                          Complex(2.0, 0.0)},
                                         {Complex(3.0, 0.0)}, 0.1, tight()),
                  hlzeta::DomainError);
  // p = q + 1 with |z| >= 1
  CHECK_THROWS_AS(
      (void)hlzeta::eval_pfq({Complex(1.0, 0.0), Complex(1.5, 0.0)},
                             {Complex(3.0, 0.0)}, 1.0, tight()),
      hlzeta::DomainError);
  // non-positive-integer denominator reached before termination
  CHECK_THROWS_AS(
      (void)hlzeta::eval_pfq({Complex(-5.0, 0.0)}, {Complex(-2.0, 0.0)}, 0.3,
                             tight()),
      hlzeta::DomainError);
  // ... but fine when the numerator terminates first
  CHECK_NOTHROW((void)hlzeta::eval_pfq({Complex(-2.0, 0.0)},
                                       {Complex(-4.0, 0.0)}, 0.3, tight()));
}

TEST_CASE("pFq reports non-convergence at a tiny cap") {
  SeriesConfig cfg;
  cfg.tol = 1e-14;
  cfg.max_diagonal = 3;
  const EvalResult r = hlzeta::eval_pfq(
      {Complex(1.0, 0.0), Complex(1.0, 0.0)}, {Complex(2.0, 0.0)}, 0.9, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.abs_err_estimate > 0.0);
}

TEST_CASE("Appell F1 trivial and collapsed points") {
  const Complex a(1.3, 0.0), b(0.7, 0.0), bp(2.2, 0.0), c(3.1, 0.0);
  const EvalResult zero =
      hlzeta::eval_appell_f1(a, b, bp, c, 0.0, 0.0, tight());
  CHECK(zero.value == Complex(1.0, 0.0));

  // t = 0 collapses to 2F1(a, b; c; z)
  const EvalResult f1 = hlzeta::eval_appell_f1(a, b, bp, c, 0.45, 0.0, tight());
  const EvalResult f2 = hlzeta::eval_pfq({a, b}, {c}, 0.45, tight());
  CHECK(rel_err(f1.value, f2.value) < 1e-12);

  // b' = 0 kills the l-sum even with t large
  const EvalResult g1 =
      hlzeta::eval_appell_f1(a, b, Complex(0.0, 0.0), c, 0.3, 0.7, tight());
  const EvalResult g2 = hlzeta::eval_pfq({a, b}, {c}, 0.3, tight());
  CHECK(rel_err(g1.value, g2.value) < 1e-12);
}

TEST_CASE("Appell F1 row expansion matches the double sum") {
  const Complex a(1.6, 0.0), b(0.9, 0.0), bp(1.2, 0.0), c(2.8, 0.0);
  const double z = 0.35, t = 0.5;
  const EvalResult dbl = hlzeta::eval_appell_f1(a, b, bp, c, z, t, tight());
  Complex rows(0.0, 0.0);
  Complex coef(1.0, 0.0);  // (a)_k (b)_k z^k / ((c)_k k!)
  for (int k = 0; k < 400; ++k) {
    const EvalResult inner =
        hlzeta::eval_pfq({a + double(k), bp}, {c + double(k)}, t, tight());
    const Complex term = coef * inner.value;
    rows += term;
    if (std::abs(term) < 1e-14 * std::max(1.0, std::abs(rows)) && k > 3) break;
    coef *= (a + double(k)) * (b + double(k)) * z /
            ((c + double(k)) * double(k + 1));
  }
  CHECK(rel_err(dbl.value, rows) < 1e-10);
}

TEST_CASE("Humbert functions collapse to 1F1 / 2F1") {
  const Complex a(1.4, 0.0), b(0.8, 0.0), c(2.3, 0.0);
  const EvalResult p2 =
      hlzeta::eval_humbert_phi2(b, Complex(1.9, 0.0), c, 0.0, 0.0, tight());
  CHECK(p2.value == Complex(1.0, 0.0));

  const EvalResult p3 = hlzeta::eval_humbert_phi3(b, c, 2.4, 0.0, tight());
  const EvalResult f11 = hlzeta::eval_pfq({b}, {c}, 2.4, tight());
  CHECK(rel_err(p3.value, f11.value) < 1e-12);

  const EvalResult p1 = hlzeta::eval_humbert_phi1(a, b, c, 0.6, 0.0, tight());
  const EvalResult f21 = hlzeta::eval_pfq({a, b}, {c}, 0.6, tight());
  CHECK(rel_err(p1.value, f21.value) < 1e-12);

  // Phi2/Phi3 are entire: arguments beyond the unit disc converge
  const EvalResult wide =
      hlzeta::eval_humbert_phi2(b, Complex(1.9, 0.0), c, 3.5, 2.0, tight());
  CHECK(wide.converged);
}

TEST_CASE("M4 trivial, closed form, and terminated direction") {
  hlzeta::ParameterSet p = collapsed_m4(1.0, 2.0);
  const EvalResult z = hlzeta::eval_m4(p, 0.0, 0.0, tight());
  CHECK(z.value == Complex(1.0, 0.0));

  const EvalResult m = hlzeta::eval_m4(p, 0.5, 0.25, tight());
  CHECK(rel_err(m.value, Complex(32.0 / 9.0, 0.0)) < 1e-12);
  CHECK(rel_err(m.value, hlzeta::m4_closed_form(p.eta, p.eta_p, 0.5, 0.25)) <
        1e-12);

  // eta = 0 terminates the x-direction; x may then be anything
  hlzeta::ParameterSet q = collapsed_m4(0.0, 1.5);
  const EvalResult e0 = hlzeta::eval_m4(q, 7.0, 0.4, tight());
  const EvalResult ref = hlzeta::eval_pfq({q.eta_p}, {}, 0.4, tight());
  CHECK(rel_err(e0.value, ref.value) < 1e-12);
}

TEST_CASE("M4 agrees with the closed form on the collapse grid") {
  for (double x : {0.1, 0.3, 0.5, 0.7}) {
    for (double y : {0.1, 0.3, 0.5, 0.7}) {
      for (double eta : {0.5, 1.0, 2.5}) {
        for (double eta_p : {0.5, 1.0, 2.5}) {
          hlzeta::ParameterSet p = collapsed_m4(eta, eta_p);
          const EvalResult m = hlzeta::eval_m4(p, x, y, tight());
          const Complex want = hlzeta::m4_closed_form(p.eta, p.eta_p, x, y);
          CHECK(m.converged);
          CHECK(rel_err(m.value, want) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("M4 diagonal summation equals row-by-row oracle") {
  hlzeta::ParameterSet p;
  p.mu = 1.9; p.eta = 0.6; p.eta_p = 2.3; p.delta = 1.1; p.delta_p = 0.9;
  p.nu = 2.4; p.xi = 1.8; p.xi_p = 3.0;
  for (double x : {0.2, 0.5}) {
    for (double y : {0.35, 0.5}) {
      const EvalResult m = hlzeta::eval_m4(p, x, y, tight());
      const hlzeta::OracleResult o = hlzeta::oracle_m4(p, x, y, 120, 120);
      CHECK(o.tail_bound < 1e-12);
      CHECK(rel_err(m.value, o.value) < 1e-10);
    }
  }
}

TEST_CASE("M4 swap symmetry") {
  hlzeta::ParameterSet p;
  p.mu = 2.2; p.eta = 0.8; p.eta_p = 1.7; p.delta = 1.3; p.delta_p = 2.6;
  p.nu = 3.1; p.xi = 2.0; p.xi_p = 1.2;
  hlzeta::ParameterSet q = p;
  std::swap(q.eta, q.eta_p);
  std::swap(q.delta, q.delta_p);
  std::swap(q.xi, q.xi_p);
  const EvalResult lhs = hlzeta::eval_m4(p, 0.41, 0.27, tight());
  const EvalResult rhs = hlzeta::eval_m4(q, 0.27, 0.41, tight());
  CHECK(rel_err(lhs.value, rhs.value) < 1e-12);
}

TEST_CASE("m4_closed_form edge cases") {
  CHECK(hlzeta::m4_closed_form(Complex(1.3, 0.0), Complex(0.4, 0.0), 0.0, 0.0) ==
        Complex(1.0, 0.0));
  CHECK(rel_err(hlzeta::m4_closed_form(Complex(1.0, 0.0), Complex(2.0, 0.0),
                                       0.5, 0.25),
                Complex(32.0 / 9.0, 0.0)) < 1e-15);
  const Complex only_y =
      hlzeta::m4_closed_form(Complex(0.0, 0.0), Complex(1.5, 0.0), 0.9, 0.3);
  CHECK(rel_err(only_y, std::pow(Complex(0.7, 0.0), Complex(-1.5, 0.0))) <
        1e-14);
  CHECK_THROWS_AS((void)hlzeta::m4_closed_form(Complex(1.0, 0.0),
                                               Complex(1.0, 0.0), 1.0, 0.3),
                  hlzeta::DomainError);
}
