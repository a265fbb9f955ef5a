#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hlzeta/core.hpp"

using hlzeta::Complex;
using hlzeta::complex_power_neg_s;
using hlzeta::log_gamma;
using hlzeta::pochhammer;

namespace {

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Complex(2.7, -1.3), 0) == Complex(1.0, 0.0));
  CHECK(pochhammer(Complex(3.0, 0.0), 4) == Complex(360.0, 0.0));
  CHECK(pochhammer(Complex(-2.0, 0.0), 3) == Complex(0.0, 0.0));
  CHECK(pochhammer(Complex(-2.0, 0.0), 2) == Complex(2.0, 0.0));  // (-2)(-1)
}

TEST_CASE("pochhammer shift identity (c)_{m+n} = (c)_m (c+m)_n") {
  const std::vector<Complex> cs = {
      {0.3, 0.0}, {1.7, 0.0}, {-3.4, 0.0}, {2.0, 1.5}, {-1.2, -0.7}, {5.5, 0.0}};
  for (const Complex& c : cs) {
    for (int m : {0, 1, 7, 23, 50}) {
      for (int n : {0, 1, 13, 50}) {
        const Complex lhs = pochhammer(c, m + n);
        const Complex rhs = pochhammer(c, m) * pochhammer(c + double(m), n);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("pochhammer large order matches split product") {
  // exercises the log-gamma ratio branch against pure products
  for (const Complex c : {Complex(1.5, 0.0), Complex(0.25, 2.0), Complex(-7.3, 0.5)}) {
    const Complex lhs = pochhammer(c, 90);
    Complex rhs(1.0, 0.0);
    for (int j = 0; j < 90; ++j) rhs *= c + double(j);
    CHECK(rel_err(lhs, rhs) < 1e-11);
  }
}

TEST_CASE("log_gamma at small integers and half-integer") {
  CHECK(std::abs(log_gamma(Complex(1.0, 0.0))) < 1e-14);
  CHECK(rel_err(std::exp(log_gamma(Complex(5.0, 0.0))), Complex(24.0, 0.0)) < 1e-14);
  const double ln_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  CHECK(std::abs(log_gamma(Complex(0.5, 0.0)).real() - ln_sqrt_pi) < 1e-13);
  CHECK(std::abs(log_gamma(Complex(0.5, 0.0)).imag()) < 1e-13);
}

TEST_CASE("log_gamma reproduces factorials to 1e-13") {
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    fact *= n;
    const Complex g = std::exp(log_gamma(Complex(double(n) + 1.0, 0.0)));
    CHECK(rel_err(g, Complex(fact, 0.0)) < 1e-13);
  }
}

TEST_CASE("log_gamma recurrence exp(lg(c+1) - lg(c)) = c") {
  for (double re : {-4.3, -1.6, -0.2, 0.4, 1.3, 6.8}) {
    for (double im : {-3.0, 0.0, 0.7, 11.0}) {
      const Complex c(re, im);
      const Complex got = std::exp(log_gamma(c + 1.0) - log_gamma(c));
      CHECK(rel_err(got, c) < 1e-12);
    }
  }
}

TEST_CASE("log_gamma pole error") {
  CHECK_THROWS_AS((void)log_gamma(Complex(0.0, 0.0)), hlzeta::DomainError);
  CHECK_THROWS_AS((void)log_gamma(Complex(-3.0, 0.0)), hlzeta::DomainError);
}

TEST_CASE("complex_power_neg_s") {
  CHECK(rel_err(complex_power_neg_s(Complex(4.0, 0.0), Complex(2.0, 0.0)),
                Complex(0.0625, 0.0)) < 1e-15);
  CHECK(complex_power_neg_s(Complex(-3.7, 2.2), Complex(0.0, 0.0)) ==
        Complex(1.0, 0.0));
  // e^{-1}: multiplying back by e must return exactly 1
  const Complex e(std::numbers::e, 0.0);
  const Complex inv = complex_power_neg_s(e, Complex(1.0, 0.0));
  CHECK(std::abs(inv.real() - 0.36787944117144233) < 1e-15);
  CHECK(rel_err(inv * e, Complex(1.0, 0.0)) < 1e-14);
  CHECK_THROWS_AS(
      (void)complex_power_neg_s(Complex(0.0, 0.0), Complex(1.0, 0.0)),
      hlzeta::DomainError);
}

TEST_CASE("complex_power_neg_s additivity on the positive axis") {
  for (double b : {0.3, 1.0, 2.5, 17.0}) {
    for (double s1 : {-1.2, 0.5, 2.0}) {
      for (double s2 : {-0.4, 1.5}) {
        const Complex lhs = complex_power_neg_s(b, Complex(s1 + s2, 0.0));
        const Complex rhs = complex_power_neg_s(b, Complex(s1, 0.0)) *
                            complex_power_neg_s(b, Complex(s2, 0.0));
        CHECK(rel_err(lhs, rhs) < 1e-14);
      }
    }
  }
}

TEST_CASE("validation rejects poles and non-finite fields") {
  hlzeta::ParameterSet p;
  p.nu = Complex(-2.0, 0.0);
  CHECK_THROWS_AS(hlzeta::validate(p), hlzeta::DomainError);
  p.nu = Complex(0.5, 0.0);
  p.eta = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(hlzeta::validate(p), hlzeta::DomainError);

  hlzeta::EvalPoint pt;
  pt.a = Complex(0.0, 0.0);
  CHECK_THROWS_AS(hlzeta::validate(pt), hlzeta::DomainError);
  pt.a = Complex(0.5, 0.0);
  CHECK_NOTHROW(hlzeta::validate(pt));

  hlzeta::SeriesConfig s;
  s.tol = 0.0;
  CHECK_THROWS_AS(hlzeta::validate(s), hlzeta::DomainError);
}

TEST_CASE("interior flag") {
  hlzeta::EvalPoint pt;
  pt.z = Complex(0.4, 0.0);
  pt.t = Complex(0.0, 0.9);
  CHECK(pt.interior());
  pt.t = Complex(0.0, 1.0);
  CHECK_FALSE(pt.interior());
}
