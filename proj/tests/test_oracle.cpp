#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hlzeta/oracle.hpp"

using hlzeta::Complex;
using hlzeta::DoubleDouble;
using hlzeta::OracleResult;

namespace {

hlzeta::ParameterSet generic_params() {
  hlzeta::ParameterSet p;
  p.mu = 1.8; p.eta = 0.9; p.eta_p = 2.1; p.delta = 1.4; p.delta_p = 0.7;
  p.nu = 2.6; p.xi = 1.9; p.xi_p = 2.8;
  return p;
}

}  // namespace

TEST_CASE("oracle trivial points") {
  hlzeta::ParameterSet p = generic_params();
  hlzeta::EvalPoint pt;
  pt.s = 2.0;
  pt.a = 4.0;

  const OracleResult zero = hlzeta::oracle_phi(p, pt, 30, 30);
  CHECK(zero.value == Complex(0.0625, 0.0));
  CHECK(zero.tail_bound == 0.0);

  pt.z = 0.45;
  pt.t = 0.3;
  const OracleResult corner = hlzeta::oracle_phi(p, pt, 0, 0);
  CHECK(std::abs(corner.value.real() - 0.0625) < 1e-15);
  CHECK(corner.terms == 1);
}

TEST_CASE("oracle m4 swap symmetry is exact term-by-term") {
  hlzeta::ParameterSet p = generic_params();
  hlzeta::ParameterSet q = p;
  std::swap(q.eta, q.eta_p);
  std::swap(q.delta, q.delta_p);
  std::swap(q.xi, q.xi_p);
  const OracleResult a = hlzeta::oracle_m4(p, 0.4, 0.25, 60, 60);
  const OracleResult b = hlzeta::oracle_m4(q, 0.25, 0.4, 60, 60);
  CHECK(std::abs(a.value - b.value) < 1e-13 * std::abs(a.value));
}

TEST_CASE("oracle m4 matches the collapsed closed form within its bound") {
  hlzeta::ParameterSet p;
  p.mu = p.nu = 1.3;
  p.delta = p.xi = 2.0;
  p.delta_p = p.xi_p = 1.1;
  p.eta = 0.8;
  p.eta_p = 1.9;
  const OracleResult o = hlzeta::oracle_m4(p, 0.5, 0.35, 110, 110);
  const Complex want = std::pow(Complex(0.5, 0.0), Complex(-0.8, 0.0)) *
                       std::pow(Complex(0.65, 0.0), Complex(-1.9, 0.0));
  CHECK(std::abs(o.value - want) <= o.tail_bound + 1e-13 * std::abs(want));
}

TEST_CASE("oracle self-consistency: growth stays within the reported bound") {
  hlzeta::ParameterSet p = generic_params();
  hlzeta::EvalPoint pt;
  pt.z = 0.55;
  pt.t = 0.4;
  pt.s = 1.7;
  pt.a = 1.2;
  const OracleResult small = hlzeta::oracle_phi(p, pt, 40, 40);
  const OracleResult big = hlzeta::oracle_phi(p, pt, 110, 110);
  CHECK(std::abs(big.value - small.value) <= small.tail_bound);
  CHECK(big.tail_bound < small.tail_bound);
}

TEST_CASE("oracle preconditions") {
  hlzeta::ParameterSet p = generic_params();
  hlzeta::EvalPoint pt;
  pt.z = 0.95;  // beyond the 0.9 cap
  CHECK_THROWS_AS((void)hlzeta::oracle_phi(p, pt, 10, 10), hlzeta::DomainError);
  pt.z = 0.5;
  CHECK_THROWS_AS((void)hlzeta::oracle_phi(p, pt, 6000, 10),
                  hlzeta::DomainError);
}

TEST_CASE("compensated accumulation is order-insensitive") {
  std::mt19937_64 eng(99);
  std::vector<double> terms;
  double x = 1.0;
  for (int i = 0; i < 400; ++i) {
    x *= 0.93;
    // scatter magnitudes over ~15 orders to stress plain summation
    terms.push_back(x * (1.0 + double(eng() % 1000) * 1e-5));
  }
  DoubleDouble base;
  for (double v : terms) base.add(v);
  for (int rep = 0; rep < 20; ++rep) {
    std::shuffle(terms.begin(), terms.end(), eng);
    DoubleDouble acc;
    for (double v : terms) acc.add(v);
    CHECK(std::abs(acc.result() - base.result()) <
          1e-14 * std::abs(base.result()));
  }
}
