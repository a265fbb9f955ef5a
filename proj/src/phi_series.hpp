#ifndef HLZETA_PHI_SERIES_HPP
#define HLZETA_PHI_SERIES_HPP

// Builders mapping the zeta-family variants onto the shared double-series
// engine, plus the boundary-admissibility check used by every series route.

#include <cmath>

#include "hlzeta/core.hpp"
#include "hlzeta/zeta.hpp"
#include "series_engine.hpp"

namespace hlzeta::detail {

// Which structural pieces of the full series a variant retains.
struct PhiShape {
  bool with_mu = true;      // (mu)_{k+l}
  bool with_nu = true;      // (nu)_{k+l}
  bool with_eta = true;     // (eta)_k
  bool with_eta_p = true;   // (eta')_l
  bool with_delta = true;   // (delta)_k, (xi)_k
  bool with_delta_p = true; // (delta')_l, (xi')_l
};

inline PhiShape shape_for(LimitVariant v) {
  PhiShape s;
  switch (v) {
    case LimitVariant::Full: break;
    case LimitVariant::EtaPrimeInf: s.with_eta_p = false; break;
    case LimitVariant::MuInf: s.with_mu = false; break;
    case LimitVariant::MuAndEtaPrimeInf:
      s.with_mu = false;
      s.with_eta_p = false;
      break;
  }
  return s;
}

inline DoubleSeriesSpec make_phi_spec(const ParameterSet& p,
                                      const EvalPoint& pt,
                                      const PhiShape& shape) {
  DoubleSeriesSpec spec;
  if (shape.with_mu) spec.coupled_num.push_back(p.mu);
  if (shape.with_nu) spec.coupled_den.push_back(p.nu);
  if (shape.with_eta) spec.u.num.push_back(p.eta);
  if (shape.with_delta) {
    spec.u.num.push_back(p.delta);
    spec.u.den.push_back(p.xi);
  }
  spec.u.arg = pt.z;
  if (shape.with_eta_p) spec.v.num.push_back(p.eta_p);
  if (shape.with_delta_p) {
    spec.v.num.push_back(p.delta_p);
    spec.v.den.push_back(p.xi_p);
  }
  spec.v.arg = pt.t;
  const Complex s = pt.s;
  const Complex a = pt.a;
  spec.diagonal_weight = [s, a](int n) {
    return complex_power_neg_s(a + static_cast<double>(n), s);
  };
  return spec;
}

// Admissibility of (z, t): interior always; on |z| = 1 or |t| = 1 the
// convergence exponent assembled from the active, non-terminating factor
// groups must clear a margin of 1/2.  Directions that terminate (vanishing
// argument or a non-positive-integer numerator parameter) impose nothing.
inline void check_phi_domain(const DoubleSeriesSpec& spec, const EvalPoint& pt) {
  constexpr double kEdge = 1.0 + 1e-12;
  const double az = std::abs(pt.z);
  const double at = std::abs(pt.t);
  if (az > kEdge || at > kEdge) {
    throw DomainError("|z| and |t| must not exceed 1");
  }
  const bool z_open = termination_index(spec.u) < 0;
  const bool t_open = termination_index(spec.v) < 0;
  const bool z_boundary = z_open && az >= 1.0;
  const bool t_boundary = t_open && at >= 1.0;
  if (!z_boundary && !t_boundary) return;
  double margin = pt.s.real() +
                  exponent_balance(spec.coupled_num, spec.coupled_den);
  if (z_boundary) margin += exponent_balance(spec.u.num, spec.u.den);
  if (t_boundary) margin += exponent_balance(spec.v.num, spec.v.den);
  if (margin <= 0.5) {
    throw DomainError(
        "boundary evaluation requires the convergence exponent to exceed 1/2");
  }
}

}  // namespace hlzeta::detail

#endif  // HLZETA_PHI_SERIES_HPP
