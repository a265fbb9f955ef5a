#ifndef HLZETA_ZETA_HPP
#define HLZETA_ZETA_HPP

#include "hlzeta/core.hpp"

namespace hlzeta {

/// Which coupled Pochhammer factors survive in the limiting series.
enum class LimitVariant {
  Full,              // all factors present
  EtaPrimeInf,       // (eta')_l removed
  MuInf,             // (mu)_{k+l} removed
  MuAndEtaPrimeInf,  // both removed
};

/// Known special-case families, most specific first.
enum class ReductionTag {
  General,
  ChoiParmar,   // delta = xi, delta' = xi'
  PathanDaman,  // additionally mu = nu
  ClassicalPhi, // t = 0, trivial ratios, eta = 1: the one-variable series
  PowerLaw,     // z = t = 0: a single term a^(-s)
};

const char* to_string(ReductionTag tag);

/// Full double series, summed along diagonals n = k + l (the (n+a)^(-s)
/// factor is constant on each diagonal).  Interior |z| < 1, |t| < 1, or a
/// boundary point whose convergence exponent clears the 1/2 margin.
EvalResult eval_phi_double_series(const ParameterSet& p, const EvalPoint& pt,
                                  const SeriesConfig& cfg);

/// Explicit-series route: outer sum in k with a terminating inner sum in
/// powers of t/z per shell.  Requires z != 0; same domain as the double
/// series and must agree with it.
EvalResult eval_phi_diagonal(const ParameterSet& p, const EvalPoint& pt,
                             const SeriesConfig& cfg);

/// The inner shell sum in its 4F3 parameterization; a cross-check only,
/// valid when no transformed denominator parameter (1 - eta - k,
/// 1 - delta - k) hits a non-positive integer inside the terminating range.
EvalResult phi_diagonal_inner_4f3(const ParameterSet& p, int k,
                                  Complex t_over_z, const SeriesConfig& cfg);

/// Limiting series with the variant's Pochhammer factors removed.
EvalResult eval_phi_limit_case(const ParameterSet& p, LimitVariant variant,
                               const EvalPoint& pt, const SeriesConfig& cfg);

/// Most specific applicable reduction; exact parameter equality, no fuzz.
ReductionTag classify_reduction(const ParameterSet& p, const EvalPoint& pt);

/// Partial sum sum_{r<=r_max} (s)_r / r! * Phi(z, t, s+r, a) * x^r, each
/// Phi by the explicit-series route (double series when z = 0).  Converges
/// to Phi(z, t, s, a-x) for |x| < |a|, s != 1.
EvalResult summation_formula_lhs(const ParameterSet& p, const EvalPoint& pt,
                                 Complex x, int r_max,
                                 const SeriesConfig& cfg);

/// Classical one-variable series sum_k z^k (k+a)^(-s): direct summation for
/// |z| < 1, Euler-Maclaurin tail at z = 1 (requires Re(s) > 1).
EvalResult eval_classical_phi(Complex z, Complex s, Complex a,
                              const SeriesConfig& cfg);

/// eta <-> eta', delta <-> delta', xi <-> xi'; with z <-> t this leaves the
/// function invariant.
ParameterSet swap_parameters(const ParameterSet& p);

}  // namespace hlzeta

#endif  // HLZETA_ZETA_HPP
