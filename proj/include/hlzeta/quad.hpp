#ifndef HLZETA_QUAD_HPP
#define HLZETA_QUAD_HPP

#include "hlzeta/core.hpp"

namespace hlzeta {

enum class HumbertKernel { Phi1, Phi2, Phi3 };

/// (1/Gamma(s)) * integral_0^X x^(s-1) e^(-c x) dx with the truncation X
/// selected so the neglected tail stays below the tolerance; reproduces
/// c^(-s) for Re(s) > 0, Re(c) > 0.
EvalResult eulerian_integral(Complex s, Complex c, const QuadConfig& qcfg);

/// Mellin-type representation with the M4 kernel:
/// (1/Gamma(s)) * integral x^(s-1) e^(-a x) M4(...; z e^-x, t e^-x) dx.
/// Requires min{Re(s), Re(a)} > 0, |z| <= 1 (z != 1), |t| <= 1 (t != 1).
EvalResult eval_phi_integral_m4(const ParameterSet& p, const EvalPoint& pt,
                                const QuadConfig& qcfg,
                                const SeriesConfig& scfg);

/// The collapsed representations with Humbert kernels; requires
/// delta = xi and delta' = xi'.  Phi1 matches the eta'-removed limit,
/// Phi2 the mu-removed limit, Phi3 both removed.
EvalResult eval_phi_integral_humbert(HumbertKernel kernel,
                                     const ParameterSet& p,
                                     const EvalPoint& pt,
                                     const QuadConfig& qcfg,
                                     const SeriesConfig& scfg);

/// Closed-form kernel for mu = nu, delta = xi, delta' = xi':
/// (1/Gamma(s)) * integral x^(s-1) e^(-a x) (1 - z e^-x)^(-eta)
/// (1 - t e^-x)^(-eta') dx.  No inner series.
EvalResult eval_phi_closed_kernel(Complex eta, Complex eta_p,
                                  const EvalPoint& pt, const QuadConfig& qcfg);

/// Beta-kernel representation over one variable, Re(nu) > Re(mu) > 0:
/// the (mu)/(nu) coupling becomes integral_0^1 u^(mu-1) (1-u)^(nu-mu-1) du
/// against the coupling-free series evaluated at (z u, t u).
EvalResult eval_phi_beta_integral_1d(const ParameterSet& p,
                                     const EvalPoint& pt,
                                     const QuadConfig& qcfg,
                                     const SeriesConfig& scfg);

/// Tensor-product form of the beta representation: the zeta weight is also
/// unfolded, leaving two factored one-variable series in the integrand.
/// Desk-scale accuracy only; expect ~1e-6.
EvalResult eval_phi_beta_integral_2d(const ParameterSet& p,
                                     const EvalPoint& pt,
                                     const QuadConfig& qcfg);

}  // namespace hlzeta

#endif  // HLZETA_QUAD_HPP
