#ifndef HLZETA_HYPFUN_HPP
#define HLZETA_HYPFUN_HPP

#include <vector>

#include "hlzeta/core.hpp"

namespace hlzeta {

/// Generalized hypergeometric pFq(num; den; z).
/// Terminating series (a non-positive integer among num) are summed exactly
/// to the terminating index; otherwise p <= q admits any finite z and
/// p == q + 1 requires |z| < 1.
EvalResult eval_pfq(const std::vector<Complex>& num,
                    const std::vector<Complex>& den, Complex z,
                    const SeriesConfig& cfg);

/// Appell F1(a, b, b'; c; z, t), |z| < 1 and |t| < 1.
EvalResult eval_appell_f1(Complex a, Complex b, Complex b_p, Complex c,
                          Complex z, Complex t, const SeriesConfig& cfg);

/// Humbert Phi1(a, b; c; z, t), |z| < 1, t unrestricted.
EvalResult eval_humbert_phi1(Complex a, Complex b, Complex c, Complex z,
                             Complex t, const SeriesConfig& cfg);

/// Humbert Phi2(b, b'; c; z, t), entire in both arguments.
EvalResult eval_humbert_phi2(Complex b, Complex b_p, Complex c, Complex z,
                             Complex t, const SeriesConfig& cfg);

/// Humbert Phi3(b; c; z, t), entire in both arguments.
EvalResult eval_humbert_phi3(Complex b, Complex c, Complex z, Complex t,
                             const SeriesConfig& cfg);

/// Appell-type M4 with the full parameter set, |x| < 1, |y| < 1.
EvalResult eval_m4(const ParameterSet& p, Complex x, Complex y,
                   const SeriesConfig& cfg);

/// (1 - x)^(-eta) (1 - y)^(-eta'), the collapsed form of M4 when
/// mu = nu, delta = xi, delta' = xi'.  Principal branches.
Complex m4_closed_form(Complex eta, Complex eta_p, Complex x, Complex y);

}  // namespace hlzeta

#endif  // HLZETA_HYPFUN_HPP
