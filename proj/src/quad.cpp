#include "hlzeta/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hlzeta/hypfun.hpp"
#include "phi_series.hpp"
#include "series_engine.hpp"
#include "tanh_sinh.hpp"

namespace hlzeta {

namespace {

constexpr Complex kOne{1.0, 0.0};

// Upper truncation X of the x-integral: the neglected tail of
// x^(s-1) e^(-Re(a) x) must stay below a fraction of the tolerance.
double select_tail_cut(const QuadConfig& qcfg, Complex s, Complex a) {
  if (qcfg.tail_cut > 0.0) return qcfg.tail_cut;
  const double alpha = a.real();
  const double sigma = s.real();
  const double eps = std::max(qcfg.tol * 1e-2, 1e-16);
  const double base = -std::log(eps * std::min(alpha, 1.0));
  double x = std::max(8.0, base / alpha);
  for (int i = 0; i < 3; ++i) {
    x = (base + std::max(sigma - 1.0, 0.0) * std::log(x + std::numbers::e)) /
        alpha;
  }
  return std::clamp(x, 8.0, 900.0);
}

double tail_allowance(double x_cut, Complex s, Complex a) {
  const double alpha = a.real();
  const double sigma = s.real();
  const double mag =
      std::exp(std::max(sigma - 1.0, 0.0) * std::log(x_cut) - alpha * x_cut);
  return 4.0 * mag / alpha;
}

void require_mellin_domain(const EvalPoint& pt) {
  if (!(pt.s.real() > 0.0) || !(pt.a.real() > 0.0)) {
    throw DomainError("integral representation requires Re(s) > 0, Re(a) > 0");
  }
  const double az = std::abs(pt.z);
  const double at = std::abs(pt.t);
  if (az > 1.0 + 1e-12 || at > 1.0 + 1e-12) {
    throw DomainError("|z| and |t| must not exceed 1");
  }
  if (pt.z == kOne && pt.t == kOne) {
    if (!(pt.s.real() > 1.0)) {
      throw DomainError("z = t = 1 requires Re(s) > 1");
    }
    return;
  }
  if (pt.z == kOne || pt.t == kOne) {
    throw DomainError("kernel is singular at z = 1 or t = 1");
  }
}

// Shared driver: integrate kernel(x) * x^(s-1) e^(-a x) / Gamma(s) over
// (0, X) with tanh-sinh, where kernel reports its own convergence.
template <class Kernel>
EvalResult mellin_quadrature(const EvalPoint& pt, const QuadConfig& qcfg,
                             Method tag, Kernel&& kernel) {
  validate(qcfg);
  const double x_cut = select_tail_cut(qcfg, pt.s, pt.a);
  const Complex s = pt.s;
  const Complex a = pt.a;
  bool kernels_ok = true;
  auto f = [&](double x, double dl, double /*dr*/) {
    const Complex k = kernel(x, kernels_ok);
    return std::exp((s - kOne) * std::log(dl) - a * x) * k;
  };
  const auto q = detail::tanh_sinh(f, 0.0, x_cut, qcfg.tol, qcfg.max_levels);
  const Complex inv_gamma = std::exp(-log_gamma(s));
  EvalResult res;
  res.method = tag;
  res.value = q.value * inv_gamma;
  res.abs_err_estimate =
      (q.err + tail_allowance(x_cut, s, a)) * std::abs(inv_gamma);
  res.work = q.evals;
  res.converged = q.converged && kernels_ok;
  return res;
}

SeriesConfig kernel_series_config(const QuadConfig& qcfg,
                                  const SeriesConfig& scfg) {
  SeriesConfig k = scfg;
  k.tol = std::min(scfg.tol, qcfg.tol * 1e-2);
  return k;
}

}  // namespace

EvalResult eulerian_integral(Complex s, Complex c, const QuadConfig& qcfg) {
  if (!(s.real() > 0.0) || !(c.real() > 0.0)) {
    throw DomainError("Eulerian integral requires Re(s) > 0, Re(c) > 0");
  }
  EvalPoint pt;
  pt.s = s;
  pt.a = c;
  return mellin_quadrature(pt, qcfg, Method::QuadM4,
                           [](double, bool&) { return kOne; });
}

EvalResult eval_phi_integral_m4(const ParameterSet& p, const EvalPoint& pt,
                                const QuadConfig& qcfg,
                                const SeriesConfig& scfg) {
  validate(p);
  validate(pt);
  require_mellin_domain(pt);
  const SeriesConfig kcfg = kernel_series_config(qcfg, scfg);
  auto kernel = [&](double x, bool& ok) {
    const Complex ex = std::exp(-x);
    const EvalResult m = eval_m4(p, pt.z * ex, pt.t * ex, kcfg);
    ok = ok && m.converged;
    return m.value;
  };
  return mellin_quadrature(pt, qcfg, Method::QuadM4, kernel);
}

EvalResult eval_phi_integral_humbert(HumbertKernel kernel,
                                     const ParameterSet& p,
                                     const EvalPoint& pt,
                                     const QuadConfig& qcfg,
                                     const SeriesConfig& scfg) {
  validate(p);
  validate(pt);
  require_mellin_domain(pt);
  if (p.delta != p.xi || p.delta_p != p.xi_p) {
    throw DomainError(
        "Humbert kernels require delta = xi and delta' = xi'");
  }
  const SeriesConfig kcfg = kernel_series_config(qcfg, scfg);
  auto f = [&](double x, bool& ok) {
    const Complex ex = std::exp(-x);
    const Complex zz = pt.z * ex;
    const Complex tt = pt.t * ex;
    EvalResult h;
    switch (kernel) {
      case HumbertKernel::Phi1:
        h = eval_humbert_phi1(p.mu, p.eta, p.nu, zz, tt, kcfg);
        break;
      case HumbertKernel::Phi2:
        h = eval_humbert_phi2(p.eta, p.eta_p, p.nu, zz, tt, kcfg);
        break;
      case HumbertKernel::Phi3:
        h = eval_humbert_phi3(p.eta, p.nu, zz, tt, kcfg);
        break;
    }
    ok = ok && h.converged;
    return h.value;
  };
  return mellin_quadrature(pt, qcfg, Method::QuadM4, f);
}

EvalResult eval_phi_closed_kernel(Complex eta, Complex eta_p,
                                  const EvalPoint& pt,
                                  const QuadConfig& qcfg) {
  validate(pt);
  require_mellin_domain(pt);
  auto kernel = [&](double x, bool&) {
    const Complex ex = std::exp(-x);
    Complex k(1.0, 0.0);
    if (eta != Complex(0.0, 0.0)) {
      k *= complex_power_neg_s(kOne - pt.z * ex, eta);
    }
    if (eta_p != Complex(0.0, 0.0)) {
      k *= complex_power_neg_s(kOne - pt.t * ex, eta_p);
    }
    return k;
  };
  EvalResult res = mellin_quadrature(pt, qcfg, Method::ClosedKernel, kernel);
  res.method = Method::ClosedKernel;
  return res;
}

EvalResult eval_phi_beta_integral_1d(const ParameterSet& p,
                                     const EvalPoint& pt,
                                     const QuadConfig& qcfg,
                                     const SeriesConfig& scfg) {
  validate(p);
  validate(pt);
  validate(qcfg);
  if (!(p.nu.real() > p.mu.real()) || !(p.mu.real() > 0.0)) {
    throw DomainError("beta representation requires Re(nu) > Re(mu) > 0");
  }
  if (std::abs(pt.z) >= 1.0 || std::abs(pt.t) >= 1.0) {
    throw DomainError("beta representation implemented for |z| < 1, |t| < 1");
  }
  const SeriesConfig kcfg = kernel_series_config(qcfg, scfg);
  const Complex mu = p.mu, nu = p.nu;
  const Complex s = pt.s, a = pt.a;
  bool kernels_ok = true;
  // After y = u/(1-u) the semi-infinite beta kernel becomes
  // u^(mu-1) (1-u)^(nu-mu-1) and the inner arguments collapse to (z u, t u).
  auto f = [&](double /*x*/, double dl, double dr) {
    detail::DoubleSeriesSpec spec;
    spec.u.num = {p.eta, p.delta};
    spec.u.den = {p.xi};
    spec.u.arg = pt.z * dl;
    spec.v.num = {p.eta_p, p.delta_p};
    spec.v.den = {p.xi_p};
    spec.v.arg = pt.t * dl;
    spec.diagonal_weight = [s, a](int n) {
      return complex_power_neg_s(a + static_cast<double>(n), s);
    };
    const EvalResult inner =
        detail::sum_double_series(spec, kcfg, Method::DoubleSeries);
    kernels_ok = kernels_ok && inner.converged;
    return std::exp((mu - kOne) * std::log(dl) +
                    (nu - mu - kOne) * std::log(dr)) *
           inner.value;
  };
  const auto q = detail::tanh_sinh(f, 0.0, 1.0, qcfg.tol, qcfg.max_levels);
  const Complex prefactor =
      std::exp(log_gamma(nu) - log_gamma(mu) - log_gamma(nu - mu));
  EvalResult res;
  res.method = Method::QuadBeta1D;
  res.value = prefactor * q.value;
  res.abs_err_estimate = q.err * std::abs(prefactor);
  res.work = q.evals;
  res.converged = q.converged && kernels_ok;
  return res;
}

EvalResult eval_phi_beta_integral_2d(const ParameterSet& p,
                                     const EvalPoint& pt,
                                     const QuadConfig& qcfg) {
  validate(p);
  validate(pt);
  validate(qcfg);
  if (!(p.nu.real() > p.mu.real()) || !(p.mu.real() > 0.0)) {
    throw DomainError("beta representation requires Re(nu) > Re(mu) > 0");
  }
  if (!(pt.s.real() > 0.0) || !(pt.a.real() > 0.0)) {
    throw DomainError("integral representation requires Re(s) > 0, Re(a) > 0");
  }
  if (std::abs(pt.z) >= 1.0 || std::abs(pt.t) >= 1.0) {
    throw DomainError("beta representation implemented for |z| < 1, |t| < 1");
  }
  const double x_cut = select_tail_cut(qcfg, pt.s, pt.a);
  const Complex s = pt.s, a = pt.a;
  const Complex mu = p.mu, nu = p.nu;
  SeriesConfig kcfg;
  kcfg.tol = qcfg.tol * 1e-2;

  // One-variable factor series; delta = xi collapses it to the binomial.
  auto factor_series = [&](Complex top, Complex mid, Complex bottom,
                           Complex w, bool& ok) {
    if (mid == bottom) return complex_power_neg_s(kOne - w, top);
    const EvalResult r = eval_pfq({top, mid}, {bottom}, w, kcfg);
    ok = ok && r.converged;
    return r.value;
  };

  bool kernels_ok = true;
  double inner_err_max = 0.0;
  bool inner_all_converged = true;
  long long work = 0;

  auto outer = [&](double /*u*/, double dl, double dr) {
    const double u = dl;
    auto inner_f = [&](double x, double il, double /*ir*/) {
      const Complex ex = std::exp(-x);
      const Complex wz = pt.z * u * ex;
      const Complex wt = pt.t * u * ex;
      const Complex fz = factor_series(p.eta, p.delta, p.xi, wz, kernels_ok);
      const Complex ft =
          factor_series(p.eta_p, p.delta_p, p.xi_p, wt, kernels_ok);
      return std::exp((s - kOne) * std::log(il) - a * x) * fz * ft;
    };
    const auto qi = detail::tanh_sinh(inner_f, 0.0, x_cut, qcfg.tol / 5.0,
                                      qcfg.max_levels);
    inner_err_max = std::max(inner_err_max, qi.err);
    inner_all_converged = inner_all_converged && qi.converged;
    work += qi.evals;
    return std::exp((mu - kOne) * std::log(dl) +
                    (nu - mu - kOne) * std::log(dr)) *
           qi.value;
  };
  const auto q = detail::tanh_sinh(outer, 0.0, 1.0, qcfg.tol, qcfg.max_levels);
  const Complex prefactor = std::exp(log_gamma(nu) - log_gamma(s) -
                                     log_gamma(mu) - log_gamma(nu - mu));
  EvalResult res;
  res.method = Method::QuadBeta2D;
  res.value = prefactor * q.value;
  res.abs_err_estimate =
      (q.err + inner_err_max + tail_allowance(x_cut, s, a)) *
      std::abs(prefactor);
  res.work = work;
  res.converged = q.converged && inner_all_converged && kernels_ok;
  return res;
}

}  // namespace hlzeta
