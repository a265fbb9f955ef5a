#include "hlzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hlzeta/hypfun.hpp"
#include "phi_series.hpp"
#include "series_engine.hpp"

namespace hlzeta {

namespace {

using detail::FactorSeq;

constexpr Complex kOne{1.0, 0.0};
constexpr Complex kZero{0.0, 0.0};

Complex pow_int(Complex b, int n) {
  Complex r(1.0, 0.0);
  Complex f = b;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= f;
    f *= f;
  }
  return r;
}

// B_{2j} / (2j)! for the Euler-Maclaurin tail.
constexpr double kBernoulliOverFact[] = {
    8.3333333333333333e-2,  -1.3888888888888889e-3, 3.3068783068783069e-5,
    -8.2671957671957672e-7, 2.0876756987868099e-8,  -5.2841901386874932e-10,
    1.3382536530684679e-11, -3.3896802963225829e-13,
};

}  // namespace

const char* to_string(ReductionTag tag) {
  switch (tag) {
    case ReductionTag::General: return "general";
    case ReductionTag::ChoiParmar: return "choi-parmar";
    case ReductionTag::PathanDaman: return "pathan-daman";
    case ReductionTag::ClassicalPhi: return "classical-phi";
    case ReductionTag::PowerLaw: return "power-law";
  }
  return "unknown";
}

EvalResult eval_phi_double_series(const ParameterSet& p, const EvalPoint& pt,
                                  const SeriesConfig& cfg) {
  validate(p);
  validate(pt);
  const auto spec = detail::make_phi_spec(p, pt, detail::shape_for(LimitVariant::Full));
  detail::check_phi_domain(spec, pt);
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_phi_limit_case(const ParameterSet& p, LimitVariant variant,
                               const EvalPoint& pt, const SeriesConfig& cfg) {
  validate(p);
  validate(pt);
  const auto spec = detail::make_phi_spec(p, pt, detail::shape_for(variant));
  detail::check_phi_domain(spec, pt);
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

EvalResult eval_phi_diagonal(const ParameterSet& p, const EvalPoint& pt,
                             const SeriesConfig& cfg) {
  validate(p);
  validate(pt);
  validate(cfg);
  if (pt.z == kZero) {
    throw DomainError("explicit-series route requires z != 0");
  }
  {
    const auto spec =
        detail::make_phi_spec(p, pt, detail::shape_for(LimitVariant::Full));
    detail::check_phi_domain(spec, pt);
  }

  // Coefficient sequences of the two directions, powers kept separate so
  // each shell can be assembled in the t/z form.
  FactorSeq zc{{p.eta, p.delta}, {p.xi}, kOne};
  FactorSeq tc{{p.eta_p, p.delta_p}, {p.xi_p}, kOne};
  const int cut_z = detail::termination_index(zc);
  int cut_t = detail::termination_index(tc);
  if (pt.t == kZero) cut_t = cut_t < 0 ? 0 : std::min(cut_t, 0);
  const int mu_cut =
      is_nonpositive_integer(p.mu) ? static_cast<int>(-p.mu.real()) : -1;

  const Complex tau = pt.t / pt.z;
  // The t/z arrangement overflows when |t| outgrows |z|; fold the powers
  // back into the coefficients in that regime.
  const bool folded = std::abs(tau) > 1.25;
  FactorSeq zf = zc, tf = tc;
  zf.arg = pt.z;
  tf.arg = pt.t;
  const FactorSeq& useq = folded ? zf : zc;
  const FactorSeq& vseq = folded ? tf : tc;

  std::vector<Complex> za{kOne}, ta{kOne};
  za.reserve(256);
  ta.reserve(256);
  Complex outer_ratio(1.0, 0.0);  // (mu)_k / (nu)_k
  Complex zpow(1.0, 0.0);

  Complex sum(0.0, 0.0);
  EvalResult res;
  res.method = Method::Diagonal;

  int stall = 0;
  double prev_abs_shell = -1.0;
  double window_max = 0.0;
  double ratio = 0.0;
  auto tail_estimate = [&](double last_abs) {
    const double q = std::min(ratio, 1.0 - 1e-8);
    double est = last_abs;
    if (q > 0.0) est = std::max(est, 3.0 * last_abs * q / (1.0 - q));
    return est + std::numeric_limits<double>::epsilon() * std::abs(sum);
  };

  for (int k = 0; k <= cfg.max_diagonal; ++k) {
    if (k > 0) {
      const bool refresh = (k % 64 == 0);
      if (cut_z >= 0 && k > cut_z) {
        za.push_back(kZero);
      } else if (refresh) {
        za.push_back(detail::factor_value_logspace(useq, k));
      } else {
        za.push_back(za[k - 1] * detail::factor_step(useq, k));
      }
      if (cut_t >= 0 && k > cut_t) {
        ta.push_back(kZero);
      } else if (refresh) {
        ta.push_back(detail::factor_value_logspace(vseq, k));
      } else {
        ta.push_back(ta[k - 1] * detail::factor_step(vseq, k));
      }
      if (refresh) {
        outer_ratio = std::exp(log_pochhammer(p.mu, k) - log_pochhammer(p.nu, k));
        if (!folded) zpow = std::exp(static_cast<double>(k) * std::log(pt.z));
      } else {
        outer_ratio *= (p.mu + static_cast<double>(k - 1)) /
                       (p.nu + static_cast<double>(k - 1));
        if (!folded) zpow *= pt.z;
      }
    }

    int lo = 0, hi = k;
    if (cut_z >= 0) lo = std::max(lo, k - cut_z);
    if (cut_t >= 0) hi = std::min(hi, cut_t);
    Complex inner(0.0, 0.0);
    if (hi >= lo) {
      if (folded) {
        for (int l = lo; l <= hi; ++l) inner += za[k - l] * ta[l];
      } else {
        Complex tp = pow_int(tau, lo);
        for (int l = lo; l <= hi; ++l) {
          inner += za[k - l] * ta[l] * tp;
          tp *= tau;
        }
      }
      res.work += hi - lo + 1;
    }

    const Complex w = complex_power_neg_s(pt.a + static_cast<double>(k), pt.s);
    const Complex shell =
        outer_ratio * w * (folded ? inner : zpow * inner);
    sum += shell;

    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      res.value = sum;
      res.abs_err_estimate = std::numeric_limits<double>::infinity();
      res.converged = false;
      return res;
    }

    const bool exhausted_uv = cut_z >= 0 && cut_t >= 0 && k >= cut_z + cut_t;
    const bool exhausted_mu = mu_cut >= 0 && k >= mu_cut;
    if (exhausted_uv || exhausted_mu) {
      res.value = sum;
      res.abs_err_estimate =
          std::numeric_limits<double>::epsilon() * std::abs(sum);
      res.converged = true;
      return res;
    }

    const double as = std::abs(shell);
    if (prev_abs_shell > 0.0 && as > 0.0) {
      ratio = std::max(ratio * 0.5, as / prev_abs_shell);
    }
    if (as > 0.0) prev_abs_shell = as;

    const double threshold = cfg.tol * std::max(1.0, std::abs(sum));
    if (k > 0 && as <= threshold) {
      ++stall;
      window_max = std::max(window_max, as);
      if (stall >= cfg.stall_count) {
        res.value = sum;
        res.abs_err_estimate = tail_estimate(std::max(window_max, as));
        res.converged = res.abs_err_estimate <= 10.0 * threshold;
        return res;
      }
    } else {
      stall = 0;
      window_max = 0.0;
    }
  }

  res.value = sum;
  res.abs_err_estimate = tail_estimate(std::max(window_max, prev_abs_shell));
  res.converged = false;
  return res;
}

EvalResult phi_diagonal_inner_4f3(const ParameterSet& p, int k,
                                  Complex t_over_z, const SeriesConfig& cfg) {
  if (k < 0) throw DomainError("shell index must be non-negative");
  const Complex kk(static_cast<double>(k), 0.0);
  const std::vector<Complex> num = {p.eta_p, p.delta_p, kOne - p.xi - kk, -kk};
  const std::vector<Complex> den = {kOne - p.eta - kk, kOne - p.delta - kk,
                                    p.xi_p};
  return eval_pfq(num, den, t_over_z, cfg);
}

ReductionTag classify_reduction(const ParameterSet& p, const EvalPoint& pt) {
  if (pt.z == kZero && pt.t == kZero) return ReductionTag::PowerLaw;
  const bool trivial_ratios = p.delta == p.xi && p.delta_p == p.xi_p;
  if (trivial_ratios && p.mu == p.nu) {
    if (pt.t == kZero && p.eta == kOne) return ReductionTag::ClassicalPhi;
    return ReductionTag::PathanDaman;
  }
  if (trivial_ratios) return ReductionTag::ChoiParmar;
  return ReductionTag::General;
}

EvalResult summation_formula_lhs(const ParameterSet& p, const EvalPoint& pt,
                                 Complex x, int r_max,
                                 const SeriesConfig& cfg) {
  validate(p);
  validate(pt);
  if (r_max < 0) throw DomainError("r_max must be non-negative");
  if (!(std::abs(x) < std::abs(pt.a))) {
    throw DomainError("summation formula requires |x| < |a|");
  }
  if (pt.s == kOne) throw DomainError("summation formula excludes s = 1");

  Complex coeff(1.0, 0.0);  // (s)_r x^r / r!
  Complex sum(0.0, 0.0);
  double last = 0.0;
  EvalResult res;
  res.method = Method::Diagonal;
  res.converged = true;
  for (int r = 0; r <= r_max; ++r) {
    EvalPoint shifted = pt;
    shifted.s = pt.s + static_cast<double>(r);
    const EvalResult e = (pt.z == kZero)
                             ? eval_phi_double_series(p, shifted, cfg)
                             : eval_phi_diagonal(p, shifted, cfg);
    const Complex term = coeff * e.value;
    sum += term;
    last = std::abs(term);
    res.work += e.work;
    res.converged = res.converged && e.converged;
    coeff *= (pt.s + static_cast<double>(r)) * x / static_cast<double>(r + 1);
  }
  res.value = sum;
  res.abs_err_estimate = last;
  return res;
}

EvalResult eval_classical_phi(Complex z, Complex s, Complex a,
                              const SeriesConfig& cfg) {
  validate(cfg);
  if (is_nonpositive_integer(a)) {
    throw DomainError("a must not be a non-positive integer");
  }
  const double az = std::abs(z);
  if (az < 1.0) {
    detail::DoubleSeriesSpec spec;
    spec.u.num = {kOne};  // (1)_k cancels the k!, leaving plain z^k
    spec.u.arg = z;
    spec.diagonal_weight = [s, a](int n) {
      return complex_power_neg_s(a + static_cast<double>(n), s);
    };
    EvalResult r = detail::sum_double_series(spec, cfg, Method::Dispatch);
    return r;
  }
  if (z != kOne || az > 1.0 + 1e-12) {
    throw DomainError("classical series supports |z| < 1 or z = 1");
  }
  if (!(s.real() > 1.0)) {
    throw DomainError("z = 1 requires Re(s) > 1");
  }

  // Hurwitz zeta via Euler-Maclaurin.
  const double want = std::max(18.0, std::abs(s) + 8.0);
  const int n_direct =
      std::max(16, static_cast<int>(std::ceil(want - a.real())));
  EvalResult res;
  res.method = Method::Dispatch;
  Complex sum(0.0, 0.0);
  for (int k = 0; k < n_direct; ++k) {
    sum += complex_power_neg_s(a + static_cast<double>(k), s);
  }
  res.work = n_direct;
  const Complex w = a + static_cast<double>(n_direct);
  sum += complex_power_neg_s(w, s - kOne) / (s - kOne);
  sum += 0.5 * complex_power_neg_s(w, s);
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (int j = 1; j <= 8; ++j) {
    const Complex term = kBernoulliOverFact[j - 1] *
                         pochhammer(s, 2 * j - 1) *
                         complex_power_neg_s(w, s + static_cast<double>(2 * j - 1));
    last = std::abs(term);
    if (last >= prev) break;  // asymptotic tail started to grow
    sum += term;
    ++res.work;
    prev = last;
    if (last <= std::numeric_limits<double>::epsilon() * std::abs(sum)) break;
  }
  res.value = sum;
  res.abs_err_estimate =
      last + std::numeric_limits<double>::epsilon() * std::abs(sum);
  res.converged = res.abs_err_estimate <= 10.0 * cfg.tol * std::max(1.0, std::abs(sum));
  return res;
}

ParameterSet swap_parameters(const ParameterSet& p) {
  ParameterSet q = p;
  std::swap(q.eta, q.eta_p);
  std::swap(q.delta, q.delta_p);
  std::swap(q.xi, q.xi_p);
  return q;
}

}  // namespace hlzeta
