#include "hlzeta/verify.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <thread>
#include <utility>

#include "hlzeta/hypfun.hpp"
#include "hlzeta/io.hpp"
#include "hlzeta/oracle.hpp"
#include "hlzeta/quad.hpp"
#include "hlzeta/zeta.hpp"
#include "phi_series.hpp"
#include "series_engine.hpp"

namespace hlzeta {

namespace {

constexpr Complex kOne{1.0, 0.0};

// Deterministic sampler; the engine bits are mapped to doubles directly so
// results do not depend on the standard library's distribution choices.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 eng_;
};

ParameterSet sample_params(SampleStream& rng) {
  ParameterSet p;
  p.mu = rng.uniform(0.5, 3.0);
  p.eta = rng.uniform(0.5, 3.0);
  p.eta_p = rng.uniform(0.5, 3.0);
  p.delta = rng.uniform(0.5, 3.0);
  p.delta_p = rng.uniform(0.5, 3.0);
  p.nu = rng.uniform(1.0, 4.0);
  p.xi = rng.uniform(1.0, 4.0);
  p.xi_p = rng.uniform(1.0, 4.0);
  return p;
}

EvalPoint sample_point(SampleStream& rng) {
  EvalPoint pt;
  pt.z = rng.uniform(0.1, 0.6);
  pt.t = rng.uniform(0.1, 0.6);
  pt.s = rng.uniform(1.0, 3.0);
  pt.a = rng.uniform(1.0, 2.5);
  return pt;
}

std::string describe(const ParameterSet& p, const EvalPoint& pt) {
  std::string s;
  s += "mu=" + format_complex(p.mu);
  s += ",eta=" + format_complex(p.eta);
  s += ",eta_p=" + format_complex(p.eta_p);
  s += ",delta=" + format_complex(p.delta);
  s += ",delta_p=" + format_complex(p.delta_p);
  s += ",nu=" + format_complex(p.nu);
  s += ",xi=" + format_complex(p.xi);
  s += ",xi_p=" + format_complex(p.xi_p);
  s += ",z=" + format_complex(pt.z);
  s += ",t=" + format_complex(pt.t);
  s += ",s=" + format_complex(pt.s);
  s += ",a=" + format_complex(pt.a);
  return s;
}

struct Comparison {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  bool converged = true;
};

struct Task {
  std::string id;
  std::string point;
  double abs_tol = 0.0;       // absolute part of the tolerance
  double rel_tol = 0.0;       // scaled by (1 + |rhs|)
  std::function<Comparison()> run;
};

// Pathan-Daman-type series with the delta/xi factor pairs dropped entirely;
// the independent route for the reduction identities.
EvalResult reduced_series(const ParameterSet& p, const EvalPoint& pt,
                          bool with_mu_nu, const SeriesConfig& cfg) {
  detail::DoubleSeriesSpec spec;
  if (with_mu_nu) {
    spec.coupled_num = {p.mu};
    spec.coupled_den = {p.nu};
  }
  spec.u.num = {p.eta};
  spec.u.arg = pt.z;
  spec.v.num = {p.eta_p};
  spec.v.arg = pt.t;
  const Complex s = pt.s, a = pt.a;
  spec.diagonal_weight = [s, a](int n) {
    return complex_power_neg_s(a + static_cast<double>(n), s);
  };
  return detail::sum_double_series(spec, cfg, Method::DoubleSeries);
}

// Corollary-4/5 style outer sums: sum_k outer(k) * F(k; t/z) with a
// terminating pFq per shell.  Outer factors assembled in log space so large
// shells cannot overflow.
Comparison explicit_vs_reduced(const ParameterSet& p, const EvalPoint& pt,
                               bool cor5, const SeriesConfig& cfg) {
  Comparison c;
  const EvalResult full = eval_phi_double_series(p, pt, cfg);
  c.rhs = full.value;
  c.converged = full.converged;
  const Complex tau = pt.t / pt.z;
  const Complex logz = std::log(pt.z);
  Complex sum(0.0, 0.0);
  int quiet = 0;
  for (int k = 0; k <= cfg.max_diagonal; ++k) {
    const Complex kk(static_cast<double>(k), 0.0);
    Complex lg = log_pochhammer(p.mu, k) + static_cast<double>(k) * logz -
                 log_gamma(kk + kOne);
    EvalResult f;
    if (cor5) {
      // F(eta', -k; 1 - eta - k; t/z)
      f = eval_pfq({p.eta_p, -kk}, {kOne - p.eta - kk}, tau, cfg);
    } else {
      // delta = xi cancels one parameter pair, leaving a 3F2
      lg += log_pochhammer(p.eta, k) - log_pochhammer(p.nu, k);
      f = eval_pfq({p.eta_p, p.delta_p, -kk},
                   {p.xi_p, kOne - p.eta - kk}, tau, cfg);
    }
    const Complex outer =
        std::exp(lg) * complex_power_neg_s(pt.a + static_cast<double>(k), pt.s);
    c.converged = c.converged && f.converged;
    const Complex term = outer * f.value;
    sum += term;
    if (std::abs(term) <= cfg.tol * std::max(1.0, std::abs(sum))) {
      if (++quiet >= cfg.stall_count) break;
    } else {
      quiet = 0;
    }
  }
  c.lhs = sum;
  return c;
}

void append_m4_closed_form_tasks(std::vector<Task>& tasks, SampleStream& rng,
                                 bool full) {
  struct Pt {
    double x, y, eta, eta_p;
  };
  std::vector<Pt> pts = {{0.5, 0.25, 1.0, 2.0}};
  if (full) {
    for (double x : {0.1, 0.3, 0.5, 0.7})
      for (double y : {0.1, 0.3, 0.5, 0.7})
        for (double e1 : {0.5, 1.0, 2.5})
          for (double e2 : {0.5, 1.0, 2.5}) pts.push_back({x, y, e1, e2});
  } else {
    for (int i = 0; i < 3; ++i) {
      pts.push_back({rng.uniform(0.1, 0.7), rng.uniform(0.1, 0.7),
                     rng.uniform(0.5, 2.5), rng.uniform(0.5, 2.5)});
    }
  }
  for (const Pt& q : pts) {
    ParameterSet p;
    p.mu = p.nu = rng.uniform(0.5, 3.0);
    p.delta = p.xi = rng.uniform(1.0, 4.0);
    p.delta_p = p.xi_p = rng.uniform(1.0, 4.0);
    p.eta = q.eta;
    p.eta_p = q.eta_p;
    Task t;
    t.id = "eq17-m4-closed-form";
    EvalPoint desc;
    desc.z = q.x;
    desc.t = q.y;
    t.point = describe(p, desc);
    t.rel_tol = 1e-11;
    t.run = [p, q]() {
      Comparison c;
      SeriesConfig cfg;
      cfg.tol = 1e-13;
      const EvalResult m = eval_m4(p, q.x, q.y, cfg);
      c.lhs = m.value;
      c.rhs = m4_closed_form(p.eta, p.eta_p, q.x, q.y);
      c.converged = m.converged;
      return c;
    };
    tasks.push_back(std::move(t));
  }
}

std::vector<Task> build_tasks(const VerifyOptions& opts) {
  SampleStream rng(opts.seed);
  const bool full = opts.full_grid;
  std::vector<Task> tasks;

  auto add = [&](const char* id, double abs_tol, double rel_tol,
                 std::string point, std::function<Comparison()> run) {
    Task t;
    t.id = id;
    t.point = std::move(point);
    t.abs_tol = abs_tol;
    t.rel_tol = rel_tol;
    t.run = std::move(run);
    tasks.push_back(std::move(t));
  };

  // Eq. (1.7): M4 against its closed form on the collapse manifold.
  append_m4_closed_form_tasks(tasks, rng, full);

  // Theorem 1: M4-kernel quadrature against the double series.
  for (int i = 0, n = full ? 6 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    EvalPoint pt = sample_point(rng);
    pt.z = rng.uniform(0.1, 0.5);
    pt.t = rng.uniform(0.1, 0.5);
    add("thm1-m4-vs-series", 1e-8, 0.0, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig scfg;
      QuadConfig qcfg;
      qcfg.tol = 1e-9;
      const EvalResult q = eval_phi_integral_m4(p, pt, qcfg, scfg);
      const EvalResult s = eval_phi_double_series(p, pt, scfg);
      c.lhs = q.value;
      c.rhs = s.value;
      c.converged = q.converged && s.converged;
      return c;
    });
  }

  // Corollary 1: Humbert-kernel quadratures against the limit series.
  struct HumbertCase {
    const char* id;
    HumbertKernel kernel;
    LimitVariant variant;
  };
  for (const HumbertCase& hc :
       {HumbertCase{"cor1-phi1", HumbertKernel::Phi1, LimitVariant::EtaPrimeInf},
        HumbertCase{"cor1-phi2", HumbertKernel::Phi2, LimitVariant::MuInf},
        HumbertCase{"cor1-phi3", HumbertKernel::Phi3,
                    LimitVariant::MuAndEtaPrimeInf}}) {
    for (int i = 0, n = full ? 3 : 1; i < n; ++i) {
      ParameterSet p = sample_params(rng);
      p.delta = p.xi = rng.uniform(1.0, 4.0);
      p.delta_p = p.xi_p = rng.uniform(1.0, 4.0);
      EvalPoint pt = sample_point(rng);
      add(hc.id, 1e-8, 0.0, describe(p, pt), [p, pt, hc]() {
        Comparison c;
        SeriesConfig scfg;
        QuadConfig qcfg;
        qcfg.tol = 1e-9;
        const EvalResult q =
            eval_phi_integral_humbert(hc.kernel, p, pt, qcfg, scfg);
        const EvalResult s = eval_phi_limit_case(p, hc.variant, pt, scfg);
        c.lhs = q.value;
        c.rhs = s.value;
        c.converged = q.converged && s.converged;
        return c;
      });
    }
  }

  // Corollary 2: closed-kernel quadrature against the series.
  for (int i = 0, n = full ? 6 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.mu = p.nu = rng.uniform(1.0, 4.0);
    p.delta = p.xi = rng.uniform(1.0, 4.0);
    p.delta_p = p.xi_p = rng.uniform(1.0, 4.0);
    EvalPoint pt = sample_point(rng);
    add("cor2-closed-kernel", 1e-9, 0.0, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig scfg;
      QuadConfig qcfg;
      qcfg.tol = 1e-10;
      const EvalResult q = eval_phi_closed_kernel(p.eta, p.eta_p, pt, qcfg);
      const EvalResult s = eval_phi_double_series(p, pt, scfg);
      c.lhs = q.value;
      c.rhs = s.value;
      c.converged = q.converged && s.converged;
      return c;
    });
  }

  // Theorem 2, single integral.
  for (int i = 0, n = full ? 5 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.mu = rng.uniform(0.5, 1.8);
    p.nu = p.mu + rng.uniform(0.5, 2.0);
    EvalPoint pt = sample_point(rng);
    add("thm2-beta-1d", 1e-7, 0.0, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig scfg;
      QuadConfig qcfg;
      qcfg.tol = 1e-8;
      const EvalResult q = eval_phi_beta_integral_1d(p, pt, qcfg, scfg);
      const EvalResult s = eval_phi_double_series(p, pt, scfg);
      c.lhs = q.value;
      c.rhs = s.value;
      c.converged = q.converged && s.converged;
      return c;
    });
  }

  // Theorem 2, double integral.
  for (int i = 0, n = full ? 3 : 1; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.mu = rng.uniform(0.5, 1.8);
    p.nu = p.mu + rng.uniform(0.5, 2.0);
    EvalPoint pt = sample_point(rng);
    add("thm2-beta-2d", 1e-6, 0.0, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig scfg;
      QuadConfig qcfg;
      qcfg.tol = 1e-7;
      const EvalResult q = eval_phi_beta_integral_2d(p, pt, qcfg);
      const EvalResult s = eval_phi_double_series(p, pt, scfg);
      c.lhs = q.value;
      c.rhs = s.value;
      c.converged = q.converged && s.converged;
      return c;
    });
  }

  // Corollary 3: all four ratio parameters equal to one, binomial kernels.
  for (int i = 0, n = full ? 2 : 1; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.delta = p.xi = p.delta_p = p.xi_p = kOne;
    p.mu = rng.uniform(0.5, 1.8);
    p.nu = p.mu + rng.uniform(0.5, 2.0);
    EvalPoint pt = sample_point(rng);
    add("cor3-binomial-2d", 1e-6, 0.0, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig scfg;
      QuadConfig qcfg;
      qcfg.tol = 1e-7;
      const EvalResult q = eval_phi_beta_integral_2d(p, pt, qcfg);
      const EvalResult s = eval_phi_double_series(p, pt, scfg);
      c.lhs = q.value;
      c.rhs = s.value;
      c.converged = q.converged && s.converged;
      return c;
    });
  }

  // Theorem 4: summation formula against the shifted evaluation.
  {
    struct XA {
      double x, a;
    };
    std::vector<XA> pts = {{0.0, 1.5}, {0.3, 1.5}};
    if (full) pts.push_back({-0.4, 1.2});
    for (const XA& xa : pts) {
      ParameterSet p = sample_params(rng);
      EvalPoint pt = sample_point(rng);
      pt.a = xa.a;
      add("thm4-summation", 1e-8, 0.0,
          describe(p, pt) + ",x=" + format_double(xa.x), [p, pt, xa]() {
            Comparison c;
            SeriesConfig cfg;
            const EvalResult lhs = summation_formula_lhs(p, pt, xa.x, 50, cfg);
            EvalPoint shifted = pt;
            shifted.a = pt.a - xa.x;
            const EvalResult rhs = eval_phi_double_series(p, shifted, cfg);
            c.lhs = lhs.value;
            c.rhs = rhs.value;
            c.converged = lhs.converged && rhs.converged;
            return c;
          });
    }
  }

  // Theorem 5: explicit-series route against the double series, and both
  // against the from-scratch oracle.
  for (int i = 0, n = full ? 20 : 3; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    EvalPoint pt = sample_point(rng);
    add("thm5-diagonal-vs-series", 0.0, 1e-10, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig cfg;
      const EvalResult d = eval_phi_diagonal(p, pt, cfg);
      const EvalResult s = eval_phi_double_series(p, pt, cfg);
      c.lhs = d.value;
      c.rhs = s.value;
      c.converged = d.converged && s.converged;
      return c;
    });
  }
  for (int i = 0, n = full ? 5 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    EvalPoint pt = sample_point(rng);
    add("thm5-vs-oracle", 0.0, 1e-10, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig cfg;
      const EvalResult d = eval_phi_diagonal(p, pt, cfg);
      const OracleResult o = oracle_phi(p, pt, 140, 140);
      c.lhs = d.value;
      c.rhs = o.value;
      c.converged = d.converged && o.tail_bound < 1e-12;
      return c;
    });
  }

  // Corollaries 4 and 5 of the explicit representation.
  for (int i = 0, n = full ? 3 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.delta = p.xi;
    EvalPoint pt = sample_point(rng);
    add("cor4-reduction", 0.0, 1e-10, describe(p, pt), [p, pt]() {
      SeriesConfig cfg;
      return explicit_vs_reduced(p, pt, /*cor5=*/false, cfg);
    });
  }
  for (int i = 0, n = full ? 3 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.nu = p.eta;
    p.delta = p.xi;
    p.delta_p = p.xi_p;
    EvalPoint pt = sample_point(rng);
    add("cor5-reduction", 0.0, 1e-10, describe(p, pt), [p, pt]() {
      SeriesConfig cfg;
      return explicit_vs_reduced(p, pt, /*cor5=*/true, cfg);
    });
  }

  // Special cases 1 and 2: independent reduced series.
  for (int i = 0, n = full ? 4 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.delta = p.xi = rng.uniform(1.0, 4.0);
    p.delta_p = p.xi_p = rng.uniform(1.0, 4.0);
    EvalPoint pt = sample_point(rng);
    add("case1-choi-parmar", 0.0, 1e-11, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig cfg;
      const EvalResult full_eval = eval_phi_double_series(p, pt, cfg);
      const EvalResult red = reduced_series(p, pt, /*with_mu_nu=*/true, cfg);
      c.lhs = full_eval.value;
      c.rhs = red.value;
      c.converged = full_eval.converged && red.converged;
      return c;
    });
  }
  for (int i = 0, n = full ? 4 : 2; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    p.mu = p.nu = rng.uniform(1.0, 4.0);
    p.delta = p.xi = rng.uniform(1.0, 4.0);
    p.delta_p = p.xi_p = rng.uniform(1.0, 4.0);
    EvalPoint pt = sample_point(rng);
    add("case2-pathan-daman", 0.0, 1e-11, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig cfg;
      const EvalResult full_eval = eval_phi_double_series(p, pt, cfg);
      const EvalResult red = reduced_series(p, pt, /*with_mu_nu=*/false, cfg);
      c.lhs = full_eval.value;
      c.rhs = red.value;
      c.converged = full_eval.converged && red.converged;
      return c;
    });
  }

  // Cases 3-5: limit series against the rescaled full function.
  struct LimitCase {
    const char* id;
    LimitVariant variant;
  };
  for (const LimitCase& lc :
       {LimitCase{"case3-limit", LimitVariant::EtaPrimeInf},
        LimitCase{"case4-limit", LimitVariant::MuInf},
        LimitCase{"case5-limit", LimitVariant::MuAndEtaPrimeInf}}) {
    for (int i = 0, n = full ? 2 : 1; i < n; ++i) {
      ParameterSet p = sample_params(rng);
      EvalPoint pt = sample_point(rng);
      add(lc.id, 1e-4, 0.0, describe(p, pt), [p, pt, lc]() {
        Comparison c;
        SeriesConfig cfg;
        const double lam = 1e6;
        const EvalResult lim = eval_phi_limit_case(p, lc.variant, pt, cfg);
        ParameterSet big = p;
        EvalPoint scaled = pt;
        switch (lc.variant) {
          case LimitVariant::EtaPrimeInf:
            big.eta_p = lam;
            scaled.t = pt.t / lam;
            break;
          case LimitVariant::MuInf:
            big.mu = lam;
            scaled.z = pt.z / lam;
            scaled.t = pt.t / lam;
            break;
          case LimitVariant::MuAndEtaPrimeInf:
            big.mu = lam;
            big.eta_p = lam;
            scaled.z = pt.z / lam;
            scaled.t = pt.t / (lam * lam);
            break;
          default:
            break;
        }
        const EvalResult full_eval = eval_phi_double_series(big, scaled, cfg);
        c.lhs = lim.value;
        c.rhs = full_eval.value;
        c.converged = lim.converged && full_eval.converged;
        return c;
      });
    }
  }

  // Term-level swap symmetry.
  for (int i = 0, n = full ? 50 : 5; i < n; ++i) {
    ParameterSet p = sample_params(rng);
    EvalPoint pt = sample_point(rng);
    add("swap-symmetry", 0.0, 1e-12, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig cfg;
      const EvalResult a = eval_phi_double_series(p, pt, cfg);
      EvalPoint sw = pt;
      std::swap(sw.z, sw.t);
      const EvalResult b = eval_phi_double_series(swap_parameters(p), sw, cfg);
      c.lhs = a.value;
      c.rhs = b.value;
      c.converged = a.converged && b.converged;
      return c;
    });
  }

  // The Eulerian integral underlying every Mellin-type representation.
  {
    const double svals[] = {0.5, 1.0, 2.5};
    const double avals[] = {0.5, 1.0, 3.0};
    int count = 0;
    for (double sv : svals) {
      for (double av : avals) {
        if (!full && ++count > 3) break;
        add("eulerian-integral", 0.0, 1e-10,
            "s=" + format_double(sv) + ",a=" + format_double(av),
            [sv, av]() {
              Comparison c;
              QuadConfig qcfg;
              qcfg.tol = 1e-12;
              const EvalResult q = eulerian_integral(sv, av, qcfg);
              c.lhs = q.value;
              c.rhs = complex_power_neg_s(av, sv);
              c.converged = q.converged;
              return c;
            });
      }
    }
  }

  // z = t = 0 collapses to a single power.
  {
    ParameterSet p = sample_params(rng);
    EvalPoint pt;
    pt.s = rng.uniform(0.5, 3.0);
    pt.a = rng.uniform(0.5, 3.0);
    add("power-law-collapse", 0.0, 1e-12, describe(p, pt), [p, pt]() {
      Comparison c;
      SeriesConfig cfg;
      const EvalResult s = eval_phi_double_series(p, pt, cfg);
      c.lhs = s.value;
      c.rhs = complex_power_neg_s(pt.a, pt.s);
      c.converged = s.converged;
      return c;
    });
  }

  return tasks;
}

}  // namespace

VerifySummary run_verify_suite(const VerifyOptions& opts) {
  std::vector<Task> tasks = build_tasks(opts);
  VerifySummary summary;
  summary.reports.resize(tasks.size());

  const int jobs =
      std::max(1, std::min<int>(opts.jobs, static_cast<int>(tasks.size())));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      IdentityReport r;
      r.id = t.id;
      r.point = t.point;
      Comparison c;
      try {
        c = t.run();
        r.lhs = c.lhs;
        r.rhs = c.rhs;
        r.converged = c.converged;
        r.abs_diff = std::abs(c.lhs - c.rhs);
      } catch (const std::exception&) {
        r.lhs = r.rhs = Complex(std::nan(""), 0.0);
        r.abs_diff = std::numeric_limits<double>::infinity();
        r.converged = false;
      }
      if (opts.tol_override > 0.0) {
        r.tolerance = opts.tol_override;
      } else {
        r.tolerance = t.abs_tol + t.rel_tol * (1.0 + std::abs(r.rhs));
      }
      r.pass = r.abs_diff <= r.tolerance;
      summary.reports[i] = std::move(r);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  for (const IdentityReport& r : summary.reports) {
    summary.all_pass = summary.all_pass && r.pass;
    summary.all_converged = summary.all_converged && r.converged;
  }
  return summary;
}

}  // namespace hlzeta
