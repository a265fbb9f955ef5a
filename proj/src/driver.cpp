#include "hlzeta/driver.hpp"

#include <cmath>
#include <limits>

#include "hlzeta/quad.hpp"

namespace hlzeta {

namespace {

constexpr Complex kOne{1.0, 0.0};

bool closed_kernel_applicable(const ParameterSet& p, const EvalPoint& pt) {
  if (p.mu != p.nu || p.delta != p.xi || p.delta_p != p.xi_p) return false;
  if (!(pt.s.real() > 0.0) || !(pt.a.real() > 0.0)) return false;
  if (pt.z == kOne || pt.t == kOne) return false;
  return std::abs(pt.z) <= 1.0 && std::abs(pt.t) <= 1.0;
}

}  // namespace

const char* to_string(MethodChoice m) {
  switch (m) {
    case MethodChoice::Auto: return "auto";
    case MethodChoice::Series: return "series";
    case MethodChoice::Diagonal: return "diagonal";
    case MethodChoice::QuadM4: return "quad-m4";
    case MethodChoice::QuadBeta: return "quad-beta";
    case MethodChoice::ClosedKernel: return "closed-kernel";
  }
  return "unknown";
}

bool parse_method_choice(std::string_view text, MethodChoice& out) {
  if (text == "auto") out = MethodChoice::Auto;
  else if (text == "series") out = MethodChoice::Series;
  else if (text == "diagonal") out = MethodChoice::Diagonal;
  else if (text == "quad-m4") out = MethodChoice::QuadM4;
  else if (text == "quad-beta") out = MethodChoice::QuadBeta;
  else if (text == "closed-kernel") out = MethodChoice::ClosedKernel;
  else return false;
  return true;
}

EvalOutcome evaluate(const ParameterSet& p, const EvalPoint& pt,
                     MethodChoice choice, const SeriesConfig& scfg,
                     const QuadConfig& qcfg) {
  validate(p);
  validate(pt);
  EvalOutcome out;
  out.tag = classify_reduction(p, pt);

  switch (choice) {
    case MethodChoice::Series:
      out.result = eval_phi_double_series(p, pt, scfg);
      return out;
    case MethodChoice::Diagonal:
      out.result = eval_phi_diagonal(p, pt, scfg);
      return out;
    case MethodChoice::QuadM4:
      out.result = eval_phi_integral_m4(p, pt, qcfg, scfg);
      return out;
    case MethodChoice::QuadBeta:
      out.result = eval_phi_beta_integral_1d(p, pt, qcfg, scfg);
      return out;
    case MethodChoice::ClosedKernel:
      if (p.mu != p.nu || p.delta != p.xi || p.delta_p != p.xi_p) {
        throw DomainError(
            "closed kernel requires mu = nu, delta = xi, delta' = xi'");
      }
      out.result = eval_phi_closed_kernel(p.eta, p.eta_p, pt, qcfg);
      return out;
    case MethodChoice::Auto:
      break;
  }

  switch (out.tag) {
    case ReductionTag::PowerLaw: {
      EvalResult r;
      r.method = Method::Dispatch;
      r.value = complex_power_neg_s(pt.a, pt.s);
      r.abs_err_estimate =
          std::numeric_limits<double>::epsilon() * std::abs(r.value);
      r.work = 1;
      r.converged = true;
      out.result = r;
      return out;
    }
    case ReductionTag::ClassicalPhi:
      out.result = eval_classical_phi(pt.z, pt.s, pt.a, scfg);
      return out;
    case ReductionTag::PathanDaman:
      if (closed_kernel_applicable(p, pt)) {
        out.result = eval_phi_closed_kernel(p.eta, p.eta_p, pt, qcfg);
        return out;
      }
      break;
    default:
      break;
  }

  if (pt.z != Complex(0.0, 0.0)) {
    out.result = eval_phi_diagonal(p, pt, scfg);
  } else {
    out.result = eval_phi_double_series(p, pt, scfg);
  }
  return out;
}

}  // namespace hlzeta
