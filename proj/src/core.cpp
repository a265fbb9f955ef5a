#include "hlzeta/core.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hlzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool finite(const Complex& c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

// log Gamma on Re(c) >= 1/2 via the Lanczos series.
Complex log_gamma_right(Complex c) {
  const Complex zm1 = c - 1.0;
  Complex acc(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + static_cast<double>(i));
  const Complex t = zm1 + kLanczosG + 0.5;
  return kLogSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

// log sin(pi c), safe against overflow for large |Im c|; correct mod 2*pi*i.
Complex log_sin_pi(Complex c) {
  if (c.imag() < 0.0) return std::conj(log_sin_pi(std::conj(c)));
  const Complex pc = kPi * c;
  if (pc.imag() <= 20.0) return std::log(std::sin(pc));
  // sin(pi c) = -e^{-i pi c} (1 - e^{2 i pi c}) / (2 i) for large Im(c)
  const Complex i(0.0, 1.0);
  return -i * pc + std::log(1.0 - std::exp(2.0 * i * pc)) - std::log(2.0) +
         i * (kPi / 2.0);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::DoubleSeries: return "DoubleSeries";
    case Method::Diagonal: return "Diagonal";
    case Method::QuadM4: return "QuadM4";
    case Method::QuadBeta1D: return "QuadBeta1D";
    case Method::QuadBeta2D: return "QuadBeta2D";
    case Method::ClosedKernel: return "ClosedKernel";
    case Method::Dispatch: return "Dispatch";
  }
  return "Unknown";
}

bool is_nonpositive_integer(const Complex& c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::floor(c.real());
}

void validate(const ParameterSet& p) {
  const Complex* fields[] = {&p.mu, &p.eta, &p.eta_p, &p.delta,
                             &p.delta_p, &p.nu, &p.xi, &p.xi_p};
  for (const Complex* f : fields) {
    if (!finite(*f)) throw DomainError("parameter is not finite");
  }
  if (is_nonpositive_integer(p.nu) || is_nonpositive_integer(p.xi) ||
      is_nonpositive_integer(p.xi_p)) {
    throw DomainError("nu, xi, xi' must not be non-positive integers");
  }
}

void validate(const EvalPoint& pt) {
  const Complex* fields[] = {&pt.z, &pt.t, &pt.s, &pt.a};
  for (const Complex* f : fields) {
    if (!finite(*f)) throw DomainError("evaluation point is not finite");
  }
  if (is_nonpositive_integer(pt.a)) {
    throw DomainError("a must not be a non-positive integer");
  }
}

void validate(const SeriesConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw DomainError("series tolerance must be positive");
  if (cfg.max_diagonal < 1) throw DomainError("max_diagonal must be >= 1");
  if (cfg.stall_count < 1) throw DomainError("stall_count must be >= 1");
}

void validate(const QuadConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (cfg.max_levels < 1) throw DomainError("max_levels must be >= 1");
  if (cfg.tail_cut < 0.0) throw DomainError("tail_cut must be >= 0");
}

Complex pochhammer(Complex c, int n) {
  if (n < 0) throw DomainError("pochhammer order must be non-negative");
  if (n == 0) return Complex(1.0, 0.0);
  if (n <= 64) {
    Complex acc(1.0, 0.0);
    for (int j = 0; j < n; ++j) acc *= c + static_cast<double>(j);
    return acc;
  }
  // Shift into Re >= 1/2 so the log-gamma ratio is branch-consistent.
  int m = 0;
  if (c.real() < 0.5) {
    const double need = 0.5 - c.real();
    m = static_cast<int>(std::ceil(need));
    if (m > n) m = n;
  }
  Complex prefix(1.0, 0.0);
  for (int j = 0; j < m; ++j) prefix *= c + static_cast<double>(j);
  if (prefix == Complex(0.0, 0.0) || m == n) return prefix;
  const Complex base = c + static_cast<double>(m);
  return prefix * std::exp(log_gamma(base + static_cast<double>(n - m)) -
                           log_gamma(base));
}

Complex log_pochhammer(Complex c, int n) {
  if (n < 0) throw DomainError("pochhammer order must be non-negative");
  if (n == 0) return Complex(0.0, 0.0);
  int m = 0;
  if (c.real() < 0.5) {
    m = static_cast<int>(std::ceil(0.5 - c.real()));
    if (m > n) m = n;
  }
  Complex acc(0.0, 0.0);
  for (int j = 0; j < m; ++j) {
    const Complex f = c + static_cast<double>(j);
    if (f == Complex(0.0, 0.0)) {
      throw DomainError("log_pochhammer of a vanishing product");
    }
    acc += std::log(f);
  }
  if (m == n) return acc;
  const Complex base = c + static_cast<double>(m);
  return acc + log_gamma(base + static_cast<double>(n - m)) - log_gamma(base);
}

Complex log_gamma(Complex c) {
  if (!finite(c)) throw DomainError("log_gamma of a non-finite argument");
  if (is_nonpositive_integer(c)) throw DomainError("log_gamma pole");
  if (c.real() >= 0.5) return log_gamma_right(c);
  // Reflection: log Gamma(c) = log pi - log sin(pi c) - log Gamma(1 - c).
  return std::log(kPi) - log_sin_pi(c) - log_gamma_right(1.0 - c);
}

Complex complex_power_neg_s(Complex base, Complex s) {
  if (base == Complex(0.0, 0.0)) {
    throw DomainError("zero base in complex power");
  }
  if (s == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
  return std::exp(-s * std::log(base));
}

}  // namespace hlzeta
