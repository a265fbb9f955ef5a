#ifndef HLZETA_CORE_HPP
#define HLZETA_CORE_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace hlzeta {

using Complex = std::complex<double>;

/// Precondition or argument-domain violation (poles, invalid regions, bad config).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The oracle cannot certify its truncation error (term-ratio majorant >= 1).
class TailBoundUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method {
  DoubleSeries,
  Diagonal,
  QuadM4,
  QuadBeta1D,
  QuadBeta2D,
  ClosedKernel,
  Dispatch,
};

const char* to_string(Method m);

/// Outcome of one evaluation: value, error certificate, and cost accounting.
/// When converged is false, abs_err_estimate carries the last observed tail
/// bound rather than the requested tolerance.
struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_err_estimate = 0.0;
  long long work = 0;  // series terms or quadrature nodes consumed
  Method method = Method::DoubleSeries;
  bool converged = false;
};

/// The eight parameters (mu, eta, eta', delta, delta'; nu, xi, xi').
/// nu, xi, xi' must stay off the non-positive integers so no denominator
/// Pochhammer vanishes.
struct ParameterSet {
  Complex mu{1.0, 0.0};
  Complex eta{1.0, 0.0};
  Complex eta_p{1.0, 0.0};
  Complex delta{1.0, 0.0};
  Complex delta_p{1.0, 0.0};
  Complex nu{1.0, 0.0};
  Complex xi{1.0, 0.0};
  Complex xi_p{1.0, 0.0};
};

/// Arguments (z, t, s, a); a must stay off the non-positive integers.
struct EvalPoint {
  Complex z{0.0, 0.0};
  Complex t{0.0, 0.0};
  Complex s{1.0, 0.0};
  Complex a{1.0, 0.0};

  bool interior() const { return std::abs(z) < 1.0 && std::abs(t) < 1.0; }
};

struct SeriesConfig {
  double tol = 1e-10;       // requested absolute tolerance
  int max_diagonal = 20000; // cap on n = k + l
  int stall_count = 3;      // consecutive sub-tolerance diagonals to converge
};

struct QuadConfig {
  double tol = 1e-8;
  int max_levels = 10;   // tanh-sinh refinement depth
  double tail_cut = 0.0; // upper truncation X; 0 selects it from tol and Re(a)
};

bool is_nonpositive_integer(const Complex& c);

void validate(const ParameterSet& p);
void validate(const EvalPoint& pt);
void validate(const SeriesConfig& cfg);
void validate(const QuadConfig& cfg);

/// Rising factorial (c)_n = c (c+1) ... (c+n-1), with (c)_0 = 1.
/// Direct product for small n, log-gamma ratio beyond; zero results are
/// legitimate when c is a non-positive integer and n reaches past it.
Complex pochhammer(Complex c, int n);

/// log (c)_n for nonzero Pochhammer values, correct modulo 2*pi*i.
/// Stays finite where the plain product would overflow.
Complex log_pochhammer(Complex c, int n);

/// Principal-branch log-gamma (Lanczos, reflection for Re(c) < 1/2).
/// Throws DomainError at the poles c = 0, -1, -2, ...
Complex log_gamma(Complex c);

/// base^(-s) = exp(-s Log base) with the principal logarithm.
Complex complex_power_neg_s(Complex base, Complex s);

}  // namespace hlzeta

#endif  // HLZETA_CORE_HPP
