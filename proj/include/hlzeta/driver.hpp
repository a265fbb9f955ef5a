#ifndef HLZETA_DRIVER_HPP
#define HLZETA_DRIVER_HPP

#include <string_view>

#include "hlzeta/core.hpp"
#include "hlzeta/zeta.hpp"

namespace hlzeta {

enum class MethodChoice { Auto, Series, Diagonal, QuadM4, QuadBeta, ClosedKernel };

const char* to_string(MethodChoice m);
bool parse_method_choice(std::string_view text, MethodChoice& out);

struct EvalOutcome {
  EvalResult result;
  ReductionTag tag = ReductionTag::General;
};

/// Evaluate with the requested method; Auto dispatches on the reduction tag
/// and the domain: power-law and classical collapses go to their dedicated
/// evaluators, the closed kernel handles the mu = nu, delta = xi,
/// delta' = xi' family, the explicit-series route covers z != 0, and the
/// double series the rest.  No route is selected outside its preconditions.
EvalOutcome evaluate(const ParameterSet& p, const EvalPoint& pt,
                     MethodChoice choice, const SeriesConfig& scfg,
                     const QuadConfig& qcfg);

}  // namespace hlzeta

#endif  // HLZETA_DRIVER_HPP
