#ifndef HLZETA_IO_HPP
#define HLZETA_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlzeta/core.hpp"
#include "hlzeta/driver.hpp"

namespace hlzeta {

/// Complex literals "a+bi", "a-bi", "a" (also a bare "bi").
std::optional<Complex> parse_complex(std::string_view text);

/// Round-trip formatting of the same literals.
std::string format_complex(Complex v);

std::string format_double(double v);

/// One batch line: the full parameter set and point, plus optional per-row
/// method and tolerance overrides.
struct BatchRow {
  ParameterSet params;
  EvalPoint point;
  std::optional<MethodChoice> method;
  std::optional<double> tol;
};

/// Column layout extracted from a CSV header.  The twelve parameter and
/// argument columns are required; method and tol are optional.
struct BatchLayout {
  std::vector<int> field_of_column;  // per column: field index or -1
  int columns = 0;
};

/// Throws DomainError when a required column is missing or a name is unknown.
BatchLayout parse_batch_header(std::string_view line);

/// Parses one data line against the layout; throws DomainError on bad
/// literals or field-count mismatch.
BatchRow parse_batch_row(const BatchLayout& layout, std::string_view line);

std::vector<std::string> split_csv(std::string_view line);

}  // namespace hlzeta

#endif  // HLZETA_IO_HPP
