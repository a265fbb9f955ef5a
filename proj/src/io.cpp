#include "hlzeta/io.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hlzeta {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Parses a decimal number at the start of s; returns chars consumed or 0.
size_t parse_double_prefix(std::string_view s, double& out) {
  std::array<char, 64> buf{};
  const size_t n = std::min(s.size(), buf.size() - 1);
  std::memcpy(buf.data(), s.data(), n);
  char* end = nullptr;
  out = std::strtod(buf.data(), &end);
  return static_cast<size_t>(end - buf.data());
}

enum Field {
  kMu, kEta, kEtaP, kDelta, kDeltaP, kNu, kXi, kXiP,
  kZ, kT, kS, kA, kMethod, kTol, kFieldCount,
};

constexpr const char* kFieldNames[kFieldCount] = {
    "mu", "eta", "eta_p", "delta", "delta_p", "nu", "xi", "xi_p",
    "z", "t", "s", "a", "method", "tol",
};

Complex* field_slot(BatchRow& row, int field) {
  switch (field) {
    case kMu: return &row.params.mu;
    case kEta: return &row.params.eta;
    case kEtaP: return &row.params.eta_p;
    case kDelta: return &row.params.delta;
    case kDeltaP: return &row.params.delta_p;
    case kNu: return &row.params.nu;
    case kXi: return &row.params.xi;
    case kXiP: return &row.params.xi_p;
    case kZ: return &row.point.z;
    case kT: return &row.point.t;
    case kS: return &row.point.s;
    case kA: return &row.point.a;
    default: return nullptr;
  }
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;

  double first = 0.0;
  const size_t used = parse_double_prefix(s, first);
  if (used == 0) return std::nullopt;
  s.remove_prefix(used);

  if (s.empty()) return Complex(first, 0.0);
  if (s == "i") return Complex(0.0, first);  // bare imaginary "bi"

  if (s.front() != '+' && s.front() != '-') return std::nullopt;
  double second = 0.0;
  const size_t used2 = parse_double_prefix(s, second);
  if (used2 == 0) return std::nullopt;
  s.remove_prefix(used2);
  if (s != "i") return std::nullopt;
  return Complex(first, second);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string s = format_double(v.real());
  if (v.imag() >= 0.0 || std::isnan(v.imag())) s += '+';
  s += format_double(v.imag());
  s += 'i';
  return s;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    const auto piece = comma == std::string_view::npos
                           ? line.substr(start)
                           : line.substr(start, comma - start);
    cells.emplace_back(trim(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

BatchLayout parse_batch_header(std::string_view line) {
  const auto cells = split_csv(line);
  BatchLayout layout;
  layout.columns = static_cast<int>(cells.size());
  std::array<bool, kFieldCount> seen{};
  for (const std::string& cell : cells) {
    int field = -1;
    for (int f = 0; f < kFieldCount; ++f) {
      if (cell == kFieldNames[f]) {
        field = f;
        break;
      }
    }
    if (field < 0) throw DomainError("unknown batch column: " + cell);
    if (seen[field]) throw DomainError("duplicate batch column: " + cell);
    seen[field] = true;
    layout.field_of_column.push_back(field);
  }
  for (int f = kMu; f <= kA; ++f) {
    if (!seen[f]) {
      throw DomainError(std::string("missing batch column: ") + kFieldNames[f]);
    }
  }
  return layout;
}

BatchRow parse_batch_row(const BatchLayout& layout, std::string_view line) {
  const auto cells = split_csv(line);
  if (static_cast<int>(cells.size()) != layout.columns) {
    throw DomainError("wrong number of fields in batch row");
  }
  BatchRow row;
  for (size_t c = 0; c < cells.size(); ++c) {
    const int field = layout.field_of_column[c];
    const std::string& cell = cells[c];
    if (field == kMethod) {
      if (cell.empty()) continue;  // default fills in
      MethodChoice m;
      if (!parse_method_choice(cell, m)) {
        throw DomainError("unknown method: " + cell);
      }
      row.method = m;
      continue;
    }
    if (field == kTol) {
      if (cell.empty()) continue;
      char* end = nullptr;
      const double tol = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() + cell.size() || !(tol > 0.0)) {
        throw DomainError("bad tolerance: " + cell);
      }
      row.tol = tol;
      continue;
    }
    const auto parsed = parse_complex(cell);
    if (!parsed) throw DomainError("bad complex literal: " + cell);
    *field_slot(row, field) = *parsed;
  }
  return row;
}

}  // namespace hlzeta
