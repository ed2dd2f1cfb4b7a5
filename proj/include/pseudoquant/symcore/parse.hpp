#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pseudoquant/symcore/forms.hpp"
#include "pseudoquant/symcore/poly.hpp"

namespace pq {

/// Malformed expression; `column` is 1-based within the offending text.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t column);
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t column_;
};

/// Infix polynomial grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Identifiers are chart labels, `hbar`, or `i` (imaginary unit). Division is
/// only allowed by nonzero constants, e.g. `(1/2)*p1^2 + hbar*q1`.
Poly parse_poly(std::string_view text, const ChartPtr& chart);

/// One-form from (coefficient expression, basis covector) pairs such as
/// {"(1/2)*p1^2", "dq1"}. Repeated covectors accumulate.
OneForm parse_one_form(const std::vector<std::pair<std::string, std::string>>& entries, const ChartPtr& chart);

/// Inverse of parse_one_form (zero coefficients omitted, chart order).
std::vector<std::pair<std::string, std::string>> one_form_entries(const OneForm& form);

}  // namespace pq
