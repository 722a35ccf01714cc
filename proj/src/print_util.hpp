#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skein/scalar.hpp"

namespace skein::detail {

struct PrintTerm {
  const Scalar* coeff;
  std::string basis;  // empty for the unit
};

// Joins "coeff*basis" terms with " + " / " - ". Multi-term coefficients are
// parenthesized; a coefficient of 1 is omitted.
std::string format_combination(const std::vector<PrintTerm>& terms);

// Atoms shared by every expression grammar.
std::optional<Scalar> scalar_atom(std::string_view id);

// Value of a constant element, if the element is one.
template <class T>
std::optional<Scalar> constant_of(const T& t) {
  if (t.is_zero()) return Scalar();
  if (t.size() != 1) return std::nullopt;
  const auto& [key, c] = *t.terms().begin();
  if (!key.empty()) return std::nullopt;
  return c;
}

}  // namespace skein::detail
