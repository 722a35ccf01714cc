#include "print_util.hpp"

namespace skein::detail {

std::string format_combination(const std::vector<PrintTerm>& terms) {
  if (terms.empty()) return "0";
  if (terms.size() == 1 && terms[0].basis.empty()) return terms[0].coeff->to_string();
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Scalar c = *t.coeff;
    const bool negative = c.numerator().leading().coeff < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool compound = c.numerator().size() > 1 || !c.is_polynomial();
    std::string ctext = c.to_string();
    if (compound && (c.is_polynomial() || t.basis.empty())) ctext = "(" + ctext + ")";
    if (t.basis.empty()) {
      out += ctext;
    } else if (c.is_one()) {
      out += t.basis;
    } else {
      out += ctext + "*" + t.basis;
    }
  }
  return out;
}

std::optional<Scalar> scalar_atom(std::string_view id) {
  if (id == "x") return Scalar(var_x());
  if (id == "v") return Scalar(var_v());
  if (id == "s") return Scalar(var_s());
  if (id == "z") return Scalar(z_poly());
  if (id == "delta") return delta();
  return std::nullopt;
}

}  // namespace skein::detail
