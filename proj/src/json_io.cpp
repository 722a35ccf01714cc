#include "skein/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

void expect_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

template <class Combination>
Json combination_to_json(const Combination& c) {
  Json out = Json::array();
  for (const auto& [key, coeff] : c.terms()) out.push_back(Json::array({to_json(key), to_json(coeff)}));
  return out;
}

template <class Combination, class MakeKey>
Combination combination_from_json(const Json& j, const char* what, MakeKey make_key) {
  expect_array(j, what);
  Combination out;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 2) bad(std::string(what) + " records are [key, scalar] pairs");
    out.add_term(make_key(rec[0]), scalar_from_json(rec[1]));
  }
  return out;
}

// Multiset keys (CPoly, annulus monomials) may come in any order.
Partition multiset_from_json(const Json& j) {
  expect_array(j, "monomial");
  std::vector<int> parts;
  for (const auto& k : j) {
    const int v = as_int(k, "monomial index");
    if (v < 1) bad("monomial indices must be positive");
    parts.push_back(v);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

}  // namespace

Json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("rational must be a string \"n/d\" or an integer");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) bad("bad rational '" + j.get<std::string>() + "'");
  q.canonicalize();
  return q;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Exponent e = p.exponent(i);
    out.push_back(Json::array({e.x, e.v, e.s, to_json(p.coeff(i))}));
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  expect_array(j, "polynomial");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 4) bad("polynomial terms are [ex, ev, es, coefficient]");
    const Exponent e{as_int(rec[0], "exponent"), as_int(rec[1], "exponent"), as_int(rec[2], "exponent")};
    terms.push_back({LaurentPoly::pack(e), rational_from_json(rec[3])});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const Scalar& c) { return Json{{"num", to_json(c.numerator())}, {"den", to_json(c.denominator())}}; }

Scalar scalar_from_json(const Json& j) {
  if (j.is_array()) return Scalar(laurent_from_json(j));
  if (!j.is_object() || !j.contains("num")) bad("scalar must be {\"num\": ..., \"den\": ...}");
  const LaurentPoly num = laurent_from_json(j.at("num"));
  const LaurentPoly den = j.contains("den") ? laurent_from_json(j.at("den")) : LaurentPoly(1L);
  if (den.is_zero()) bad("zero denominator");
  return Scalar(num, den);
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  expect_array(j, "partition");
  std::vector<int> parts;
  for (const auto& k : j) parts.push_back(as_int(k, "part"));
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json to_json(const DiagramVector& v) { return combination_to_json(v); }
Json to_json(const CPoly& p) { return combination_to_json(p); }
Json to_json(const AnnulusElement& e) { return combination_to_json(e); }

DiagramVector diagram_vector_from_json(const Json& j) {
  return combination_from_json<DiagramVector>(j, "diagram vector", partition_from_json);
}
CPoly cpoly_from_json(const Json& j) { return combination_from_json<CPoly>(j, "c-polynomial", multiset_from_json); }
AnnulusElement annulus_from_json(const Json& j) {
  return combination_from_json<AnnulusElement>(j, "annulus element", multiset_from_json);
}

Json to_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [pi, c] : h.terms()) {
    std::vector<int> images;
    for (int v : pi.images()) images.push_back(v + 1);
    terms.push_back(Json::array({images, to_json(c)}));
  }
  return Json{{"strands", h.strands()}, {"terms", terms}};
}

HeckeElement hecke_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("strands") || !j.contains("terms")) bad("hecke element needs strands and terms");
  const int n = as_int(j.at("strands"), "strands");
  HeckeElement out(n);
  expect_array(j.at("terms"), "terms");
  for (const auto& rec : j.at("terms")) {
    if (!rec.is_array() || rec.size() != 2) bad("hecke terms are [images, scalar]");
    expect_array(rec[0], "images");
    std::vector<int> images;
    for (const auto& v : rec[0]) images.push_back(as_int(v, "image"));
    if (static_cast<int>(images.size()) != n) bad("permutation size does not match strands");
    try {
      out += HeckeElement::basis(Permutation::from_one_based(images), scalar_from_json(rec[1]));
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  return out;
}

Json to_json(const UniLaurent& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    out.push_back(Json::array({p.low() + static_cast<int>(i), to_json(p.coeffs()[i])}));
  }
  return out;
}

UniLaurent unilaurent_from_json(const Json& j) {
  expect_array(j, "t-polynomial");
  UniLaurent out;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 2) bad("t-polynomial terms are [exponent, coefficient]");
    out += UniLaurent::monomial(as_int(rec[0], "exponent"), rational_from_json(rec[1]));
  }
  return out;
}

Json to_json(const TFraction& f) { return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

TFraction tfraction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("t-fraction needs num and den");
  const UniLaurent den = unilaurent_from_json(j.at("den"));
  if (den.is_zero()) bad("zero denominator");
  return TFraction(unilaurent_from_json(j.at("num")), den);
}

Json to_json(const ChordCounts& counts) {
  Json out = Json::array();
  for (const auto& [d, m] : counts) out.push_back(Json::array({d.to_string(), m}));
  return out;
}

ChordCounts chord_counts_from_json(const Json& j) {
  expect_array(j, "chord counts");
  ChordCounts out;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 2 || !rec[0].is_string()) bad("chord records are [matching, count]");
    out[ChordDiagram::parse(rec[0].get<std::string>())] += rec[1].get<long>();
  }
  return out;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json rec{{"pass", c.pass}, {"tag", c.tag}, {"params", c.params}};
    if (!c.detail.empty()) rec["detail"] = c.detail;
    checks.push_back(std::move(rec));
  }
  return Json{{"passed", r.all_passed()}, {"failures", r.failures()}, {"checks", checks}};
}

Json to_json(const PatternResult& r) {
  auto scalars = [](const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
  };
  auto keys = [](const std::vector<Partition>& v) {
    Json out = Json::array();
    for (const auto& k : v) out.push_back(to_json(k));
    return out;
  };
  if (const auto* sol = std::get_if<PatternSolution>(&r)) {
    return Json{{"status", "solution"}, {"coefficients", scalars(sol->coefficients)}, {"free", sol->free_unknowns}};
  }
  const auto& bad_sys = std::get<PatternInconsistency>(r);
  return Json{{"status", "inconsistent"},
              {"unknown", bad_sys.unknown},
              {"first", {{"equations", keys(bad_sys.first_equations)}, {"solution", scalars(bad_sys.first_solution)}}},
              {"second", {{"equations", keys(bad_sys.second_equations)}, {"solution", scalars(bad_sys.second_solution)}}}};
}

AnnulusElement annulus_from_input(const Json& j) {
  if (j.is_array()) return annulus_from_json(j);
  if (j.is_string()) return AnnulusElement::parse(j.get<std::string>());
  if (!j.is_object()) bad("annulus element must be records, a string or an object");
  if (j.contains("theta")) {
    if (!j.at("theta").is_string()) bad("theta takes a diagram-vector string");
    return theta(DiagramVector::parse(j.at("theta").get<std::string>()));
  }
  if (j.contains("word")) {
    if (!j.at("word").is_string()) bad("word must be a string");
    const int strands = j.contains("strands") ? as_int(j.at("strands"), "strands") : 0;
    const BraidWord w = BraidWord::parse(j.at("word").get<std::string>(), strands);
    if (!j.contains("decoration")) return closure(HeckeElement::from_word(w));
    const Json& dec = j.at("decoration");
    const Partition lambda = dec.is_string() ? Partition::parse(dec.get<std::string>()) : partition_from_json(dec);
    if (lambda.empty()) bad("decoration must have at least one cell");
    return closure(decorate(w, lambda));
  }
  bad("annulus object needs \"word\" or \"theta\"");
}

PatternSystem pattern_system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("patterns")) bad("pattern file needs target and patterns");
  PatternSystem sys;
  sys.target = annulus_from_input(j.at("target"));
  expect_array(j.at("patterns"), "patterns");
  for (const auto& p : j.at("patterns")) sys.patterns.push_back(annulus_from_input(p));
  return sys;
}

}  // namespace skein
