#pragma once

#include <json.hpp>

#include "skein/adams.hpp"
#include "skein/chords.hpp"

namespace skein {

using Json = nlohmann::json;

// Term records: LaurentPoly as [[ex, ev, es, "num/den"], ...]; Scalar as
// {"num": ..., "den": ...}; linear combinations as [[[parts], scalar], ...].
// Every from_json throws std::invalid_argument on a malformed record.
Json to_json(const Rational& q);
Json to_json(const LaurentPoly& p);
Json to_json(const Scalar& c);
Json to_json(const Partition& p);
Json to_json(const DiagramVector& v);
Json to_json(const CPoly& p);
Json to_json(const AnnulusElement& e);
Json to_json(const HeckeElement& h);
Json to_json(const UniLaurent& p);
Json to_json(const TFraction& f);
Json to_json(const ChordCounts& counts);
Json to_json(const Report& r);
Json to_json(const PatternResult& r);

Rational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
Partition partition_from_json(const Json& j);
DiagramVector diagram_vector_from_json(const Json& j);
CPoly cpoly_from_json(const Json& j);
AnnulusElement annulus_from_json(const Json& j);
HeckeElement hecke_from_json(const Json& j);
UniLaurent unilaurent_from_json(const Json& j);
TFraction tfraction_from_json(const Json& j);
ChordCounts chord_counts_from_json(const Json& j);

// An annulus element given as a record list, an expression string,
// {"word": "1 -2", "strands": n, "decoration": [1,1]} (closure of the
// decorated braid; decoration defaults to the trivial one), or
// {"theta": "(4) - (2,1,1)"} (theta of a diagram vector).
AnnulusElement annulus_from_input(const Json& j);

// {"target": input, "patterns": [input, ...]} with inputs as above.
PatternSystem pattern_system_from_json(const Json& j);

}  // namespace skein
