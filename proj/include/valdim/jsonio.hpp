#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "valdim/dimcert.hpp"
#include "valdim/dynval.hpp"
#include "valdim/lattice.hpp"
#include "valdim/ppring.hpp"
#include "valdim/valuative.hpp"

namespace valdim {

using Json = nlohmann::json;

/// Document forms. Conversions from JSON validate shape and throw
/// std::invalid_argument with a field path on malformed input; conversions
/// to JSON are deterministic (object keys serialize sorted, arrays keep
/// their construction order).
///
///   field    "Q" | {"Fp": p}
///   ring     {"field", "vars", "ideal", "assume_reduced", "assume_integral"}
///   order    {"kind":"lex","priority":[…]} | {"kind":"grlex","n":k}
///            | {"kind":"matrix","rows":[[…],…]}
///   element  polynomial text over the ring's variables
///   fraction {"num": element, "den": element} (or a bare element string)
///   rpoly    {"nind", "laurent", "terms":[{"exps":[…], "coeff": element}]}
///   dimcert  {"ring", "points", "order", "witness", "trailing"}
///   valcert  {"form", "left", "exponents", "right", "polys"}
///   term     {"meets":[[atom ids]]}
///   table    {"atoms":[names], "sequents":[{"lhs":[…], "rhs":[…]}]}

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json ring_to_json(const RingPtr& r);
RingPtr ring_from_json(const Json& j);

Json order_to_json(const OrderSpec& o);
OrderSpec order_from_json(const Json& j, int dim_hint = -1);

Json element_to_json(const RingElement& a);
RingElement element_from_json(const Json& j, const RingPtr& r);

Json frac_to_json(const FracElement& v);
FracElement frac_from_json(const Json& j, const RingPtr& r);

Json rpoly_to_json(const RPoly& p);
RPoly rpoly_from_json(const Json& j, const RingPtr& r);

Json dimcert_to_json(const DimCertificate& c);
DimCertificate dimcert_from_json(const Json& j);
/// Reuses `over` as the certificate's ring when the embedded presentation
/// matches it; two documents parsed this way share one ring instance.
DimCertificate dimcert_from_json(const Json& j, const RingPtr& over);

Json valcert_to_json(const ValCert& c);
ValCert valcert_from_json(const Json& j, const RingPtr& r);

Json lattice_term_to_json(const LatticeTerm& t);
LatticeTerm lattice_term_from_json(const Json& j);

Json table_to_json(const EntailmentTable& t);
EntailmentTable table_from_json(const Json& j);

Json decision_to_json(const Decision& d);
Json chain_check_to_json(const ChainCheckResult& r);

Json search_outcome_to_json(const SearchOutcome& s);
Json split_to_json(const ComponentSplit& s);
Json chain_to_json(const ComplementaryChainV& ch);

Json divatom_to_json(const DivAtom& a);
DivAtom divatom_from_json(const Json& j, const RingPtr& r);

Json prooftree_to_json(const ProofTree& t);
ProofTree prooftree_from_json(const Json& j);

}  // namespace valdim
