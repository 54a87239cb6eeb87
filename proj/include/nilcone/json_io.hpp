#pragma once

// JSON encodings. Rationals are strings "p/q"; forms are
// {"degree": n, "coeffs": [...]} ascending in the w-exponent; univariate
// polynomials are ascending coefficient lists. Readers throw InputError.

#include "json.hpp"

#include "nilcone/census.hpp"
#include "nilcone/fitting.hpp"
#include "nilcone/forms.hpp"
#include "nilcone/higgs.hpp"
#include "nilcone/sheaves.hpp"
#include "nilcone/springer.hpp"

namespace nilcone::json_io {

using Json = nlohmann::json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);

Json divisor_to_json(const DivisorP1& d);
DivisorP1 divisor_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json bundle_to_json(const SplitBundle& e);
SplitBundle bundle_from_json(const Json& j);

Json map_to_json(const SheafMap& f);
SheafMap map_from_json(const Json& j);

/// Line subsheaves travel as one-column maps.
Json subsheaf_to_json(const LineSubsheaf& lambda);
LineSubsheaf subsheaf_from_json(const Json& j);

Json quasimap_to_json(const QuasiMapClass& c);

Json higgs_to_json(const HiggsField& phi);
HiggsField higgs_from_json(const Json& j);

Json canonical_to_json(const CanonicalNilpotent& c);
CanonicalNilpotent canonical_from_json(const Json& j);

Json module_to_json(const fitting::PresentedModule& m);
fitting::PresentedModule module_from_json(const Json& j);

Json ideal_to_json(const fitting::PrincipalIdeal& ideal);

Json fiber_to_json(const springer::FiberDescription& fiber);

Json census_to_json(const census::CensusReport& report);

}  // namespace nilcone::json_io
