#pragma once

#include <json.hpp>

#include "unicrit/moduli.hpp"
#include "unicrit/reduction.hpp"

namespace unicrit {

using nlohmann::json;

json to_json(const FieldElem& e);       ///< [c0, ..., c_{k-1}]
json to_json(const Poly& f);            ///< {"coeffs": [elem, ...]} constant-first
json to_json(const RatFunc& phi);       ///< {"num": poly, "den": poly}
json to_json(const ContFrac& c);        ///< {"quotients": [poly, ...]}
json to_json(const Signature& s);       ///< [k0, k1, ...]
json to_json(const UnicriticalForm& u); ///< {"q": [poly, ...], "a": elem}
json to_json(const ProjPoint& x);       ///< elem or "infinity"
json to_json(const CritReport& r);
json to_json(const CountReport& r);
json to_json(const LaurentScalar& s); ///< {"val": v|null, "coeffs": [...], "prec": N|null}
json to_json(const LaurentPoly& f);   ///< {"coeffs": [scalar, ...]}
json to_json(const LocalRatFunc& phi);
json to_json(const CongruenceReport& r);
json to_json(const LdPoint& l);

FieldElem elem_from_json(const FieldSpec& spec, const json& j);
Poly poly_from_json(const FieldSpec& spec, const json& j);
RatFunc ratfunc_from_json(const FieldSpec& spec, const json& j);
ContFrac contfrac_from_json(const FieldSpec& spec, const json& j);
Signature signature_from_json(const json& j);
UnicriticalForm form_from_json(const FieldSpec& spec, const json& j);
LaurentScalar laurent_scalar_from_json(const FieldSpec& residue, const json& j);
LaurentPoly laurent_poly_from_json(const FieldSpec& residue, const json& j);
/// Builds and normalizes the model from {"num": ..., "den": ...}.
LocalRatFunc local_ratfunc_from_json(const FieldSpec& residue, const json& j);

} // namespace unicrit
