#include "unicrit/json_io.hpp"

namespace unicrit {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw ParseError("malformed JSON: " + what);
}

} // namespace

json to_json(const FieldElem& e) {
    json out = json::array();
    for (auto c : e.coeffs()) out.push_back(c);
    return out;
}

json to_json(const Poly& f) {
    json coeffs = json::array();
    for (const auto& e : f.coeffs()) coeffs.push_back(to_json(e));
    return json{{"coeffs", std::move(coeffs)}};
}

json to_json(const RatFunc& phi) {
    return json{{"num", to_json(phi.num())}, {"den", to_json(phi.den())}};
}

json to_json(const ContFrac& c) {
    json q = json::array();
    for (const auto& f : c.quotients()) q.push_back(to_json(f));
    return json{{"quotients", std::move(q)}};
}

json to_json(const Signature& s) {
    json out = json::array();
    for (auto k : s.entries()) out.push_back(k);
    return out;
}

json to_json(const UnicriticalForm& u) {
    json q = json::array();
    for (const auto& f : u.q) q.push_back(to_json(f));
    return json{{"q", std::move(q)}, {"a", to_json(u.a)}};
}

json to_json(const ProjPoint& x) {
    if (x.is_infinity()) return json("infinity");
    return to_json(x.value());
}

json to_json(const CritReport& r) {
    json finite = json::array();
    for (const auto& [point, mult] : r.finite_critical)
        finite.push_back(json{{"point", to_json(point)}, {"multiplicity", mult}});
    json out{{"separable", r.separable},
             {"finite_critical", std::move(finite)},
             {"infinity_critical", r.infinity_critical}};
    out["unicritical_at"] = r.unicritical_at ? to_json(*r.unicritical_at) : json(nullptr);
    return out;
}

json to_json(const CountReport& r) {
    json strata = json::array();
    for (const auto& entry : r.strata)
        strata.push_back(json{{"kappa", to_json(entry.kappa)}, {"count", entry.count}});
    json out{{"q", r.q}, {"strata", std::move(strata)}, {"total", r.total}};
    if (r.brute_total) {
        out["brute_total"] = *r.brute_total;
        out["agree"] = r.agree;
    }
    return out;
}

json to_json(const LaurentScalar& s) {
    json out;
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    out["coeffs"] = std::move(coeffs);
    if (s.is_zero_at_precision()) {
        out["val"] = nullptr;
        out["prec"] = s.is_exact() ? json(nullptr) : json(s.known_upto());
    } else {
        out["val"] = s.valuation();
        out["prec"] = s.is_exact() ? json(nullptr) : json(s.known_upto() - s.valuation());
    }
    return out;
}

json to_json(const LaurentPoly& f) {
    json coeffs = json::array();
    for (const auto& s : f.coeffs()) coeffs.push_back(to_json(s));
    return json{{"coeffs", std::move(coeffs)}};
}

json to_json(const LocalRatFunc& phi) {
    return json{{"num", to_json(phi.num())},
                {"den", to_json(phi.den())},
                {"degree", phi.degree()}};
}

json to_json(const CongruenceReport& r) {
    json out{{"applies", r.applies},
             {"case", to_string(r.kase)},
             {"degree", r.degree}};
    out["congruence_ok"] = r.congruence_ok ? json(*r.congruence_ok) : json(nullptr);
    out["reduced"] = r.reduced.is_constant_infinity() ? json("infinity") : to_json(r.reduced);
    return out;
}

json to_json(const LdPoint& l) {
    return json{{"f1", to_json(l.f1)},
                {"f2", to_json(l.f2)},
                {"g1", to_json(l.g1)},
                {"g2", to_json(l.g2)},
                {"unit", to_json(l.unit())}};
}

FieldElem elem_from_json(const FieldSpec& spec, const json& j) {
    if (j.is_number_integer()) return FieldElem::from_integer(spec, j.get<std::int64_t>());
    if (!j.is_array()) bad("field element must be an integer or an array of residues");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : j) {
        if (!c.is_number_integer()) bad("field element residues must be integers");
        coeffs.push_back(c.get<std::int64_t>());
    }
    try {
        return FieldElem::from_coeffs(spec, coeffs);
    } catch (const DomainError& e) {
        bad(e.what());
    }
}

Poly poly_from_json(const FieldSpec& spec, const json& j) {
    const json* coeffs = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs")) bad("polynomial object needs a \"coeffs\" array");
        coeffs = &j.at("coeffs");
    }
    if (!coeffs->is_array()) bad("polynomial coefficients must form an array");
    std::vector<FieldElem> c;
    for (const auto& e : *coeffs) c.push_back(elem_from_json(spec, e));
    return Poly(spec, std::move(c));
}

RatFunc ratfunc_from_json(const FieldSpec& spec, const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        bad("rational function needs \"num\" and \"den\"");
    return RatFunc(poly_from_json(spec, j.at("num")), poly_from_json(spec, j.at("den")));
}

ContFrac contfrac_from_json(const FieldSpec& spec, const json& j) {
    const json* quotients = &j;
    if (j.is_object()) {
        if (!j.contains("quotients")) bad("continued fraction needs a \"quotients\" array");
        quotients = &j.at("quotients");
    }
    if (!quotients->is_array()) bad("quotients must form an array");
    std::vector<Poly> q;
    for (const auto& f : *quotients) q.push_back(poly_from_json(spec, f));
    try {
        return ContFrac(std::move(q));
    } catch (const DomainError& e) {
        bad(e.what());
    }
}

Signature signature_from_json(const json& j) {
    if (!j.is_array()) bad("signature must be an array of integers");
    std::vector<long long> k;
    for (const auto& v : j) {
        if (!v.is_number_integer()) bad("signature entries must be integers");
        k.push_back(v.get<long long>());
    }
    try {
        return Signature(std::move(k));
    } catch (const DomainError& e) {
        bad(e.what());
    }
}

UnicriticalForm form_from_json(const FieldSpec& spec, const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("a"))
        bad("unicritical form needs \"q\" and \"a\"");
    if (!j.at("q").is_array()) bad("\"q\" must be an array of polynomials");
    std::vector<Poly> q;
    for (const auto& f : j.at("q")) q.push_back(poly_from_json(spec, f));
    return UnicriticalForm{std::move(q), elem_from_json(spec, j.at("a"))};
}

LaurentScalar laurent_scalar_from_json(const FieldSpec& residue, const json& j) {
    if (j.is_string()) return LaurentScalar::parse(residue, j.get<std::string>());
    if (j.is_number_integer())
        return LaurentScalar::from_residue(
            FieldElem::from_integer(residue, j.get<std::int64_t>()));
    if (!j.is_object()) bad("Laurent scalar must be an object, string or integer");

    std::vector<FieldElem> coeffs;
    if (j.contains("coeffs"))
        for (const auto& c : j.at("coeffs")) coeffs.push_back(elem_from_json(residue, c));

    const bool has_val = j.contains("val") && !j.at("val").is_null();
    const bool has_prec = j.contains("prec") && !j.at("prec").is_null();
    if (coeffs.empty()) {
        LaurentScalar z = LaurentScalar::zero(residue);
        if (has_prec) z = z.truncated(j.at("prec").get<long long>());
        return z;
    }
    if (!has_val) bad("nonzero Laurent scalar needs \"val\"");
    const long long val = j.at("val").get<long long>();
    LaurentScalar s = LaurentScalar::exact(residue, val, std::move(coeffs));
    if (has_prec) s = s.truncated(val + j.at("prec").get<long long>());
    return s;
}

LaurentPoly laurent_poly_from_json(const FieldSpec& residue, const json& j) {
    const json* coeffs = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs")) bad("Laurent polynomial needs a \"coeffs\" array");
        coeffs = &j.at("coeffs");
    }
    if (!coeffs->is_array()) bad("Laurent polynomial coefficients must form an array");
    std::vector<LaurentScalar> c;
    for (const auto& s : *coeffs) c.push_back(laurent_scalar_from_json(residue, s));
    return LaurentPoly(residue, std::move(c));
}

LocalRatFunc local_ratfunc_from_json(const FieldSpec& residue, const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        bad("local map needs \"num\" and \"den\"");
    return normalize_model(laurent_poly_from_json(residue, j.at("num")),
                           laurent_poly_from_json(residue, j.at("den")));
}

} // namespace unicrit
