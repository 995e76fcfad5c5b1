#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unicrit/json_io.hpp"

using namespace unicrit;

namespace {

struct CommonOpts {
    std::string field = "p=2,k=1";
    std::string output = "json";
    std::uint64_t limit = kDefaultScanLimit;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--field", opts.field, "coefficient field, e.g. p=2,k=2,mod=1,1,1");
    cmd->add_option("--output", opts.output, "output mode: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    if (const char* env = std::getenv("UNICRIT_LIMIT")) {
        try {
            opts.limit = std::stoull(env);
        } catch (...) {
            throw ParseError("UNICRIT_LIMIT is not a number");
        }
    }
    cmd->add_option("--limit", opts.limit, "cap on enumeration sizes");
}

FieldSpec field_of(const CommonOpts& opts) { return FieldSpec::parse(opts.field); }

// Splits "num/den" at the single top-level slash, tolerating one pair of
// parentheses around each side.
std::pair<std::string, std::string> split_fraction(const std::string& text) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw ParseError("more than one top-level '/' in map text");
            slash = i;
        }
    }
    if (slash == std::string::npos) return {text, ""};
    return {text.substr(0, slash), text.substr(slash + 1)};
}

std::string strip_outer_parens(std::string s) {
    auto trim = [](std::string& x) {
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front())))
            x.erase(x.begin());
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    };
    trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (wraps) {
            s = s.substr(1, s.size() - 2);
            trim(s);
        }
    }
    return s;
}

struct MapInput {
    std::string positional;
    std::string num, den;

    RatFunc read(const FieldSpec& spec) const {
        if (!num.empty() || !den.empty()) {
            Poly f = Poly::parse(spec, strip_outer_parens(num.empty() ? "0" : num));
            Poly g = den.empty() ? Poly::one(spec)
                                 : Poly::parse(spec, strip_outer_parens(den));
            return RatFunc(std::move(f), std::move(g));
        }
        if (positional.empty()) throw ParseError("no input map given");
        std::string text = positional;
        if (!text.empty() && text.front() == '{')
            return ratfunc_from_json(spec, json::parse(text));
        auto [ntext, dtext] = split_fraction(text);
        Poly f = Poly::parse(spec, strip_outer_parens(ntext));
        Poly g = dtext.empty() ? Poly::one(spec)
                               : Poly::parse(spec, strip_outer_parens(dtext));
        return RatFunc(std::move(f), std::move(g));
    }
};

void add_map_input(CLI::App* cmd, MapInput& in) {
    cmd->add_option("map", in.positional,
                    "the map: polynomial text, \"num/den\", or JSON {\"num\":...,\"den\":...}");
    cmd->add_option("--num", in.num, "numerator polynomial text");
    cmd->add_option("--den", in.den, "denominator polynomial text");
}

std::string read_payload(const std::string& positional, const std::string& file) {
    if (!file.empty()) {
        if (file == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream f(file);
        if (!f) throw ParseError("cannot open input file " + file);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    if (positional.empty()) throw ParseError("no input given");
    return positional;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

void emit(const json& out, const CommonOpts& opts,
          const std::vector<std::string>& table_lines = {}) {
    if (opts.output == "table" && !table_lines.empty()) {
        for (const auto& line : table_lines) std::cout << line << '\n';
        return;
    }
    std::cout << out.dump(2) << '\n';
}

json ratfunc_json_with_text(const RatFunc& phi) {
    json j = to_json(phi);
    j["degree"] = phi.degree();
    j["text"] = phi.to_string();
    return j;
}

// ---------------------------------------------------------------------------
// subcommand bodies

void run_cfrac(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const ContFrac cf = expand(in.read(spec));
    json out = to_json(cf);
    json text = json::array();
    std::vector<std::string> lines;
    for (const Poly& f : cf.quotients()) {
        text.push_back(f.to_string());
        lines.push_back(f.to_string());
    }
    out["text"] = std::move(text);
    emit(out, opts, lines);
}

void run_reconstruct(const CommonOpts& opts, const std::vector<std::string>& quotients,
                     const std::string& positional) {
    const FieldSpec spec = field_of(opts);
    std::vector<Poly> q;
    if (!quotients.empty()) {
        for (const auto& text : quotients) q.push_back(Poly::parse(spec, text));
    } else {
        const std::string payload = read_payload(positional, "");
        const ContFrac cf = contfrac_from_json(spec, json::parse(payload));
        q = cf.quotients();
    }
    const RatFunc phi = reconstruct(ContFrac(std::move(q)));
    emit(ratfunc_json_with_text(phi), opts, {phi.to_string()});
}

void run_signature(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const RatFunc phi = in.read(spec);
    const Signature kappa = signature(phi);
    json out{{"kappa", to_json(kappa)}, {"degree", phi.degree()}};
    emit(out, opts, {kappa.to_string()});
}

void run_wronskian(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const Poly w = in.read(spec).wronskian();
    json out{{"wronskian", to_json(w)}, {"text", w.to_string()}};
    emit(out, opts, {w.to_string()});
}

void run_is_unicritical(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const RatFunc phi = in.read(spec);
    const CritReport report = is_unicritical(phi);
    json out = to_json(report);
    out["degree"] = phi.degree();
    std::vector<std::string> lines{
        std::string("unicritical_at: ") +
        (report.unicritical_at ? report.unicritical_at->to_string() : "none")};
    emit(out, opts, lines);
}

void run_detect_form(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const auto form = detect_unicritical_form(in.read(spec));
    json out{{"found", form.has_value()}};
    out["form"] = form ? to_json(*form) : json(nullptr);
    std::vector<std::string> lines;
    if (form) {
        std::string qs;
        for (const Poly& f : form->q) qs += (qs.empty() ? "" : ", ") + f.to_string('w');
        lines.push_back("q: " + qs);
        lines.push_back("a: " + form->a.to_string());
    } else {
        lines.push_back("not of the unicritical form");
    }
    emit(out, opts, lines);
}

void run_build(const CommonOpts& opts, const std::vector<std::string>& q_texts,
               const std::string& a_text, const std::string& positional) {
    const FieldSpec spec = field_of(opts);
    UnicriticalForm u{{}, FieldElem::one(spec)};
    if (!q_texts.empty()) {
        for (const auto& text : q_texts) u.q.push_back(Poly::parse(spec, text));
        if (a_text.empty()) throw ParseError("--a is required with --q");
        if (!a_text.empty() && a_text.front() == '[')
            u.a = elem_from_json(spec, json::parse(a_text));
        else
            u.a = FieldElem::from_integer(spec, std::stoll(a_text));
    } else {
        u = form_from_json(spec, json::parse(read_payload(positional, "")));
    }
    const RatFunc phi = build_from_form(u);
    emit(ratfunc_json_with_text(phi), opts, {phi.to_string()});
}

void run_signatures(const CommonOpts& opts, long long d) {
    const FieldSpec spec = field_of(opts);
    json list = json::array();
    std::vector<std::string> lines;
    for (const Signature& kappa : valid_signatures(d, spec.characteristic())) {
        list.push_back(to_json(kappa));
        lines.push_back(kappa.to_string());
    }
    json out{{"d", d}, {"p", spec.characteristic()}, {"signatures", std::move(list)}};
    emit(out, opts, lines);
}

void run_enumerate(const CommonOpts& opts, long long d, const std::string& kappa_text) {
    const FieldSpec spec = field_of(opts);
    const Signature kappa(parse_int_list(kappa_text));
    const StratumSpec stratum(d, spec.characteristic(), kappa);
    json maps = json::array();
    std::vector<std::string> lines;
    unsigned long long count = 0;
    enumerate_stratum(
        stratum, spec,
        [&](const RatFunc& phi) {
            ++count;
            maps.push_back(ratfunc_json_with_text(phi));
            lines.push_back(phi.to_string());
        },
        opts.limit);
    json out{{"kappa", to_json(kappa)}, {"count", count}, {"maps", std::move(maps)}};
    emit(out, opts, lines);
}

void run_count(const CommonOpts& opts, long long d, const std::string& kappa_text,
               const std::string& q_values) {
    const FieldSpec spec = field_of(opts);
    const auto p = spec.characteristic();
    CountPolynomial poly;
    json out{{"d", d}, {"p", p}};
    if (!kappa_text.empty()) {
        const Signature kappa(parse_int_list(kappa_text));
        poly = stratum_count_poly(StratumSpec(d, p, kappa));
        out["kappa"] = to_json(kappa);
    } else {
        poly = total_count_poly(d, p);
        out["kappa"] = nullptr;
    }
    out["count"] = static_cast<long long>(poly.eval(spec.order()));
    out["q"] = spec.order();
    out["count_poly"] = poly.coeffs();
    out["count_poly_text"] = poly.to_string();

    std::vector<std::string> lines{"q,count"};
    json table = json::array();
    if (!q_values.empty()) {
        for (long long qv : parse_int_list(q_values)) {
            if (qv < 2) throw ParseError("q values must be at least 2");
            const auto value = static_cast<long long>(poly.eval(static_cast<std::uint64_t>(qv)));
            table.push_back(json{{"q", qv}, {"count", value}});
            lines.push_back(std::to_string(qv) + "," + std::to_string(value));
        }
        out["table"] = std::move(table);
    } else {
        lines.push_back(std::to_string(spec.order()) + "," +
                        std::to_string(static_cast<long long>(poly.eval(spec.order()))));
    }
    emit(out, opts, lines);
}

void run_brute_count(const CommonOpts& opts, long long d) {
    const FieldSpec spec = field_of(opts);
    const auto maps = brute_force_unicritical_at_infinity(d, spec, opts.limit);
    json out{{"d", d}, {"q", spec.order()}, {"count", maps.size()}};
    emit(out, opts, {std::to_string(maps.size())});
}

void run_census(const CommonOpts& opts, long long d) {
    const FieldSpec spec = field_of(opts);
    const CountReport report = census(d, spec, true, opts.limit);
    std::vector<std::string> lines{"kappa,count"};
    for (const auto& entry : report.strata)
        lines.push_back(entry.kappa.to_string() + "," + std::to_string(entry.count));
    lines.push_back("total," + std::to_string(report.total));
    lines.push_back("brute_total," + std::to_string(*report.brute_total));
    lines.push_back(std::string("agree,") + (report.agree ? "true" : "false"));
    emit(to_json(report), opts, lines);
}

void run_dim(const CommonOpts& opts, long long d) {
    const FieldSpec spec = field_of(opts);
    const auto p = spec.characteristic();
    const long long dim_inf = dimension_unicritical_at_infinity(d, p);
    // sample points for the divided differences: small prime powers
    std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25};
    qs.resize(std::min<std::size_t>(qs.size(), static_cast<std::size_t>(dim_inf) + 4));
    const long long measured = count_polynomial_degree(d, p, qs);
    json out{{"d", d},
             {"p", p},
             {"dim_U_infinity", dim_inf},
             {"dim_U", dimension_unicritical_locus(d, p)},
             {"count_degree", measured},
             {"match", measured == dim_inf}};
    emit(out, opts,
         {"dim_U_infinity: " + std::to_string(dim_inf),
          "dim_U: " + std::to_string(dimension_unicritical_locus(d, p)),
          "count_degree: " + std::to_string(measured)});
}

void run_classes_dim(const CommonOpts& opts, long long d, long long e) {
    const FieldSpec spec = field_of(opts);
    const auto p = spec.characteristic();
    const long long dim = classes_dimension(d, e, p);
    const CountPolynomial poly = classes_count_poly(d, e, p);
    const long long locus_degree = poly.degree();
    const long long expected_locus = dim + 3; // the group SL_2 has dimension 3
    json out{{"d", d},         {"p", p},
             {"e", e},         {"dim_classes", dim},
             {"locus_count_degree", locus_degree}, {"expected_locus_degree", expected_locus},
             {"match", locus_degree == expected_locus}};
    emit(out, opts, {"dim_classes: " + std::to_string(dim)});
}

void run_normal_form(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const RatFunc psi = normal_form_Y(in.read(spec));
    emit(ratfunc_json_with_text(psi), opts, {psi.to_string()});
}

void run_quadric(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const bool member = quadric_membership_p(in.read(spec));
    emit(json{{"member", member}}, opts, {member ? "true" : "false"});
}

void run_ld_decompose(const CommonOpts& opts, const MapInput& in) {
    const FieldSpec spec = field_of(opts);
    const LdPoint l = ld_decompose(in.read(spec));
    json out = to_json(l);
    out["text"] = json{{"f1", l.f1.to_string('w')},
                       {"f2", l.f2.to_string('w')},
                       {"g1", l.g1.to_string('w')},
                       {"g2", l.g2.to_string('w')}};
    emit(out, opts,
         {"f1: " + l.f1.to_string('w'), "f2: " + l.f2.to_string('w'),
          "g1: " + l.g1.to_string('w'), "g2: " + l.g2.to_string('w')});
}

void run_reduce(const CommonOpts& opts, const std::string& positional,
                const std::string& file) {
    const FieldSpec spec = field_of(opts);
    const LocalRatFunc local =
        local_ratfunc_from_json(spec, json::parse(read_payload(positional, file)));
    const RatFunc reduced = reduce_map(local);
    json out{{"degree", local.degree()}};
    if (reduced.is_constant_infinity()) {
        out["reduced"] = "infinity";
        out["reduced_degree"] = 0;
    } else {
        out["reduced"] = to_json(reduced);
        out["reduced_degree"] = reduced.degree();
    }
    out["text"] = reduced.to_string();
    emit(out, opts, {reduced.to_string()});
}

void run_good_reduction(const CommonOpts& opts, const std::string& positional,
                        const std::string& file) {
    const FieldSpec spec = field_of(opts);
    const LocalRatFunc local =
        local_ratfunc_from_json(spec, json::parse(read_payload(positional, file)));
    const RatFunc reduced = reduce_map(local);
    const bool good = has_good_reduction(local);
    json out{{"good_reduction", good},
             {"degree", local.degree()},
             {"reduced_degree", reduced.is_constant_infinity() ? 0 : reduced.degree()}};
    emit(out, opts, {good ? "true" : "false"});
}

void run_verify_congruence(const CommonOpts& opts, const std::string& positional,
                           const std::string& file) {
    const FieldSpec spec = field_of(opts);
    const LocalRatFunc local =
        local_ratfunc_from_json(spec, json::parse(read_payload(positional, file)));
    const CongruenceReport report = verify_congruence(local);
    json out = to_json(report);
    out["p"] = spec.characteristic();
    emit(out, opts,
         {"case: " + to_string(report.kase),
          std::string("applies: ") + (report.applies ? "true" : "false")});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for unicritical rational maps in characteristic p"};
    app.require_subcommand(1);

    // option storage shared across subcommands; CLI11 fills only the one used
    struct {
        CommonOpts common;
        MapInput map;
        std::vector<std::string> quotients;
        std::vector<std::string> q_texts;
        std::string a_text;
        std::string positional;
        std::string input_file;
        std::string kappa;
        std::string q_values;
        long long d = 2;
        long long e = 2;
    } o;

    std::function<void()> action;
    auto make = [&](const std::string& name, const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_common(cmd, o.common);
        return cmd;
    };

    {
        CLI::App* c = make("cfrac", "continued fraction expansion of a map");
        add_map_input(c, o.map);
        c->callback([&] { run_cfrac(o.common, o.map); });
    }
    {
        CLI::App* c = make("reconstruct", "rebuild a map from partial quotients");
        c->add_option("contfrac", o.positional, "JSON {\"quotients\": [...]}");
        c->add_option("--f", o.quotients, "partial quotient polynomial text (repeatable)");
        c->callback([&] { run_reconstruct(o.common, o.quotients, o.positional); });
    }
    {
        CLI::App* c = make("signature", "signature of a map");
        add_map_input(c, o.map);
        c->callback([&] { run_signature(o.common, o.map); });
    }
    {
        CLI::App* c = make("wronskian", "Wronskian numerator f'g - fg'");
        add_map_input(c, o.map);
        c->callback([&] { run_wronskian(o.common, o.map); });
    }
    {
        CLI::App* c = make("is-unicritical", "critical point report");
        add_map_input(c, o.map);
        c->callback([&] { run_is_unicritical(o.common, o.map); });
    }
    {
        CLI::App* c = make("detect-form", "detect the unicritical continued fraction form");
        add_map_input(c, o.map);
        c->callback([&] { run_detect_form(o.common, o.map); });
    }
    {
        CLI::App* c = make("build", "build a map from the form (q_0, ..., q_n, a)");
        c->add_option("form", o.positional, "JSON {\"q\": [...], \"a\": ...}");
        c->add_option("--q", o.q_texts, "deflated quotient in w (repeatable)");
        c->add_option("--a", o.a_text, "nonzero slope (integer or JSON array)");
        c->callback([&] { run_build(o.common, o.q_texts, o.a_text, o.positional); });
    }
    {
        CLI::App* c = make("signatures", "all valid signatures for a degree");
        c->add_option("--degree", o.d, "map degree")->required();
        c->callback([&] { run_signatures(o.common, o.d); });
    }
    {
        CLI::App* c = make("enumerate", "list every map of one stratum");
        c->add_option("--degree", o.d, "map degree")->required();
        c->add_option("--kappa", o.kappa, "signature, e.g. 0,2")->required();
        c->callback([&] { run_enumerate(o.common, o.d, o.kappa); });
    }
    {
        CLI::App* c = make("count", "closed-form stratum/total counts");
        c->add_option("--degree", o.d, "map degree")->required();
        c->add_option("--kappa", o.kappa, "signature (omit for the total)");
        c->add_option("--q-values", o.q_values, "extra sample sizes for a count table");
        c->callback([&] { run_count(o.common, o.d, o.kappa, o.q_values); });
    }
    {
        CLI::App* c = make("brute-count", "exhaustive oracle count");
        c->add_option("--degree", o.d, "map degree")->required();
        c->callback([&] { run_brute_count(o.common, o.d); });
    }
    {
        CLI::App* c = make("census", "closed form vs enumeration vs oracle");
        c->add_option("--degree", o.d, "map degree")->required();
        c->callback([&] { run_census(o.common, o.d); });
    }
    {
        CLI::App* c = make("dim", "dimension formulas and the count-degree check");
        c->add_option("--degree", o.d, "map degree")->required();
        c->callback([&] { run_dim(o.common, o.d); });
    }
    {
        CLI::App* c = make("classes-dim", "dimension of postcomposition classes");
        c->add_option("--degree", o.d, "map degree")->required();
        c->add_option("--ram-index", o.e, "ramification index e")->required();
        c->callback([&] { run_classes_dim(o.common, o.d, o.e); });
    }
    {
        CLI::App* c = make("normal-form", "conjugate into the Y normal form");
        add_map_input(c, o.map);
        c->callback([&] { run_normal_form(o.common, o.map); });
    }
    {
        CLI::App* c = make("quadric-p", "degree-p quadric membership");
        add_map_input(c, o.map);
        c->callback([&] { run_quadric(o.common, o.map); });
    }
    {
        CLI::App* c = make("ld-decompose", "split into f1, f2, g1, g2");
        add_map_input(c, o.map);
        c->callback([&] { run_ld_decompose(o.common, o.map); });
    }
    {
        CLI::App* c = make("reduce", "reduce a Laurent-coefficient map");
        c->add_option("local", o.positional, "JSON local map");
        c->add_option("--input", o.input_file, "read the JSON payload from a file ('-' = stdin)");
        c->callback([&] { run_reduce(o.common, o.positional, o.input_file); });
    }
    {
        CLI::App* c = make("good-reduction", "test for good reduction");
        c->add_option("local", o.positional, "JSON local map");
        c->add_option("--input", o.input_file, "read the JSON payload from a file ('-' = stdin)");
        c->callback([&] { run_good_reduction(o.common, o.positional, o.input_file); });
    }
    {
        CLI::App* c = make("verify-congruence", "residue-level congruence check");
        c->add_option("local", o.positional, "JSON local map");
        c->add_option("--input", o.input_file, "read the JSON payload from a file ('-' = stdin)");
        c->callback([&] { run_verify_congruence(o.common, o.positional, o.input_file); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
