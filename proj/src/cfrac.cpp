#include "unicrit/cfrac.hpp"

#include <numeric>
#include <sstream>

namespace unicrit {

ContFrac::ContFrac(std::vector<Poly> quotients) : q_(std::move(quotients)) {
    if (q_.empty()) throw DomainError("continued fraction needs at least one quotient");
    for (std::size_t i = 1; i < q_.size(); ++i) {
        if (q_[i].spec() != q_[0].spec())
            throw DomainError("quotients over different fields");
        if (q_[i].is_constant())
            throw DomainError("constant interior quotient in continued fraction");
    }
}

Signature::Signature(std::vector<long long> entries) : k_(std::move(entries)) {
    if (k_.empty()) throw DomainError("empty signature");
    if (k_[0] < 0) throw DomainError("signature entries must be nonnegative");
    for (std::size_t i = 1; i < k_.size(); ++i)
        if (k_[i] < 1) throw DomainError("signature entries after the first must be >= 1");
}

long long Signature::sum() const {
    return std::accumulate(k_.begin(), k_.end(), 0ll);
}

std::string Signature::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (i) os << ',';
        os << k_[i];
    }
    os << ')';
    return os.str();
}

ContFrac expand(const RatFunc& phi) {
    if (phi.is_constant_infinity())
        throw DomainError("the constant infinity map has no continued fraction expansion");
    std::vector<Poly> quotients;
    Poly f = phi.num();
    Poly g = phi.den();
    while (!g.is_zero()) {
        auto [q, r] = divmod(f, g);
        quotients.push_back(std::move(q));
        f = std::move(g);
        g = std::move(r);
    }
    return ContFrac(std::move(quotients));
}

RatFunc reconstruct(const ContFrac& c) {
    const auto& q = c.quotients();
    const FieldSpec& spec = c.spec();

    // Fold from the innermost quotient: value <- f_i + 1/value.
    Poly num = q.back();
    Poly den = Poly::one(spec);
    for (std::size_t i = q.size() - 1; i-- > 0;) {
        std::swap(num, den); // reciprocal
        num = num + q[i] * den;
    }
    RatFunc phi(std::move(num), std::move(den));

    long long expected = q.front().degree().plus();
    for (std::size_t i = 1; i < q.size(); ++i)
        expected += q[i].degree().finite_value();
    if (phi.degree() != expected)
        throw Error("internal: continued fraction degree formula violated");
    return phi;
}

Signature signature(const ContFrac& c) {
    std::vector<long long> k;
    k.reserve(c.size());
    k.push_back(c.quotients().front().degree().plus());
    for (std::size_t i = 1; i < c.size(); ++i)
        k.push_back(c.quotients()[i].degree().finite_value());
    return Signature(std::move(k));
}

Signature signature(const RatFunc& phi) { return signature(expand(phi)); }

std::optional<UnicriticalForm> detect_unicritical_form(const RatFunc& phi) {
    if (phi.is_constant_infinity()) return std::nullopt;
    const ContFrac cf = expand(phi);
    const auto& f = cf.quotients();
    const std::size_t n = f.size() - 1;

    std::vector<Poly> q;
    q.reserve(f.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto [insep, sep] = insep_decompose(f[i]);
        if (!sep.is_zero()) return std::nullopt;
        q.push_back(std::move(insep));
    }
    // The last quotient must be q_n(z^p) + a z: its separable part is
    // exactly a z (the constant term is p-divisible, so degree 1 suffices).
    auto [insep, sep] = insep_decompose(f[n]);
    if (sep.degree() != Degree(1)) return std::nullopt;
    q.push_back(std::move(insep));
    return UnicriticalForm{std::move(q), sep.coeff(1)};
}

RatFunc build_from_form(const UnicriticalForm& u) {
    if (u.q.empty()) throw DomainError("unicritical form needs at least one quotient");
    if (u.a.is_zero()) throw DomainError("unicritical form requires a nonzero slope");
    const FieldSpec& spec = u.a.spec();
    for (const auto& poly : u.q)
        if (poly.spec() != spec) throw DomainError("form entries over different fields");

    const std::size_t n = u.q.size() - 1;
    std::vector<Poly> quotients;
    quotients.reserve(u.q.size());
    for (std::size_t i = 0; i < n; ++i) {
        Poly f = inflate(u.q[i], 1);
        if (i >= 1 && f.is_constant())
            throw DomainError("interior quotient of the unicritical form must be nonconstant");
        quotients.push_back(std::move(f));
    }
    quotients.push_back(inflate(u.q[n], 1) + Poly::monomial(u.a, 1));
    return reconstruct(ContFrac(std::move(quotients)));
}

} // namespace unicrit
