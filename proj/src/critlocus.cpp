#include "unicrit/critlocus.hpp"

namespace unicrit {

namespace {

constexpr std::uint64_t kRootScanLimit = 1ull << 16;

std::vector<FieldElem> scale_first_nonzero(std::vector<FieldElem> v) {
    for (const auto& e : v) {
        if (!e.is_zero()) {
            const FieldElem inv = e.inverse();
            for (auto& x : v) x *= inv;
            break;
        }
    }
    return v;
}

} // namespace

std::vector<FieldElem> omega(const RatFunc& phi) {
    const Poly w = phi.wronskian();
    if (w.is_zero()) throw DomainError("omega is undefined on inseparable maps");
    const long long d = phi.degree();
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(2 * d - 1));
    for (long long i = 2 * d - 2; i >= 0; --i) out.push_back(w.coeff(static_cast<std::size_t>(i)));
    return scale_first_nonzero(std::move(out));
}

std::vector<FieldElem> theta(const ProjPoint& c, long long d) {
    if (d < 2) throw DomainError("theta requires degree >= 2");
    const FieldSpec& spec = c.spec();
    const auto e = static_cast<std::uint64_t>(2 * d - 2);
    Poly power(spec);
    if (c.is_infinity()) {
        // (tz - s) with (s:t) = (1:0) is the constant -1.
        power = Poly::constant((-FieldElem::one(spec)).pow(e));
    } else {
        power = Poly(spec, {-c.value(), FieldElem::one(spec)}).pow(e);
    }
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(2 * d - 1));
    for (long long i = 2 * d - 2; i >= 0; --i)
        out.push_back(power.coeff(static_cast<std::size_t>(i)));
    return scale_first_nonzero(std::move(out));
}

CritReport is_unicritical(const RatFunc& phi) {
    const FieldSpec& spec = phi.spec();
    const std::uint64_t p = spec.characteristic();
    const long long d = phi.degree();
    const Poly w = phi.wronskian();

    CritReport report;
    report.separable = !w.is_zero();

    if (w.is_zero()) {
        // Inseparable (or constant): every point of P^1 is critical.
        report.infinity_critical = true;
        return report;
    }

    if (spec.order() <= kRootScanLimit)
        report.finite_critical = finite_crit_in_field(phi, spec);

    const long long wdeg = w.degree().finite_value();
    const long long full = 2 * d - 2;
    report.infinity_critical = wdeg < full;

    if (w.is_constant()) {
        // No finite critical point. For d >= 2 infinity is the unique
        // critical point; degree <= 1 maps have no critical point at all.
        if (d >= 2) report.unicritical_at = ProjPoint::infinity(spec);
        return report;
    }
    if (wdeg < full) return report; // infinity and at least one finite point
    // deg W = 2d-2 and d >= 2: unicritical iff W = a (z - c)^(2d-2).
    // Write 2d-2 = p^s u with p not dividing u; then W must de-inflate s
    // times to V(y) = a (y - gamma)^u, and gamma is read off the coefficient
    // of y^(u-1) as -V_{u-1} / (u a). Frobenius inversion recovers c.
    long long u = full;
    unsigned s = 0;
    while (u % static_cast<long long>(p) == 0) {
        u /= static_cast<long long>(p);
        ++s;
    }
    Poly v = w;
    for (unsigned i = 0; i < s; ++i) {
        auto [insep, sep] = insep_decompose(v);
        if (!sep.is_zero()) return report;
        v = std::move(insep);
    }
    const FieldElem a = v.leading_coeff();
    const FieldElem u_elem = FieldElem::from_integer(spec, u);
    const FieldElem gamma = -(v.coeff(static_cast<std::size_t>(u - 1)) / (u_elem * a));
    const FieldElem c = gamma.inverse_frobenius(s);

    const Poly expected =
        Poly(spec, {-c, FieldElem::one(spec)}).pow(static_cast<std::uint64_t>(full)) * a;
    if (expected == w) report.unicritical_at = ProjPoint::finite(c);
    return report;
}

std::vector<std::pair<FieldElem, long long>> finite_crit_in_field(const RatFunc& phi,
                                                                  const FieldSpec& E,
                                                                  std::uint64_t limit) {
    if (E != phi.spec())
        throw DomainError("root scan field must match the coefficient field");
    if (E.order() > limit) throw LimitError("root scan field above the configured limit");
    const Poly w = phi.wronskian();
    std::vector<std::pair<FieldElem, long long>> out;
    if (w.is_zero() || w.is_constant()) return out;
    for (const FieldElem& x : enumerate_field(E, limit)) {
        if (!w(x).is_zero()) continue;
        const Poly lin(E, {-x, FieldElem::one(E)});
        long long mult = 0;
        Poly rest = w;
        while (true) {
            auto [q, r] = divmod(rest, lin);
            if (!r.is_zero()) break;
            ++mult;
            rest = std::move(q);
        }
        out.emplace_back(x, mult);
    }
    return out;
}

long long ram_index(const RatFunc& phi, const ProjPoint& c) {
    if (phi.spec() != c.spec()) throw DomainError("point from a different field");
    if (phi.is_constant() || phi.is_constant_infinity())
        throw DomainError("ramification index of a constant map is undefined");
    const FieldSpec& spec = phi.spec();

    RatFunc work = phi;
    ProjPoint at = c;
    if (at.is_infinity()) {
        work = mobius_pre(work, MobiusMap::inversion(spec));
        at = ProjPoint::finite(FieldElem::zero(spec));
    }
    ProjPoint value = work.eval(at);
    if (value.is_infinity()) {
        work = mobius_post(MobiusMap::inversion(spec), work);
        value = ProjPoint::finite(FieldElem::zero(spec));
    }
    // Now c and phi(c) are finite, so g(c) != 0 and the order of vanishing
    // of phi - phi(c) at c is the multiplicity of c in f - phi(c) g.
    const Poly shifted = work.num() - work.den() * value.value();
    const Poly lin(spec, {-at.value(), FieldElem::one(spec)});
    long long e = 0;
    Poly rest = shifted;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, lin);
        if (!r.is_zero()) break;
        ++e;
        rest = std::move(q);
    }
    if (e < 1) throw Error("internal: phi - phi(c) does not vanish at c");
    return e;
}

} // namespace unicrit
