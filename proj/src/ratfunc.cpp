#include "unicrit/ratfunc.hpp"

#include <sstream>

namespace unicrit {

MobiusMap::MobiusMap(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.spec() != b_.spec() || a_.spec() != c_.spec() || a_.spec() != d_.spec())
        throw DomainError("Mobius coefficients from different fields");
    if ((a_ * d_ - b_ * c_).is_zero())
        throw DomainError("Mobius map must have nonzero determinant");
}

MobiusMap MobiusMap::identity(const FieldSpec& spec) {
    return MobiusMap(FieldElem::one(spec), FieldElem::zero(spec), FieldElem::zero(spec),
                     FieldElem::one(spec));
}

MobiusMap MobiusMap::inversion(const FieldSpec& spec) {
    return MobiusMap(FieldElem::zero(spec), FieldElem::one(spec), FieldElem::one(spec),
                     FieldElem::zero(spec));
}

MobiusMap MobiusMap::translation(const FieldElem& c) {
    const FieldSpec& spec = c.spec();
    return MobiusMap(FieldElem::one(spec), c, FieldElem::zero(spec), FieldElem::one(spec));
}

MobiusMap MobiusMap::sending_reference_triple_to(const ProjPoint& p0, const ProjPoint& p1,
                                                 const ProjPoint& p2) {
    const FieldSpec& spec = p0.spec();
    if (p0 == p1 || p0 == p2 || p1 == p2)
        throw DomainError("target triple must be pairwise distinct");
    const FieldElem zero = FieldElem::zero(spec);
    const FieldElem one = FieldElem::one(spec);

    // mu sends (p0, p1, p2) to (infinity, 0, 1); the result is mu^{-1}.
    MobiusMap mu = [&]() {
        if (p0.is_infinity()) {
            // (z - p1) / (p2 - p1)
            return MobiusMap(one, -p1.value(), zero, p2.value() - p1.value());
        }
        if (p1.is_infinity()) {
            // (p2 - p0) / (z - p0)
            return MobiusMap(zero, p2.value() - p0.value(), one, -p0.value());
        }
        if (p2.is_infinity()) {
            // (z - p1) / (z - p0)
            return MobiusMap(one, -p1.value(), one, -p0.value());
        }
        // (z - p1)(p2 - p0) / ((z - p0)(p2 - p1))
        const FieldElem u = p2.value() - p0.value();
        const FieldElem v = p2.value() - p1.value();
        return MobiusMap(u, -(p1.value() * u), v, -(p0.value() * v));
    }();
    return mu.inverse();
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                     c_ * o.b_ + d_ * o.d_);
}

ProjPoint MobiusMap::apply(const ProjPoint& x) const {
    if (x.spec() != spec()) throw DomainError("point from a different field");
    if (x.is_infinity()) {
        if (c_.is_zero()) return ProjPoint::infinity(spec());
        return ProjPoint::finite(a_ / c_);
    }
    const FieldElem denom = c_ * x.value() + d_;
    if (denom.is_zero()) return ProjPoint::infinity(spec());
    return ProjPoint::finite((a_ * x.value() + b_) / denom);
}

std::string MobiusMap::to_string() const {
    std::ostringstream os;
    os << '(' << a_.to_string() << "*z + " << b_.to_string() << ")/(" << c_.to_string()
       << "*z + " << d_.to_string() << ')';
    return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)), d_(0) {
    if (num_.spec() != den_.spec())
        throw DomainError("numerator and denominator over different fields");
    if (num_.is_zero() && den_.is_zero())
        throw DomainError("0/0 is not a rational function");
    if (num_.is_zero()) {
        den_ = Poly::one(den_.spec()); // the constant zero map
    } else if (den_.is_zero()) {
        num_ = Poly::one(num_.spec()); // the constant infinity map
    } else {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    const FieldElem unit = den_.is_zero() ? num_.leading_coeff() : den_.leading_coeff();
    if (!unit.is_one()) {
        const FieldElem inv = unit.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    d_ = std::max(num_.degree().plus(), den_.degree().plus());
}

std::vector<FieldElem> RatFunc::proj_coords() const {
    std::vector<FieldElem> out;
    out.reserve(2 * static_cast<std::size_t>(d_) + 2);
    for (long long i = d_; i >= 0; --i) out.push_back(num_.coeff(static_cast<std::size_t>(i)));
    for (long long i = d_; i >= 0; --i) out.push_back(den_.coeff(static_cast<std::size_t>(i)));
    return out;
}

Poly RatFunc::wronskian() const { return derivative(num_) * den_ - num_ * derivative(den_); }

bool RatFunc::is_inseparable() const {
    const std::uint64_t p = spec().characteristic();
    auto pure = [&](const Poly& f) {
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            if (i % p != 0 && !f.coeffs()[i].is_zero()) return false;
        return true;
    };
    return pure(num_) && pure(den_);
}

std::optional<RatFunc> RatFunc::inseparable_witness() const {
    if (!is_inseparable()) return std::nullopt;
    auto deflate = [&](const Poly& f) { return insep_decompose(f).first; };
    return RatFunc(deflate(num_), deflate(den_));
}

ProjPoint RatFunc::eval(const ProjPoint& x) const {
    if (x.spec() != spec()) throw DomainError("point from a different field");
    if (den_.is_zero()) return ProjPoint::infinity(spec());
    if (x.is_infinity()) {
        const Degree dn = num_.degree(), dd = den_.degree();
        if (dn > dd) return ProjPoint::infinity(spec());
        if (dn < dd) return ProjPoint::finite(FieldElem::zero(spec()));
        return ProjPoint::finite(num_.leading_coeff() / den_.leading_coeff());
    }
    const FieldElem g = den_(x.value());
    if (g.is_zero()) return ProjPoint::infinity(spec());
    return ProjPoint::finite(num_(x.value()) / g);
}

std::string RatFunc::to_string(char var) const {
    if (is_constant_infinity()) return "infinity";
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

// Sum_i c_i (az+b)^i (cz+d)^(n-i): the numerator (or denominator) of a
// precomposition, homogenized to formal degree n.
Poly compose_homogeneous(const Poly& f, long long n, const Poly& lin_num, const Poly& lin_den) {
    const FieldSpec& spec = f.spec();
    Poly acc(spec);
    for (long long i = 0; i <= n; ++i) {
        const FieldElem c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        Poly term = lin_num.pow(static_cast<std::uint64_t>(i)) *
                    lin_den.pow(static_cast<std::uint64_t>(n - i));
        acc = acc + term * c;
    }
    return acc;
}

} // namespace

RatFunc mobius_pre(const RatFunc& phi, const MobiusMap& sigma) {
    if (phi.spec() != sigma.spec()) throw DomainError("map and Mobius over different fields");
    const FieldSpec& spec = phi.spec();
    const Poly lin_num = Poly(spec, {sigma.b(), sigma.a()});
    const Poly lin_den = Poly(spec, {sigma.d(), sigma.c()});
    const long long d = phi.degree();
    return RatFunc(compose_homogeneous(phi.num(), d, lin_num, lin_den),
                   compose_homogeneous(phi.den(), d, lin_num, lin_den));
}

RatFunc mobius_post(const MobiusMap& sigma, const RatFunc& phi) {
    if (phi.spec() != sigma.spec()) throw DomainError("map and Mobius over different fields");
    return RatFunc(phi.num() * sigma.a() + phi.den() * sigma.b(),
                   phi.num() * sigma.c() + phi.den() * sigma.d());
}

RatFunc conjugate(const MobiusMap& sigma, const RatFunc& phi) {
    return mobius_post(sigma.inverse(), mobius_pre(phi, sigma));
}

std::vector<MobiusMap> enumerate_pgl2(const FieldSpec& spec, std::uint64_t limit) {
    const std::uint64_t q = spec.order();
    if (q > limit || q * q > limit || q * q * q > limit)
        throw LimitError("PGL_2 enumeration above the configured limit");
    std::vector<FieldElem> elems = enumerate_field(spec, limit);
    const FieldElem zero = FieldElem::zero(spec);
    const FieldElem one = FieldElem::one(spec);

    std::vector<MobiusMap> out;
    out.reserve(static_cast<std::size_t>(q * q * q - q));
    // Canonical representatives: first nonzero entry of (a, b, c, d) is 1.
    for (unsigned lead = 0; lead < 4; ++lead) {
        std::uint64_t tail_count = 1;
        for (unsigned i = lead + 1; i < 4; ++i) tail_count *= q;
        for (std::uint64_t t = 0; t < tail_count; ++t) {
            std::vector<FieldElem> entry(lead, zero);
            entry.push_back(one);
            std::uint64_t rest = t;
            for (unsigned i = lead + 1; i < 4; ++i) {
                entry.push_back(elems[rest % q]);
                rest /= q;
            }
            const FieldElem det = entry[0] * entry[3] - entry[1] * entry[2];
            if (det.is_zero()) continue;
            out.emplace_back(entry[0], entry[1], entry[2], entry[3]);
        }
    }
    return out;
}

} // namespace unicrit
