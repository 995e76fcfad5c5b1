#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unicrit/poly.hpp"

namespace unicrit {

/// A point of the projective line P^1(F_{p^k}): a field element or infinity.
class ProjPoint {
public:
    static ProjPoint infinity(const FieldSpec& spec) { return ProjPoint(spec); }
    static ProjPoint finite(FieldElem v) { return ProjPoint(std::move(v)); }

    const FieldSpec& spec() const { return spec_; }
    bool is_infinity() const { return !value_.has_value(); }
    const FieldElem& value() const {
        if (is_infinity()) throw DomainError("the point at infinity has no field value");
        return *value_;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.spec_ != b.spec_) return false;
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return *a.value_ == *b.value_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    std::string to_string() const { return is_infinity() ? "infinity" : value_->to_string(); }

private:
    explicit ProjPoint(const FieldSpec& spec) : spec_(spec) {}
    explicit ProjPoint(FieldElem v) : spec_(v.spec()), value_(std::move(v)) {}

    FieldSpec spec_;
    std::optional<FieldElem> value_;
};

/// Invertible fractional linear transformation z -> (az + b)/(cz + d),
/// stored as a 2x2 matrix with nonzero determinant (projective: scalars do
/// not matter).
class MobiusMap {
public:
    MobiusMap(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

    static MobiusMap identity(const FieldSpec& spec);
    static MobiusMap inversion(const FieldSpec& spec); ///< z -> 1/z
    static MobiusMap translation(const FieldElem& c);  ///< z -> z + c
    /// The unique map sending (infinity, 0, 1) to (p0, p1, p2); the targets
    /// must be pairwise distinct.
    static MobiusMap sending_reference_triple_to(const ProjPoint& p0, const ProjPoint& p1,
                                                 const ProjPoint& p2);

    const FieldSpec& spec() const { return a_.spec(); }
    const FieldElem& a() const { return a_; }
    const FieldElem& b() const { return b_; }
    const FieldElem& c() const { return c_; }
    const FieldElem& d() const { return d_; }

    MobiusMap inverse() const;
    /// Composition (*this) after o.
    MobiusMap compose(const MobiusMap& o) const;
    ProjPoint apply(const ProjPoint& x) const;

    std::string to_string() const;

private:
    FieldElem a_, b_, c_, d_;
};

/// A rational function f/g of exact degree d = max(deg f, deg g), stored as
/// a coprime pair under canonical scaling: the leading coefficient of g is 1
/// when g != 0, otherwise the leading coefficient of f is 1 (the constant-
/// infinity map). Degenerate pairs cannot occur: cancelling the gcd forces a
/// nonzero (d,d)-resultant.
class RatFunc {
public:
    /// Cancels common factors and applies the canonical scaling.
    RatFunc(Poly num, Poly den);

    static RatFunc from_poly(Poly f) {
        Poly one = Poly::one(f.spec());
        return RatFunc(std::move(f), std::move(one));
    }
    static RatFunc identity(const FieldSpec& spec) {
        return RatFunc(Poly::variable(spec), Poly::one(spec));
    }
    static RatFunc constant_infinity(const FieldSpec& spec) {
        return RatFunc(Poly::one(spec), Poly::zero(spec));
    }

    const FieldSpec& spec() const { return num_.spec(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    long long degree() const { return d_; }
    bool is_polynomial() const { return den_ == Poly::one(spec()); }
    bool is_constant() const { return d_ == 0; }
    bool is_constant_infinity() const { return den_.is_zero(); }

    /// Homogeneous coefficient sequence (a_d, ..., a_0, b_d, ..., b_0) of
    /// length 2d+2 under the canonical scaling.
    std::vector<FieldElem> proj_coords() const;

    /// W = f'g - fg'; identically zero exactly for inseparable maps.
    Poly wronskian() const;

    /// True iff every monomial exponent of f and g is divisible by p.
    bool is_inseparable() const;
    /// The witness psi with phi(z) = psi(z^p), when phi is inseparable.
    std::optional<RatFunc> inseparable_witness() const;

    /// Projective evaluation; poles map to infinity.
    ProjPoint eval(const ProjPoint& x) const;
    ProjPoint eval(const FieldElem& x) const { return eval(ProjPoint::finite(x)); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(char var = 'z') const;

private:
    Poly num_, den_;
    long long d_;
};

/// phi compose sigma (precomposition). Degree is preserved.
RatFunc mobius_pre(const RatFunc& phi, const MobiusMap& sigma);

/// sigma compose phi (postcomposition). Degree is preserved.
RatFunc mobius_post(const MobiusMap& sigma, const RatFunc& phi);

/// sigma^{-1} compose phi compose sigma.
RatFunc conjugate(const MobiusMap& sigma, const RatFunc& phi);

/// All q^3 - q elements of PGL_2(F_q), one canonical matrix each.
std::vector<MobiusMap> enumerate_pgl2(const FieldSpec& spec,
                                      std::uint64_t limit = kDefaultFieldLimit);

} // namespace unicrit
