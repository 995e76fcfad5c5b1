#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unicrit/field.hpp"

namespace unicrit {

/// Degree of a univariate polynomial: a finite integer, or negative infinity
/// for the zero polynomial. Negative infinity compares below every finite
/// value and absorbs under addition.
class Degree {
public:
    static Degree neg_infinity() { return Degree(); }
    Degree(long long v) : finite_(true), v_(v) {} // NOLINT: implicit by design

    bool is_neg_infinity() const { return !finite_; }
    long long finite_value() const {
        if (!finite_) throw DomainError("degree is negative infinity");
        return v_;
    }
    /// max(deg, 0); negative infinity clamps to 0.
    long long plus() const { return finite_ && v_ > 0 ? v_ : 0; }

    Degree operator+(const Degree& o) const {
        if (!finite_ || !o.finite_) return neg_infinity();
        return Degree(v_ + o.v_);
    }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
    friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
    friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

    std::string to_string() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    Degree() : finite_(false), v_(0) {}
    bool finite_;
    long long v_;
};

/// Univariate polynomial over a fixed FieldSpec. Coefficients are stored
/// constant-first with no trailing zeros; the zero polynomial is the empty
/// sequence.
class Poly {
public:
    explicit Poly(const FieldSpec& spec) : spec_(spec) {}
    Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldSpec& spec) { return Poly(spec); }
    static Poly one(const FieldSpec& spec) { return constant(FieldElem::one(spec)); }
    static Poly constant(const FieldElem& c);
    static Poly monomial(const FieldElem& c, std::size_t exp);
    static Poly variable(const FieldSpec& spec) {
        return monomial(FieldElem::one(spec), 1);
    }
    /// Coefficients given as integers, reduced into the prime subfield.
    static Poly from_integers(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs);

    /// Parses text like "z^3 + 2*z + 1". Accepts any single letter as the
    /// variable; integer coefficients land in the prime subfield.
    static Poly parse(const FieldSpec& spec, std::string_view text);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Degree degree() const {
        return c_.empty() ? Degree::neg_infinity()
                          : Degree(static_cast<long long>(c_.size()) - 1);
    }
    FieldElem coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : FieldElem::zero(spec_);
    }
    FieldElem leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly pow(std::uint64_t e) const;
    Poly monic() const;

    FieldElem operator()(const FieldElem& x) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(char var = 'z') const;

private:
    FieldSpec spec_;
    std::vector<FieldElem> c_;
};

/// Quotient and remainder with a = b*q + r and deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(a, 0) is the monic multiple of a.
Poly gcd(const Poly& a, const Poly& b);

/// Formal derivative.
Poly derivative(const Poly& a);

/// Splits a(z) = a1(z^p) + a2(z), where a2 collects exactly the monomials
/// whose exponent is not divisible by p. a1 is returned in the deflated
/// variable w = z^p.
std::pair<Poly, Poly> insep_decompose(const Poly& a);

/// a(z^(p^s)).
Poly inflate(const Poly& a, unsigned s);

/// Determinant of the 2d x 2d Sylvester matrix of f and g padded to formal
/// degree d. Zero exactly when f and g share a projective root (including the
/// root at infinity when both formal leading coefficients vanish).
FieldElem resultant_dd(const Poly& f, const Poly& g, long long d);

/// Horner evaluation; same as a(x).
FieldElem poly_eval(const Poly& a, const FieldElem& x);

} // namespace unicrit
