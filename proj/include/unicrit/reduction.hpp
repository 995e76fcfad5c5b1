#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unicrit/critlocus.hpp"
#include "unicrit/ratfunc.hpp"

namespace unicrit {

inline constexpr long long kDefaultLaurentPrecision = 16;

/// A truncated Laurent series over the residue field F_{p^k}: the scalar is
/// known modulo t^known_upto. Exact scalars (no truncation anywhere) keep
/// full information; every operation propagates precision pessimistically,
/// and any query that the stored window cannot answer raises PrecisionError
/// instead of guessing.
class LaurentScalar {
public:
    /// The exact zero.
    static LaurentScalar zero(const FieldSpec& residue);
    /// The exact Laurent polynomial t^val * (c0 + c1 t + ...).
    static LaurentScalar exact(const FieldSpec& residue, long long val,
                               std::vector<FieldElem> coeffs);
    static LaurentScalar from_residue(const FieldElem& c);
    static LaurentScalar t_power(const FieldSpec& residue, long long m);

    /// Parses "t^v*(c0 + c1*t + ...)", a bare polynomial in t, or "0".
    static LaurentScalar parse(const FieldSpec& residue, std::string_view text);

    const FieldSpec& residue_spec() const { return spec_; }

    bool is_exact() const;
    bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }
    /// No nonzero coefficient inside the tracked window.
    bool is_zero_at_precision() const { return coeffs_.empty(); }

    /// Valuation of a scalar that is visibly nonzero. Raises PrecisionError
    /// when the scalar is indistinguishable from zero, DomainError on the
    /// exact zero.
    long long valuation() const;
    /// The scalar is determined modulo t^known_upto().
    long long known_upto() const;
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    LaurentScalar operator-() const;
    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar operator/(const LaurentScalar& o) const;

    /// Multiplicative inverse, with `rel_terms` tracked terms when the input
    /// is not an exact monomial.
    LaurentScalar inverse(long long rel_terms = kDefaultLaurentPrecision) const;

    /// Shift by t^m (exact in every case).
    LaurentScalar shifted(long long m) const;
    /// Forgets information beyond t^bound.
    LaurentScalar truncated(long long bound) const;

    /// Image in the residue field; requires the t^0 coefficient to be
    /// determined.
    FieldElem residue() const;

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    explicit LaurentScalar(FieldSpec spec) : spec_(std::move(spec)) {}
    void canon();

    FieldSpec spec_;
    long long val_ = 0;              // valuation; meaningful iff coeffs_ nonempty
    std::vector<FieldElem> coeffs_;  // c[i] multiplies t^(val_+i); c[0] != 0
    long long known_ = 0;            // determined mod t^known_; kExactKnown = exact

    static constexpr long long kExactKnown = (1ll << 62);
};

/// Polynomial in z with LaurentScalar coefficients, constant-first.
class LaurentPoly {
public:
    explicit LaurentPoly(const FieldSpec& residue) : spec_(residue) {}
    LaurentPoly(const FieldSpec& residue, std::vector<LaurentScalar> coeffs);

    /// Exact lift of a residue-field polynomial.
    static LaurentPoly from_poly(const Poly& f);

    const FieldSpec& residue_spec() const { return spec_; }
    const std::vector<LaurentScalar>& coeffs() const { return c_; }
    LaurentScalar coeff(std::size_t i) const;
    bool is_exact_zero() const { return c_.empty(); }

    /// z-degree: -1 for the exact zero polynomial. Raises PrecisionError if
    /// the top surviving coefficient is indistinguishable from zero.
    long long degree() const;

    LaurentPoly shifted(long long m) const; ///< multiply every coefficient by t^m

    /// Coefficientwise image in the residue field.
    Poly residue() const;

    std::string to_string(char var = 'z') const;

private:
    FieldSpec spec_;
    std::vector<LaurentScalar> c_;
};

/// A rational map over the Laurent field with a normalized model: all
/// coefficient valuations are >= 0 and some coefficient is a unit. Carries
/// the (d,d)-resultant of the model as a coprimality certificate.
class LocalRatFunc {
public:
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    long long degree() const { return d_; }
    const LaurentScalar& resultant() const { return res_; }

private:
    LocalRatFunc(LaurentPoly num, LaurentPoly den, long long d, LaurentScalar res)
        : num_(std::move(num)), den_(std::move(den)), d_(d), res_(std::move(res)) {}

    LaurentPoly num_, den_;
    long long d_;
    LaurentScalar res_;

    friend LocalRatFunc normalize_model(const LaurentPoly& f, const LaurentPoly& g);
};

/// Divides out the common t-power content so the minimum coefficient
/// valuation is exactly 0, and certifies the pair nondegenerate by a
/// division-free resultant. Desk scale: degree at most 4.
LocalRatFunc normalize_model(const LaurentPoly& f, const LaurentPoly& g);

/// Coefficientwise reduction; the constant-infinity map (as a RatFunc with
/// zero denominator) when the reduced denominator vanishes, otherwise the
/// reduced map with common factors cancelled.
RatFunc reduce_map(const LocalRatFunc& phi);

/// deg(phi) == deg(reduced phi); cross-checked against the valuation of the
/// model's resultant.
bool has_good_reduction(const LocalRatFunc& phi);

enum class CongruenceCase { inseparable, unicritical, not_applicable };

std::string to_string(CongruenceCase c);

/// Outcome of the residue-level congruence check: when the reduced map is
/// inseparable or unicritical, the degree of the original map is forced into
/// the stated residue classes mod p.
struct CongruenceReport {
    bool applies;
    CongruenceCase kase;
    std::optional<bool> congruence_ok; // meaningful only when applies
    long long degree;
    RatFunc reduced;
};

/// Requires good reduction. Classifies the reduced map and evaluates the
/// degree congruence: d = 0 mod p in the inseparable case, d = 0 or 1 mod p
/// in the unicritical case.
CongruenceReport verify_congruence(const LocalRatFunc& phi);

} // namespace unicrit
