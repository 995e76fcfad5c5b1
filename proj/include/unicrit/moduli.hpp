#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "unicrit/cfrac.hpp"
#include "unicrit/critlocus.hpp"

namespace unicrit {

inline constexpr std::uint64_t kDefaultScanLimit = 1ull << 22;

/// A stratum of the unicritical-at-infinity locus: degree d maps over
/// characteristic p whose signature is kappa. Validity: kappa sums to d, the
/// first entry is a multiple of p (or the whole tuple is (1) in degree 1),
/// interior entries are multiples of p that are at least p, and the final
/// entry is either such a multiple (then p | d) or exactly 1 (then p | d-1).
struct StratumSpec {
    long long d;
    std::uint64_t p;
    Signature kappa;

    StratumSpec(long long d, std::uint64_t p, Signature kappa);
};

/// Integer-coefficient polynomial in the field size q; exact arithmetic for
/// closed-form point counts.
class CountPolynomial {
public:
    CountPolynomial() = default;
    explicit CountPolynomial(std::vector<long long> coeffs); // constant-first

    static CountPolynomial constant(long long c) { return CountPolynomial({c}); }
    static CountPolynomial q_power(std::size_t j);   ///< q^j
    static CountPolynomial q_minus_one();            ///< q - 1

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long degree() const; ///< -1 for the zero polynomial
    long long leading_coeff() const;

    CountPolynomial operator+(const CountPolynomial& o) const;
    CountPolynomial operator*(const CountPolynomial& o) const;

    __int128 eval(std::uint64_t q) const;

    friend bool operator==(const CountPolynomial& a, const CountPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CountPolynomial& a, const CountPolynomial& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    std::vector<long long> c_;
};

/// All signatures realizable by unicritical-at-infinity maps of degree d in
/// characteristic p, ordered by (length, lexicographic). Empty when
/// d is not 0 or 1 mod p.
std::vector<Signature> valid_signatures(long long d, std::uint64_t p);

/// Ramification index at infinity shared by every map in the stratum:
/// kappa_0 when positive (the map fixes infinity), else kappa_1.
long long signature_ram_at_infinity(const Signature& kappa);

/// Streams every map of the stratum exactly once through the sink, via the
/// bijective parameterization (q_0, ..., q_n, a).
void enumerate_stratum(const StratumSpec& s, const FieldSpec& field,
                       const std::function<void(const RatFunc&)>& sink,
                       std::uint64_t limit = kDefaultScanLimit);

std::vector<RatFunc> enumerate_stratum(const StratumSpec& s, const FieldSpec& field,
                                       std::uint64_t limit = kDefaultScanLimit);

/// Closed-form number of F_q-points of the stratum: a constant slot
/// contributes q, an exact-degree-j slot (q-1) q^j, and the slope q-1.
unsigned long long stratum_count(const StratumSpec& s, std::uint64_t q);

/// The same count as a polynomial in q.
CountPolynomial stratum_count_poly(const StratumSpec& s);

/// Sum of stratum count polynomials over all valid signatures.
CountPolynomial total_count_poly(long long d, std::uint64_t p);

/// Visits every point of Rat_d(F_q): canonical representatives of
/// P^(2d+1)(F_q) with nonzero (d,d)-resultant, normalized as RatFuncs.
void for_each_rat_point(long long d, const FieldSpec& field,
                        const std::function<void(const RatFunc&)>& sink,
                        std::uint64_t limit = kDefaultScanLimit);

/// Exhaustive oracle: all maps of exact degree d over F_q whose Wronskian is
/// a nonzero constant.
std::vector<RatFunc> brute_force_unicritical_at_infinity(
    long long d, const FieldSpec& field, std::uint64_t limit = kDefaultScanLimit);

/// Degree in q of the total count polynomial, recovered by exact divided
/// differences on closed-form counts at the sample points qs. Throws when the
/// samples cannot pin the degree down.
long long count_polynomial_degree(long long d, std::uint64_t p,
                                  const std::vector<std::uint64_t>& qs);

/// dim U_d^(infinity): 2 + 2d/p when p | d, 3 + 2(d-1)/p when p | d-1.
long long dimension_unicritical_at_infinity(long long d, std::uint64_t p);

/// dim U_d = dim U_d^(infinity) + 1 (the fiber dimension over the curve of
/// critical-point positions).
long long dimension_unicritical_locus(long long d, std::uint64_t p);

/// Dimension of the space of postcomposition classes of degree-d maps
/// ramified at one point with index e and unramified elsewhere:
/// (2d - e)/p when p | d, 1 + (2d - 2 - e)/p when p | d-1.
long long classes_dimension(long long d, long long e, std::uint64_t p);

/// Count polynomial of the locus of unicritical-at-infinity maps whose
/// ramification index at infinity is exactly e; its degree is the dimension
/// of that locus.
CountPolynomial classes_count_poly(long long d, long long e, std::uint64_t p);

/// Exact census of unicritical-at-infinity maps of degree d over F_q.
struct CountReport {
    struct Entry {
        Signature kappa;
        unsigned long long count;
    };

    std::uint64_t q = 0;
    std::vector<Entry> strata;
    unsigned long long total = 0;
    std::optional<unsigned long long> brute_total;
    /// Closed forms match enumeration cardinalities and, when the oracle ran,
    /// the enumerated maps equal the oracle's maps as sets.
    bool agree = true;
};

CountReport census(long long d, const FieldSpec& field, bool with_brute = true,
                   std::uint64_t limit = kDefaultScanLimit);

/// True when phi is unicritical at infinity with phi(infinity) = 0 and
/// phi(0) = 1.
bool is_y_form(const RatFunc& phi);

/// Conjugates phi into the normal form Y: the critical point moves to
/// infinity, the critical value to 0, and its image to 1. Requires the orbit
/// triple to be pairwise distinct. Conjugate maps share one Y representative.
RatFunc normal_form_Y(const RatFunc& phi);

/// Membership test for the degree-p quadric model: a map of degree p with
/// coefficients supported on exponents {0, 1, p} lies in the unicritical-at-
/// infinity locus iff a_1 b_p = a_p b_1, the resultant is nonzero, and
/// a_1 b_0 != a_0 b_1.
bool quadric_membership_p(const RatFunc& phi);

/// The four deflated polynomials of a map with no finite critical point:
/// f = f1(z^p) + z f2(z^p), g = g1(z^p) + z g2(z^p), with f2 g1 - f1 g2 a
/// nonzero constant.
struct LdPoint {
    Poly f1, f2, g1, g2;

    FieldElem unit() const; ///< the constant f2 g1 - f1 g2
};

LdPoint ld_decompose(const RatFunc& phi);

} // namespace unicrit
