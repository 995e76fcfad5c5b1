#pragma once

#include <optional>
#include <vector>

#include "unicrit/ratfunc.hpp"

namespace unicrit {

/// Partial-quotient sequence [f_0, ..., f_n] of a rational function. Every
/// quotient after the first must be nonconstant; the expansion is unique.
class ContFrac {
public:
    explicit ContFrac(std::vector<Poly> quotients);

    const std::vector<Poly>& quotients() const { return q_; }
    const FieldSpec& spec() const { return q_.front().spec(); }
    std::size_t size() const { return q_.size(); }

    friend bool operator==(const ContFrac& a, const ContFrac& b) { return a.q_ == b.q_; }
    friend bool operator!=(const ContFrac& a, const ContFrac& b) { return !(a == b); }

private:
    std::vector<Poly> q_;
};

/// The tuple (deg+ f_0, deg f_1, ..., deg f_n); entries after the first are
/// >= 1 and the entries sum to the degree of the map.
class Signature {
public:
    explicit Signature(std::vector<long long> entries);

    const std::vector<long long>& entries() const { return k_; }
    std::size_t size() const { return k_.size(); }
    long long sum() const;

    friend bool operator==(const Signature& a, const Signature& b) { return a.k_ == b.k_; }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
    friend bool operator<(const Signature& a, const Signature& b) {
        if (a.k_.size() != b.k_.size()) return a.k_.size() < b.k_.size();
        return a.k_ < b.k_;
    }

    std::string to_string() const;

private:
    std::vector<long long> k_;
};

/// Witness for the no-finite-critical-point normal form
/// [q_0(z^p), q_1(z^p), ..., q_n(z^p) + a z]: the deflated partial quotients
/// q_i (in the variable w = z^p) and the nonzero slope a.
struct UnicriticalForm {
    std::vector<Poly> q; // q_0, ..., q_n in the deflated variable
    FieldElem a;

    friend bool operator==(const UnicriticalForm& x, const UnicriticalForm& y) {
        return x.q == y.q && x.a == y.a;
    }
    friend bool operator!=(const UnicriticalForm& x, const UnicriticalForm& y) {
        return !(x == y);
    }
};

/// Continued fraction expansion by iterated polynomial division. A constant
/// map yields the single quotient [f_0]; the constant-infinity map is
/// rejected.
ContFrac expand(const RatFunc& phi);

/// Evaluates f_0 + 1/(f_1 + 1/(... + 1/f_n)) exactly. The degree of the
/// result is deg+ f_0 + sum of the remaining quotient degrees.
RatFunc reconstruct(const ContFrac& c);

Signature signature(const ContFrac& c);
Signature signature(const RatFunc& phi);

/// Structural test for the normal form above: every quotient before the last
/// must be inseparable and the last must be q_n(z^p) + a z with a != 0.
/// Returns the witness, which satisfies build_from_form(witness) == phi.
std::optional<UnicriticalForm> detect_unicritical_form(const RatFunc& phi);

/// Builds [q_0(z^p), ..., q_n(z^p) + a z] from a witness. The result has no
/// finite critical point.
RatFunc build_from_form(const UnicriticalForm& u);

} // namespace unicrit
