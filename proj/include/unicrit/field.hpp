#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unicrit/errors.hpp"

namespace unicrit {

inline constexpr std::uint64_t kDefaultFieldLimit = 1ull << 20;

namespace detail {
struct FieldSpecData;
}

/// A finite field F_{p^k}, described by its characteristic, extension degree
/// and an explicit monic irreducible modulus over F_p (constant term first).
/// Irreducibility is checked at construction by exhaustive trial division.
class FieldSpec {
public:
    /// Prime field F_p (modulus x).
    explicit FieldSpec(std::uint64_t p);

    /// Extension field F_p[x]/(modulus). `modulus` has k+1 entries,
    /// constant-first, and must be monic and irreducible.
    FieldSpec(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

    /// F_{p^k} with the lexicographically first monic irreducible modulus.
    static FieldSpec with_default_modulus(std::uint64_t p, unsigned k);

    /// Parses the text form "p=2,k=2,mod=1,1,1" (mod optional for k=1).
    static FieldSpec parse(std::string_view text);

    std::uint64_t characteristic() const;
    unsigned extension_degree() const;
    std::uint64_t order() const; ///< p^k
    const std::vector<std::uint64_t>& modulus() const;

    std::string to_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b);
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

    const detail::FieldSpecData& data() const { return *data_; }

private:
    explicit FieldSpec(std::shared_ptr<const detail::FieldSpecData> data)
        : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldSpecData> data_;

    friend class FieldElem;
};

/// An element of F_{p^k} in the power basis of the modulus root. Immutable
/// value type; elements of different FieldSpecs never mix.
class FieldElem {
public:
    static FieldElem zero(const FieldSpec& spec);
    static FieldElem one(const FieldSpec& spec);
    /// Image of an integer in the prime subfield.
    static FieldElem from_integer(const FieldSpec& spec, std::int64_t v);
    /// Element with the given k residues (coefficients may be any integers;
    /// they are reduced mod p).
    static FieldElem from_coeffs(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs);
    /// The class of x in F_p[x]/(modulus); requires k >= 2.
    static FieldElem generator(const FieldSpec& spec);
    /// Element number `index` in enumeration order (base-p digits of index,
    /// constant coordinate first). index < p^k.
    static FieldElem from_index(const FieldSpec& spec, std::uint64_t index);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const { return rep_ == 0; }
    bool is_one() const;

    /// The k residues, constant coordinate first.
    std::vector<std::uint64_t> coeffs() const;
    /// Position in enumeration order; inverse of from_index.
    std::uint64_t index() const { return rep_; }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    /// x -> x^(p^s).
    FieldElem frobenius(unsigned s = 1) const;
    /// The unique y with frobenius(y, s) == *this.
    FieldElem inverse_frobenius(unsigned s = 1) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string to_string() const; ///< "2" for k=1, "[c0,c1]" otherwise

private:
    FieldElem(FieldSpec spec, std::uint64_t rep) : spec_(std::move(spec)), rep_(rep) {}

    FieldSpec spec_;
    std::uint64_t rep_; // base-p digits packed as sum c_i p^i

    friend void require_same_spec(const FieldElem& a, const FieldElem& b);
};

/// All p^k elements in deterministic order (index order). Throws LimitError
/// if the field is larger than `limit`.
std::vector<FieldElem> enumerate_field(const FieldSpec& spec,
                                       std::uint64_t limit = kDefaultFieldLimit);

} // namespace unicrit
