#include "unicrit/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace unicrit {

namespace detail {

struct FieldSpecData {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::vector<std::uint64_t> modulus; // size k+1, constant-first, monic
    std::uint64_t order = 0;            // p^k
};

} // namespace detail

namespace {

using detail::FieldSpecData;

constexpr std::uint64_t kMaxCharacteristic = 1ull << 31;
constexpr std::uint64_t kMaxOrder = 1ull << 62;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Digit vectors below are polynomials over F_p, constant-first.
using Digits = std::vector<std::uint64_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b over F_p; b must be monic.
Digits mod_monic(Digits a, const Digits& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - b.size();
        if (lead != 0) {
            for (std::size_t i = 0; i < db; ++i) {
                std::uint64_t sub = (lead * b[i]) % p;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool divides_monic(const Digits& divisor, const Digits& target, std::uint64_t p) {
    return mod_monic(target, divisor, p).empty();
}

bool is_irreducible(const Digits& m, std::uint64_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 1) return true;
    if (m[0] == 0) return false; // divisible by x
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::size_t deg = 1; 2 * deg <= k; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits cand(deg + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < deg; ++i) {
                cand[i] = t % p;
                t /= p;
            }
            cand[deg] = 1;
            if (divides_monic(cand, m, p)) return false;
        }
    }
    return true;
}

std::shared_ptr<const FieldSpecData> make_data(std::uint64_t p, unsigned k, Digits modulus) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (p > kMaxCharacteristic) throw LimitError("characteristic too large");
    if (k < 1) throw DomainError("extension degree must be >= 1");
    if (modulus.size() != static_cast<std::size_t>(k) + 1)
        throw DomainError("modulus must have degree k");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw DomainError("modulus must be monic");

    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (order > kMaxOrder / p) throw LimitError("field order too large");
        order *= p;
    }
    if (!is_irreducible(modulus, p))
        throw DomainError("modulus is reducible over F_p");

    auto data = std::make_shared<FieldSpecData>();
    data->p = p;
    data->k = k;
    data->modulus = std::move(modulus);
    data->order = order;
    return data;
}

void unpack(const FieldSpecData& d, std::uint64_t rep, std::uint64_t* out) {
    for (unsigned i = 0; i < d.k; ++i) {
        out[i] = rep % d.p;
        rep /= d.p;
    }
}

std::uint64_t pack(const FieldSpecData& d, const std::uint64_t* digits) {
    std::uint64_t rep = 0;
    for (unsigned i = d.k; i-- > 0;) rep = rep * d.p + digits[i];
    return rep;
}

constexpr unsigned kMaxDigits = 64;

} // namespace

void require_same_spec(const FieldElem& a, const FieldElem& b) {
    if (a.spec() != b.spec())
        throw DomainError("elements of different fields cannot be combined");
}

FieldSpec::FieldSpec(std::uint64_t p) : data_(make_data(p, 1, {0, 1})) {}

FieldSpec::FieldSpec(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : data_(make_data(p, k, std::move(modulus))) {}

FieldSpec FieldSpec::with_default_modulus(std::uint64_t p, unsigned k) {
    if (k == 1) return FieldSpec(p);
    if (k >= kMaxDigits) throw LimitError("extension degree too large");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (count > kMaxOrder / p) throw LimitError("field order too large");
        count *= p;
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint64_t> cand(k + 1, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < k; ++i) {
            cand[i] = t % p;
            t /= p;
        }
        cand[k] = 1;
        if (is_irreducible(cand, p)) return FieldSpec(p, k, std::move(cand));
    }
    throw DomainError("no irreducible modulus found"); // unreachable
}

std::uint64_t FieldSpec::characteristic() const { return data_->p; }
unsigned FieldSpec::extension_degree() const { return data_->k; }
std::uint64_t FieldSpec::order() const { return data_->order; }
const std::vector<std::uint64_t>& FieldSpec::modulus() const { return data_->modulus; }

bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
           a.data_->modulus == b.data_->modulus;
}

std::string FieldSpec::to_string() const {
    std::ostringstream os;
    os << "p=" << data_->p << ",k=" << data_->k;
    if (data_->k > 1) {
        os << ",mod=";
        for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
            if (i) os << ',';
            os << data_->modulus[i];
        }
    }
    return os.str();
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> modulus;
    bool have_p = false, have_k = false, in_mod = false;

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("bad field spec \"" + std::string(text) + "\": " + why);
    };
    auto parse_num = [&](std::string_view tok) -> std::uint64_t {
        if (tok.empty()) fail("empty number");
        std::uint64_t v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') fail("expected number, got \"" + std::string(tok) + "\"");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };

    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
        if (tok.empty()) {
            if (pos > text.size()) break;
            fail("empty token");
        }
        if (tok.rfind("p=", 0) == 0) {
            p = parse_num(tok.substr(2));
            have_p = true;
            in_mod = false;
        } else if (tok.rfind("k=", 0) == 0) {
            k = parse_num(tok.substr(2));
            have_k = true;
            in_mod = false;
        } else if (tok.rfind("mod=", 0) == 0) {
            modulus.clear();
            modulus.push_back(parse_num(tok.substr(4)));
            in_mod = true;
        } else if (in_mod) {
            modulus.push_back(parse_num(tok));
        } else {
            fail("unknown token \"" + std::string(tok) + "\"");
        }
        if (pos > text.size()) break;
    }
    if (!have_p) fail("missing p=");
    if (!have_k) k = 1;
    try {
        if (!modulus.empty())
            return FieldSpec(p, static_cast<unsigned>(k), std::move(modulus));
        return with_default_modulus(p, static_cast<unsigned>(k));
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad field spec: ") + e.what());
    }
}

FieldElem FieldElem::zero(const FieldSpec& spec) { return FieldElem(spec, 0); }

FieldElem FieldElem::one(const FieldSpec& spec) { return FieldElem(spec, 1); }

bool FieldElem::is_one() const { return rep_ == 1; }

FieldElem FieldElem::from_integer(const FieldSpec& spec, std::int64_t v) {
    const auto p = static_cast<std::int64_t>(spec.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return FieldElem(spec, static_cast<std::uint64_t>(r));
}

FieldElem FieldElem::from_coeffs(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs) {
    const auto& d = spec.data();
    if (coeffs.size() > d.k) throw DomainError("too many coefficients for field element");
    std::array<std::uint64_t, kMaxDigits> digits{};
    const auto p = static_cast<std::int64_t>(d.p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::int64_t r = coeffs[i] % p;
        if (r < 0) r += p;
        digits[i] = static_cast<std::uint64_t>(r);
    }
    return FieldElem(spec, pack(d, digits.data()));
}

FieldElem FieldElem::generator(const FieldSpec& spec) {
    if (spec.extension_degree() < 2)
        throw DomainError("generator requires an extension field");
    return FieldElem(spec, spec.characteristic());
}

FieldElem FieldElem::from_index(const FieldSpec& spec, std::uint64_t index) {
    if (index >= spec.order()) throw DomainError("element index out of range");
    return FieldElem(spec, index);
}

std::vector<std::uint64_t> FieldElem::coeffs() const {
    const auto& d = spec_.data();
    std::vector<std::uint64_t> out(d.k);
    unpack(d, rep_, out.data());
    return out;
}

FieldElem FieldElem::operator-() const {
    const auto& d = spec_.data();
    std::array<std::uint64_t, kMaxDigits> a{};
    unpack(d, rep_, a.data());
    for (unsigned i = 0; i < d.k; ++i) a[i] = (d.p - a[i]) % d.p;
    return FieldElem(spec_, pack(d, a.data()));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_spec(*this, o);
    const auto& d = spec_.data();
    std::array<std::uint64_t, kMaxDigits> a{}, b{};
    unpack(d, rep_, a.data());
    unpack(d, o.rep_, b.data());
    for (unsigned i = 0; i < d.k; ++i) a[i] = (a[i] + b[i]) % d.p;
    return FieldElem(spec_, pack(d, a.data()));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same_spec(*this, o);
    const auto& d = spec_.data();
    std::array<std::uint64_t, kMaxDigits> a{}, b{};
    unpack(d, rep_, a.data());
    unpack(d, o.rep_, b.data());
    for (unsigned i = 0; i < d.k; ++i) a[i] = (a[i] + d.p - b[i]) % d.p;
    return FieldElem(spec_, pack(d, a.data()));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_spec(*this, o);
    const auto& d = spec_.data();
    if (d.k == 1) return FieldElem(spec_, (rep_ * o.rep_) % d.p);

    std::array<std::uint64_t, kMaxDigits> a{}, b{};
    std::array<std::uint64_t, 2 * kMaxDigits> prod{};
    unpack(d, rep_, a.data());
    unpack(d, o.rep_, b.data());
    for (unsigned i = 0; i < d.k; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < d.k; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % d.p;
    }
    // Reduce x^m for m >= k using x^k = -(modulus minus leading term).
    for (unsigned m = 2 * d.k - 2; m >= d.k && m < 2 * kMaxDigits; --m) {
        const std::uint64_t c = prod[m];
        if (c != 0) {
            prod[m] = 0;
            for (unsigned j = 0; j < d.k; ++j) {
                std::uint64_t sub = (c * d.modulus[j]) % d.p;
                prod[m - d.k + j] = (prod[m - d.k + j] + d.p - sub) % d.p;
            }
        }
        if (m == d.k) break;
    }
    return FieldElem(spec_, pack(d, prod.data()));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem base = *this;
    FieldElem acc = one(spec_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DomainError("division by zero field element");
    return pow(spec_.order() - 2);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same_spec(*this, o);
    return *this * o.inverse();
}

FieldElem FieldElem::frobenius(unsigned s) const {
    const unsigned k = spec_.extension_degree();
    unsigned steps = s % k;
    FieldElem r = *this;
    for (unsigned i = 0; i < steps; ++i) r = r.pow(spec_.characteristic());
    return r;
}

FieldElem FieldElem::inverse_frobenius(unsigned s) const {
    const unsigned k = spec_.extension_degree();
    unsigned r = s % k;
    if (r == 0) return *this;
    return frobenius(k - r);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.spec_ == b.spec_ && a.rep_ == b.rep_;
}

std::string FieldElem::to_string() const {
    const auto& d = spec_.data();
    if (d.k == 1) return std::to_string(rep_);
    std::ostringstream os;
    os << '[';
    auto c = coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

std::vector<FieldElem> enumerate_field(const FieldSpec& spec, std::uint64_t limit) {
    if (spec.order() > limit)
        throw LimitError("field has " + std::to_string(spec.order()) +
                         " elements, above the limit " + std::to_string(limit));
    std::vector<FieldElem> out;
    out.reserve(spec.order());
    for (std::uint64_t i = 0; i < spec.order(); ++i)
        out.push_back(FieldElem::from_index(spec, i));
    return out;
}

} // namespace unicrit
