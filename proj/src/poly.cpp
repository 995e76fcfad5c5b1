#include "unicrit/poly.hpp"

#include <cctype>
#include <sstream>

namespace unicrit {

namespace {

void prune(std::vector<FieldElem>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

} // namespace

Poly::Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs)
    : spec_(spec), c_(std::move(coeffs)) {
    for (const auto& e : c_)
        if (e.spec() != spec_)
            throw DomainError("polynomial coefficient from a different field");
    prune(c_);
}

Poly Poly::constant(const FieldElem& c) {
    Poly r(c.spec());
    if (!c.is_zero()) r.c_.push_back(c);
    return r;
}

Poly Poly::monomial(const FieldElem& c, std::size_t exp) {
    Poly r(c.spec());
    if (c.is_zero()) return r;
    r.c_.reserve(exp + 1);
    for (std::size_t i = 0; i < exp; ++i) r.c_.push_back(FieldElem::zero(c.spec()));
    r.c_.push_back(c);
    return r;
}

Poly Poly::from_integers(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(FieldElem::from_integer(spec, v));
    return Poly(spec, std::move(c));
}

FieldElem Poly::leading_coeff() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(spec_);
    r.c_.reserve(c_.size());
    for (const auto& e : c_) r.c_.push_back(-e);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (spec_ != o.spec_) throw DomainError("polynomials over different fields");
    Poly r(spec_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    prune(r.c_);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (spec_ != o.spec_) throw DomainError("polynomials over different fields");
    Poly r(spec_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(spec_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    prune(r.c_);
    return r;
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly r(spec_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& e : c_) r.c_.push_back(e * s);
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly base = *this;
    Poly acc = Poly::one(spec_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::monic() const {
    if (c_.empty()) throw DomainError("cannot normalize the zero polynomial");
    return *this * c_.back().inverse();
}

FieldElem Poly::operator()(const FieldElem& x) const { return poly_eval(*this, x); }

bool operator==(const Poly& a, const Poly& b) {
    return a.spec_ == b.spec_ && a.c_ == b.c_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (a.spec() != b.spec()) throw DomainError("polynomials over different fields");
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const FieldSpec& spec = a.spec();
    std::vector<FieldElem> rem(a.coeffs());
    const std::size_t nb = b.coeffs().size();
    if (rem.size() < nb) return {Poly(spec), a};

    const FieldElem lead_inv = b.leading_coeff().inverse();
    std::vector<FieldElem> quot(rem.size() - nb + 1, FieldElem::zero(spec));
    for (std::size_t i = rem.size(); i-- > nb - 1;) {
        const FieldElem q = rem[i] * lead_inv;
        if (!q.is_zero()) {
            const std::size_t shift = i - (nb - 1);
            quot[shift] = q;
            for (std::size_t j = 0; j < nb; ++j)
                rem[shift + j] -= q * b.coeffs()[j];
        }
    }
    rem.resize(nb - 1, FieldElem::zero(spec));
    return {Poly(spec, std::move(quot)), Poly(spec, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zero polynomials is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly derivative(const Poly& a) {
    const FieldSpec& spec = a.spec();
    std::vector<FieldElem> c;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        c.push_back(a.coeffs()[i] * FieldElem::from_integer(spec, static_cast<std::int64_t>(i)));
    return Poly(spec, std::move(c));
}

std::pair<Poly, Poly> insep_decompose(const Poly& a) {
    const FieldSpec& spec = a.spec();
    const std::uint64_t p = spec.characteristic();
    std::vector<FieldElem> insep, sep;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const FieldElem& e = a.coeffs()[i];
        if (i % p == 0) {
            insep.resize(i / p, FieldElem::zero(spec));
            insep.push_back(e);
            sep.push_back(FieldElem::zero(spec));
        } else {
            sep.resize(i, FieldElem::zero(spec));
            sep.push_back(e);
        }
    }
    return {Poly(spec, std::move(insep)), Poly(spec, std::move(sep))};
}

Poly inflate(const Poly& a, unsigned s) {
    if (s == 0) return a;
    const FieldSpec& spec = a.spec();
    std::uint64_t step = 1;
    for (unsigned i = 0; i < s; ++i) step *= spec.characteristic();
    if (a.is_zero()) return a;
    std::vector<FieldElem> c((a.coeffs().size() - 1) * step + 1, FieldElem::zero(spec));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * step] = a.coeffs()[i];
    return Poly(spec, std::move(c));
}

FieldElem resultant_dd(const Poly& f, const Poly& g, long long d) {
    if (f.spec() != g.spec()) throw DomainError("polynomials over different fields");
    const FieldSpec& spec = f.spec();
    if (d < 0 || f.degree() > Degree(d) || g.degree() > Degree(d))
        throw DomainError("formal degree below actual degree");
    const auto n = static_cast<std::size_t>(2 * d);
    if (n == 0) return FieldElem::one(spec);

    // Sylvester matrix: d rows of shifted f-coefficients, d of g, highest first.
    std::vector<std::vector<FieldElem>> m;
    m.reserve(n);
    auto dd = static_cast<std::size_t>(d);
    for (std::size_t block = 0; block < 2; ++block) {
        const Poly& poly = block == 0 ? f : g;
        for (std::size_t row = 0; row < dd; ++row) {
            std::vector<FieldElem> r(n, FieldElem::zero(spec));
            for (std::size_t j = 0; j <= dd; ++j)
                r[row + j] = poly.coeff(dd - j);
            m.push_back(std::move(r));
        }
    }

    // Gaussian elimination over the field, tracking the determinant.
    FieldElem det = FieldElem::one(spec);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return FieldElem::zero(spec);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const FieldElem inv = m[col][col].inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            const FieldElem factor = m[row][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

FieldElem poly_eval(const Poly& a, const FieldElem& x) {
    if (a.spec() != x.spec()) throw DomainError("evaluation point from a different field");
    FieldElem acc = FieldElem::zero(a.spec());
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = acc * x + a.coeffs()[i];
        if (i == 0) break;
    }
    return acc;
}

std::string Poly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const FieldElem& e = c_[i];
        if (!e.is_zero()) {
            if (!first) os << " + ";
            first = false;
            if (i == 0 || !e.is_one()) {
                os << e.to_string();
                if (i > 0) os << '*';
            }
            if (i > 0) {
                os << var;
                if (i > 1) os << '^' << i;
            }
        }
        if (i == 0) break;
    }
    return os.str();
}

namespace {

struct TextCursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

std::uint64_t parse_uint(TextCursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        throw ParseError("expected a number in polynomial text");
    std::uint64_t v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + static_cast<std::uint64_t>(c.s[c.i] - '0');
        ++c.i;
    }
    return v;
}

} // namespace

Poly Poly::parse(const FieldSpec& spec, std::string_view text) {
    TextCursor cur{text};
    Poly result(spec);
    char var = '\0';
    bool any = false;

    while (!cur.done()) {
        bool negative = false;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            cur.take();
        } else if (any) {
            throw ParseError("expected '+' or '-' between polynomial terms");
        }

        // term := uint ['*' var ['^' uint]] | var ['^' uint]
        std::int64_t coef = 1;
        bool have_coef = false;
        std::size_t exp = 0;
        c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = static_cast<std::int64_t>(parse_uint(cur));
            have_coef = true;
            if (cur.peek() == '*') cur.take();
        }
        c = cur.peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (var == '\0') var = c;
            if (c != var)
                throw ParseError(std::string("inconsistent variable names '") + var +
                                 "' and '" + c + "'");
            cur.take();
            exp = 1;
            if (cur.peek() == '^') {
                cur.take();
                exp = static_cast<std::size_t>(parse_uint(cur));
            }
        } else if (!have_coef) {
            throw ParseError("malformed polynomial term");
        }
        if (negative) coef = -coef;
        result = result + Poly::monomial(FieldElem::from_integer(spec, coef), exp);
        any = true;
    }
    if (!any) throw ParseError("empty polynomial text");
    return result;
}

} // namespace unicrit
