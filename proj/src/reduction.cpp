#include "unicrit/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace unicrit {

namespace {

long long min_known(long long a, long long b) { return a < b ? a : b; }

} // namespace

void LaurentScalar::canon() {
    // Drop stored coefficients the window cannot vouch for.
    if (known_ != kExactKnown && !coeffs_.empty()) {
        const long long keep = known_ - val_;
        if (keep <= 0)
            coeffs_.clear();
        else if (static_cast<long long>(coeffs_.size()) > keep)
            coeffs_.erase(coeffs_.begin() + static_cast<long>(keep), coeffs_.end());
    }
    // Strip leading zeros, adjusting the valuation.
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<long long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) val_ = 0;
}

LaurentScalar LaurentScalar::zero(const FieldSpec& residue) {
    LaurentScalar s(residue);
    s.known_ = kExactKnown;
    return s;
}

LaurentScalar LaurentScalar::exact(const FieldSpec& residue, long long val,
                                   std::vector<FieldElem> coeffs) {
    LaurentScalar s(residue);
    for (const auto& c : coeffs)
        if (c.spec() != residue) throw DomainError("coefficient from a different residue field");
    s.val_ = val;
    s.coeffs_ = std::move(coeffs);
    s.known_ = kExactKnown;
    s.canon();
    return s;
}

LaurentScalar LaurentScalar::from_residue(const FieldElem& c) {
    return exact(c.spec(), 0, {c});
}

LaurentScalar LaurentScalar::t_power(const FieldSpec& residue, long long m) {
    return exact(residue, m, {FieldElem::one(residue)});
}

bool LaurentScalar::is_exact() const { return known_ == kExactKnown; }

long long LaurentScalar::valuation() const {
    if (!coeffs_.empty()) return val_;
    if (is_exact()) throw DomainError("the zero scalar has no finite valuation");
    throw PrecisionError("scalar is indistinguishable from zero at precision");
}

long long LaurentScalar::known_upto() const { return known_; }

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    if (spec_ != o.spec_) throw DomainError("scalars over different residue fields");
    LaurentScalar r(spec_);
    r.known_ = min_known(known_, o.known_);
    if (coeffs_.empty() && o.coeffs_.empty()) {
        r.canon();
        return r;
    }
    long long lo;
    if (coeffs_.empty())
        lo = o.val_;
    else if (o.coeffs_.empty())
        lo = val_;
    else
        lo = std::min(val_, o.val_);
    long long hi = lo;
    if (!coeffs_.empty()) hi = std::max(hi, val_ + static_cast<long long>(coeffs_.size()));
    if (!o.coeffs_.empty()) hi = std::max(hi, o.val_ + static_cast<long long>(o.coeffs_.size()));
    r.val_ = lo;
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo), FieldElem::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[static_cast<std::size_t>(val_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        r.coeffs_[static_cast<std::size_t>(o.val_ - lo) + i] += o.coeffs_[i];
    r.canon();
    return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const { return *this + (-o); }

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    if (spec_ != o.spec_) throw DomainError("scalars over different residue fields");
    if (is_exact_zero() || o.is_exact_zero()) return zero(spec_);
    LaurentScalar r(spec_);
    if (coeffs_.empty() || o.coeffs_.empty()) {
        // A window-zero factor: the product vanishes to the bound shifted by
        // the other factor's valuation (or bound, when both are window-zero).
        const long long a = coeffs_.empty() ? known_ : val_;
        const long long b = o.coeffs_.empty() ? o.known_ : o.val_;
        r.known_ = a + b;
        r.canon();
        return r;
    }
    const long long val = val_ + o.val_;
    long long known = kExactKnown;
    if (known_ != kExactKnown) known = min_known(known, known_ + o.val_);
    if (o.known_ != kExactKnown) known = min_known(known, o.known_ + val_);
    r.val_ = val;
    r.known_ = known;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, FieldElem::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.canon();
    return r;
}

LaurentScalar LaurentScalar::inverse(long long rel_terms) const {
    if (is_exact_zero()) throw DomainError("division by the zero scalar");
    if (coeffs_.empty())
        throw PrecisionError("division by a scalar indistinguishable from zero");
    if (rel_terms < 1) throw DomainError("need at least one tracked term");

    if (coeffs_.size() == 1 && is_exact()) {
        return exact(spec_, -val_, {coeffs_[0].inverse()});
    }
    const long long rel_known =
        is_exact() ? rel_terms : min_known(known_ - val_, rel_terms);
    if (rel_known < 1)
        throw PrecisionError("no tracked terms survive the inversion");

    const auto terms = static_cast<std::size_t>(rel_known);
    std::vector<FieldElem> d(terms, FieldElem::zero(spec_));
    const FieldElem c0inv = coeffs_[0].inverse();
    d[0] = c0inv;
    for (std::size_t j = 1; j < terms; ++j) {
        FieldElem acc = FieldElem::zero(spec_);
        for (std::size_t i = 1; i <= j && i < coeffs_.size(); ++i)
            acc += coeffs_[i] * d[j - i];
        d[j] = -(c0inv * acc);
    }
    LaurentScalar r(spec_);
    r.val_ = -val_;
    r.coeffs_ = std::move(d);
    r.known_ = -val_ + rel_known;
    r.canon();
    return r;
}

LaurentScalar LaurentScalar::operator/(const LaurentScalar& o) const {
    if (is_exact_zero()) {
        if (o.is_exact_zero()) throw DomainError("division by the zero scalar");
        if (o.coeffs_.empty())
            throw PrecisionError("division by a scalar indistinguishable from zero");
        return zero(spec_);
    }
    return *this * o.inverse();
}

LaurentScalar LaurentScalar::shifted(long long m) const {
    LaurentScalar r = *this;
    r.val_ += m;
    if (r.known_ != kExactKnown) r.known_ += m;
    if (r.coeffs_.empty()) r.val_ = 0;
    return r;
}

LaurentScalar LaurentScalar::truncated(long long bound) const {
    LaurentScalar r = *this;
    r.known_ = min_known(r.known_, bound);
    r.canon();
    return r;
}

FieldElem LaurentScalar::residue() const {
    if (coeffs_.empty()) {
        if (is_exact() || known_ >= 1) return FieldElem::zero(spec_);
        throw PrecisionError("residue of a scalar known to no terms");
    }
    if (val_ < 0) throw DomainError("negative valuation has no residue");
    if (val_ > 0) return FieldElem::zero(spec_);
    return coeffs_[0];
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.spec_ == b.spec_ && a.val_ == b.val_ && a.coeffs_ == b.coeffs_ &&
           a.known_ == b.known_;
}

std::string LaurentScalar::to_string() const {
    std::ostringstream os;
    if (coeffs_.empty()) {
        if (is_exact()) return "0";
        os << "O(t^" << known_ << ")";
        return os.str();
    }
    os << "t^" << val_ << "*(";
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !coeffs_[i].is_one()) {
            os << coeffs_[i].to_string();
            if (i > 0) os << '*';
        }
        if (i > 0) {
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    os << ')';
    if (!is_exact()) os << " + O(t^" << known_ << ")";
    return os.str();
}

LaurentScalar LaurentScalar::parse(const FieldSpec& residue, std::string_view text) {
    // "0" | ["t^" int "*"] "(" poly-in-t ")" | poly-in-t
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw ParseError("empty Laurent scalar");
    if (s == "0") return zero(residue);

    long long val = 0;
    std::string_view rest = s;
    if (rest.size() >= 2 && rest[0] == 't' && rest[1] == '^') {
        std::size_t i = 2;
        bool neg = false;
        if (i < rest.size() && (rest[i] == '-' || rest[i] == '+')) {
            neg = rest[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == start || i >= rest.size() || rest[i] != '*')
            throw ParseError("expected t^v*(...) in Laurent scalar");
        val = std::stoll(std::string(rest.substr(start, i - start)));
        if (neg) val = -val;
        rest = rest.substr(i + 1);
    }
    if (!rest.empty() && rest.front() == '(') {
        if (rest.back() != ')') throw ParseError("unbalanced parentheses in Laurent scalar");
        rest = rest.substr(1, rest.size() - 2);
    }
    const Poly series = Poly::parse(residue, rest);
    return exact(residue, val, series.coeffs());
}

LaurentPoly::LaurentPoly(const FieldSpec& residue, std::vector<LaurentScalar> coeffs)
    : spec_(residue), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.residue_spec() != spec_)
            throw DomainError("coefficient over a different residue field");
    while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
}

LaurentPoly LaurentPoly::from_poly(const Poly& f) {
    std::vector<LaurentScalar> c;
    c.reserve(f.coeffs().size());
    for (const auto& e : f.coeffs()) c.push_back(LaurentScalar::from_residue(e));
    return LaurentPoly(f.spec(), std::move(c));
}

LaurentScalar LaurentPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : LaurentScalar::zero(spec_);
}

long long LaurentPoly::degree() const {
    if (c_.empty()) return -1;
    const LaurentScalar& top = c_.back();
    if (top.is_zero_at_precision())
        throw PrecisionError("leading coefficient indistinguishable from zero");
    return static_cast<long long>(c_.size()) - 1;
}

LaurentPoly LaurentPoly::shifted(long long m) const {
    std::vector<LaurentScalar> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(s.shifted(m));
    return LaurentPoly(spec_, std::move(c));
}

Poly LaurentPoly::residue() const {
    std::vector<FieldElem> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(s.residue());
    return Poly(spec_, std::move(c));
}

std::string LaurentPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_exact_zero()) {
            if (i == 0) break;
            continue;
        }
        if (!first) os << " + ";
        first = false;
        os << '[' << c_[i].to_string() << ']';
        if (i > 0) {
            os << '*' << var;
            if (i > 1) os << '^' << i;
        }
        if (i == 0) break;
    }
    return os.str();
}

namespace {

constexpr std::size_t kMaxLocalMatrix = 8;

// Division-free determinant by cofactor expansion; exact-zero entries are
// skipped, which matters because Sylvester matrices are mostly zeros.
LaurentScalar det_expansion(std::vector<std::vector<LaurentScalar>>& m,
                            std::vector<std::size_t>& cols, std::size_t row,
                            const FieldSpec& spec) {
    if (cols.empty()) return LaurentScalar::from_residue(FieldElem::one(spec));
    LaurentScalar acc = LaurentScalar::zero(spec);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const std::size_t col = cols[ci];
        const LaurentScalar& entry = m[row][col];
        if (entry.is_exact_zero()) continue;
        cols.erase(cols.begin() + static_cast<long>(ci));
        LaurentScalar minor = det_expansion(m, cols, row + 1, spec);
        cols.insert(cols.begin() + static_cast<long>(ci), col);
        LaurentScalar term = entry * minor;
        if (ci % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

LaurentScalar local_resultant(const LaurentPoly& f, const LaurentPoly& g, long long d) {
    const FieldSpec& spec = f.residue_spec();
    const auto n = static_cast<std::size_t>(2 * d);
    if (n == 0) return LaurentScalar::from_residue(FieldElem::one(spec));
    if (n > kMaxLocalMatrix)
        throw LimitError("local maps are supported up to degree 4");

    std::vector<std::vector<LaurentScalar>> m(
        n, std::vector<LaurentScalar>(n, LaurentScalar::zero(spec)));
    const auto dd = static_cast<std::size_t>(d);
    for (std::size_t block = 0; block < 2; ++block) {
        const LaurentPoly& poly = block == 0 ? f : g;
        for (std::size_t row = 0; row < dd; ++row)
            for (std::size_t j = 0; j <= dd; ++j)
                m[block * dd + row][row + j] = poly.coeff(dd - j);
    }
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_expansion(m, cols, 0, spec);
}

} // namespace

LocalRatFunc normalize_model(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.residue_spec() != g.residue_spec())
        throw DomainError("numerator and denominator over different residue fields");
    if (f.is_exact_zero() && g.is_exact_zero())
        throw DomainError("0/0 is not a local map");

    // Common t-power content: the minimum coefficient valuation.
    bool found = false;
    long long m = 0;
    bool any_window_zero = false;
    long long window_floor = 0;
    auto scan = [&](const LaurentPoly& poly) {
        for (const auto& s : poly.coeffs()) {
            if (s.is_exact_zero()) continue;
            if (s.is_zero_at_precision()) {
                if (!any_window_zero || s.known_upto() < window_floor)
                    window_floor = s.known_upto();
                any_window_zero = true;
                continue;
            }
            if (!found || s.valuation() < m) m = s.valuation();
            found = true;
        }
    };
    scan(f);
    scan(g);
    if (!found)
        throw PrecisionError("every coefficient is indistinguishable from zero");
    if (any_window_zero && window_floor < m)
        throw PrecisionError("a coefficient window ends below the content valuation");

    LaurentPoly fn = f.shifted(-m);
    LaurentPoly gn = g.shifted(-m);
    const long long d = std::max(fn.degree(), gn.degree());
    if (d < 0) throw DomainError("empty local map"); // unreachable: not both zero

    LaurentScalar res = local_resultant(fn, gn, d);
    if (res.is_exact_zero())
        throw DomainError("degenerate pair: the resultant vanishes identically");
    if (res.is_zero_at_precision())
        throw PrecisionError("resultant indistinguishable from zero: cannot certify the model");
    return LocalRatFunc(std::move(fn), std::move(gn), d, std::move(res));
}

RatFunc reduce_map(const LocalRatFunc& phi) {
    const Poly fr = phi.num().residue();
    const Poly gr = phi.den().residue();
    if (gr.is_zero()) return RatFunc::constant_infinity(fr.spec());
    return RatFunc(fr, gr);
}

bool has_good_reduction(const LocalRatFunc& phi) {
    const RatFunc reduced = reduce_map(phi);
    const long long rdeg = reduced.is_constant_infinity() ? 0 : reduced.degree();
    const bool by_degree = rdeg == phi.degree();
    const bool by_resultant = phi.resultant().valuation() == 0;
    if (by_degree != by_resultant)
        throw Error("internal: degree test and resultant valuation disagree");
    return by_degree;
}

std::string to_string(CongruenceCase c) {
    switch (c) {
        case CongruenceCase::inseparable: return "inseparable";
        case CongruenceCase::unicritical: return "unicritical";
        case CongruenceCase::not_applicable: return "not-applicable";
    }
    return "?";
}

CongruenceReport verify_congruence(const LocalRatFunc& phi) {
    if (!has_good_reduction(phi))
        throw DomainError("congruence check requires good reduction");
    const long long d = phi.degree();
    if (d < 1) throw DomainError("congruence check requires a nonconstant map");
    const FieldSpec& spec = phi.num().residue_spec();
    const auto p = static_cast<long long>(spec.characteristic());
    RatFunc reduced = reduce_map(phi);

    if (reduced.is_inseparable())
        return CongruenceReport{true, CongruenceCase::inseparable, d % p == 0, d,
                                std::move(reduced)};

    const CritReport rep = is_unicritical(reduced);
    if (rep.unicritical_at) {
        // Mirror the proof: move the reduced critical point to 0 and check
        // that the Wronskian collapses to a single monomial a z^(2d-2).
        const ProjPoint& c = *rep.unicritical_at;
        const MobiusMap sigma = c.is_infinity() ? MobiusMap::inversion(spec)
                                                : MobiusMap::translation(c.value());
        const Poly w = conjugate(sigma, reduced).wronskian();
        const Poly expected =
            Poly::monomial(w.leading_coeff(), static_cast<std::size_t>(2 * d - 2));
        if (w != expected)
            throw Error("internal: conjugated Wronskian is not a single monomial");
        return CongruenceReport{true, CongruenceCase::unicritical,
                                d % p == 0 || d % p == 1, d, std::move(reduced)};
    }
    return CongruenceReport{false, CongruenceCase::not_applicable, std::nullopt, d,
                            std::move(reduced)};
}

} // namespace unicrit
