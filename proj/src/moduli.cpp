#include "unicrit/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace unicrit {

namespace {

using int128 = __int128;

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

// A polynomial slot of the unicritical parameterization: either the full
// constant line, or polynomials of one exact degree.
struct Slot {
    bool constant_line;
    long long exact_degree; // meaningful when !constant_line

    int128 count(std::uint64_t q) const {
        if (constant_line) return static_cast<int128>(q);
        int128 c = static_cast<int128>(q) - 1;
        for (long long i = 0; i < exact_degree; ++i) c *= static_cast<int128>(q);
        return c;
    }
};

std::vector<Slot> stratum_slots(const StratumSpec& s) {
    const auto& k = s.kappa.entries();
    const std::size_t n = k.size() - 1;
    std::vector<Slot> slots;
    slots.reserve(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        const bool last = i == n;
        if ((last && k[i] == 1) || (!last && k[i] == 0))
            slots.push_back({true, 0});
        else
            slots.push_back({false, k[i] / static_cast<long long>(s.p)});
    }
    return slots;
}

void validate_stratum(const StratumSpec& s) {
    const auto& k = s.kappa.entries();
    const auto p = static_cast<long long>(s.p);
    auto fail = [&](const std::string& why) {
        throw DomainError("invalid stratum signature " + s.kappa.to_string() + " for d=" +
                          std::to_string(s.d) + ", p=" + std::to_string(s.p) + ": " + why);
    };
    if (s.d < 1) fail("degree must be >= 1");
    if (s.kappa.sum() != s.d) fail("entries must sum to the degree");
    const std::size_t n = k.size() - 1;
    const bool last_is_slope = k[n] == 1 && !(n == 0 && s.d % p == 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] % p != 0) fail("entry " + std::to_string(i) + " must be a multiple of p");
        if (i >= 1 && k[i] < p) fail("interior entries must be at least p");
    }
    if (last_is_slope) {
        if (s.d % p != 1) fail("a trailing 1 requires d = 1 mod p");
    } else {
        if (k[n] % p != 0 || (n >= 1 && k[n] < p) || (n == 0 && k[n] < 1))
            fail("final entry must be a positive multiple of p");
        if (s.d % p != 0) fail("an inseparable tail requires d = 0 mod p");
    }
}

void signatures_rec(long long remaining, long long p, bool slope_tail,
                    std::vector<long long>& acc, std::vector<Signature>& out) {
    // acc holds kappa_0..kappa_i; extend with interior multiples of p and
    // close with either a final multiple (p | d) or the slope entry 1.
    if (!slope_tail && remaining == 0 && acc.size() >= 1) {
        out.emplace_back(acc);
        return;
    }
    if (slope_tail && remaining == 1) {
        acc.push_back(1);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (long long part = p; part <= remaining; part += p) {
        acc.push_back(part);
        signatures_rec(remaining - part, p, slope_tail, acc, out);
        acc.pop_back();
    }
}

} // namespace

StratumSpec::StratumSpec(long long d_, std::uint64_t p_, Signature kappa_)
    : d(d_), p(p_), kappa(std::move(kappa_)) {
    validate_stratum(*this);
}

CountPolynomial::CountPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CountPolynomial CountPolynomial::q_power(std::size_t j) {
    std::vector<long long> c(j + 1, 0);
    c[j] = 1;
    return CountPolynomial(std::move(c));
}

CountPolynomial CountPolynomial::q_minus_one() { return CountPolynomial({-1, 1}); }

long long CountPolynomial::degree() const {
    return static_cast<long long>(c_.size()) - 1;
}

long long CountPolynomial::leading_coeff() const {
    if (c_.empty()) throw DomainError("zero count polynomial has no leading coefficient");
    return c_.back();
}

CountPolynomial CountPolynomial::operator+(const CountPolynomial& o) const {
    std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return CountPolynomial(std::move(c));
}

CountPolynomial CountPolynomial::operator*(const CountPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return CountPolynomial();
    std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    return CountPolynomial(std::move(c));
}

__int128 CountPolynomial::eval(std::uint64_t q) const {
    int128 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * static_cast<int128>(q) + c_[i];
        if (i == 0) break;
    }
    return acc;
}

std::string CountPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const long long v = c_[i];
        if (v != 0) {
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << '-';
            first = false;
            const long long a = v < 0 ? -v : v;
            if (a != 1 || i == 0) os << a;
            if (i > 0) {
                if (a != 1) os << '*';
                os << 'q';
                if (i > 1) os << '^' << i;
            }
        }
        if (i == 0) break;
    }
    return os.str();
}

std::vector<Signature> valid_signatures(long long d, std::uint64_t p) {
    std::vector<Signature> out;
    if (d < 1) throw DomainError("degree must be >= 1");
    const auto pp = static_cast<long long>(p);
    const long long rem = d % pp;
    if (rem != 0 && rem != 1) return out;

    std::vector<long long> acc;
    const bool slope_tail = rem == 1;
    if (slope_tail && d == 1) out.emplace_back(std::vector<long long>{1});
    // kappa_0 ranges over multiples of p including 0.
    for (long long k0 = 0; k0 <= d; k0 += pp) {
        acc.assign(1, k0);
        signatures_rec(d - k0, pp, slope_tail, acc, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long signature_ram_at_infinity(const Signature& kappa) {
    const auto& k = kappa.entries();
    if (k[0] > 0) return k[0];
    if (k.size() < 2) throw DomainError("signature (0) has no associated map");
    return k[1];
}

void enumerate_stratum(const StratumSpec& s, const FieldSpec& field,
                       const std::function<void(const RatFunc&)>& sink, std::uint64_t limit) {
    if (field.characteristic() != s.p)
        throw DomainError("field characteristic does not match the stratum");
    const std::uint64_t q = field.order();
    const std::vector<Slot> slots = stratum_slots(s);

    int128 total = static_cast<int128>(q) - 1; // the slope slot
    for (const Slot& slot : slots) total *= slot.count(q);
    if (total > static_cast<int128>(limit))
        throw LimitError("stratum enumeration above the configured limit");

    const std::vector<FieldElem> elems = enumerate_field(field, limit);

    // Materialize the polynomial choices for one slot.
    auto slot_polys = [&](const Slot& slot) {
        std::vector<Poly> polys;
        if (slot.constant_line) {
            for (const auto& e : elems) polys.push_back(Poly::constant(e));
            return polys;
        }
        const auto deg = static_cast<std::size_t>(slot.exact_degree);
        std::uint64_t lower = 1;
        for (std::size_t i = 0; i < deg; ++i) lower *= q;
        for (std::uint64_t lead = 1; lead < q; ++lead) {
            for (std::uint64_t rest = 0; rest < lower; ++rest) {
                std::vector<FieldElem> c;
                c.reserve(deg + 1);
                std::uint64_t r = rest;
                for (std::size_t i = 0; i < deg; ++i) {
                    c.push_back(elems[r % q]);
                    r /= q;
                }
                c.push_back(elems[lead]);
                polys.emplace_back(field, std::move(c));
            }
        }
        return polys;
    };

    std::vector<std::vector<Poly>> choices;
    choices.reserve(slots.size());
    for (const Slot& slot : slots) choices.push_back(slot_polys(slot));

    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
        UnicriticalForm u{{}, FieldElem::one(field)};
        u.q.reserve(slots.size());
        for (std::size_t i = 0; i < slots.size(); ++i) u.q.push_back(choices[i][idx[i]]);
        for (std::uint64_t ai = 1; ai < q; ++ai) {
            u.a = elems[ai];
            sink(build_from_form(u));
        }
        std::size_t pos = slots.size();
        while (pos-- > 0) {
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
    }
}

std::vector<RatFunc> enumerate_stratum(const StratumSpec& s, const FieldSpec& field,
                                       std::uint64_t limit) {
    std::vector<RatFunc> out;
    enumerate_stratum(s, field, [&](const RatFunc& phi) { out.push_back(phi); }, limit);
    return out;
}

unsigned long long stratum_count(const StratumSpec& s, std::uint64_t q) {
    if (q < 2) throw DomainError("field size must be at least 2");
    int128 total = static_cast<int128>(q) - 1;
    for (const Slot& slot : stratum_slots(s)) total *= slot.count(q);
    if (total > static_cast<int128>(~0ull >> 1))
        throw LimitError("stratum count overflows");
    return static_cast<unsigned long long>(total);
}

CountPolynomial stratum_count_poly(const StratumSpec& s) {
    CountPolynomial acc = CountPolynomial::q_minus_one(); // the slope slot
    for (const Slot& slot : stratum_slots(s)) {
        if (slot.constant_line)
            acc = acc * CountPolynomial::q_power(1);
        else
            acc = acc * CountPolynomial::q_minus_one() *
                  CountPolynomial::q_power(static_cast<std::size_t>(slot.exact_degree));
    }
    return acc;
}

CountPolynomial total_count_poly(long long d, std::uint64_t p) {
    CountPolynomial acc;
    for (const Signature& kappa : valid_signatures(d, p))
        acc = acc + stratum_count_poly(StratumSpec(d, p, kappa));
    return acc;
}

void for_each_rat_point(long long d, const FieldSpec& field,
                        const std::function<void(const RatFunc&)>& sink, std::uint64_t limit) {
    if (d < 1) throw DomainError("Rat_d scan requires d >= 1");
    const std::uint64_t q = field.order();
    const auto width = static_cast<std::size_t>(2 * d + 2);

    const int128 lim = static_cast<int128>(limit);
    int128 candidates = 0;
    int128 power = 1;
    for (std::size_t i = 0; i < width; ++i) {
        candidates += power;
        if (candidates > lim) break;
        if (i + 1 < width) {
            if (power > lim) { // the next term alone would blow the budget
                candidates = lim + 1;
                break;
            }
            power *= static_cast<int128>(q);
        }
    }
    if (candidates > lim)
        throw LimitError("projective scan of " + int128_to_string(candidates) +
                         " candidates above the limit " + std::to_string(limit));

    const std::vector<FieldElem> elems = enumerate_field(field, limit);
    const FieldElem zero = FieldElem::zero(field);
    const auto dd = static_cast<std::size_t>(d);

    // Canonical projective representatives: leading zeros, then a 1, then a
    // free tail. Coordinates are (a_d, ..., a_0, b_d, ..., b_0).
    std::vector<FieldElem> coords(width, zero);
    for (std::size_t lead = 0; lead < width; ++lead) {
        for (std::size_t i = 0; i < lead; ++i) coords[i] = zero;
        coords[lead] = FieldElem::one(field);
        const std::size_t tail = width - lead - 1;
        std::vector<std::uint64_t> odo(tail, 0);
        while (true) {
            for (std::size_t i = 0; i < tail; ++i) coords[lead + 1 + i] = elems[odo[i]];

            // Exclude the resultant locus: a common projective root exists
            // iff both formal leading coefficients vanish or gcd(f, g) is
            // nonconstant.
            if (!coords[0].is_zero() || !coords[dd + 1].is_zero()) {
                std::vector<FieldElem> fc(coords.rend() - static_cast<long>(dd) - 1,
                                          coords.rend());
                std::vector<FieldElem> gc(coords.rbegin(),
                                          coords.rbegin() + static_cast<long>(dd) + 1);
                Poly f(field, std::move(fc));
                Poly g(field, std::move(gc));
                if (!f.is_zero() && !g.is_zero() && gcd(f, g).is_constant())
                    sink(RatFunc(std::move(f), std::move(g)));
            }

            std::size_t pos = tail;
            bool done = true;
            while (pos-- > 0) {
                if (++odo[pos] < q) {
                    done = false;
                    break;
                }
                odo[pos] = 0;
            }
            if (done) break;
        }
    }
}

std::vector<RatFunc> brute_force_unicritical_at_infinity(long long d, const FieldSpec& field,
                                                         std::uint64_t limit) {
    std::vector<RatFunc> out;
    for_each_rat_point(
        d, field,
        [&](const RatFunc& phi) {
            const Poly w = phi.wronskian();
            if (!w.is_zero() && w.is_constant()) out.push_back(phi);
        },
        limit);
    return out;
}

namespace {

// Exact rational number over int128, for divided differences.
struct Fraction {
    int128 num = 0;
    int128 den = 1;

    static int128 gcd128(int128 a, int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Fraction operator-(const Fraction& o) const {
        Fraction r{num * o.den - o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Fraction divided_by_int(int128 v) const {
        Fraction r{num, den * v};
        r.reduce();
        return r;
    }
    bool is_zero() const { return num == 0; }
};

} // namespace

long long count_polynomial_degree(long long d, std::uint64_t p,
                                  const std::vector<std::uint64_t>& qs) {
    if (qs.size() < 2) throw DomainError("need at least two sample points");
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (qs[i] < 2) throw DomainError("sample points must be at least 2");
        for (std::size_t j = i + 1; j < qs.size(); ++j)
            if (qs[i] == qs[j]) throw DomainError("sample points must be distinct");
    }

    const std::vector<Signature> sigs = valid_signatures(d, p);
    if (sigs.empty()) throw DomainError("empty unicritical locus: no count polynomial");

    std::vector<Fraction> table;
    table.reserve(qs.size());
    for (std::uint64_t q : qs) {
        int128 total = 0;
        for (const Signature& kappa : sigs)
            total += static_cast<int128>(stratum_count(StratumSpec(d, p, kappa), q));
        table.push_back(Fraction{total, 1});
    }

    long long top_nonzero = -1;
    for (std::size_t order = 0; order < qs.size(); ++order) {
        bool any = false;
        for (std::size_t i = 0; i + order < qs.size(); ++i)
            if (!table[i].is_zero()) any = true;
        if (any) top_nonzero = static_cast<long long>(order);
        // Next order of divided differences.
        if (order + 1 < qs.size()) {
            for (std::size_t i = 0; i + order + 1 < qs.size(); ++i) {
                const int128 dq = static_cast<int128>(qs[i + order + 1]) - static_cast<int128>(qs[i]);
                table[i] = (table[i + 1] - table[i]).divided_by_int(dq);
            }
            table.resize(qs.size() - order - 1);
        }
    }
    if (top_nonzero == static_cast<long long>(qs.size()) - 1)
        throw DomainError("insufficient sample points to determine the degree");
    return top_nonzero;
}

long long dimension_unicritical_at_infinity(long long d, std::uint64_t p) {
    if (d < 2) throw DomainError("dimension formulas require degree >= 2");
    const auto pp = static_cast<long long>(p);
    if (d % pp == 0) return 2 + 2 * d / pp;
    if (d % pp == 1) return 3 + 2 * (d - 1) / pp;
    throw DomainError("the unicritical locus is empty for this degree");
}

long long dimension_unicritical_locus(long long d, std::uint64_t p) {
    return dimension_unicritical_at_infinity(d, p) + 1;
}

long long classes_dimension(long long d, long long e, std::uint64_t p) {
    const auto pp = static_cast<long long>(p);
    if (d < 2 || e < 2) throw DomainError("ramification classes require d, e > 1");
    if (e % pp != 0) throw DomainError("ramification index must be divisible by p");
    if (e > d) throw DomainError("ramification index cannot exceed the degree");
    if (d % pp == 0) return (2 * d - e) / pp;
    if (d % pp == 1) return 1 + (2 * d - 2 - e) / pp;
    throw DomainError("degree must be 0 or 1 mod p");
}

CountPolynomial classes_count_poly(long long d, long long e, std::uint64_t p) {
    const auto pp = static_cast<long long>(p);
    if (d < 2 || e < 2) throw DomainError("ramification classes require d, e > 1");
    if (e % pp != 0) throw DomainError("ramification index must be divisible by p");
    CountPolynomial acc;
    for (const Signature& kappa : valid_signatures(d, p))
        if (signature_ram_at_infinity(kappa) == e)
            acc = acc + stratum_count_poly(StratumSpec(d, p, kappa));
    return acc;
}

namespace {

std::string map_key(const RatFunc& phi) {
    std::string key;
    for (const FieldElem& e : phi.proj_coords()) {
        key += std::to_string(e.index());
        key += ',';
    }
    return key;
}

} // namespace

CountReport census(long long d, const FieldSpec& field, bool with_brute, std::uint64_t limit) {
    CountReport report;
    report.q = field.order();

    std::set<std::string> enumerated;
    for (const Signature& kappa : valid_signatures(d, field.characteristic())) {
        const StratumSpec stratum(d, field.characteristic(), kappa);
        unsigned long long seen = 0;
        enumerate_stratum(
            stratum, field,
            [&](const RatFunc& phi) {
                ++seen;
                if (!enumerated.insert(map_key(phi)).second)
                    report.agree = false; // duplicate inside or across strata
            },
            limit);
        const unsigned long long closed = stratum_count(stratum, field.order());
        if (closed != seen) report.agree = false;
        report.strata.push_back({kappa, closed});
        report.total += closed;
    }

    if (with_brute) {
        std::set<std::string> oracle;
        for (const RatFunc& phi : brute_force_unicritical_at_infinity(d, field, limit))
            oracle.insert(map_key(phi));
        report.brute_total = oracle.size();
        if (oracle != enumerated) report.agree = false;
    }
    return report;
}

bool is_y_form(const RatFunc& phi) {
    const FieldSpec& spec = phi.spec();
    const CritReport rep = is_unicritical(phi);
    if (!rep.unicritical_at || !rep.unicritical_at->is_infinity()) return false;
    const ProjPoint at_inf = phi.eval(ProjPoint::infinity(spec));
    const ProjPoint at_zero = phi.eval(FieldElem::zero(spec));
    return at_inf == ProjPoint::finite(FieldElem::zero(spec)) &&
           at_zero == ProjPoint::finite(FieldElem::one(spec));
}

namespace {

// P^1 arithmetic for the continued-fraction tail value at 0.
ProjPoint p1_reciprocal(const ProjPoint& x) {
    const FieldSpec& spec = x.spec();
    if (x.is_infinity()) return ProjPoint::finite(FieldElem::zero(spec));
    if (x.value().is_zero()) return ProjPoint::infinity(spec);
    return ProjPoint::finite(x.value().inverse());
}

ProjPoint p1_add_constant(const FieldElem& c, const ProjPoint& x) {
    if (x.is_infinity()) return x;
    return ProjPoint::finite(c + x.value());
}

// The constant-term relation satisfied by every Y-form expansion
// [0, q_1(z^p), ..., q_n(z^p) + a z]: evaluating at 0 forces
// q_1(0) = 1 - 1/(q_2(0) + 1/(... + 1/q_n(0))), the empty tail reading as
// q_1(0) = 1. Violations indicate an internal inconsistency.
void check_y_constant_relation(const RatFunc& psi) {
    const auto form = detect_unicritical_form(psi);
    if (!form) throw Error("internal: Y-form map lost its unicritical form");
    const auto& q = form->q;
    if (q.size() < 2 || !q[0].is_zero())
        throw Error("internal: Y-form expansion must start with a zero quotient");
    const FieldSpec& spec = psi.spec();
    const FieldElem zero = FieldElem::zero(spec);
    const FieldElem one = FieldElem::one(spec);

    ProjPoint beta = ProjPoint::finite(one);
    if (q.size() > 2) {
        // Tail value T = q_2(0) + 1/(q_3(0) + ... + 1/q_n(0)); the slope
        // contributes a*0 = 0 to the last quotient.
        ProjPoint tail = ProjPoint::finite(q.back()(zero));
        for (std::size_t i = q.size() - 2; i >= 2; --i)
            tail = p1_add_constant(q[i](zero), p1_reciprocal(tail));
        if (tail.is_infinity())
            beta = ProjPoint::finite(one);
        else if (tail.value().is_zero())
            beta = ProjPoint::infinity(spec);
        else
            beta = ProjPoint::finite(one - tail.value().inverse());
    }
    if (beta != ProjPoint::finite(q[1](zero)))
        throw Error("internal: Y-form constant relation q_1(0) = beta violated");
}

} // namespace

RatFunc normal_form_Y(const RatFunc& phi) {
    const CritReport rep = is_unicritical(phi);
    if (!rep.unicritical_at) throw DomainError("map is not unicritical");
    const ProjPoint c = *rep.unicritical_at;
    const ProjPoint v1 = phi.eval(c);
    const ProjPoint v2 = phi.eval(v1);
    if (c == v1 || c == v2 || v1 == v2)
        throw DomainError("degenerate critical orbit: c, phi(c), phi^2(c) must be distinct");

    const MobiusMap sigma = MobiusMap::sending_reference_triple_to(c, v1, v2);
    RatFunc psi = conjugate(sigma, phi);

    if (!is_y_form(psi)) throw Error("internal: conjugated map is not in Y form");
    check_y_constant_relation(psi);
    return psi;
}

bool quadric_membership_p(const RatFunc& phi) {
    const FieldSpec& spec = phi.spec();
    const auto p = static_cast<long long>(spec.characteristic());
    if (phi.degree() != p)
        throw DomainError("quadric membership applies to maps of degree p");
    for (long long j = 2; j < p; ++j) {
        if (!phi.num().coeff(static_cast<std::size_t>(j)).is_zero() ||
            !phi.den().coeff(static_cast<std::size_t>(j)).is_zero())
            throw DomainError("coefficients must be supported on exponents 0, 1, p");
    }
    const FieldElem ap = phi.num().coeff(static_cast<std::size_t>(p));
    const FieldElem a1 = phi.num().coeff(1);
    const FieldElem a0 = phi.num().coeff(0);
    const FieldElem bp = phi.den().coeff(static_cast<std::size_t>(p));
    const FieldElem b1 = phi.den().coeff(1);
    const FieldElem b0 = phi.den().coeff(0);

    const bool quadric = (a1 * bp - ap * b1).is_zero();
    const bool res_ok = !resultant_dd(phi.num(), phi.den(), p).is_zero();
    const bool derivative_ok = !(a1 * b0 - a0 * b1).is_zero();
    return quadric && res_ok && derivative_ok;
}

FieldElem LdPoint::unit() const { return (f2 * g1 - f1 * g2).coeff(0); }

LdPoint ld_decompose(const RatFunc& phi) {
    const Poly w = phi.wronskian();
    if (w.is_zero() || !w.is_constant())
        throw DomainError("map has a finite critical point (or is inseparable)");
    const FieldSpec& spec = phi.spec();
    const std::uint64_t p = spec.characteristic();

    auto split = [&](const Poly& f) {
        std::vector<FieldElem> even, odd; // exponents 0 mod p / 1 mod p
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            const FieldElem& e = f.coeffs()[i];
            if (e.is_zero()) continue;
            if (i % p == 0) {
                even.resize(i / p, FieldElem::zero(spec));
                even.push_back(e);
            } else if (i % p == 1) {
                odd.resize((i - 1) / p, FieldElem::zero(spec));
                odd.push_back(e);
            } else {
                throw DomainError("coefficient exponent not 0 or 1 mod p");
            }
        }
        return std::make_pair(Poly(spec, std::move(even)), Poly(spec, std::move(odd)));
    };

    auto [f1, f2] = split(phi.num());
    auto [g1, g2] = split(phi.den());
    const Poly unit = f2 * g1 - f1 * g2;
    if (!unit.is_constant() || unit.is_zero())
        throw Error("internal: f2 g1 - f1 g2 is not a nonzero constant");
    return LdPoint{std::move(f1), std::move(f2), std::move(g1), std::move(g2)};
}

} // namespace unicrit
