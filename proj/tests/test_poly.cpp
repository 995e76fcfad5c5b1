#include <doctest.h>

#include "unicrit/poly.hpp"

using namespace unicrit;

namespace {

Poly P(const FieldSpec& spec, std::vector<std::int64_t> c) {
    return Poly::from_integers(spec, c);
}

// All polynomials over spec with degree < len (coefficient tuples of size len).
std::vector<Poly> all_polys(const FieldSpec& spec, std::size_t len) {
    std::vector<Poly> out;
    const auto elems = enumerate_field(spec);
    const std::uint64_t q = spec.order();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < len; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<FieldElem> c;
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < len; ++i) {
            c.push_back(elems[t % q]);
            t /= q;
        }
        out.emplace_back(spec, std::move(c));
    }
    return out;
}

} // namespace

TEST_CASE("degree with negative infinity") {
    FieldSpec f2(2);
    CHECK(Poly::zero(f2).degree().is_neg_infinity());
    CHECK(Degree::neg_infinity() < Degree(-5));
    CHECK(Degree(0) > Degree::neg_infinity());
    CHECK((Degree::neg_infinity() + Degree(3)).is_neg_infinity());
    CHECK(Degree(2) + Degree(3) == Degree(5));
    CHECK(Degree::neg_infinity().plus() == 0);
    CHECK_THROWS_AS(Degree::neg_infinity().finite_value(), DomainError);
}

TEST_CASE("divmod") {
    FieldSpec f2(2);
    const Poly a = P(f2, {1, 1, 0, 1}); // z^3 + z + 1
    const Poly b = P(f2, {1, 0, 1});    // z^2 + 1
    auto [q, r] = divmod(a, b);
    CHECK(q == P(f2, {0, 1}));
    CHECK(r == Poly::one(f2));
    CHECK(b * q + r == a);

    auto [q2, r2] = divmod(a, a);
    CHECK(q2 == Poly::one(f2));
    CHECK(r2.is_zero());

    auto [q3, r3] = divmod(b, a); // deg b < deg a
    CHECK(q3.is_zero());
    CHECK(r3 == b);

    CHECK_THROWS_AS(divmod(a, Poly::zero(f2)), DomainError);
}

TEST_CASE("divmod round trip, exhaustive over F_2 up to degree 4") {
    FieldSpec f2(2);
    const auto polys = all_polys(f2, 5);
    for (const Poly& a : polys)
        for (const Poly& b : polys) {
            if (b.is_zero()) continue;
            auto [q, r] = divmod(a, b);
            CHECK(b * q + r == a);
            CHECK(r.degree() < b.degree());
        }
}

TEST_CASE("gcd") {
    FieldSpec f2(2);
    CHECK(gcd(P(f2, {0, 1, 1}), P(f2, {0, 1})) == P(f2, {0, 1}));      // gcd(z^2+z, z) = z
    CHECK(gcd(P(f2, {1, 0, 1}), P(f2, {1, 1})) == P(f2, {1, 1}));      // (z+1)^2 vs z+1
    CHECK(gcd(P(f2, {0, 1, 1}), Poly::zero(f2)) == P(f2, {0, 1, 1}));  // gcd(a, 0)
    FieldSpec f5(5);
    CHECK(gcd(P(f5, {0, 3}), Poly::zero(f5)) == P(f5, {0, 1})); // monic output
    CHECK_THROWS_AS(gcd(Poly::zero(f5), Poly::zero(f5)), DomainError);
}

TEST_CASE("derivative") {
    FieldSpec f2(2), f3(3);
    CHECK(derivative(P(f2, {0, 0, 1})).is_zero());          // D(z^2) = 0 in char 2
    CHECK(derivative(P(f3, {0, 0, 0, 1})).is_zero());       // D(z^3) = 0 in char 3
    CHECK(derivative(P(f2, {0, 0, 0, 1})) == P(f2, {0, 0, 1})); // D(z^3) = z^2 in char 2
    CHECK(derivative(P(f2, {0, 0, 1, 0, 1})).is_zero());    // D(z^4 + z^2) = 0
}

TEST_CASE("inseparability decomposition") {
    FieldSpec f2(2), f3(3);
    {
        auto [a1, a2] = insep_decompose(P(f2, {1, 0, 1, 1})); // z^3 + z^2 + 1
        CHECK(a1 == P(f2, {1, 1}));                           // w + 1
        CHECK(a2 == P(f2, {0, 0, 0, 1}));                     // z^3
        CHECK(inflate(a1, 1) + a2 == P(f2, {1, 0, 1, 1}));
    }
    {
        auto [a1, a2] = insep_decompose(P(f3, {0, 0, 0, 1})); // z^3 = z^p
        CHECK(a1 == P(f3, {0, 1}));
        CHECK(a2.is_zero());
    }
    {
        auto [a1, a2] = insep_decompose(P(f3, {0, 1, 2})); // exponents coprime to 3
        CHECK(a1.is_zero());
        CHECK(a2 == P(f3, {0, 1, 2}));
    }
}

TEST_CASE("decomposition re-expands, exhaustively over F_2 and F_3") {
    for (const FieldSpec& spec : {FieldSpec(2), FieldSpec(3)}) {
        for (const Poly& a : all_polys(spec, 5)) {
            auto [a1, a2] = insep_decompose(a);
            CHECK(inflate(a1, 1) + a2 == a);
            // Kernel of the derivative = purely inseparable polynomials.
            CHECK(derivative(a).is_zero() == a2.is_zero());
        }
    }
}

TEST_CASE("inflate") {
    FieldSpec f2(2), f3(3);
    CHECK(inflate(P(f2, {1, 1}), 1) == P(f2, {1, 0, 1}));            // w+1 -> z^2+1
    CHECK(inflate(P(f2, {1, 1, 1}), 0) == P(f2, {1, 1, 1}));         // identity
    CHECK(inflate(P(f3, {0, 0, 1}), 1) == Poly::monomial(FieldElem::one(f3), 6));
    CHECK(inflate(P(f2, {0, 1}), 2) == Poly::monomial(FieldElem::one(f2), 4));
}

TEST_CASE("resultant") {
    FieldSpec f2(2);
    const Poly z2 = P(f2, {0, 0, 1});
    CHECK(resultant_dd(z2, z2, 2).is_zero());                      // common roots
    CHECK(resultant_dd(z2, Poly::one(f2), 2) == FieldElem::one(f2)); // 4x4 identity
    CHECK(resultant_dd(P(f2, {1, 1}), P(f2, {0, 1}), 2).is_zero()); // both a_2 = b_2 = 0
    CHECK_THROWS_AS(resultant_dd(P(f2, {1, 0, 0, 1}), z2, 2), DomainError);
}

TEST_CASE("resultant vanishes iff common projective root, exhaustive") {
    auto run = [](const FieldSpec& spec, std::size_t len) {
        const long long d = static_cast<long long>(len) - 1;
        for (const Poly& f : all_polys(spec, len))
            for (const Poly& g : all_polys(spec, len)) {
                const bool both_lead_zero =
                    f.degree() < Degree(d) && g.degree() < Degree(d);
                bool common_affine = false;
                if (!f.is_zero() && !g.is_zero())
                    common_affine = !gcd(f, g).is_constant();
                else if (f.is_zero() != g.is_zero())
                    common_affine = !(f.is_zero() ? g : f).is_constant();
                else
                    common_affine = true; // both zero
                const bool expect_zero = both_lead_zero || common_affine;
                CHECK(resultant_dd(f, g, d).is_zero() == expect_zero);
            }
    };
    run(FieldSpec(2), 3);
    run(FieldSpec(2), 4);
    run(FieldSpec(3), 3);
}

TEST_CASE("evaluation") {
    FieldSpec f2(2);
    CHECK(P(f2, {1, 0, 1})(FieldElem::one(f2)).is_zero());
    CHECK(Poly::zero(f2)(FieldElem::one(f2)).is_zero());

    FieldSpec f4(2, 2, {1, 1, 1});
    FieldElem u = FieldElem::generator(f4);
    CHECK(P(f4, {1, 1, 0, 1})(u) == u); // (z^3 + z + 1)(u) = 1 + u + 1 = u
}

TEST_CASE("polynomial text round trip") {
    FieldSpec f3(3);
    const Poly f = Poly::parse(f3, "z^3 + 2*z + 1");
    CHECK(f == P(f3, {1, 2, 0, 1}));
    CHECK(f.to_string() == "z^3 + 2*z + 1");
    CHECK(Poly::parse(f3, "0").is_zero());
    CHECK(Poly::parse(f3, "w^2 + w") == P(f3, {0, 1, 1}));
    CHECK(Poly::parse(f3, "z - 1") == P(f3, {2, 1}));
    CHECK(Poly::parse(f3, "4") == P(f3, {1}));
    CHECK_THROWS_AS(Poly::parse(f3, "z + y"), ParseError);
    CHECK_THROWS_AS(Poly::parse(f3, "z^"), ParseError);
    CHECK_THROWS_AS(Poly::parse(f3, ""), ParseError);
}
