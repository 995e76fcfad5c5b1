#include <doctest.h>

#include "testutil.hpp"
#include "unicrit/cfrac.hpp"
#include "unicrit/moduli.hpp"

using namespace unicrit;

namespace {

Poly P(const FieldSpec& spec, std::vector<std::int64_t> c) {
    return Poly::from_integers(spec, c);
}

// All well-formed quotient sequences over F_2 with total degree <= bound,
// every coefficient tuple included.
void for_each_contfrac_f2(long long bound,
                          const std::function<void(const ContFrac&)>& sink) {
    FieldSpec f2(2);
    std::vector<std::vector<Poly>> by_degree(static_cast<std::size_t>(bound) + 1);
    const auto elems = enumerate_field(f2);
    for (long long deg = 0; deg <= bound; ++deg) {
        const std::uint64_t count = 1ull << deg;
        for (std::uint64_t low = 0; low < count; ++low) {
            std::vector<FieldElem> c;
            for (long long i = 0; i < deg; ++i) c.push_back(elems[(low >> i) & 1]);
            c.push_back(elems[1]);
            by_degree[static_cast<std::size_t>(deg)].emplace_back(f2, std::move(c));
        }
    }
    // f_0: any polynomial of degree <= bound (including 0); f_i (i>=1):
    // nonconstant.
    std::vector<Poly> heads{Poly::zero(f2)};
    for (long long deg = 0; deg <= bound; ++deg)
        for (const Poly& f : by_degree[static_cast<std::size_t>(deg)]) heads.push_back(f);

    std::function<void(std::vector<Poly>&, long long)> extend =
        [&](std::vector<Poly>& acc, long long used) {
            sink(ContFrac(acc));
            for (long long deg = 1; deg + used <= bound; ++deg) {
                for (const Poly& f : by_degree[static_cast<std::size_t>(deg)]) {
                    acc.push_back(f);
                    extend(acc, used + deg);
                    acc.pop_back();
                }
            }
        };
    for (const Poly& head : heads) {
        std::vector<Poly> acc{head};
        extend(acc, head.degree().plus());
    }
}

} // namespace

TEST_CASE("expansion") {
    FieldSpec f2(2);
    // a polynomial expands to itself
    const RatFunc poly = RatFunc::from_poly(P(f2, {1, 1, 0, 1}));
    CHECK(expand(poly).quotients() == std::vector<Poly>{P(f2, {1, 1, 0, 1})});
    // 1/z = [0, z]
    const RatFunc recip(Poly::one(f2), P(f2, {0, 1}));
    CHECK(expand(recip).quotients() == std::vector<Poly>{Poly::zero(f2), P(f2, {0, 1})});
    // (z^2+1)/z = [z, z]
    const RatFunc phi(P(f2, {1, 0, 1}), P(f2, {0, 1}));
    CHECK(expand(phi).quotients() == std::vector<Poly>{P(f2, {0, 1}), P(f2, {0, 1})});
    // constants expand to a single quotient
    CHECK(expand(RatFunc::from_poly(Poly::one(f2))).size() == 1);
    CHECK_THROWS_AS(expand(RatFunc::constant_infinity(f2)), DomainError);
}

TEST_CASE("reconstruction") {
    FieldSpec f2(2);
    CHECK(reconstruct(ContFrac({Poly::zero(f2), P(f2, {0, 1})})) ==
          RatFunc(Poly::one(f2), P(f2, {0, 1})));
    CHECK(reconstruct(ContFrac({P(f2, {0, 1}), P(f2, {0, 1})})) ==
          RatFunc(P(f2, {1, 0, 1}), P(f2, {0, 1})));
    // the degree-4 map [1, z^2, z^2+z]
    const RatFunc big = reconstruct(ContFrac({P(f2, {1}), P(f2, {0, 0, 1}), P(f2, {0, 1, 1})}));
    CHECK(big.degree() == 4);
    // malformed: constant interior quotient
    CHECK_THROWS_AS(ContFrac({P(f2, {0, 1}), P(f2, {1})}), DomainError);
}

TEST_CASE("round trip, exhaustive for degree <= 3 over F_2 and F_3") {
    for (const FieldSpec& spec : {FieldSpec(2), FieldSpec(3)}) {
        for (long long d = 1; d <= 3; ++d) {
            for_each_rat_point(d, spec, [&](const RatFunc& phi) {
                CHECK(reconstruct(expand(phi)) == phi);
            });
        }
        // constants round trip as well
        for (const FieldElem& c : enumerate_field(spec)) {
            const RatFunc constant = RatFunc::from_poly(Poly::constant(c));
            CHECK(reconstruct(expand(constant)) == constant);
        }
    }
}

TEST_CASE("degree formula for all well-formed sequences of total degree <= 5 over F_2") {
    long long checked = 0;
    for_each_contfrac_f2(5, [&](const ContFrac& c) {
        long long expected = c.quotients().front().degree().plus();
        for (std::size_t i = 1; i < c.size(); ++i)
            expected += c.quotients()[i].degree().finite_value();
        const RatFunc phi = reconstruct(c);
        CHECK(phi.degree() == expected);
        ++checked;
    });
    CHECK(checked > 1000);
}

TEST_CASE("signature") {
    FieldSpec f2(2);
    CHECK(signature(RatFunc::from_poly(P(f2, {0, 1, 1}))) ==
          Signature({2})); // z^2+z
    CHECK(signature(RatFunc(P(f2, {1, 0, 1}), P(f2, {0, 1}))) == Signature({1, 1}));
    // kappa_0 absorbs a zero head
    CHECK(signature(RatFunc(Poly::one(f2), P(f2, {0, 1}))) == Signature({0, 1}));
    CHECK(signature(RatFunc::from_poly(Poly::one(f2))).sum() == 0);

    // the generic signature (0, p, ..., p) comes from its parameterization
    const RatFunc generic =
        reconstruct(ContFrac({P(f2, {1}), P(f2, {0, 0, 1}), P(f2, {0, 1, 1})}));
    CHECK(signature(generic) == Signature({0, 2, 2}));
    CHECK_THROWS_AS(Signature({0, 0, 2}), DomainError);
}

TEST_CASE("detection of the unicritical form") {
    FieldSpec f2(2), f3(3);
    {
        // z^2 + z = z^p - z over F_2
        auto form = detect_unicritical_form(RatFunc::from_poly(P(f2, {0, 1, 1})));
        REQUIRE(form.has_value());
        CHECK(form->q == std::vector<Poly>{P(f2, {0, 1})});
        CHECK(form->a == FieldElem::one(f2));
    }
    {
        // z^3 - z over F_3
        auto form = detect_unicritical_form(RatFunc::from_poly(P(f3, {0, 2, 0, 1})));
        REQUIRE(form.has_value());
        CHECK(form->q == std::vector<Poly>{P(f3, {0, 1})});
        CHECK(form->a == FieldElem::from_integer(f3, 2));
    }
    // (z^2+1)/z has the separable head z
    CHECK_FALSE(detect_unicritical_form(RatFunc(P(f2, {1, 0, 1}), P(f2, {0, 1}))));
    {
        // [1, z^2, z^2+z] over F_2
        auto form = detect_unicritical_form(
            reconstruct(ContFrac({P(f2, {1}), P(f2, {0, 0, 1}), P(f2, {0, 1, 1})})));
        REQUIRE(form.has_value());
        CHECK(form->q == std::vector<Poly>{P(f2, {1}), P(f2, {0, 1}), P(f2, {0, 1})});
        CHECK(form->a == FieldElem::one(f2));
    }
    // inseparable maps are not of the form
    CHECK_FALSE(detect_unicritical_form(RatFunc::from_poly(P(f2, {0, 0, 1}))));
}

TEST_CASE("building from the form") {
    FieldSpec f2(2), f3(3), f5(5);
    // (q = (w), a = -1) gives z^p - z
    for (const FieldSpec& spec : {f2, f3, f5}) {
        const UnicriticalForm u{{Poly::parse(spec, "w")},
                                FieldElem::from_integer(spec, -1)};
        const Poly expected =
            Poly::monomial(FieldElem::one(spec), spec.characteristic()) +
            Poly::monomial(FieldElem::from_integer(spec, -1), 1);
        CHECK(build_from_form(u) == RatFunc::from_poly(expected));
    }
    // constant q_0 with n = 0 gives a degree-1 map
    const UnicriticalForm line{{P(f2, {1})}, FieldElem::one(f2)};
    CHECK(build_from_form(line) == RatFunc::from_poly(P(f2, {1, 1})));

    const UnicriticalForm generic{{P(f2, {1}), P(f2, {0, 1}), P(f2, {0, 1})},
                                  FieldElem::one(f2)};
    CHECK(build_from_form(generic) ==
          reconstruct(ContFrac({P(f2, {1}), P(f2, {0, 0, 1}), P(f2, {0, 1, 1})})));

    CHECK_THROWS_AS(build_from_form(UnicriticalForm{{P(f2, {1})}, FieldElem::zero(f2)}),
                    DomainError);
    // interior constant quotient
    CHECK_THROWS_AS(
        build_from_form(UnicriticalForm{{P(f2, {0, 1}), P(f2, {1}), P(f2, {0, 1})},
                                        FieldElem::one(f2)}),
        DomainError);
}

TEST_CASE("equivalence with the constant-Wronskian certificate, small configurations") {
    struct Config {
        FieldSpec spec;
        long long d;
    };
    const Config configs[] = {{FieldSpec(2), 2}, {FieldSpec(3), 3}};
    for (const auto& [spec, d] : configs) {
        long long unicritical = 0;
        for_each_rat_point(d, spec, [&](const RatFunc& phi) {
            const Poly w = phi.wronskian();
            const bool certificate = !w.is_zero() && w.is_constant();
            const auto form = detect_unicritical_form(phi);
            CHECK(certificate == form.has_value());
            if (form) {
                CHECK(build_from_form(*form) == phi);
                ++unicritical;
            }
        });
        CHECK(unicritical > 0);
    }
}

TEST_CASE("detect inverts build for 200 random witnesses per configuration") {
    struct Config {
        FieldSpec spec;
        long long d;
    };
    const Config configs[] = {{FieldSpec(2), 2},
                              {FieldSpec(2, 2, {1, 1, 1}), 2},
                              {FieldSpec(2), 3},
                              {FieldSpec(3), 3},
                              {FieldSpec(2), 4}};
    std::mt19937_64 rng(424242);
    for (const auto& [spec, d] : configs) {
        for (int trial = 0; trial < 200; ++trial) {
            const UnicriticalForm u = testutil::random_form(spec, d, rng);
            const RatFunc phi = build_from_form(u);
            CHECK(phi.degree() == d);
            const auto detected = detect_unicritical_form(phi);
            REQUIRE(detected.has_value());
            CHECK(detected->q == u.q);
            CHECK(detected->a == u.a);
        }
    }
}
