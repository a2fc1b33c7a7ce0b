#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mappell/appell.hpp"
#include "mappell/verify.hpp"

using namespace mappell;

namespace {

AppellSeed delta_seed(const Rational &omega, unsigned arity, unsigned order)
{
    AppellSeed seed;
    seed.omega = omega;
    seed.arity = arity;
    seed.order = order;
    seed.coeffs[MultiIndex::zero(arity)] = 1;
    return seed;
}

AppellSeed random_seed(std::uint64_t &state, const Rational &omega, unsigned arity, unsigned order)
{
    AppellSeed seed;
    seed.omega = omega;
    seed.arity = arity;
    seed.order = order;
    for_each_index(arity, order, [&](const MultiIndex &k) {
        seed.coeffs[k] = random_rational(state, false);
    });
    return seed;
}

} // namespace

TEST_CASE("seed validation")
{
    AppellSeed bad = delta_seed(Rational(1), 2, 4);
    bad.coeffs[MultiIndex::zero(2)] = 0;
    CHECK_THROWS_AS(bad.validate(), degenerate_seed_error);
    bad = delta_seed(Rational(0), 2, 4);
    CHECK_THROWS_AS(bad.validate(), invalid_step_error);
}

TEST_CASE("delta seed yields the falling-factorial basis family")
{
    for (const Rational omega : {Rational(1), Rational(1, 2), Rational(-2)}) {
        const AppellFamily family = build_via_c(delta_seed(omega, 2, 5));
        const auto via_e = build_via_e(family.seed());
        for_each_index(2, 5, [&](const MultiIndex &n) {
            CHECK(family.at(n) == FFPoly::basis(n.total(), omega));
            CHECK(via_e.at(n) == FFPoly::basis(n.total(), omega));
        });
    }
}

TEST_CASE("charlier seed reproduces the multiple Charlier polynomials")
{
    const CharlierParams params{{Rational(1), Rational(2)}};
    const AppellFamily family = build_via_c(charlier_seed(params, 5));
    for_each_index(2, 5, [&](const MultiIndex &n) {
        CHECK(family.at(n) == charlier_explicit(n, params));
    });
}

TEST_CASE("the three constructions coincide and both checks pass")
{
    std::uint64_t state = 31;
    unsigned instance = 0;
    for (const Rational omega : {Rational(1), Rational(1, 2), Rational(-2)}) {
        for (unsigned arity : {2u, 3u}) {
            const unsigned order = arity == 3 ? 3u : 4u;
            const AppellSeed seed = random_seed(state, omega, arity, order);
            const AppellFamily family = build_via_c(seed);
            const auto via_b = build_via_b(seed);
            const auto via_e = build_via_e(seed);
            for_each_index(arity, order, [&](const MultiIndex &n) {
                CHECK(via_b.at(n) == family.at(n));
                CHECK(via_e.at(n) == family.at(n));
            });
            CHECK(check_appell_property(family, order).ok);
            CHECK(check_addition_formula(family, order).ok);
            ++instance;
        }
    }
    CHECK(instance == 6);
}

TEST_CASE("degree and leading coefficient")
{
    std::uint64_t state = 55;
    const AppellSeed seed = random_seed(state, Rational(2, 3), 2, 4);
    const AppellFamily family = build_via_c(seed);
    const Rational lead = seed.coeff(MultiIndex::zero(2));
    for_each_index(2, 4, [&](const MultiIndex &n) {
        CHECK(family.at(n).degree() == static_cast<int>(n.total()));
        CHECK(family.at(n).coeff(n.total()) == lead);
    });
    CHECK(family.at(MultiIndex::zero(2)) == FFPoly::constant(Rational(2, 3), lead));
}

TEST_CASE("corrupted family fails the difference property")
{
    const AppellFamily family = build_via_c(charlier_seed(CharlierParams{{Rational(1), Rational(2)}}, 4));
    const MultiIndex bad({1u, 1u});
    const FamilyFn corrupted = [&](const MultiIndex &n) {
        FFPoly p = family.at(n);
        if (n == bad) {
            p = p + FFPoly::constant(Rational(1), Rational(1, 3)) * FFPoly::basis(1, Rational(1));
        }
        return p;
    };
    const auto verdict = check_appell_property(corrupted, Rational(1), 2, 4);
    CHECK_FALSE(verdict.ok);
    bool found = false;
    for (const auto &[idx, residual] : verdict.failures) {
        CHECK_FALSE(residual.is_zero());
        found = found || idx == bad;
    }
    CHECK(found);
}

TEST_CASE("seed recovery round-trips")
{
    std::uint64_t state = 77;
    for (const Rational omega : {Rational(1), Rational(-1, 3)}) {
        const AppellSeed seed = random_seed(state, omega, 2, 4);
        const AppellSeed recovered = recover_seed(build_via_c(seed));
        for_each_index(2, 4, [&](const MultiIndex &k) {
            CHECK(recovered.coeff(k) == seed.coeff(k));
        });
    }

    // Charlier family recovers the geometric seed.
    const CharlierParams params{{Rational(1), Rational(2)}};
    const AppellSeed recovered = recover_seed(build_via_c(charlier_seed(params, 4)));
    for_each_index(2, 4, [&](const MultiIndex &k) {
        CHECK(recovered.coeff(k) == pow_rational(Rational(-1), k[0]) * pow_rational(Rational(-2), k[1]));
    });

    // The basis family recovers the delta seed.
    const AppellSeed basis_seed = recover_seed(build_via_c(delta_seed(Rational(1), 2, 3)));
    for_each_index(2, 3, [&](const MultiIndex &k) {
        CHECK(basis_seed.coeff(k) == (k.is_zero() ? Rational(1) : Rational(0)));
    });
}

TEST_CASE("indices beyond the seed order are refused")
{
    const AppellFamily family = build_via_c(delta_seed(Rational(1), 2, 3));
    CHECK_THROWS_AS(family.at(MultiIndex({2u, 2u})), out_of_order_error);
}
