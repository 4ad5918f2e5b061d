#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brauer/central.hpp"
#include "brauer/golden.hpp"
#include "helpers.hpp"

using namespace brauer;
using brauer::testing::make_diagram;

namespace {

RationalFunction inv_d() { return RationalFunction(Polynomial(1), Polynomial::x()); }

CentralElement phi_2_0_by_hand() {
    CentralElement x = CentralElement::one(2);
    x.set(SporeTableau::from_rows({"NS"}), -inv_d());
    return x;
}

CentralElement random_central(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> c(-4, 4);
    CentralElement x(n);
    for (const auto& t : enumerate_spores(n, n)) x.set(t, RationalFunction(c(rng)));
    return x;
}

/// Plain product oracle: no common-denominator bookkeeping, straightforward
/// rational-function accumulation over all diagram pairs.
DiagramVector product_oracle(const DiagramVector& a, const DiagramVector& b) {
    DiagramVector out(a.n());
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            auto [prod, loops] = compose(da, db);
            out.add(prod, ca * cb * RationalFunction(Polynomial(1).shifted(loops)));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("expansion", "[central]") {
    DiagramVector v = expand(phi_2_0_by_hand());
    REQUIRE(v.terms().size() == 2);
    CHECK(v.coeff(Diagram::identity(2)) == RationalFunction(1));
    CHECK(v.coeff(generator_u(1, 2)) == -inv_d());

    CHECK(expand(CentralElement(3)).is_zero());

    // One full-rank class of B_4 spans six diagrams.
    CentralElement d(4);
    d.set(SporeTableau::from_rows({"NSNS"}), RationalFunction(1));
    DiagramVector dv = expand(d);
    CHECK(dv.terms().size() == 6);
    for (const auto& [diag, c] : dv.terms()) CHECK(c == RationalFunction(1));
}

TEST_CASE("contraction", "[central]") {
    std::mt19937 rng(9100);
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i < 10; ++i) {
            CentralElement x = random_central(rng, n);
            CHECK(contract(expand(x)) == x);
        }
    }

    // u_1 alone is not invariant in B_3; its full class is.
    DiagramVector lone(3);
    lone.add(generator_u(1, 3), RationalFunction(1));
    CHECK_THROWS_AS(contract(lone), NonInvariantError);

    DiagramVector full(3);
    full.add(generator_u(1, 3), RationalFunction(1));
    full.add(generator_u(2, 3), RationalFunction(1));
    full.add(make_diagram(3, {{"1", "3"}, {"1'", "3'"}, {"2", "2'"}}), RationalFunction(1));
    CentralElement c = contract(full);
    REQUIRE(c.terms().size() == 1);
    CHECK(c.coeff(SporeTableau::from_rows({"NS", "P"})) == RationalFunction(1));

    // Distinct coefficients on one class.
    DiagramVector bad(3);
    bad.add(generator_u(1, 3), RationalFunction(1));
    bad.add(generator_u(2, 3), RationalFunction(2));
    bad.add(make_diagram(3, {{"1", "3"}, {"1'", "3'"}, {"2", "2'"}}), RationalFunction(1));
    CHECK_THROWS_AS(contract(bad), NonInvariantError);
}

TEST_CASE("products", "[central]") {
    CentralElement phi = phi_2_0_by_hand();
    CHECK(mul(phi, phi) == phi);

    std::mt19937 rng(9101);
    for (int n = 2; n <= 4; ++n) {
        CentralElement x = random_central(rng, n);
        CHECK(mul(x, CentralElement::one(n)) == x);
        CHECK(mul(CentralElement::one(n), x) == x);
    }

    // A tabulated product coefficient: the crossed-propagating class of
    // phi_4(2) e_(3,1) is 2(d+2)/(8d(d+2)) = 1/(4d).
    CentralElement prod = mul(golden_table("phi_4_2").element(), golden_table("e_3_1").element());
    CHECK(prod.coeff(SporeTableau::from_rows({"NPSP"})) ==
          RationalFunction(Polynomial(1), BigInt(4) * Polynomial::x()));
    CHECK(prod == golden_table("phi_4_3_1").element());
}

TEST_CASE("product equals the straightforward expansion oracle", "[central]") {
    std::mt19937 rng(9102);
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i < (n == 4 ? 3 : 8); ++i) {
            CentralElement a = random_central(rng, n), b = random_central(rng, n);
            CHECK(expand(mul(a, b)) == product_oracle(expand(a), expand(b)));
        }
    }
}

TEST_CASE("product is commutative and associative", "[central]") {
    std::mt19937 rng(9103);
    for (int n = 2; n <= 4; ++n) {
        CentralElement a = random_central(rng, n), b = random_central(rng, n);
        CHECK(mul(a, b) == mul(b, a));
    }
    CentralElement a = random_central(rng, 3), b = random_central(rng, 3),
                   c = random_central(rng, 3);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
}

TEST_CASE("product respects worker count", "[central]") {
    std::mt19937 rng(9104);
    CentralElement a = random_central(rng, 4), b = random_central(rng, 4);
    CHECK(mul(a, b, 1) == mul(a, b, 3));
}

TEST_CASE("diagram action", "[central]") {
    // u-bar_1 kills phi_2(0) on both sides.
    CentralElement phi = phi_2_0_by_hand();
    CHECK(mul_by_diagram(phi, generator_u(1, 2), Side::left, inv_d()).is_zero());
    CHECK(mul_by_diagram(phi, generator_u(1, 2), Side::right, inv_d()).is_zero());

    // The identity element just picks up the diagram.
    DiagramVector v =
        mul_by_diagram(CentralElement::one(3), generator_u(2, 3), Side::left, RationalFunction(5));
    REQUIRE(v.terms().size() == 1);
    CHECK(v.coeff(generator_u(2, 3)) == RationalFunction(5));

    // Column of the n = 4 system: u-bar acting on the two-row class hits the
    // anchored representatives with entries d^-1 and 1.
    CentralElement d2(4);
    d2.set(SporeTableau::from_rows({"NS", "NS"}), RationalFunction(1));
    auto [u, loops] = compose(generator_u(1, 4), generator_u(3, 4));
    REQUIRE(loops == 0);
    DiagramVector col = mul_by_diagram(d2, u, Side::left,
                                       RationalFunction(Polynomial(1), Polynomial(1).shifted(2)));
    CHECK(col.coeff(u) == RationalFunction(1));
    CHECK(col.coeff(make_diagram(4, {{"1", "2"}, {"3", "4"}, {"1'", "3'"}, {"2'", "4'"}})) ==
          inv_d());
}

TEST_CASE("centrality detection", "[central]") {
    CHECK(is_central(phi_2_0_by_hand()));
    CHECK(is_central(CentralElement::one(4)));

    CentralElement lone(4);
    lone.set(SporeTableau::from_rows({"NSNS"}), RationalFunction(1));
    CHECK_FALSE(is_central(lone));
}
