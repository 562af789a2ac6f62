#include <gtest/gtest.h>

#include <stdexcept>

#include "nilcone/solver.hpp"
#include "nilcone/transversal.hpp"
#include "support.hpp"

namespace nilcone {
namespace {

TEST(Transversal, ArithmeticDropsZeros) {
    TransversalDist psi(2);
    psi.add(1, 3, Rational(2));
    psi.add(1, 3, Rational(-2));
    EXPECT_TRUE(psi.is_zero());
    EXPECT_FALSE(psi.delta_order().has_value());
    psi.add(0, 4, Rational(1, 2));
    psi.add(2, 1, Rational(3));
    EXPECT_EQ(psi.delta_order(), 4);
    EXPECT_EQ(psi.coeff(0, 4), Rational(1, 2));
    EXPECT_EQ(psi.coeff(1, 1), Rational(0));
    EXPECT_THROW(psi.add(3, 0, Rational(1)), std::out_of_range);
    EXPECT_THROW(psi.add(0, -1, Rational(1)), std::out_of_range);
    EXPECT_THROW(psi += TransversalDist(3), std::invalid_argument);
}

TEST(Transversal, DerivativeAndMultiplication) {
    const TransversalDist psi(1, {{{0, 0}, Rational(5)}, {{1, 3}, Rational(2)}});
    EXPECT_EQ(d_dy(psi), TransversalDist(1, {{{0, 1}, Rational(5)}, {{1, 4}, Rational(2)}}));
    EXPECT_EQ(mul_y(psi), TransversalDist(1, {{{1, 2}, Rational(-6)}}));
}

TEST(Transversal, WeylRelationProperty) {
    // d/dy (y psi) - y (d/dy psi) = psi for every psi.
    auto rng = testing::make_rng(3);
    for (int t = 0; t < 100; ++t) {
        const TransversalDist psi = testing::random_dist(rng, t % 6, 8);
        EXPECT_EQ(d_dy(mul_y(psi)) - mul_y(d_dy(psi)), psi);
    }
}

TEST(Transversal, SeedIsInvariant) {
    for (int n = 0; n <= 10; ++n) {
        EXPECT_TRUE(is_invariant(delta_seed(n)));
        EXPECT_EQ(delta_seed(n).coeff(n, 0), Rational(1));
    }
    EXPECT_FALSE(is_invariant(TransversalDist(2, {{{0, 0}, Rational(1)}})));
}

TEST(Transversal, DefectHandComputed) {
    // n = 1: rho(X) v_0 = v_1, rho(Y) v_1 = v_0, y delta' = -delta.
    const TransversalDist psi(1, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}});
    EXPECT_EQ(equivariance_defect(psi), TransversalDist(1, {{{1, 0}, Rational(1)}, {{0, 0}, Rational(-1)}}));
}

TEST(Transversal, RadialCasimirHandComputed) {
    EXPECT_TRUE(radial_casimir(delta_seed(1)).is_zero());
    EXPECT_EQ(radial_casimir(delta_seed(5)), TransversalDist(5, {{{3, 0}, Rational(20)}, {{5, 1}, Rational(4)}}));
    EXPECT_EQ(radial_casimir(delta_seed(0)), TransversalDist(0, {{{0, 1}, Rational(-1)}}));
}

TEST(Transversal, OrbitLeadingCoefficientAndOddNilpotency) {
    for (int n = 0; n <= 15; ++n) {
        TransversalDist current = delta_seed(n);
        const int steps = n % 2 == 1 ? (n + 1) / 2 : 6;
        for (int k = 1; k <= steps; ++k) {
            current = radial_casimir(current);
            if (n % 2 == 1 && k == steps) {
                EXPECT_TRUE(current.is_zero()) << n;
            } else {
                Rational lead(1);
                for (int j = 1; j <= k; ++j) {
                    lead *= Rational(n - 2 * j + 1);
                }
                EXPECT_EQ(current.coeff(n, k), lead) << n << ' ' << k;
                EXPECT_EQ(current.delta_order(), k);
                EXPECT_TRUE(is_invariant(current));
            }
        }
    }
}

TEST(Transversal, RadialCasimirPreservesInvariance) {
    auto rng = testing::make_rng(4);
    for (int n = 0; n <= 8; ++n) {
        for (const auto& b : kernel_basis(n, 6)) {
            const TransversalDist psi = b * testing::random_rational(rng);
            EXPECT_TRUE(is_invariant(radial_casimir(psi)));
        }
    }
}

TEST(Transversal, RadialMnIsDerivativeOfDefect) {
    // (rho(X) + y rho(Y)) d psi + rho(Y) psi = d (defect psi) for all psi,
    // so M_n acts by zero on the invariant kernel.
    auto rng = testing::make_rng(5);
    for (int t = 0; t < 60; ++t) {
        const int n = t % 7;
        const Irrep r = make_irrep(n);
        const TransversalDist psi = testing::random_dist(rng, n, 6);
        const TransversalDist dpsi = d_dy(psi);
        const TransversalDist lhs =
            apply_endo(r.rho_x, dpsi) + mul_y(apply_endo(r.rho_y, dpsi)) + apply_endo(r.rho_y, psi);
        EXPECT_EQ(lhs, d_dy(equivariance_defect(psi)));
    }
    for (int n = 0; n <= 6; ++n) {
        for (const auto& b : kernel_basis(n, 5)) {
            EXPECT_TRUE(radial_mn(b).is_zero());
        }
    }
    EXPECT_THROW((void)radial_mn(TransversalDist(2, {{{0, 0}, Rational(1)}})), std::invalid_argument);
}

TEST(Transversal, ApplyEndoChecksDimension) {
    EXPECT_THROW((void)apply_endo(EndMatrix(2), delta_seed(3)), std::invalid_argument);
}

TEST(Transversal, SerializationRoundTripProperty) {
    auto rng = testing::make_rng(6);
    for (int t = 0; t < 100; ++t) {
        const TransversalDist psi = testing::random_dist(rng, t % 9, 10, t % 7);
        const std::string text = serialize(psi);
        EXPECT_EQ(deserialize(text), psi);
        EXPECT_EQ(serialize(deserialize(text)), text);
    }
}

TEST(Transversal, JsonShape) {
    const TransversalDist psi(2, {{{2, 1}, Rational(3)}, {{0, 0}, Rational(-1, 2)}});
    EXPECT_EQ(serialize(psi),
              R"({"n":2,"terms":[{"coeff":"-1/2","i":0,"k":0},{"coeff":"3/1","i":2,"k":1}]})");
    EXPECT_EQ(to_display_string(psi), "-1/2 d^0 v_0 + 3 d^1 v_2");
    EXPECT_EQ(to_display_string(TransversalDist(1)), "0");
}

TEST(Transversal, DeserializeRejectsMalformed) {
    for (const char* bad : {
             "not json",
             R"({"terms":[]})",
             R"({"n":-1,"terms":[]})",
             R"({"n":1,"terms":[{"coeff":"0/1","i":0,"k":0}]})",
             R"({"n":1,"terms":[{"coeff":"1/1","i":2,"k":0}]})",
             R"({"n":1,"terms":[{"coeff":"x","i":0,"k":0}]})",
             R"({"n":1,"terms":[{"coeff":"1/1","i":0,"k":0},{"coeff":"2/1","i":0,"k":0}]})",
         }) {
        EXPECT_THROW((void)deserialize(bad), std::invalid_argument) << bad;
    }
}

}  // namespace
}  // namespace nilcone
