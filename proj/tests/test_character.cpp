#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "nilcone/character.hpp"
#include "support.hpp"

namespace nilcone {
namespace {

std::vector<int> weights_of(int n) {
    std::vector<int> w;
    for (int i = 0; i <= n; ++i) {
        w.push_back(-n + 2 * i);
    }
    return w;
}

using testing::brute_sym_power;
using testing::multiplicity;

TEST(Character, IrrepCharacter) {
    const Character c = irrep_character(3);
    EXPECT_EQ(c.dimension(), 4);
    EXPECT_EQ(c.coeff(-3), 1);
    EXPECT_EQ(c.coeff(1), 1);
    EXPECT_EQ(c.coeff(0), 0);
    EXPECT_TRUE(c.is_genuine());
    EXPECT_EQ(adjoint_character(), irrep_character(2));
}

TEST(Character, ClebschGordan) {
    EXPECT_EQ(tensor_decompose(2, 3), (std::vector<int>{5, 3, 1}));
    EXPECT_EQ(tensor_decompose(0, 4), (std::vector<int>{4}));
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            Character sum;
            for (int w : tensor_decompose(a, b)) {
                sum += irrep_character(w);
            }
            EXPECT_EQ(sum, irrep_character(a) * irrep_character(b));
        }
    }
}

TEST(Character, DecomposeRoundTrip) {
    const Decomposition d{{0, 2}, {3, 1}, {4, 5}};
    EXPECT_EQ(decompose(character_of(d)), d);
    EXPECT_TRUE(decompose(Character()).empty());
}

TEST(Character, DecomposeRejectsNonGenuine) {
    EXPECT_THROW((void)decompose(Character::monomial(2)), std::invalid_argument);
    EXPECT_THROW((void)decompose(irrep_character(2) - irrep_character(4)), std::invalid_argument);
}

TEST(Character, SymPowerAdjointMatchesEnumeration) {
    for (int m = 0; m <= 20; ++m) {
        const Character s = sym_power(m, adjoint_character());
        EXPECT_EQ(s, brute_sym_power(m, {-2, 0, 2})) << m;
        Decomposition expected;
        for (int j = 0; 2 * m - 4 * j >= 0; ++j) {
            expected[2 * m - 4 * j] = 1;
        }
        EXPECT_EQ(decompose(s), expected) << m;
    }
}

TEST(Character, SymPowerOtherRepresentations) {
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= 7; ++m) {
            EXPECT_EQ(sym_power(m, irrep_character(n)), brute_sym_power(m, weights_of(n))) << n << ' ' << m;
        }
    }
    // Reducible input: V_1 + V_1.
    const Character twice = irrep_character(1) + irrep_character(1);
    EXPECT_EQ(sym_power(3, twice), brute_sym_power(3, {-1, 1, -1, 1}));
}

TEST(Character, InvariantDimMatchesClosedFormAndWeightCount) {
    for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= 20; ++m) {
            const std::int64_t closed = (n % 2 == 0 && n <= 2 * m && (2 * m - n) % 4 == 0) ? 1 : 0;
            EXPECT_EQ(invariant_dim(n, m), closed) << n << ' ' << m;
            EXPECT_EQ(invariant_dim(n, m), multiplicity(brute_sym_power(m, {-2, 0, 2}), n));
            EXPECT_EQ(tensor_invariant_dim(n, m), invariant_dim(n, m));
        }
    }
    EXPECT_EQ(invariant_dims(0, 4), (std::vector<std::int64_t>{1, 0, 1, 0, 1}));
}

TEST(Character, AdamsAndRingOps) {
    const Character c = irrep_character(1);
    EXPECT_EQ(c.adams(2), Character::monomial(-2) + Character::monomial(2));
    Character z = c;
    z -= c;
    EXPECT_TRUE(z.is_zero());
    Character t = c;
    t *= 3;
    EXPECT_EQ(t.dimension(), 6);
}

}  // namespace
}  // namespace nilcone
