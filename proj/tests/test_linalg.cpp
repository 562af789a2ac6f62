#include <gtest/gtest.h>

#include <stdexcept>

#include "nilcone/linalg.hpp"
#include "support.hpp"

namespace nilcone {
namespace {

// Textbook Gauss-Jordan with exact division, used only as a rank oracle.
std::size_t naive_rank(RationalMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::swap(a(p, j), a(r, j));
        }
        for (std::size_t q = 0; q < a.rows(); ++q) {
            if (q != r && !a(q, c).is_zero()) {
                const Rational f = a(q, c) / a(r, c);
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    a(q, j) -= f * a(r, j);
                }
            }
        }
        ++r;
    }
    return r;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
    RationalMatrix a(rows, cols);
    std::uniform_int_distribution<int> coin(0, 9);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng) < density) {
                a(r, c) = testing::random_rational(rng, 5);
            }
        }
    }
    return a;
}

TEST(Linalg, HandComputedNullspace) {
    RationalMatrix a(2, 3);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(0, 2) = 3;
    a(1, 0) = 2;
    a(1, 1) = 4;
    a(1, 2) = 6;
    const auto ns = nullspace(a);
    ASSERT_EQ(ns.size(), 2U);
    EXPECT_EQ(ns[0], (std::vector<Rational>{-2, 1, 0}));
    EXPECT_EQ(ns[1], (std::vector<Rational>{-3, 0, 1}));
    EXPECT_EQ(rank(a), 1U);
}

TEST(Linalg, NullspacePropertyOnRandomMatrices) {
    auto rng = testing::make_rng(7);
    for (int t = 0; t < 80; ++t) {
        const std::size_t rows = 1 + static_cast<std::size_t>(t % 7);
        const std::size_t cols = 1 + static_cast<std::size_t>((t * 3) % 8);
        const RationalMatrix a = random_matrix(rng, rows, cols, 2 + t % 6);
        const auto ns = nullspace(a);
        EXPECT_EQ(rank(a), naive_rank(a));
        EXPECT_EQ(ns.size() + rank(a), cols);
        RationalMatrix stacked(ns.size(), cols);
        for (std::size_t b = 0; b < ns.size(); ++b) {
            for (std::size_t r = 0; r < rows; ++r) {
                Rational s;
                for (std::size_t c = 0; c < cols; ++c) {
                    s += a(r, c) * ns[b][c];
                }
                EXPECT_TRUE(s.is_zero());
            }
            for (std::size_t c = 0; c < cols; ++c) {
                stacked(b, c) = ns[b][c];
            }
        }
        EXPECT_EQ(naive_rank(stacked), ns.size());
    }
}

TEST(Linalg, InverseOnRandomMatrices) {
    auto rng = testing::make_rng(8);
    int inverted = 0;
    for (int t = 0; t < 40; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 5);
        const RationalMatrix a = random_matrix(rng, d, d, 8);
        if (naive_rank(a) < d) {
            EXPECT_THROW((void)inverse(a), std::domain_error);
            continue;
        }
        const RationalMatrix inv = inverse(a);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                Rational s;
                for (std::size_t j = 0; j < d; ++j) {
                    s += a(r, j) * inv(j, c);
                }
                EXPECT_EQ(s, Rational(r == c ? 1 : 0));
            }
        }
        ++inverted;
    }
    EXPECT_GT(inverted, 20);
}

TEST(Linalg, TriangularAndDiagonal) {
    RationalMatrix a(3, 3);
    a(0, 0) = 1;
    a(0, 2) = 5;
    a(2, 2) = 7;
    EXPECT_TRUE(a.is_upper_triangular());
    EXPECT_EQ(a.diagonal(), (std::vector<Rational>{1, 0, 7}));
    a(2, 0) = 1;
    EXPECT_FALSE(a.is_upper_triangular());
}

TEST(Linalg, EmptyAndZeroMatrices) {
    EXPECT_EQ(nullspace(RationalMatrix(3, 2)).size(), 2U);
    EXPECT_EQ(rank(RationalMatrix(0, 0)), 0U);
}

}  // namespace
}  // namespace nilcone
