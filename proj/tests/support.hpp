#pragma once

#include <functional>
#include <random>
#include <vector>

#include "nilcone/character.hpp"
#include "nilcone/rational.hpp"
#include "nilcone/transversal.hpp"

namespace nilcone::testing {

// Fixed seeds only; every run sees the same samples.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(0x5eed'0000ULL + salt);
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

inline TransversalDist random_dist(std::mt19937_64& rng, int n, int max_order, int terms = 6) {
    std::uniform_int_distribution<int> pick_i(0, n);
    std::uniform_int_distribution<int> pick_k(0, max_order);
    TransversalDist psi(n);
    for (int t = 0; t < terms; ++t) {
        psi.add(pick_i(rng), pick_k(rng), random_rational(rng));
    }
    return psi;
}

// Weight multiset of S^m(V) by enumerating non-decreasing index tuples over
// a basis of weight vectors.
inline Character brute_sym_power(int m, const std::vector<int>& basis_weights) {
    Character out;
    const int d = static_cast<int>(basis_weights.size());
    std::function<void(int, int, int)> rec = [&](int left, int start, int weight) {
        if (left == 0) {
            out.add(weight, 1);
            return;
        }
        for (int b = start; b < d; ++b) {
            rec(left - 1, b, weight + basis_weights[static_cast<std::size_t>(b)]);
        }
    };
    rec(m, 0, 0);
    return out;
}

// Multiplicity of V_n read off a weight multiset: c(n) - c(n + 2).
inline std::int64_t multiplicity(const Character& c, int n) {
    return c.coeff(n) - c.coeff(n + 2);
}

}  // namespace nilcone::testing
