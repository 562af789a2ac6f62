#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace nilcone {

/// Integer Laurent polynomial in one weight variable z: sum of coeff(w) z^w.
/// Zero multiplicities are never stored.
class Character {
public:
    Character() = default;

    static Character monomial(int weight, std::int64_t multiplicity = 1);

    [[nodiscard]] std::int64_t coeff(int weight) const;
    [[nodiscard]] const std::map<int, std::int64_t>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::int64_t dimension() const;

    /// Symmetric under w -> -w with non-negative multiplicities.
    [[nodiscard]] bool is_genuine() const;

    /// Adams operation: every weight multiplied by r.
    [[nodiscard]] Character adams(int r) const;

    void add(int weight, std::int64_t multiplicity);

    Character& operator+=(const Character& rhs);
    Character& operator-=(const Character& rhs);
    Character& operator*=(std::int64_t scalar);
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }
    friend Character operator*(const Character& a, const Character& b);
    friend bool operator==(const Character& a, const Character& b) = default;

private:
    std::map<int, std::int64_t> terms_;
};

/// Multiset of highest weights, as highest weight -> multiplicity.
using Decomposition = std::map<int, std::int64_t>;

/// z^{-n} + z^{-n+2} + ... + z^{n}.
[[nodiscard]] Character irrep_character(int n);

/// Peels highest weights off a genuine character until nothing is left.
/// Throws std::invalid_argument if peeling leaves a negative multiplicity.
[[nodiscard]] Decomposition decompose(const Character& c);

[[nodiscard]] Character character_of(const Decomposition& d);

/// Clebsch-Gordan: highest weights of V_a (x) V_b, descending.
[[nodiscard]] std::vector<int> tensor_decompose(int a, int b);

/// Character of the m-th symmetric power, through m h_m = sum_r p_r h_{m-r}.
[[nodiscard]] Character sym_power(int m, const Character& c);

/// The adjoint character z^{-2} + 1 + z^{2}.
[[nodiscard]] Character adjoint_character();

/// Multiplicity of V_n in S^m(adjoint).
[[nodiscard]] std::int64_t invariant_dim(int n, int m);

/// invariant_dim(n, m) for m = 0..max_degree.
[[nodiscard]] std::vector<std::int64_t> invariant_dims(int n, int max_degree);

/// dim (V_n (x) S^m(adjoint))^g, read off as the V_0 multiplicity of the
/// product character. Equals invariant_dim(n, m) since V_n is self-dual.
[[nodiscard]] std::int64_t tensor_invariant_dim(int n, int m);

}  // namespace nilcone
