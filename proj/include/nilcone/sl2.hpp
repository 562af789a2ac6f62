#pragma once

#include <cstddef>
#include <vector>

#include "nilcone/rational.hpp"

namespace nilcone {

/// Dense exact endomorphism of V_n, acting on column coordinates in the
/// basis (v_0, ..., v_n).
class EndMatrix {
public:
    EndMatrix() : EndMatrix(0) {}
    explicit EndMatrix(int n);

    static EndMatrix identity(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int dim() const { return n_ + 1; }

    Rational& operator()(int row, int col) { return entries_[index(row, col)]; }
    const Rational& operator()(int row, int col) const { return entries_[index(row, col)]; }

    [[nodiscard]] bool is_zero() const;
    /// True when the matrix is c * Identity for some c.
    [[nodiscard]] bool is_scalar() const;
    [[nodiscard]] bool is_diagonal() const;

    EndMatrix& operator+=(const EndMatrix& rhs);
    EndMatrix& operator-=(const EndMatrix& rhs);
    EndMatrix& operator*=(const Rational& scalar);

    friend EndMatrix operator+(EndMatrix a, const EndMatrix& b) { return a += b; }
    friend EndMatrix operator-(EndMatrix a, const EndMatrix& b) { return a -= b; }
    friend EndMatrix operator*(EndMatrix a, const Rational& s) { return a *= s; }
    friend EndMatrix operator*(const Rational& s, EndMatrix a) { return a *= s; }
    friend EndMatrix operator*(const EndMatrix& a, const EndMatrix& b);
    friend bool operator==(const EndMatrix& a, const EndMatrix& b) = default;

    [[nodiscard]] EndMatrix pow(int exponent) const;

private:
    [[nodiscard]] std::size_t index(int row, int col) const;

    int n_;
    std::vector<Rational> entries_;
};

/// The irreducible representation V_n of sl(2) with v_i = rho(X)^i v_0.
struct Irrep {
    int n = 0;
    EndMatrix rho_h;
    EndMatrix rho_x;
    EndMatrix rho_y;
};

/// (n - i + 1) * i, the lowering constant rho(Y) v_i = alpha_i v_{i-1}.
[[nodiscard]] long lowering_constant(int n, int i);

[[nodiscard]] Irrep make_irrep(int n);

/// ab - ba. Throws std::invalid_argument if the dimensions differ.
[[nodiscard]] EndMatrix commutator(const EndMatrix& a, const EndMatrix& b);

/// 1/2 rho(H)^2 + rho(X) rho(Y) + rho(Y) rho(X).
[[nodiscard]] EndMatrix casimir_matrix(const Irrep& r);

/// Returns the scalar by which the Casimir acts. Throws std::logic_error if
/// the Casimir matrix is not scalar, which only happens for a corrupted Irrep.
[[nodiscard]] Rational casimir_scalar(const Irrep& r);

/// Checks the three sl(2) commutation relations exactly.
[[nodiscard]] bool satisfies_sl2_relations(const Irrep& r);

}  // namespace nilcone
