#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nilcone/rational.hpp"
#include "nilcone/sl2.hpp"

namespace nilcone {

/// Coordinate of a term delta^(k)(y) (x) v_i.
struct TermKey {
    int i = 0;
    int k = 0;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// A V_n-valued distribution on the transversal line supported at y = 0:
///   psi(y) = sum a_{i,k} delta^(k)(y) (x) v_i.
/// delta^(0) is normalized so that its integral against g is g(0). Zero
/// coefficients are never stored; there is no bound on k.
class TransversalDist {
public:
    using Terms = std::map<TermKey, Rational>;

    explicit TransversalDist(int n);
    TransversalDist(int n, std::initializer_list<std::pair<const TermKey, Rational>> terms);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(int i, int k) const;

    /// Largest k carrying a nonzero coefficient; nullopt for the zero distribution.
    [[nodiscard]] std::optional<int> delta_order() const;

    /// Adds c to the coefficient of (i, k), erasing it if the sum vanishes.
    void add(int i, int k, const Rational& c);

    TransversalDist& operator+=(const TransversalDist& rhs);
    TransversalDist& operator-=(const TransversalDist& rhs);
    TransversalDist& operator*=(const Rational& s);
    friend TransversalDist operator+(TransversalDist a, const TransversalDist& b) { return a += b; }
    friend TransversalDist operator-(TransversalDist a, const TransversalDist& b) { return a -= b; }
    friend TransversalDist operator*(TransversalDist a, const Rational& s) { return a *= s; }
    friend TransversalDist operator*(const Rational& s, TransversalDist a) { return a *= s; }
    friend bool operator==(const TransversalDist&, const TransversalDist&) = default;

private:
    void require_same_n(const TransversalDist& other) const;

    int n_;
    Terms terms_;
};

/// delta^(0) (x) v_n: the transversal restriction of the seed s_n times the
/// half-cone delta.
[[nodiscard]] TransversalDist delta_seed(int n);

[[nodiscard]] TransversalDist d_dy(const TransversalDist& psi);

/// Multiplication by y: y delta^(0) = 0, y delta^(k) = -k delta^(k-1).
[[nodiscard]] TransversalDist mul_y(const TransversalDist& psi);

/// Applies E to the V_n factor. Throws std::invalid_argument on a
/// dimension mismatch.
[[nodiscard]] TransversalDist apply_endo(const EndMatrix& e, const TransversalDist& psi);

/// (rho(X) + y rho(Y)) psi. Zero exactly when psi is the restriction of a
/// locally invariant generalized function.
[[nodiscard]] TransversalDist equivariance_defect(const TransversalDist& psi);

[[nodiscard]] bool is_invariant(const TransversalDist& psi);

/// Radial part of the Casimir: (3 + rho(H) + 2 y d/dy) d/dy + 1/2 rho(Y)^2.
[[nodiscard]] TransversalDist radial_casimir(const TransversalDist& psi);

/// Radial part of M_n = rho(X) Y + rho(Y) X + 1/2 rho(H) H on invariant
/// arguments: (rho(X) + y rho(Y)) d/dy psi + rho(Y) psi.
/// Throws std::invalid_argument if psi has a nonzero equivariance defect.
[[nodiscard]] TransversalDist radial_mn(const TransversalDist& psi);

/// Record form {n, terms: [{i, k, coeff: "p/q"}]}, terms sorted by (i, k).
[[nodiscard]] nlohmann::json to_json(const TransversalDist& psi);
/// Throws std::invalid_argument on a malformed record.
[[nodiscard]] TransversalDist transversal_from_json(const nlohmann::json& j);

[[nodiscard]] std::string serialize(const TransversalDist& psi);
[[nodiscard]] TransversalDist deserialize(std::string_view text);

/// Human-readable rendering, e.g. "2 d^1 v_3 - 1/2 d^0 v_1".
[[nodiscard]] std::string to_display_string(const TransversalDist& psi);

}  // namespace nilcone
