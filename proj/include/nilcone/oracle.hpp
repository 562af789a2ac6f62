#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "nilcone/quadrature.hpp"
#include "nilcone/rational.hpp"
#include "nilcone/transversal.hpp"

namespace nilcone::oracle {

/// Coordinates of Z = h H + x X + y Y.
struct Point3 {
    double h = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// Multi-index over (h, x, y).
using Exponent = std::array<int, 3>;

/// Exact polynomial in (h, x, y).
class Polynomial3 {
public:
    Polynomial3() = default;
    explicit Polynomial3(const Rational& constant);

    /// The coordinate polynomial: 0 -> h, 1 -> x, 2 -> y.
    static Polynomial3 variable(int axis);

    void add(const Exponent& e, const Rational& c);
    [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
    [[nodiscard]] Polynomial3 derivative(const Exponent& alpha) const;
    [[nodiscard]] double evaluate(const Point3& p) const;

    Polynomial3& operator+=(const Polynomial3& rhs);
    friend Polynomial3 operator+(Polynomial3 a, const Polynomial3& b) { return a += b; }
    friend Polynomial3 operator-(const Polynomial3& a, const Polynomial3& b);
    friend Polynomial3 operator*(const Polynomial3& a, const Polynomial3& b);

private:
    std::map<Exponent, Rational> terms_;
};

/// F(Z) = poly(Z) * exp(-|Z - center|^2 / sigma^2), |.| Euclidean in (h, x, y).
class TestFunction {
public:
    TestFunction(Polynomial3 poly, double sigma, Point3 center);

    /// Plain Gaussian (poly = 1).
    static TestFunction gaussian(double sigma, Point3 center);

    [[nodiscard]] double value(const Point3& p) const { return derivative({0, 0, 0}, p); }
    /// Closed-form partial derivative d^alpha F, by Leibniz over the polynomial
    /// and Hermite polynomials for the Gaussian factors.
    [[nodiscard]] double derivative(const Exponent& alpha, const Point3& p) const;

    [[nodiscard]] const Polynomial3& poly() const { return poly_; }
    [[nodiscard]] double sigma() const { return sigma_; }
    [[nodiscard]] const Point3& center() const { return center_; }

private:
    Polynomial3 poly_;
    double sigma_;
    Point3 center_;
};

/// Pass thresholds for the numeric checks.
inline constexpr double invariance_tolerance = 1e-6;    // relative to |P(F)|
inline constexpr double obstruction_tolerance = 1e-12;  // relative to the absolute integral
inline constexpr double broken_control_floor = 1e-3;    // negative controls must exceed this
inline constexpr double seed_pairing_tolerance = 1e-6;  // relative disagreement

enum class Direction { H, X, Y };

/// Sign convention for the L_H term; `broken_lh_sign` is a negative control.
enum class LieVariant { standard, broken_lh_sign };

/// (L_Z F)(W) = d/dt F(W - t[Z, W]) at t = 0:
///   L_H = -2x d_x + 2y d_y,  L_X = 2h d_x - y d_h,  L_Y = x d_h - 2h d_y.
[[nodiscard]] double lie_derivative(const TestFunction& f, Direction z, const Point3& p,
                                    LieVariant variant = LieVariant::standard);

/// Box F = 1/2 d_h^2 F + 2 d_x d_y F.
[[nodiscard]] double casimir(const TestFunction& f, const Point3& p);

/// Moment map of v = a e + b f: (h, x, y) = (-ab/2, a^2/2, -b^2/2).
[[nodiscard]] Point3 moment_map(double a, double b);

using ScalarField = std::function<double(const Point3&)>;

/// 2 * integral of g(mu(a, b)) da db over the grid: the pairing of the
/// half-cone delta with g (density 2 da db for dv).
[[nodiscard]] double pair_delta_nplus(const ScalarField& g, const QuadratureGrid& grid,
                                      Execution exec = Execution::parallel);
[[nodiscard]] double pair_delta_nplus(const TestFunction& f, const QuadratureGrid& grid,
                                      Execution exec = Execution::parallel);

/// Largest |2 g(mu(a, b))| over the outermost ring of grid nodes; bounds the
/// truncated tail when g decays radially.
[[nodiscard]] double tail_estimate(const ScalarField& g, const QuadratureGrid& grid);

/// s_n(W) for even n in the v_i basis, with v_n identified with X^{n/2}.
/// A polynomial in (h, x, y) homogeneous of degree n/2.
[[nodiscard]] std::vector<double> section_even(int n, const Point3& w);

/// v (x) mu(v)^{(n-1)/2} in the v_i basis for odd n (v_n <-> e (x) X^{(n-1)/2}).
/// Odd under v -> -v.
[[nodiscard]] std::vector<double> section_odd(int n, double a, double b);

/// Negative control for section_odd: the V_1 factor v replaced by |a| e.
[[nodiscard]] std::vector<double> section_odd_broken(int n, double a, double b);

/// P(g) = 2 * integral of s_n(mu(v)) g(mu(v)) da db, even n.
[[nodiscard]] std::vector<double> section_pairing(int n, const ScalarField& g, const QuadratureGrid& grid,
                                                  Execution exec = Execution::parallel);

struct InvarianceReport {
    std::vector<double> residual;  // rho(Z) P(F) - P(L_Z F)
    double residual_norm = 0.0;
    double pairing_norm = 0.0;     // |P(F)|
    [[nodiscard]] double relative() const { return pairing_norm > 0.0 ? residual_norm / pairing_norm : residual_norm; }
};

/// Throws std::invalid_argument for odd n.
[[nodiscard]] InvarianceReport invariance_report(int n, Direction z, const TestFunction& f, const QuadratureGrid& grid,
                                                 LieVariant variant = LieVariant::standard,
                                                 Execution exec = Execution::parallel);
[[nodiscard]] double invariance_residual(int n, Direction z, const TestFunction& f, const QuadratureGrid& grid,
                                         LieVariant variant = LieVariant::standard);

enum class SectionVariant { equivariant, broken_abs_a };

struct ObstructionReport {
    std::vector<double> value;  // 2 * integral of section(v) F(mu(v))
    double norm = 0.0;
    double magnitude = 0.0;     // 2 * integral of |section(v)| |F(mu(v))|
    [[nodiscard]] double relative() const { return magnitude > 0.0 ? norm / magnitude : norm; }
};

/// Throws std::invalid_argument for even n.
[[nodiscard]] ObstructionReport obstruction_report(int n, const TestFunction& f, const QuadratureGrid& grid,
                                                   SectionVariant variant = SectionVariant::equivariant,
                                                   Execution exec = Execution::parallel);
[[nodiscard]] double odd_section_obstruction(int n, const TestFunction& f, const QuadratureGrid& grid,
                                             SectionVariant variant = SectionVariant::equivariant);

/// Rectangle in (h, x) with x > 0, parametrizing the x > 0 sheet of each
/// level set h^2 + xy = s by y = (s - h^2) / x.
struct OrbitalBox {
    double h_lo = -1.0;
    double h_hi = 1.0;
    double x_lo = 0.05;
    double x_hi = 2.0;
    int points = 256;
};

/// k-th s-derivative at s = 0 of the orbital integral
///   M_F(s) = integral of delta(h^2 + xy - s) F dh dx dy over x > 0,
/// computed as the integral of d_y^k F(h, x, -h^2/x) / x^{k+1} dh dx.
[[nodiscard]] double orbital_derivative(const TestFunction& f, int k, const OrbitalBox& box);

/// M_g(0) for an arbitrary field g.
[[nodiscard]] double orbital_integral(const ScalarField& g, const OrbitalBox& box);

struct SeedPairingCheck {
    double moment_route = 0.0;        // pair_delta_nplus(Box F)
    double transversal_route = 0.0;   // normalization * sum_k a_k (-1)^k M_F^(k)(0)
    double normalization = 0.0;       // pair_delta_nplus(F) / M_F(0)
    [[nodiscard]] double relative_error() const;
};

/// For n = 0: compares the pairing of Box delta_N+ against F, computed as the
/// pairing of delta_N+ with Box F, with the prediction of the transversal
/// restriction `box_seed` (a combination of delta^(k) v_0) paired through
/// orbital integrals. The delta_N+ normalization is measured on F itself.
[[nodiscard]] SeedPairingCheck seed_pairing_check(const TestFunction& f, const TransversalDist& box_seed,
                                                  const QuadratureGrid& grid, const OrbitalBox& box);

/// The standard setup: F a Gaussian of width sigma at X, box_seed the radial
/// Casimir of the n = 0 seed, v-radius sqrt(2 (1 + 10 sigma)), orbital box
/// |h| <= 8 sigma, x in [max(0.05, 1 - 8 sigma), 1 + 8 sigma]; `points` nodes
/// per axis everywhere.
[[nodiscard]] SeedPairingCheck seed_pairing_check(double sigma, int points);

}  // namespace nilcone::oracle
