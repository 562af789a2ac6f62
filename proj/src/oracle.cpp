#include "nilcone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "nilcone/sl2.hpp"

namespace nilcone::oracle {

namespace {

double coordinate(const Point3& p, int axis) {
    return axis == 0 ? p.h : axis == 1 ? p.x : p.y;
}

double falling_factorial(int e, int k) {
    double r = 1.0;
    for (int j = 0; j < k; ++j) {
        r *= static_cast<double>(e - j);
    }
    return r;
}

double binomial(int n, int k) {
    return falling_factorial(n, k) / falling_factorial(k, k);
}

double factorial(int n) {
    return falling_factorial(n, n);
}

// d^m/du^m exp(-((u - c)/sigma)^2) = (-1/sigma)^m H_m(t) exp(-t^2), without
// the exponential factor.
double hermite_factor(int m, double t, double sigma) {
    double prev = 1.0;
    double cur = 2.0 * t;
    if (m == 0) {
        return 1.0;
    }
    for (int k = 1; k < m; ++k) {
        const double next = 2.0 * t * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return (m % 2 == 0 ? 1.0 : -1.0) * cur / std::pow(sigma, m);
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

std::vector<std::vector<double>> to_double(const EndMatrix& m) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(m.dim()),
                                         std::vector<double>(static_cast<std::size_t>(m.dim())));
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c).to_double();
        }
    }
    return out;
}

// a^j b^(n-j) on the cone, as a polynomial in (h, x, y) via
// a^2 = 2x, b^2 = -2y, ab = -2h.
double cone_monomial(int n, int j, const Point3& w) {
    if (j % 2 == 0) {
        return std::pow(2.0 * w.x, j / 2) * std::pow(-2.0 * w.y, (n - j) / 2);
    }
    return -2.0 * w.h * std::pow(2.0 * w.x, (j - 1) / 2) * std::pow(-2.0 * w.y, (n - j - 1) / 2);
}

double int_pow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

}  // namespace

Polynomial3::Polynomial3(const Rational& constant) {
    add({0, 0, 0}, constant);
}

Polynomial3 Polynomial3::variable(int axis) {
    if (axis < 0 || axis > 2) {
        throw std::invalid_argument("Polynomial3::variable: axis must be 0, 1 or 2");
    }
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    Polynomial3 p;
    p.add(e, 1);
    return p;
}

void Polynomial3::add(const Exponent& e, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial3 Polynomial3::derivative(const Exponent& alpha) const {
    Polynomial3 out;
    for (const auto& [e, c] : terms_) {
        Rational factor = c;
        Exponent reduced = e;
        bool vanishes = false;
        for (std::size_t axis = 0; axis < 3; ++axis) {
            if (e[axis] < alpha[axis]) {
                vanishes = true;
                break;
            }
            for (int j = 0; j < alpha[axis]; ++j) {
                factor *= Rational(e[axis] - j);
            }
            reduced[axis] -= alpha[axis];
        }
        if (!vanishes) {
            out.add(reduced, factor);
        }
    }
    return out;
}

double Polynomial3::evaluate(const Point3& p) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        s += c.to_double() * int_pow(p.h, e[0]) * int_pow(p.x, e[1]) * int_pow(p.y, e[2]);
    }
    return s;
}

Polynomial3& Polynomial3::operator+=(const Polynomial3& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add(e, c);
    }
    return *this;
}

Polynomial3 operator-(const Polynomial3& a, const Polynomial3& b) {
    Polynomial3 out = a;
    for (const auto& [e, c] : b.terms()) {
        out.add(e, -c);
    }
    return out;
}

Polynomial3 operator*(const Polynomial3& a, const Polynomial3& b) {
    Polynomial3 out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return out;
}

TestFunction::TestFunction(Polynomial3 poly, double sigma, Point3 center)
    : poly_(std::move(poly)), sigma_(sigma), center_(center) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("TestFunction: sigma must be positive");
    }
}

TestFunction TestFunction::gaussian(double sigma, Point3 center) {
    return TestFunction(Polynomial3(Rational(1)), sigma, center);
}

double TestFunction::derivative(const Exponent& alpha, const Point3& p) const {
    std::array<double, 3> t{};
    double r2 = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        t[static_cast<std::size_t>(axis)] = (coordinate(p, axis) - coordinate(center_, axis)) / sigma_;
        r2 += t[static_cast<std::size_t>(axis)] * t[static_cast<std::size_t>(axis)];
    }
    const double gauss = std::exp(-r2);
    if (gauss == 0.0) {
        return 0.0;
    }

    // Leibniz over beta <= alpha: C(alpha, beta) d^beta P d^(alpha-beta) G.
    double total = 0.0;
    for (int bh = 0; bh <= alpha[0]; ++bh) {
        for (int bx = 0; bx <= alpha[1]; ++bx) {
            for (int by = 0; by <= alpha[2]; ++by) {
                const Exponent beta{bh, bx, by};
                double dp = 0.0;
                for (const auto& [e, c] : poly_.terms()) {
                    if (e[0] < bh || e[1] < bx || e[2] < by) {
                        continue;
                    }
                    dp += c.to_double() * falling_factorial(e[0], bh) * falling_factorial(e[1], bx) *
                          falling_factorial(e[2], by) * int_pow(p.h, e[0] - bh) * int_pow(p.x, e[1] - bx) *
                          int_pow(p.y, e[2] - by);
                }
                if (dp == 0.0) {
                    continue;
                }
                double dg = 1.0;
                double weight = 1.0;
                for (std::size_t axis = 0; axis < 3; ++axis) {
                    dg *= hermite_factor(alpha[axis] - beta[axis], t[axis], sigma_);
                    weight *= binomial(alpha[axis], beta[axis]);
                }
                total += weight * dp * dg;
            }
        }
    }
    return total * gauss;
}

double lie_derivative(const TestFunction& f, Direction z, const Point3& p, LieVariant variant) {
    const double dh = f.derivative({1, 0, 0}, p);
    const double dx = f.derivative({0, 1, 0}, p);
    const double dy = f.derivative({0, 0, 1}, p);
    switch (z) {
        case Direction::H: {
            const double lh = -2.0 * p.x * dx + 2.0 * p.y * dy;
            return variant == LieVariant::broken_lh_sign ? -lh : lh;
        }
        case Direction::X:
            return 2.0 * p.h * dx - p.y * dh;
        case Direction::Y:
            return p.x * dh - 2.0 * p.h * dy;
    }
    throw std::invalid_argument("lie_derivative: unknown direction");
}

double casimir(const TestFunction& f, const Point3& p) {
    return 0.5 * f.derivative({2, 0, 0}, p) + 2.0 * f.derivative({0, 1, 1}, p);
}

Point3 moment_map(double a, double b) {
    return Point3{-0.5 * a * b, 0.5 * a * a, -0.5 * b * b};
}

double pair_delta_nplus(const ScalarField& g, const QuadratureGrid& grid, Execution exec) {
    const auto values = integrate_2d(
        grid, 1, [&g](double a, double b, std::span<double> out) { out[0] = 2.0 * g(moment_map(a, b)); }, exec);
    return values[0];
}

double pair_delta_nplus(const TestFunction& f, const QuadratureGrid& grid, Execution exec) {
    return pair_delta_nplus([&f](const Point3& p) { return f.value(p); }, grid, exec);
}

double tail_estimate(const ScalarField& g, const QuadratureGrid& grid) {
    const Nodes1D axis = nodes_1d(grid);
    const std::size_t m = axis.x.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != 0 && j != 0 && i != m - 1 && j != m - 1) {
                continue;
            }
            worst = std::max(worst, std::abs(2.0 * g(moment_map(axis.x[i], axis.x[j]))));
        }
    }
    return worst;
}

std::vector<double> section_even(int n, const Point3& w) {
    if (n < 0 || n % 2 != 0) {
        throw std::invalid_argument("section_even: n must be even and non-negative");
    }
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    const double scale = std::pow(2.0, -0.5 * n) * factorial(n);
    for (int j = 0; j <= n; ++j) {
        out[static_cast<std::size_t>(j)] = scale / factorial(j) * cone_monomial(n, j, w);
    }
    return out;
}

std::vector<double> section_odd(int n, double a, double b) {
    if (n < 0 || n % 2 != 1) {
        throw std::invalid_argument("section_odd: n must be odd");
    }
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    const double scale = std::pow(2.0, 0.5 * (1 - n)) * factorial(n);
    for (int j = 0; j <= n; ++j) {
        out[static_cast<std::size_t>(j)] = scale / factorial(j) * int_pow(a, j) * int_pow(b, n - j);
    }
    return out;
}

std::vector<double> section_odd_broken(int n, double a, double b) {
    if (n < 0 || n % 2 != 1) {
        throw std::invalid_argument("section_odd_broken: n must be odd");
    }
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    const double scale = std::pow(2.0, 0.5 * (1 - n)) * factorial(n - 1);
    for (int j = 1; j <= n; ++j) {
        out[static_cast<std::size_t>(j)] =
            scale / factorial(j - 1) * std::abs(a) * int_pow(a, j - 1) * int_pow(b, n - j);
    }
    return out;
}

std::vector<double> section_pairing(int n, const ScalarField& g, const QuadratureGrid& grid, Execution exec) {
    const int dim = n + 1;
    return integrate_2d(
        grid, dim,
        [n, &g](double a, double b, std::span<double> out) {
            const Point3 w = moment_map(a, b);
            const std::vector<double> s = section_even(n, w);
            const double gv = 2.0 * g(w);
            for (std::size_t j = 0; j < s.size(); ++j) {
                out[j] = s[j] * gv;
            }
        },
        exec);
}

InvarianceReport invariance_report(int n, Direction z, const TestFunction& f, const QuadratureGrid& grid,
                                   LieVariant variant, Execution exec) {
    if (n < 0 || n % 2 != 0) {
        throw std::invalid_argument("invariance_residual: the global section exists only for even n");
    }
    const auto dim = static_cast<std::size_t>(n) + 1;
    // Components [0, dim): P(F); [dim, 2 dim): P(L_Z F).
    const std::vector<double> both = integrate_2d(
        grid, static_cast<int>(2 * dim),
        [n, z, &f, variant, dim](double a, double b, std::span<double> out) {
            const Point3 w = moment_map(a, b);
            const std::vector<double> s = section_even(n, w);
            const double fv = 2.0 * f.value(w);
            const double lv = 2.0 * lie_derivative(f, z, w, variant);
            for (std::size_t j = 0; j < dim; ++j) {
                out[j] = s[j] * fv;
                out[dim + j] = s[j] * lv;
            }
        },
        exec);

    const Irrep rep = make_irrep(n);
    const EndMatrix& rho = z == Direction::H ? rep.rho_h : z == Direction::X ? rep.rho_x : rep.rho_y;
    const auto rho_d = to_double(rho);

    InvarianceReport report;
    report.residual.assign(dim, 0.0);
    std::vector<double> pairing(both.begin(), both.begin() + static_cast<long>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            acc += rho_d[r][c] * pairing[c];
        }
        report.residual[r] = acc - both[dim + r];
    }
    report.residual_norm = norm(report.residual);
    report.pairing_norm = norm(pairing);
    return report;
}

double invariance_residual(int n, Direction z, const TestFunction& f, const QuadratureGrid& grid,
                           LieVariant variant) {
    return invariance_report(n, z, f, grid, variant).residual_norm;
}

ObstructionReport obstruction_report(int n, const TestFunction& f, const QuadratureGrid& grid,
                                     SectionVariant variant, Execution exec) {
    if (n < 0 || n % 2 != 1) {
        throw std::invalid_argument("odd_section_obstruction: n must be odd");
    }
    const auto dim = static_cast<std::size_t>(n) + 1;
    const std::vector<double> values = integrate_2d(
        grid, static_cast<int>(dim + 1),
        [n, &f, variant, dim](double a, double b, std::span<double> out) {
            const std::vector<double> s =
                variant == SectionVariant::equivariant ? section_odd(n, a, b) : section_odd_broken(n, a, b);
            const double fv = 2.0 * f.value(moment_map(a, b));
            for (std::size_t j = 0; j < dim; ++j) {
                out[j] = s[j] * fv;
            }
            out[dim] = norm(s) * std::abs(fv);
        },
        exec);
    ObstructionReport report;
    report.value.assign(values.begin(), values.begin() + static_cast<long>(dim));
    report.norm = norm(report.value);
    report.magnitude = values[dim];
    return report;
}

double odd_section_obstruction(int n, const TestFunction& f, const QuadratureGrid& grid, SectionVariant variant) {
    return obstruction_report(n, f, grid, variant).norm;
}

double orbital_derivative(const TestFunction& f, int k, const OrbitalBox& box) {
    if (k < 0) {
        throw std::invalid_argument("orbital_derivative: k must be non-negative");
    }
    if (!(box.x_lo > 0.0)) {
        throw std::invalid_argument("orbital_derivative: the box must lie in x > 0");
    }
    const Nodes1D hs = nodes_1d(box.h_lo, box.h_hi, box.points, QuadratureRule::gauss_legendre);
    const Nodes1D xs = nodes_1d(box.x_lo, box.x_hi, box.points, QuadratureRule::gauss_legendre);
    const auto values = integrate_box(hs, xs, 1, [&f, k](double h, double x, std::span<double> out) {
        const Point3 p{h, x, -h * h / x};
        out[0] = f.derivative({0, 0, k}, p) / int_pow(x, k + 1);
    });
    return values[0];
}

double orbital_integral(const ScalarField& g, const OrbitalBox& box) {
    if (!(box.x_lo > 0.0)) {
        throw std::invalid_argument("orbital_integral: the box must lie in x > 0");
    }
    const Nodes1D hs = nodes_1d(box.h_lo, box.h_hi, box.points, QuadratureRule::gauss_legendre);
    const Nodes1D xs = nodes_1d(box.x_lo, box.x_hi, box.points, QuadratureRule::gauss_legendre);
    const auto values = integrate_box(hs, xs, 1, [&g](double h, double x, std::span<double> out) {
        out[0] = g(Point3{h, x, -h * h / x}) / x;
    });
    return values[0];
}

double SeedPairingCheck::relative_error() const {
    const double scale = std::max(std::abs(moment_route), std::abs(transversal_route));
    return scale > 0.0 ? std::abs(moment_route - transversal_route) / scale : 0.0;
}

SeedPairingCheck seed_pairing_check(const TestFunction& f, const TransversalDist& box_seed, const QuadratureGrid& grid,
                                    const OrbitalBox& box) {
    if (box_seed.n() != 0) {
        throw std::invalid_argument("seed_pairing_check: only the scalar case n = 0 is supported");
    }
    SeedPairingCheck check;
    check.moment_route = pair_delta_nplus([&f](const Point3& p) { return casimir(f, p); }, grid);
    check.normalization = pair_delta_nplus(f, grid) / orbital_derivative(f, 0, box);
    double predicted = 0.0;
    for (const auto& [key, c] : box_seed.terms()) {
        const double sign = key.k % 2 == 0 ? 1.0 : -1.0;
        predicted += c.to_double() * sign * orbital_derivative(f, key.k, box);
    }
    check.transversal_route = check.normalization * predicted;
    return check;
}

SeedPairingCheck seed_pairing_check(double sigma, int points) {
    const TestFunction f = TestFunction::gaussian(sigma, Point3{0.0, 1.0, 0.0});
    const QuadratureGrid grid{std::sqrt(2.0 * (1.0 + 10.0 * sigma)), points};
    const OrbitalBox box{-8.0 * sigma, 8.0 * sigma, std::max(0.05, 1.0 - 8.0 * sigma), 1.0 + 8.0 * sigma, points};
    return seed_pairing_check(f, radial_casimir(delta_seed(0)), grid, box);
}

}  // namespace nilcone::oracle
