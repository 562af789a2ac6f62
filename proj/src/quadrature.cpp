#include "nilcone/quadrature.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace nilcone::oracle {

namespace {

// Buffer layout: node-major, node = i * second.size() + j.
void evaluate_serial(const Nodes1D& first, const Nodes1D& second, int components, const Integrand& f,
                     std::vector<double>& buffer) {
    const std::size_t nb = second.x.size();
    const auto nc = static_cast<std::size_t>(components);
    for (std::size_t i = 0; i < first.x.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            const std::size_t node = i * nb + j;
            std::span<double> out(buffer.data() + node * nc, nc);
            f(first.x[i], second.x[j], out);
            const double w = first.w[i] * second.w[j];
            for (double& v : out) {
                v *= w;
            }
        }
    }
}

void evaluate_parallel(const Nodes1D& first, const Nodes1D& second, int components, const Integrand& f,
                       std::vector<double>& buffer) {
    const auto nb = static_cast<long>(second.x.size());
    const auto total = static_cast<long>(first.x.size()) * nb;
    const auto nc = static_cast<std::size_t>(components);
#pragma omp parallel for schedule(static)
    for (long node = 0; node < total; ++node) {
        const auto i = static_cast<std::size_t>(node / nb);
        const auto j = static_cast<std::size_t>(node % nb);
        std::span<double> out(buffer.data() + static_cast<std::size_t>(node) * nc, nc);
        f(first.x[i], second.x[j], out);
        const double w = first.w[i] * second.w[j];
        for (double& v : out) {
            v *= w;
        }
    }
}

std::vector<double> reduce(const std::vector<double>& buffer, int components, bool antipodal) {
    const auto nc = static_cast<std::size_t>(components);
    const std::size_t nodes = buffer.size() / nc;
    std::vector<double> result(nc);
    std::vector<double> column;
    for (std::size_t c = 0; c < nc; ++c) {
        column.clear();
        if (antipodal) {
            for (std::size_t p = 0; p < nodes / 2; ++p) {
                column.push_back(buffer[p * nc + c] + buffer[(nodes - 1 - p) * nc + c]);
            }
            if (nodes % 2 == 1) {
                column.push_back(buffer[(nodes / 2) * nc + c]);
            }
        } else {
            for (std::size_t p = 0; p < nodes; ++p) {
                column.push_back(buffer[p * nc + c]);
            }
        }
        result[c] = pairwise_sum(column);
    }
    return result;
}

std::vector<double> integrate(const Nodes1D& first, const Nodes1D& second, int components, const Integrand& f,
                              Execution exec, bool antipodal) {
    if (components <= 0) {
        throw std::invalid_argument("integrate: need at least one component");
    }
    std::vector<double> buffer(first.x.size() * second.x.size() * static_cast<std::size_t>(components));
    if (exec == Execution::parallel) {
        evaluate_parallel(first, second, components, f, buffer);
    } else {
        evaluate_serial(first, second, components, f, buffer);
    }
    return reduce(buffer, components, antipodal);
}

// Two Newton steps on P_m in long double, then w = 2 / ((1 - x^2) P_m'(x)^2).
// GSL's nodes for untabulated m are only accurate to about 1e-10.
void polish_legendre(double& node, double& weight, int m) {
    long double x = node;
    long double derivative = 0.0L;
    for (int iter = 0; iter < 3; ++iter) {
        long double p0 = 1.0L;
        long double p1 = x;
        for (int k = 2; k <= m; ++k) {
            const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        derivative = m * (x * p1 - p0) / (x * x - 1.0L);
        if (iter < 2) {
            x -= p1 / derivative;
        }
    }
    node = static_cast<double>(x);
    weight = static_cast<double>(2.0L / ((1.0L - x * x) * derivative * derivative));
}

}  // namespace

Nodes1D nodes_1d(double lo, double hi, int points, QuadratureRule rule) {
    if (points <= 0 || !(hi > lo)) {
        throw std::invalid_argument("nodes_1d: need points > 0 and a non-empty interval");
    }
    Nodes1D out;
    out.x.resize(static_cast<std::size_t>(points));
    out.w.resize(static_cast<std::size_t>(points));
    if (rule == QuadratureRule::midpoint) {
        const double h = (hi - lo) / points;
        const double mid = 0.5 * (lo + hi);
        for (int i = 0; i < points; ++i) {
            // Offsets from the midpoint keep the nodes exactly symmetric.
            out.x[static_cast<std::size_t>(i)] = mid + (i - 0.5 * (points - 1)) * h;
            out.w[static_cast<std::size_t>(i)] = h;
        }
        return out;
    }
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(points));
    if (table == nullptr) {
        throw std::runtime_error("nodes_1d: GSL could not build the Gauss-Legendre table");
    }
    for (int i = 0; i < points; ++i) {
        double xi = 0.0;
        double wi = 0.0;
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &xi, &wi, table);
        if (points > 1) {
            polish_legendre(xi, wi, points);
        }
        out.x[static_cast<std::size_t>(i)] = xi;
        out.w[static_cast<std::size_t>(i)] = wi;
    }
    gsl_integration_glfixed_table_free(table);
    // GSL's ordering is not monotone; sort ascending and force exact symmetry.
    std::vector<std::size_t> order(out.x.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.x[a] < out.x[b]; });
    Nodes1D sorted;
    for (std::size_t i : order) {
        sorted.x.push_back(out.x[i]);
        sorted.w.push_back(out.w[i]);
    }
    const std::size_t n = sorted.x.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double x = 0.5 * (sorted.x[n - 1 - i] - sorted.x[i]);
        const double w = 0.5 * (sorted.w[n - 1 - i] + sorted.w[i]);
        sorted.x[i] = -x;
        sorted.x[n - 1 - i] = x;
        sorted.w[i] = w;
        sorted.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        sorted.x[n / 2] = 0.0;
    }
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < n; ++i) {
        sorted.x[i] = mid + half * sorted.x[i];
        sorted.w[i] *= half;
    }
    return sorted;
}

Nodes1D nodes_1d(const QuadratureGrid& grid) {
    if (!(grid.radius > 0.0)) {
        throw std::invalid_argument("QuadratureGrid: radius must be positive");
    }
    return nodes_1d(-grid.radius, grid.radius, grid.points, grid.rule);
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> integrate_2d(const QuadratureGrid& grid, int components, const Integrand& f, Execution exec) {
    const Nodes1D axis = nodes_1d(grid);
    return integrate(axis, axis, components, f, exec, true);
}

std::vector<double> integrate_box(const Nodes1D& first, const Nodes1D& second, int components, const Integrand& f,
                                  Execution exec) {
    return integrate(first, second, components, f, exec, false);
}

}  // namespace nilcone::oracle
