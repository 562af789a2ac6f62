#pragma once

#include <functional>
#include <span>
#include <vector>

namespace nilcone::oracle {

enum class QuadratureRule { midpoint, gauss_legendre };

/// Tensor-product rule on [-radius, radius]^2 with `points` nodes per axis.
/// Nodes are symmetric about 0 for both rules.
struct QuadratureGrid {
    double radius = 6.0;
    int points = 128;
    QuadratureRule rule = QuadratureRule::gauss_legendre;
};

struct Nodes1D {
    std::vector<double> x;
    std::vector<double> w;
};

/// Deterministic nodes/weights for one axis, ascending.
[[nodiscard]] Nodes1D nodes_1d(const QuadratureGrid& grid);

/// Same for an arbitrary interval.
[[nodiscard]] Nodes1D nodes_1d(double lo, double hi, int points, QuadratureRule rule);

enum class Execution { serial, parallel };

/// Writes `out.size()` integrand components at (a, b).
using Integrand = std::function<void(double a, double b, std::span<double> out)>;

/// Recursive pairwise sum; the split point depends only on the length.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// Integrates a vector-valued function over the grid.
///
/// Node values are stored at fixed positions and reduced in a fixed tree:
/// each node is first added to its antipode (a, b) -> (-a, -b), then the
/// pair sums go through pairwise_sum. The result is bit-identical between
/// the serial and the parallel path and across thread counts.
[[nodiscard]] std::vector<double> integrate_2d(const QuadratureGrid& grid, int components, const Integrand& f,
                                               Execution exec = Execution::parallel);

/// Same reduction over an arbitrary rectangle, without antipodal pairing.
[[nodiscard]] std::vector<double> integrate_box(const Nodes1D& first, const Nodes1D& second, int components,
                                                const Integrand& f, Execution exec = Execution::parallel);

}  // namespace nilcone::oracle
