#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcone/linalg.hpp"
#include "nilcone/rational.hpp"
#include "nilcone/transversal.hpp"

namespace nilcone {

/// Monic polynomial p(t) = t^r + a_{r-1} t^{r-1} + ... + a_0 in the Casimir.
class CasimirPolynomial {
public:
    /// `lower` holds a_0 .. a_{r-1}; its size is the degree r, which must be >= 1.
    explicit CasimirPolynomial(std::vector<Rational> lower);

    /// t^r.
    static CasimirPolynomial monomial(int degree);

    [[nodiscard]] int degree() const { return static_cast<int>(lower_.size()); }
    [[nodiscard]] const Rational& coefficient(int k) const;
    [[nodiscard]] const std::vector<Rational>& lower_coefficients() const { return lower_; }

    /// p(radial Casimir) psi, exact and untruncated.
    [[nodiscard]] TransversalDist apply(const TransversalDist& psi) const;

    /// e.g. "t^3+t" or "t^2-3/2*t+1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CasimirPolynomial&, const CasimirPolynomial&) = default;

private:
    std::vector<Rational> lower_;
};

/// Dimension of the invariant delta-derivative space with order <= max_order:
/// max_order + 1 for even n, min(max_order + 1, (n + 1) / 2) for odd n.
[[nodiscard]] int expected_kernel_dimension(int n, int max_order);

/// (n - 2k + 1)(n - 2k + 3) ... (n - 1): the delta^(k) v_n coefficient of the
/// k-th Casimir iterate of the seed.
[[nodiscard]] Rational orbit_leading_coefficient(int n, int k);

/// Exact basis of invariant distributions of order <= max_order, echelonized
/// so that element j has a_{n,j} = 1 and a_{n,j'} = 0 for j' != j.
[[nodiscard]] std::vector<TransversalDist> kernel_basis(int n, int max_order);

/// [seed, Box seed, Box^2 seed, ...]: max_order + 1 iterates for even n,
/// every nonzero iterate for odd n. Throws std::logic_error if an iterate
/// fails the invariance check.
[[nodiscard]] std::vector<TransversalDist> casimir_orbit(int n, int max_order);

/// Column k holds the a_{n,j} readout of the k-th orbit element in the
/// kernel_basis(n, max_order) coordinates. For odd n requires
/// max_order <= (n - 1) / 2. Throws std::logic_error if an orbit element is
/// outside the kernel span or the matrix is singular.
[[nodiscard]] RationalMatrix change_of_basis(int n, int max_order);

/// dim of {phi : order <= max_order, invariant, p(Box) phi = 0} predicted from
/// the structure of the orbit: zero for even n; for odd n, with
/// p = t^s q(t), q(0) != 0, the orbit elements Box^k seed with
/// (n + 1) / 2 - s <= k <= min(max_order, (n - 1) / 2).
[[nodiscard]] int predicted_solution_dimension(int n, const CasimirPolynomial& p, int max_order);

/// Basis of {phi : order <= max_order, invariant, p(Box) phi = 0}.
[[nodiscard]] std::vector<TransversalDist> solve_polynomial(int n, const CasimirPolynomial& p, int max_order);

/// True when every element of `span` lies in the span of `basis`.
[[nodiscard]] bool spans_contained(const std::vector<TransversalDist>& span,
                                   const std::vector<TransversalDist>& basis);

/// An SL(2,R)-invariant open set, seen through which nilpotent orbits it contains.
struct GlobalQuery {
    int n = 0;
    bool contains_origin = false;
    bool contains_n_plus = false;
    bool contains_n_minus = false;
};

enum class GeneratorCount { zero, countably_infinite };

struct GlobalAnswer {
    GlobalQuery query;
    /// An invariant open set containing 0 contains both half-cones.
    bool realizable = true;
    int max_degree = 0;
    /// Graded dimensions of the support-{0} part, degrees 0..max_degree.
    std::vector<std::int64_t> dim_supp0_graded;
    GeneratorCount n_plus_generators = GeneratorCount::zero;
    GeneratorCount n_minus_generators = GeneratorCount::zero;
    std::string case_i;
    std::string case_ii;   // empty unless n is even
    std::string case_iii;  // empty unless n is odd
};

[[nodiscard]] GlobalAnswer classify_global(const GlobalQuery& q, int max_degree = 8);

/// True iff the only Box-finite invariant distribution supported in the
/// nilpotent cone over U annihilated by p(Box) is zero. Combines the local
/// solve_polynomial result on each contained half-cone (with the odd-n
/// obstruction to a global section) and injectivity of p(Box) on the
/// support-{0} tower.
[[nodiscard]] bool classify_square_finite_supported(const GlobalQuery& q, const CasimirPolynomial& p,
                                                    int max_order = 8, int max_degree = 12);

/// Runs classify_square_finite_supported over the probe family t^r
/// (r = 1 .. n/2 + 2) and t + 1.
[[nodiscard]] bool classify_square_finite_supported(const GlobalQuery& q);

[[nodiscard]] std::string to_string(GeneratorCount c);
[[nodiscard]] nlohmann::json to_json(const GlobalAnswer& a);

}  // namespace nilcone
