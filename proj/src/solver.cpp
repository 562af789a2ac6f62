#include "nilcone/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "nilcone/character.hpp"

namespace nilcone {

namespace {

std::vector<TransversalDist> combine(const std::vector<TransversalDist>& basis,
                                     const std::vector<std::vector<Rational>>& coefficient_vectors, int n) {
    std::vector<TransversalDist> out;
    for (const auto& coeffs : coefficient_vectors) {
        TransversalDist psi(n);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (!coeffs[b].is_zero()) {
                psi += coeffs[b] * basis[b];
            }
        }
        out.push_back(std::move(psi));
    }
    return out;
}

// Columns are the given distributions, rows the union of their keys.
RationalMatrix coordinate_matrix(const std::vector<TransversalDist>& columns) {
    std::map<TermKey, std::size_t> row_of;
    for (const auto& psi : columns) {
        for (const auto& [key, c] : psi.terms()) {
            row_of.emplace(key, 0);
        }
    }
    std::size_t r = 0;
    for (auto& [key, idx] : row_of) {
        idx = r++;
    }
    RationalMatrix m(row_of.size(), columns.size());
    for (std::size_t col = 0; col < columns.size(); ++col) {
        for (const auto& [key, c] : columns[col].terms()) {
            m(row_of.at(key), col) = c;
        }
    }
    return m;
}

void require_non_negative(int n, int max_order, const char* what) {
    if (n < 0 || max_order < 0) {
        throw std::invalid_argument(std::string(what) + ": n and max_order must be non-negative");
    }
}

}  // namespace

CasimirPolynomial::CasimirPolynomial(std::vector<Rational> lower) : lower_(std::move(lower)) {
    if (lower_.empty()) {
        throw std::invalid_argument("CasimirPolynomial: degree must be at least 1");
    }
}

CasimirPolynomial CasimirPolynomial::monomial(int degree) {
    if (degree < 1) {
        throw std::invalid_argument("CasimirPolynomial: degree must be at least 1");
    }
    return CasimirPolynomial(std::vector<Rational>(static_cast<std::size_t>(degree)));
}

const Rational& CasimirPolynomial::coefficient(int k) const {
    static const Rational one{1};
    if (k == degree()) {
        return one;
    }
    return lower_.at(static_cast<std::size_t>(k));
}

TransversalDist CasimirPolynomial::apply(const TransversalDist& psi) const {
    TransversalDist acc = lower_[0] * psi;
    TransversalDist power = psi;
    for (int k = 1; k <= degree(); ++k) {
        power = radial_casimir(power);
        acc += coefficient(k) * power;
    }
    return acc;
}

std::string CasimirPolynomial::to_string() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coefficient(k);
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (!out.empty() || negative) {
            out += negative ? "-" : "+";
        }
        const bool unit = mag == Rational(1);
        if (k == 0) {
            out += mag.to_short_string();
            continue;
        }
        if (!unit) {
            out += mag.to_short_string() + "*";
        }
        out += "t";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

int expected_kernel_dimension(int n, int max_order) {
    if (n % 2 == 0) {
        return max_order + 1;
    }
    return std::min(max_order + 1, (n + 1) / 2);
}

Rational orbit_leading_coefficient(int n, int k) {
    Rational c = 1;
    for (int j = 1; j <= k; ++j) {
        c *= Rational(n - 2 * j + 1);
    }
    return c;
}

std::vector<TransversalDist> kernel_basis(int n, int max_order) {
    require_non_negative(n, max_order, "kernel_basis");
    const int width = max_order + 1;
    const auto column = [width](int i, int k) { return static_cast<std::size_t>(i * width + k); };
    const std::size_t size = static_cast<std::size_t>((n + 1) * width);

    // The defect never raises the derivative order, so the image of the
    // truncated coordinate space lives in the same (i, k) grid.
    RationalMatrix defect(size, size);
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= max_order; ++k) {
            TransversalDist unit(n);
            unit.add(i, k, 1);
            const TransversalDist image = equivariance_defect(unit);
            for (const auto& [key, c] : image.terms()) {
                defect(column(key.i, key.k), column(i, k)) = c;
            }
        }
    }

    std::vector<TransversalDist> raw;
    for (const auto& v : nullspace(defect)) {
        TransversalDist psi(n);
        for (int i = 0; i <= n; ++i) {
            for (int k = 0; k <= max_order; ++k) {
                psi.add(i, k, v[column(i, k)]);
            }
        }
        raw.push_back(std::move(psi));
    }

    const std::size_t dim = raw.size();
    if (dim == 0) {
        return raw;
    }
    RationalMatrix readout(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t b = 0; b < dim; ++b) {
            readout(j, b) = raw[b].coeff(n, static_cast<int>(j));
        }
    }
    RationalMatrix change;
    try {
        change = inverse(readout);
    } catch (const std::domain_error&) {
        throw std::logic_error("kernel_basis: the a_{n,k} readout is not bijective on the kernel");
    }
    std::vector<std::vector<Rational>> columns(dim, std::vector<Rational>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t b = 0; b < dim; ++b) {
            columns[j][b] = change(b, j);
        }
    }
    return combine(raw, columns, n);
}

std::vector<TransversalDist> casimir_orbit(int n, int max_order) {
    require_non_negative(n, max_order, "casimir_orbit");
    std::vector<TransversalDist> orbit;
    TransversalDist current = delta_seed(n);
    const bool even = n % 2 == 0;
    while (!current.is_zero() && (!even || static_cast<int>(orbit.size()) <= max_order)) {
        if (!is_invariant(current)) {
            throw std::logic_error("casimir_orbit: iterate " + std::to_string(orbit.size()) + " is not invariant");
        }
        orbit.push_back(current);
        current = radial_casimir(current);
    }
    return orbit;
}

RationalMatrix change_of_basis(int n, int max_order) {
    require_non_negative(n, max_order, "change_of_basis");
    if (n % 2 == 1 && max_order > (n - 1) / 2) {
        throw std::invalid_argument("change_of_basis: odd n requires max_order <= (n-1)/2");
    }
    const std::vector<TransversalDist> basis = kernel_basis(n, max_order);
    std::vector<TransversalDist> orbit = casimir_orbit(n, max_order);
    const std::size_t dim = static_cast<std::size_t>(max_order) + 1;
    if (basis.size() != dim || orbit.size() < dim) {
        throw std::logic_error("change_of_basis: basis or orbit has the wrong length");
    }
    orbit.resize(dim, TransversalDist(n));

    RationalMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        TransversalDist rebuilt(n);
        for (std::size_t j = 0; j < dim; ++j) {
            m(j, k) = orbit[k].coeff(n, static_cast<int>(j));
            rebuilt += m(j, k) * basis[j];
        }
        if (rebuilt != orbit[k]) {
            throw std::logic_error("change_of_basis: orbit element " + std::to_string(k) +
                                   " is not in the span of the kernel basis");
        }
    }
    for (const auto& d : m.diagonal()) {
        if (d.is_zero()) {
            throw std::logic_error("change_of_basis: singular matrix");
        }
    }
    return m;
}

int predicted_solution_dimension(int n, const CasimirPolynomial& p, int max_order) {
    if (n < 0 || max_order < 0) {
        throw std::invalid_argument("predicted_solution_dimension: n and max_order must be non-negative");
    }
    if (n % 2 == 0) {
        return 0;
    }
    int s = 0;
    while (s < p.degree() && p.coefficient(s).is_zero()) {
        ++s;
    }
    const int length = (n + 1) / 2;
    const int top = std::min(max_order, length - 1);
    const int bottom = std::max(0, length - s);
    return std::max(0, top - bottom + 1);
}

std::vector<TransversalDist> solve_polynomial(int n, const CasimirPolynomial& p, int max_order) {
    require_non_negative(n, max_order, "solve_polynomial");
    const std::vector<TransversalDist> basis = kernel_basis(n, max_order);
    if (basis.empty()) {
        return {};
    }
    std::vector<TransversalDist> images;
    images.reserve(basis.size());
    for (const auto& b : basis) {
        images.push_back(p.apply(b));
    }
    const RationalMatrix m = coordinate_matrix(images);
    if (m.rows() == 0) {
        // p(Box) kills the whole basis.
        return basis;
    }
    return combine(basis, nullspace(m), n);
}

bool spans_contained(const std::vector<TransversalDist>& span, const std::vector<TransversalDist>& basis) {
    std::vector<TransversalDist> all = basis;
    all.insert(all.end(), span.begin(), span.end());
    if (all.empty()) {
        return true;
    }
    const RationalMatrix both = coordinate_matrix(all);
    const RationalMatrix only = coordinate_matrix(basis);
    const std::size_t rank_basis = basis.empty() || only.rows() == 0 ? 0 : rank(only);
    const std::size_t rank_both = both.rows() == 0 ? 0 : rank(both);
    return rank_basis == rank_both;
}

std::string to_string(GeneratorCount c) {
    return c == GeneratorCount::zero ? "zero" : "countably_infinite";
}

GlobalAnswer classify_global(const GlobalQuery& q, int max_degree) {
    if (q.n < 0 || max_degree < 0) {
        throw std::invalid_argument("classify_global: n and max_degree must be non-negative");
    }
    GlobalAnswer a;
    a.query = q;
    a.max_degree = max_degree;
    a.realizable = !q.contains_origin || (q.contains_n_plus && q.contains_n_minus);

    if (q.contains_origin) {
        a.dim_supp0_graded = invariant_dims(q.n, max_degree);
        a.case_i = "S_n^0(U) ~ (V_n (x) S(g))^g";
    } else {
        a.dim_supp0_graded.assign(static_cast<std::size_t>(max_degree) + 1, 0);
        a.case_i = "S_n^0(U) = {0}";
    }

    const bool even = q.n % 2 == 0;
    if (even) {
        a.n_plus_generators = q.contains_n_plus ? GeneratorCount::countably_infinite : GeneratorCount::zero;
        a.n_minus_generators = q.contains_n_minus ? GeneratorCount::countably_infinite : GeneratorCount::zero;
        std::string s = "S_n(U) = S_n^0(U)";
        if (q.contains_n_plus) {
            s += " + Vect{Box^k(s_n delta_N+)|_U : k >= 0}";
        }
        if (q.contains_n_minus) {
            s += " + Vect{Box^k(s_n delta_N-)|_U : k >= 0}";
        }
        a.case_ii = s;
    } else {
        a.case_iii = "S_n(U) = S_n^+(U) = S_n^-(U) = S_n^0(U)";
    }
    return a;
}

bool classify_square_finite_supported(const GlobalQuery& q, const CasimirPolynomial& p, int max_order,
                                      int max_degree) {
    const GlobalAnswer answer = classify_global(q, max_degree);

    // Half-cone part. For odd n no half-cone generator survives globally,
    // whatever the local solutions are; for even n the local p(Box)-solutions
    // near a half-cone point must all vanish.
    const bool half_cone_generators = answer.n_plus_generators != GeneratorCount::zero ||
                                      answer.n_minus_generators != GeneratorCount::zero;
    if (half_cone_generators && !solve_polynomial(q.n, p, max_order).empty()) {
        return false;
    }

    // Support-{0} part. Box raises the S(g)-degree by 2 and S(g) has no zero
    // divisors, so the top-degree part of p(Box) phi is Box^r of the top part
    // of phi; this needs the graded dimensions to never drop from m to m + 2r.
    if (q.contains_origin) {
        const std::vector<std::int64_t> dims = invariant_dims(q.n, max_degree + 2 * p.degree());
        for (int m = 0; m <= max_degree; ++m) {
            if (dims[static_cast<std::size_t>(m)] > dims[static_cast<std::size_t>(m + 2 * p.degree())]) {
                return false;
            }
        }
    }
    return true;
}

bool classify_square_finite_supported(const GlobalQuery& q) {
    std::vector<CasimirPolynomial> probes;
    for (int r = 1; r <= q.n / 2 + 2; ++r) {
        probes.push_back(CasimirPolynomial::monomial(r));
    }
    probes.emplace_back(std::vector<Rational>{Rational(1)});
    return std::all_of(probes.begin(), probes.end(),
                       [&](const CasimirPolynomial& p) { return classify_square_finite_supported(q, p); });
}

nlohmann::json to_json(const GlobalAnswer& a) {
    nlohmann::json cases = {
        {"i", {{"applies", true}, {"statement", a.case_i}}},
        {"ii", {{"applies", !a.case_ii.empty()}, {"statement", a.case_ii}}},
        {"iii", {{"applies", !a.case_iii.empty()}, {"statement", a.case_iii}}},
    };
    return {
        {"n", a.query.n},
        {"query",
         {{"contains_origin", a.query.contains_origin},
          {"contains_n_plus", a.query.contains_n_plus},
          {"contains_n_minus", a.query.contains_n_minus}}},
        {"realizable", a.realizable},
        {"max_degree", a.max_degree},
        {"dim_supp0_graded", a.dim_supp0_graded},
        {"half_cone_generators",
         {{"n_plus", to_string(a.n_plus_generators)}, {"n_minus", to_string(a.n_minus_generators)}}},
        {"cases", std::move(cases)},
    };
}

}  // namespace nilcone
