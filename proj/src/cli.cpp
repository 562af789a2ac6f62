#include "nilcone/cli.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcone/character.hpp"
#include "nilcone/oracle.hpp"
#include "nilcone/sl2.hpp"

namespace nilcone::cli {

namespace {

using nlohmann::json;

// Recursive descent over: poly := sign? term (sign term)*
//                         term := coeff ('*' mono)? | mono
//                         mono := 't' ('^' digits)?
class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                text_.push_back(c);
            }
        }
    }

    CasimirPolynomial parse() {
        if (text_.empty()) {
            fail("empty polynomial");
        }
        bool negative = accept('-');
        if (!negative) {
            accept('+');
        }
        term(negative);
        while (pos_ < text_.size()) {
            if (accept('+')) {
                term(false);
            } else if (accept('-')) {
                term(true);
            } else {
                fail("expected '+' or '-'");
            }
        }
        if (coefficients_.empty()) {
            fail("polynomial is zero");
        }
        const int degree = coefficients_.rbegin()->first;
        if (degree < 1) {
            fail("degree must be at least 1");
        }
        if (coefficients_.rbegin()->second != Rational(1)) {
            fail("polynomial must be monic");
        }
        std::vector<Rational> lower(static_cast<std::size_t>(degree));
        for (const auto& [d, c] : coefficients_) {
            if (d < degree) {
                lower[static_cast<std::size_t>(d)] = c;
            }
        }
        return CasimirPolynomial(std::move(lower));
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_polynomial: " + what + " in \"" + text_ + "\"");
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0;
    }

    long digits() {
        if (!peek_digit()) {
            fail("expected digits");
        }
        long value = 0;
        while (peek_digit()) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000L) {
                fail("number too large");
            }
            ++pos_;
        }
        return value;
    }

    int monomial() {
        if (!accept('t')) {
            fail("expected 't'");
        }
        if (accept('^')) {
            const long e = digits();
            if (e > 64) {
                fail("degree too large");
            }
            return static_cast<int>(e);
        }
        return 1;
    }

    void term(bool negative) {
        Rational c(1);
        int degree = 0;
        if (peek_digit()) {
            const long num = digits();
            long den = 1;
            if (accept('/')) {
                den = digits();
                if (den == 0) {
                    fail("zero denominator");
                }
            }
            c = Rational(num, den);
            if (accept('*')) {
                degree = monomial();
            }
        } else {
            degree = monomial();
        }
        if (negative) {
            c = -c;
        }
        coefficients_[degree] += c;
        if (coefficients_[degree].is_zero()) {
            coefficients_.erase(degree);
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::map<int, Rational> coefficients_;
};

struct Options {
    int n = 0;
    int max_order = 6;
    int max_degree = 8;
    std::string poly;
    bool origin = false;
    bool n_plus = false;
    bool n_minus = false;
    std::string kind = "invariance";
    int grid = 256;
    std::optional<double> sigma;
    std::string format = "table";
};

std::string verdict(bool ok) {
    return ok ? "PASS" : "FAIL";
}

int finish(bool ok, const json& report, const std::string& table, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        out << report.dump(2) << '\n';
    } else {
        out << table;
        out << verdict(ok) << '\n';
    }
    return ok ? pass : prediction_mismatch;
}

json matrix_json(const EndMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) {
            row.push_back(m(r, c).to_string());
        }
        rows.push_back(row);
    }
    return rows;
}

void matrix_table(std::ostringstream& os, const std::string& name, const EndMatrix& m) {
    os << name << ":\n";
    for (int r = 0; r < m.dim(); ++r) {
        os << ' ';
        for (int c = 0; c < m.dim(); ++c) {
            os << ' ' << m(r, c).to_short_string();
        }
        os << '\n';
    }
}

json dists_json(const std::vector<TransversalDist>& v) {
    json out = json::array();
    for (const auto& psi : v) {
        out.push_back(to_json(psi));
    }
    return out;
}

void dists_table(std::ostringstream& os, const std::string& label, const std::vector<TransversalDist>& v) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        os << label << '[' << j << "] = " << to_display_string(v[j]) << '\n';
    }
}

int cmd_irrep(const Options& opt, std::ostream& out) {
    const Irrep rep = make_irrep(opt.n);
    const bool relations = satisfies_sl2_relations(rep);
    const EndMatrix cas = casimir_matrix(rep);
    const Rational expected = Rational(opt.n * opt.n, 2) + Rational(opt.n);
    const bool scalar = cas.is_scalar();
    const bool ok = relations && scalar && cas(0, 0) == expected;

    std::ostringstream table;
    table << "n = " << opt.n << '\n';
    matrix_table(table, "rho(H)", rep.rho_h);
    matrix_table(table, "rho(X)", rep.rho_x);
    matrix_table(table, "rho(Y)", rep.rho_y);
    table << "casimir = " << (scalar ? cas(0, 0).to_short_string() : std::string("not scalar")) << '\n';
    table << "relations: " << (relations ? "hold" : "violated") << '\n';

    json report{{"n", opt.n},
                {"rho_h", matrix_json(rep.rho_h)},
                {"rho_x", matrix_json(rep.rho_x)},
                {"rho_y", matrix_json(rep.rho_y)},
                {"casimir", scalar ? json(cas(0, 0).to_string()) : json(nullptr)},
                {"relations_hold", relations},
                {"verdict", verdict(ok)}};
    return finish(ok, report, table.str(), opt, out);
}

int cmd_kernel(const Options& opt, std::ostream& out) {
    const auto basis = kernel_basis(opt.n, opt.max_order);
    const int expected = expected_kernel_dimension(opt.n, opt.max_order);
    const bool ok = static_cast<int>(basis.size()) == expected;

    std::ostringstream table;
    table << "n = " << opt.n << ", max order = " << opt.max_order << '\n';
    dists_table(table, "basis", basis);
    table << "dimension = " << basis.size() << " (expected " << expected << ")\n";

    json report{{"n", opt.n},
                {"max_order", opt.max_order},
                {"basis", dists_json(basis)},
                {"dimension", basis.size()},
                {"expected_dimension", expected},
                {"verdict", verdict(ok)}};
    return finish(ok, report, table.str(), opt, out);
}

int cmd_orbit(const Options& opt, std::ostream& out) {
    const auto orbit = casimir_orbit(opt.n, opt.max_order);
    const bool odd = opt.n % 2 == 1;
    const int order = odd ? std::min(opt.max_order, (opt.n - 1) / 2) : opt.max_order;
    const RationalMatrix m = change_of_basis(opt.n, order);

    bool ok = m.is_upper_triangular();
    const auto diag = m.diagonal();
    for (std::size_t k = 0; k < diag.size(); ++k) {
        ok = ok && diag[k] == orbit_leading_coefficient(opt.n, static_cast<int>(k));
    }
    if (odd) {
        ok = ok && static_cast<int>(orbit.size()) == expected_kernel_dimension(opt.n, opt.n) &&
             radial_casimir(orbit.back()).is_zero();
    }

    std::ostringstream table;
    table << "n = " << opt.n << ", max order = " << opt.max_order << '\n';
    dists_table(table, "Box^k seed, k", orbit);
    if (odd) {
        table << "Box^" << orbit.size() << " seed = 0\n";
    }
    table << "change of basis (order " << order << "):\n";
    json matrix = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        table << ' ';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            table << ' ' << m(r, c).to_short_string();
            row.push_back(m(r, c).to_string());
        }
        table << '\n';
        matrix.push_back(row);
    }
    table << "upper triangular with diagonal prod_j (n - 2j + 1): " << (ok ? "yes" : "no") << '\n';

    json report{{"n", opt.n},
                {"max_order", opt.max_order},
                {"orbit", dists_json(orbit)},
                {"orbit_length", orbit.size()},
                {"change_of_basis", matrix},
                {"verdict", verdict(ok)}};
    return finish(ok, report, table.str(), opt, out);
}

int cmd_solve(const Options& opt, std::ostream& out) {
    const CasimirPolynomial p = parse_polynomial(opt.poly);
    const auto solutions = solve_polynomial(opt.n, p, opt.max_order);
    const int expected = predicted_solution_dimension(opt.n, p, opt.max_order);
    const bool ok = static_cast<int>(solutions.size()) == expected;

    std::ostringstream table;
    table << "n = " << opt.n << ", p = " << p.to_string() << ", max order = " << opt.max_order << '\n';
    if (solutions.empty()) {
        table << "only zero\n";
    } else {
        dists_table(table, "solution", solutions);
    }
    table << "dimension = " << solutions.size() << " (expected " << expected << ")\n";

    json report{{"n", opt.n},
                {"poly", p.to_string()},
                {"max_order", opt.max_order},
                {"solutions", dists_json(solutions)},
                {"dimension", solutions.size()},
                {"expected_dimension", expected},
                {"verdict", verdict(ok)}};
    return finish(ok, report, table.str(), opt, out);
}

int cmd_supp0(const Options& opt, std::ostream& out) {
    const auto dims = invariant_dims(opt.n, opt.max_degree);
    std::vector<std::int64_t> cross;
    bool ok = true;
    std::ostringstream table;
    table << "n = " << opt.n << "\n  m  dim\n";
    for (int m = 0; m <= opt.max_degree; ++m) {
        cross.push_back(tensor_invariant_dim(opt.n, m));
        ok = ok && cross.back() == dims[static_cast<std::size_t>(m)];
        table << "  " << m << "  " << dims[static_cast<std::size_t>(m)] << '\n';
    }
    json report{{"n", opt.n},
                {"max_degree", opt.max_degree},
                {"dims", dims},
                {"tensor_route", cross},
                {"verdict", verdict(ok)}};
    return finish(ok, report, table.str(), opt, out);
}

int cmd_classify(const Options& opt, std::ostream& out) {
    const GlobalQuery q{opt.n, opt.origin, opt.n_plus, opt.n_minus};
    const GlobalAnswer a = classify_global(q, opt.max_degree);
    const bool only_zero = classify_square_finite_supported(q);

    std::ostringstream table;
    table << "n = " << opt.n << ", U contains: origin=" << (q.contains_origin ? "yes" : "no")
          << " N+=" << (q.contains_n_plus ? "yes" : "no") << " N-=" << (q.contains_n_minus ? "yes" : "no") << '\n';
    if (!a.realizable) {
        table << "note: no invariant open set contains 0 without both half-cones\n";
    }
    table << "(i)   " << a.case_i << '\n';
    if (!a.case_ii.empty()) {
        table << "(ii)  " << a.case_ii << '\n';
    }
    if (!a.case_iii.empty()) {
        table << "(iii) " << a.case_iii << '\n';
    }
    table << "N+ generators: " << to_string(a.n_plus_generators) << ", N- generators: "
          << to_string(a.n_minus_generators) << '\n';
    table << "Box-finite cone-supported solutions: " << (only_zero ? "only zero" : "nonzero found") << '\n';

    json report = to_json(a);
    report["box_finite_only_zero"] = only_zero;
    report["verdict"] = verdict(only_zero);
    return finish(only_zero, report, table.str(), opt, out);
}

std::string direction_name(oracle::Direction z) {
    return z == oracle::Direction::H ? "H" : z == oracle::Direction::X ? "X" : "Y";
}

int cmd_numcheck(const Options& opt, std::ostream& out) {
    using namespace oracle;
    std::ostringstream table;
    json report{{"n", opt.n}, {"kind", opt.kind}, {"grid", opt.grid}};
    bool ok = true;

    if (opt.kind == "invariance") {
        if (opt.n % 2 != 0) {
            throw std::invalid_argument("numcheck: the invariance check needs even n");
        }
        const double sigma = opt.sigma.value_or(1.0);
        const TestFunction f = TestFunction::gaussian(sigma, Point3{0.0, 1.0, 0.0});
        report["sigma"] = sigma;
        report["radius"] = 6.0 * sigma;
        json rows = json::array();
        table << "n = " << opt.n << ", gaussian at X, sigma = " << sigma << ", radius = 6 sigma\n";
        table << "  Z     m  residual      relative\n";
        for (Direction z : {Direction::H, Direction::X, Direction::Y}) {
            for (int m : {opt.grid / 4, opt.grid / 2, opt.grid}) {
                if (m < 2) {
                    continue;
                }
                const InvarianceReport r = invariance_report(opt.n, z, f, QuadratureGrid{6.0 * sigma, m});
                rows.push_back({{"Z", direction_name(z)}, {"m", m}, {"residual", r.residual_norm},
                                {"relative", r.relative()}});
                table << "  " << direction_name(z) << "  " << m << "  " << r.residual_norm << "  " << r.relative()
                      << '\n';
                if (m == opt.grid) {
                    ok = ok && r.relative() < invariance_tolerance;
                }
            }
        }
        report["residuals"] = rows;
        if (opt.n > 0) {
            const InvarianceReport broken =
                invariance_report(opt.n, Direction::H, f, QuadratureGrid{6.0 * sigma, opt.grid},
                                  LieVariant::broken_lh_sign);
            report["broken_control_relative"] = broken.relative();
            table << "broken L_H control: relative " << broken.relative() << '\n';
            ok = ok && broken.relative() > broken_control_floor;
        }
    } else if (opt.kind == "obstruction") {
        if (opt.n % 2 != 1) {
            throw std::invalid_argument("numcheck: the obstruction check needs odd n");
        }
        const double sigma = opt.sigma.value_or(1.0);
        const TestFunction f = TestFunction::gaussian(sigma, Point3{0.0, 1.0, 0.0});
        report["sigma"] = sigma;
        json rows = json::array();
        table << "n = " << opt.n << ", gaussian at X, sigma = " << sigma << '\n';
        for (QuadratureRule rule : {QuadratureRule::gauss_legendre, QuadratureRule::midpoint}) {
            const std::string name = rule == QuadratureRule::midpoint ? "midpoint" : "gauss_legendre";
            const ObstructionReport r = obstruction_report(opt.n, f, QuadratureGrid{6.0 * sigma, opt.grid, rule});
            rows.push_back({{"rule", name}, {"norm", r.norm}, {"relative", r.relative()}});
            table << "  " << name << ": norm " << r.norm << ", relative " << r.relative() << '\n';
            ok = ok && r.relative() < obstruction_tolerance;
        }
        const ObstructionReport broken =
            obstruction_report(opt.n, f, QuadratureGrid{6.0 * sigma, opt.grid}, SectionVariant::broken_abs_a);
        table << "broken |a| control: relative " << broken.relative() << '\n';
        report["obstruction"] = rows;
        report["broken_control_relative"] = broken.relative();
        ok = ok && broken.relative() > broken_control_floor;
    } else {
        if (opt.n != 0) {
            throw std::invalid_argument("numcheck: the seed pairing check is implemented for n = 0");
        }
        const double sigma = opt.sigma.value_or(0.2);
        const SeedPairingCheck c = seed_pairing_check(sigma, opt.grid);
        report["sigma"] = sigma;
        report["moment_route"] = c.moment_route;
        report["transversal_route"] = c.transversal_route;
        report["normalization"] = c.normalization;
        report["relative_error"] = c.relative_error();
        table << "pairing of Box delta_N+ with F, gaussian at X, sigma = " << sigma << '\n';
        table << "  via Box F:           " << c.moment_route << '\n';
        table << "  via transversal:     " << c.transversal_route << '\n';
        table << "  delta_N+ / delta(q): " << c.normalization << '\n';
        table << "  relative error:      " << c.relative_error() << '\n';
        ok = c.relative_error() < seed_pairing_tolerance;
    }
    report["verdict"] = verdict(ok);
    return finish(ok, report, table.str(), opt, out);
}

}  // namespace

CasimirPolynomial parse_polynomial(std::string_view text) {
    return PolynomialParser(text).parse();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant generalized functions supported on the sl(2) nilpotent cone"};
    app.require_subcommand(1);
    Options opt;

    const auto add_n = [&opt](CLI::App* sub) {
        sub->add_option("--n", opt.n, "highest weight of V_n")->required()->check(CLI::Range(0, 64));
    };
    const auto add_format = [&opt](CLI::App* sub) {
        sub->add_option("--format", opt.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    };
    const auto add_order = [&opt](CLI::App* sub) {
        sub->add_option("--max-order", opt.max_order, "largest delta derivative order")->check(CLI::Range(0, 64));
    };
    const auto add_degree = [&opt](CLI::App* sub) {
        sub->add_option("--max-degree", opt.max_degree, "largest polynomial degree")->check(CLI::Range(0, 64));
    };

    CLI::App* irrep = app.add_subcommand("irrep", "representation matrices and Casimir scalar");
    add_n(irrep);
    add_format(irrep);

    CLI::App* kernel = app.add_subcommand("kernel", "basis of invariant transversal distributions");
    add_n(kernel);
    add_order(kernel);
    add_format(kernel);

    CLI::App* orbit = app.add_subcommand("orbit", "Casimir orbit of the seed and change of basis");
    add_n(orbit);
    add_order(orbit);
    add_format(orbit);

    CLI::App* solve = app.add_subcommand("solve", "invariant solutions of p(Box) phi = 0");
    add_n(solve);
    solve->add_option("--poly", opt.poly, "monic polynomial in t, e.g. t^2-3/2*t+1")->required();
    add_order(solve);
    add_format(solve);

    CLI::App* supp0 = app.add_subcommand("supp0-dims", "graded dimensions of origin-supported solutions");
    add_n(supp0);
    add_degree(supp0);
    add_format(supp0);

    CLI::App* classify = app.add_subcommand("classify", "global classification on an invariant open set");
    add_n(classify);
    classify->add_flag("--origin,!--no-origin", opt.origin, "U contains 0");
    classify->add_flag("--nplus", opt.n_plus, "U contains the half-cone N+");
    classify->add_flag("--nminus", opt.n_minus, "U contains the half-cone N-");
    add_degree(classify);
    add_format(classify);

    CLI::App* numcheck = app.add_subcommand("numcheck", "quadrature cross-checks");
    add_n(numcheck);
    numcheck->add_option("--kind", opt.kind, "invariance, obstruction or pairing")
        ->check(CLI::IsMember({"invariance", "obstruction", "pairing"}));
    numcheck->add_option("--grid", opt.grid, "nodes per axis")->check(CLI::Range(8, 4096));
    numcheck->add_option("--sigma", opt.sigma, "Gaussian width")->check(CLI::PositiveNumber);
    add_format(numcheck);

    std::vector<const char*> argv{"nilcone"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? pass : usage_error;
    }

    try {
        if (irrep->parsed()) {
            return cmd_irrep(opt, out);
        }
        if (kernel->parsed()) {
            return cmd_kernel(opt, out);
        }
        if (orbit->parsed()) {
            return cmd_orbit(opt, out);
        }
        if (solve->parsed()) {
            return cmd_solve(opt, out);
        }
        if (supp0->parsed()) {
            return cmd_supp0(opt, out);
        }
        if (classify->parsed()) {
            return cmd_classify(opt, out);
        }
        return cmd_numcheck(opt, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "prediction check failed: " << e.what() << '\n';
        return prediction_mismatch;
    }
}

}  // namespace nilcone::cli
