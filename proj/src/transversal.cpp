#include "nilcone/transversal.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilcone {

TransversalDist::TransversalDist(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("TransversalDist: n must be non-negative");
    }
}

TransversalDist::TransversalDist(int n, std::initializer_list<std::pair<const TermKey, Rational>> terms)
    : TransversalDist(n) {
    for (const auto& [key, c] : terms) {
        add(key.i, key.k, c);
    }
}

Rational TransversalDist::coeff(int i, int k) const {
    const auto it = terms_.find(TermKey{i, k});
    return it == terms_.end() ? Rational{} : it->second;
}

std::optional<int> TransversalDist::delta_order() const {
    std::optional<int> order;
    for (const auto& [key, c] : terms_) {
        if (!order || key.k > *order) {
            order = key.k;
        }
    }
    return order;
}

void TransversalDist::add(int i, int k, const Rational& c) {
    if (i < 0 || i > n_) {
        throw std::out_of_range("TransversalDist: basis index " + std::to_string(i) +
                                " outside 0.." + std::to_string(n_));
    }
    if (k < 0) {
        throw std::out_of_range("TransversalDist: negative derivative order");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(TermKey{i, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void TransversalDist::require_same_n(const TransversalDist& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("TransversalDist: representation mismatch");
    }
}

TransversalDist& TransversalDist::operator+=(const TransversalDist& rhs) {
    require_same_n(rhs);
    for (const auto& [key, c] : rhs.terms_) {
        add(key.i, key.k, c);
    }
    return *this;
}

TransversalDist& TransversalDist::operator-=(const TransversalDist& rhs) {
    require_same_n(rhs);
    for (const auto& [key, c] : rhs.terms_) {
        add(key.i, key.k, -c);
    }
    return *this;
}

TransversalDist& TransversalDist::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) {
        c *= s;
    }
    return *this;
}

TransversalDist delta_seed(int n) {
    TransversalDist psi(n);
    psi.add(n, 0, 1);
    return psi;
}

TransversalDist d_dy(const TransversalDist& psi) {
    TransversalDist out(psi.n());
    for (const auto& [key, c] : psi.terms()) {
        out.add(key.i, key.k + 1, c);
    }
    return out;
}

TransversalDist mul_y(const TransversalDist& psi) {
    TransversalDist out(psi.n());
    for (const auto& [key, c] : psi.terms()) {
        if (key.k > 0) {
            out.add(key.i, key.k - 1, Rational(-key.k) * c);
        }
    }
    return out;
}

TransversalDist apply_endo(const EndMatrix& e, const TransversalDist& psi) {
    if (e.n() != psi.n()) {
        throw std::invalid_argument("apply_endo: matrix acts on V_" + std::to_string(e.n()) +
                                    " but distribution takes values in V_" + std::to_string(psi.n()));
    }
    TransversalDist out(psi.n());
    for (const auto& [key, c] : psi.terms()) {
        for (int row = 0; row < e.dim(); ++row) {
            const Rational& entry = e(row, key.i);
            if (!entry.is_zero()) {
                out.add(row, key.k, entry * c);
            }
        }
    }
    return out;
}

TransversalDist equivariance_defect(const TransversalDist& psi) {
    const Irrep rep = make_irrep(psi.n());
    return apply_endo(rep.rho_x, psi) + mul_y(apply_endo(rep.rho_y, psi));
}

bool is_invariant(const TransversalDist& psi) {
    return equivariance_defect(psi).is_zero();
}

TransversalDist radial_casimir(const TransversalDist& psi) {
    const Irrep rep = make_irrep(psi.n());
    const TransversalDist first = d_dy(psi);
    TransversalDist out = first * Rational(3);
    out += apply_endo(rep.rho_h, first);
    out += Rational(2) * mul_y(d_dy(first));
    out += Rational(1, 2) * apply_endo(rep.rho_y * rep.rho_y, psi);
    return out;
}

TransversalDist radial_mn(const TransversalDist& psi) {
    if (!is_invariant(psi)) {
        throw std::invalid_argument("radial_mn: argument has a nonzero equivariance defect");
    }
    const Irrep rep = make_irrep(psi.n());
    const TransversalDist first = d_dy(psi);
    TransversalDist out = apply_endo(rep.rho_x, first);
    out += mul_y(apply_endo(rep.rho_y, first));
    out += apply_endo(rep.rho_y, psi);
    return out;
}

nlohmann::json to_json(const TransversalDist& psi) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : psi.terms()) {
        terms.push_back({{"i", key.i}, {"k", key.k}, {"coeff", c.to_string()}});
    }
    return {{"n", psi.n()}, {"terms", std::move(terms)}};
}

TransversalDist transversal_from_json(const nlohmann::json& j) {
    try {
        TransversalDist psi(j.at("n").get<int>());
        for (const auto& t : j.at("terms")) {
            const int i = t.at("i").get<int>();
            const int k = t.at("k").get<int>();
            const Rational c = Rational::parse(t.at("coeff").get<std::string>());
            if (c.is_zero()) {
                throw std::invalid_argument("explicit zero coefficient");
            }
            if (!psi.coeff(i, k).is_zero()) {
                throw std::invalid_argument("duplicate term");
            }
            psi.add(i, k, c);
        }
        return psi;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("transversal record: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("transversal record: ") + e.what());
    }
}

std::string serialize(const TransversalDist& psi) {
    return to_json(psi).dump();
}

TransversalDist deserialize(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("transversal record: ") + e.what());
    }
    return transversal_from_json(j);
}

std::string to_display_string(const TransversalDist& psi) {
    if (psi.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : psi.terms()) {
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1)) {
            os << mag << " ";
        }
        os << "d^" << key.k << " v_" << key.i;
        first = false;
    }
    return os.str();
}

}  // namespace nilcone
