#include "nilcone/character.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace nilcone {

Character Character::monomial(int weight, std::int64_t multiplicity) {
    Character c;
    c.add(weight, multiplicity);
    return c;
}

std::int64_t Character::coeff(int weight) const {
    const auto it = terms_.find(weight);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Character::dimension() const {
    std::int64_t d = 0;
    for (const auto& [w, m] : terms_) {
        d += m;
    }
    return d;
}

bool Character::is_genuine() const {
    for (const auto& [w, m] : terms_) {
        if (m < 0 || coeff(-w) != m) {
            return false;
        }
    }
    return true;
}

Character Character::adams(int r) const {
    Character out;
    for (const auto& [w, m] : terms_) {
        out.add(w * r, m);
    }
    return out;
}

void Character::add(int weight, std::int64_t multiplicity) {
    if (multiplicity == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(weight, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Character& Character::operator+=(const Character& rhs) {
    for (const auto& [w, m] : rhs.terms_) {
        add(w, m);
    }
    return *this;
}

Character& Character::operator-=(const Character& rhs) {
    for (const auto& [w, m] : rhs.terms_) {
        add(w, -m);
    }
    return *this;
}

Character& Character::operator*=(std::int64_t scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, m] : terms_) {
        m *= scalar;
    }
    return *this;
}

Character operator*(const Character& a, const Character& b) {
    Character out;
    for (const auto& [wa, ma] : a.terms_) {
        for (const auto& [wb, mb] : b.terms_) {
            out.add(wa + wb, ma * mb);
        }
    }
    return out;
}

Character irrep_character(int n) {
    if (n < 0) {
        throw std::invalid_argument("irrep_character: n must be non-negative");
    }
    Character c;
    for (int i = 0; i <= n; ++i) {
        c.add(-n + 2 * i, 1);
    }
    return c;
}

Decomposition decompose(const Character& c) {
    Decomposition out;
    Character rest = c;
    while (!rest.is_zero()) {
        const auto& [top, mult] = *rest.terms().rbegin();
        if (top < 0 || mult < 0) {
            throw std::invalid_argument("decompose: not a genuine character (top weight " +
                                        std::to_string(top) + ", multiplicity " + std::to_string(mult) + ")");
        }
        const int hw = top;
        const std::int64_t m = mult;
        out[hw] += m;
        Character peel = irrep_character(hw);
        peel *= m;
        rest -= peel;
    }
    return out;
}

Character character_of(const Decomposition& d) {
    Character out;
    for (const auto& [hw, m] : d) {
        Character c = irrep_character(hw);
        c *= m;
        out += c;
    }
    return out;
}

std::vector<int> tensor_decompose(int a, int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("tensor_decompose: weights must be non-negative");
    }
    const Decomposition d = decompose(irrep_character(a) * irrep_character(b));
    std::vector<int> out;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        for (std::int64_t k = 0; k < it->second; ++k) {
            out.push_back(it->first);
        }
    }
    return out;
}

Character sym_power(int m, const Character& c) {
    if (m < 0) {
        throw std::invalid_argument("sym_power: m must be non-negative");
    }
    if (!c.is_genuine()) {
        throw std::invalid_argument("sym_power: argument is not a genuine character");
    }
    std::vector<Character> h{Character::monomial(0)};
    std::vector<Character> p{Character{}};
    for (int r = 1; r <= m; ++r) {
        p.push_back(c.adams(r));
    }
    for (int k = 1; k <= m; ++k) {
        Character acc;
        for (int r = 1; r <= k; ++r) {
            acc += p[static_cast<std::size_t>(r)] * h[static_cast<std::size_t>(k - r)];
        }
        Character hk;
        for (const auto& [w, mult] : acc.terms()) {
            if (mult % k != 0) {
                throw std::logic_error("sym_power: Newton recursion produced a non-divisible coefficient");
            }
            hk.add(w, mult / k);
        }
        h.push_back(std::move(hk));
    }
    return h.back();
}

Character adjoint_character() {
    return irrep_character(2);
}

std::int64_t invariant_dim(int n, int m) {
    if (n < 0) {
        throw std::invalid_argument("invariant_dim: n must be non-negative");
    }
    const Decomposition d = decompose(sym_power(m, adjoint_character()));
    const auto it = d.find(n);
    return it == d.end() ? 0 : it->second;
}

std::vector<std::int64_t> invariant_dims(int n, int max_degree) {
    std::vector<std::int64_t> out;
    for (int m = 0; m <= max_degree; ++m) {
        out.push_back(invariant_dim(n, m));
    }
    return out;
}

std::int64_t tensor_invariant_dim(int n, int m) {
    if (n < 0) {
        throw std::invalid_argument("tensor_invariant_dim: n must be non-negative");
    }
    const Decomposition d = decompose(irrep_character(n) * sym_power(m, adjoint_character()));
    const auto it = d.find(0);
    return it == d.end() ? 0 : it->second;
}

}  // namespace nilcone
