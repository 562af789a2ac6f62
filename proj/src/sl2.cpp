#include "nilcone/sl2.hpp"

#include <stdexcept>
#include <string>

namespace nilcone {

namespace {

void require_same_dim(const EndMatrix& a, const EndMatrix& b, const char* what) {
    if (a.n() != b.n()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (n=" +
                                    std::to_string(a.n()) + " vs n=" + std::to_string(b.n()) + ")");
    }
}

}  // namespace

EndMatrix::EndMatrix(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("EndMatrix: negative representation label");
    }
    entries_.resize(static_cast<std::size_t>(dim()) * static_cast<std::size_t>(dim()));
}

EndMatrix EndMatrix::identity(int n) {
    EndMatrix m(n);
    for (int i = 0; i < m.dim(); ++i) {
        m(i, i) = 1;
    }
    return m;
}

std::size_t EndMatrix::index(int row, int col) const {
    if (row < 0 || col < 0 || row >= dim() || col >= dim()) {
        throw std::out_of_range("EndMatrix: index out of range");
    }
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(col);
}

bool EndMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool EndMatrix::is_diagonal() const {
    for (int r = 0; r < dim(); ++r) {
        for (int c = 0; c < dim(); ++c) {
            if (r != c && !(*this)(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool EndMatrix::is_scalar() const {
    if (!is_diagonal()) {
        return false;
    }
    for (int i = 1; i < dim(); ++i) {
        if ((*this)(i, i) != (*this)(0, 0)) {
            return false;
        }
    }
    return true;
}

EndMatrix& EndMatrix::operator+=(const EndMatrix& rhs) {
    require_same_dim(*this, rhs, "EndMatrix::operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

EndMatrix& EndMatrix::operator-=(const EndMatrix& rhs) {
    require_same_dim(*this, rhs, "EndMatrix::operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

EndMatrix& EndMatrix::operator*=(const Rational& scalar) {
    for (auto& e : entries_) {
        e *= scalar;
    }
    return *this;
}

EndMatrix operator*(const EndMatrix& a, const EndMatrix& b) {
    require_same_dim(a, b, "EndMatrix::operator*");
    EndMatrix out(a.n());
    for (int r = 0; r < a.dim(); ++r) {
        for (int k = 0; k < a.dim(); ++k) {
            const Rational& lhs = a(r, k);
            if (lhs.is_zero()) {
                continue;
            }
            for (int c = 0; c < a.dim(); ++c) {
                if (!b(k, c).is_zero()) {
                    out(r, c) += lhs * b(k, c);
                }
            }
        }
    }
    return out;
}

EndMatrix EndMatrix::pow(int exponent) const {
    if (exponent < 0) {
        throw std::invalid_argument("EndMatrix::pow: negative exponent");
    }
    EndMatrix out = identity(n_);
    for (int e = 0; e < exponent; ++e) {
        out = out * *this;
    }
    return out;
}

long lowering_constant(int n, int i) {
    return static_cast<long>(n - i + 1) * static_cast<long>(i);
}

Irrep make_irrep(int n) {
    if (n < 0) {
        throw std::invalid_argument("make_irrep: n must be non-negative");
    }
    Irrep r{n, EndMatrix(n), EndMatrix(n), EndMatrix(n)};
    for (int i = 0; i <= n; ++i) {
        r.rho_h(i, i) = -n + 2 * i;
        if (i < n) {
            r.rho_x(i + 1, i) = 1;
        }
        if (i >= 1) {
            r.rho_y(i - 1, i) = lowering_constant(n, i);
        }
    }
    return r;
}

EndMatrix commutator(const EndMatrix& a, const EndMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

EndMatrix casimir_matrix(const Irrep& r) {
    return Rational(1, 2) * (r.rho_h * r.rho_h) + r.rho_x * r.rho_y + r.rho_y * r.rho_x;
}

Rational casimir_scalar(const Irrep& r) {
    const EndMatrix c = casimir_matrix(r);
    if (!c.is_scalar()) {
        throw std::logic_error("casimir_scalar: Casimir is not scalar; corrupted representation");
    }
    return c(0, 0);
}

bool satisfies_sl2_relations(const Irrep& r) {
    return commutator(r.rho_h, r.rho_x) == Rational(2) * r.rho_x &&
           commutator(r.rho_h, r.rho_y) == Rational(-2) * r.rho_y &&
           commutator(r.rho_x, r.rho_y) == r.rho_h;
}

}  // namespace nilcone
