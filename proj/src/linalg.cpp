#include "nilcone/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nilcone {

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivot_cols;
};

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& v : row) {
        if (v != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) {
                return;
            }
        }
    }
    if (g > 1) {
        for (auto& v : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

IntRow integer_row(const RationalMatrix& a, std::size_t r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        const mpz_class d = a(r, c).denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    IntRow row(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        const Rational& q = a(r, c);
        if (!q.is_zero()) {
            row[c] = q.numerator() * (lcm / q.denominator());
        }
    }
    make_primitive(row);
    return row;
}

// Integer-preserving row reduction: row_j <- p * row_j - a_j * row_pivot,
// followed by removal of the row content. Rows with a zero in the pivot
// column are left untouched.
Echelon fraction_free_echelon(const RationalMatrix& a) {
    Echelon e;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        e.rows.push_back(integer_row(a, r));
    }
    std::size_t next = 0;
    for (std::size_t col = 0; col < a.cols() && next < e.rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < e.rows.size() && e.rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == e.rows.size()) {
            continue;
        }
        std::swap(e.rows[next], e.rows[pivot]);
        const IntRow& prow = e.rows[next];
        for (std::size_t j = next + 1; j < e.rows.size(); ++j) {
            IntRow& row = e.rows[j];
            if (row[col] == 0) {
                continue;
            }
            const mpz_class p = prow[col];
            const mpz_class f = row[col];
            for (std::size_t c = col; c < a.cols(); ++c) {
                row[c] = p * row[c] - f * prow[c];
            }
            make_primitive(row);
        }
        e.pivot_cols.push_back(col);
        ++next;
    }
    e.rows.resize(e.pivot_cols.size());
    return e;
}

}  // namespace

bool RationalMatrix::is_upper_triangular() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < r && c < cols_; ++c) {
            if (!(*this)(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Rational> RationalMatrix::diagonal() const {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) {
        d.push_back((*this)(i, i));
    }
    return d;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
    const Echelon e = fraction_free_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t pc : e.pivot_cols) {
        is_pivot[pc] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> x(a.cols());
        x[free] = 1;
        for (std::size_t r = e.rows.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_cols[r];
            Rational acc;
            for (std::size_t c = pc + 1; c < a.cols(); ++c) {
                if (e.rows[r][c] != 0 && !x[c].is_zero()) {
                    acc += Rational(e.rows[r][c]) * x[c];
                }
            }
            x[pc] = -acc / Rational(e.rows[r][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const RationalMatrix& a) {
    return fraction_free_echelon(a).pivot_cols.size();
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    const std::size_t n = a.rows();
    RationalMatrix work = a;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        inv(i, i) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::domain_error("inverse: singular matrix");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Rational p = work(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col).is_zero()) {
                continue;
            }
            const Rational f = work(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                work(r, c) -= f * work(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace nilcone
