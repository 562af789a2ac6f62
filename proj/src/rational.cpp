#include "nilcone/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace nilcone {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("Rational: malformed numerator in '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(num));
    }
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
    }
    const mpz_class d = parse_integer(den);
    if (d == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    mpq_class q;
    q.get_num() = parse_integer(num);
    q.get_den() = d;
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_short_string() const {
    return is_integer() ? value_.get_num().get_str() : to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_short_string();
}

}  // namespace nilcone
