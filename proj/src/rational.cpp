#include "leibniz/rational.hpp"

namespace leibniz {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return all_digits(s);
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!valid_integer(num_part)) {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    mpq_class v(mpz_class(std::string(num_part), 10));
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        if (!all_digits(den_part)) {
            throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
        }
        mpz_class den(std::string(den_part), 10);
        if (den == 0) {
            throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
        }
        v = mpq_class(v.get_num(), den);
        v.canonicalize();
    }
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace leibniz
