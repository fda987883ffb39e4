#include "lodual/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace lodual {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const std::string& text) {
    // Accepts "a" or "a/b" with optional sign, base 10.
    if (v_.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (v_.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace lodual
