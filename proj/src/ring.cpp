#include "lodual/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lodual {

DegreeWindow::DegreeWindow(int lo, int hi) : t_min(lo), t_max(hi) {
    if (lo > hi)
        throw std::invalid_argument("DegreeWindow: t_min > t_max");
}

GradedPolynomialRing::GradedPolynomialRing(std::string name,
                                           std::vector<std::pair<std::string, int>> generators)
    : name_(std::move(name)), gens_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& [n, d] : gens_) {
        if (d <= 0 || d % 2 != 0)
            throw std::invalid_argument("ring '" + name_ + "': generator '" + n +
                                        "' must have positive even degree, got " + std::to_string(d));
        if (!seen.insert(n).second)
            throw std::invalid_argument("ring '" + name_ + "': duplicate generator name '" + n + "'");
    }
}

int GradedPolynomialRing::max_generator_degree() const {
    int m = 0;
    for (const auto& [n, d] : gens_)
        m = std::max(m, d);
    return m;
}

int GradedPolynomialRing::min_generator_degree() const {
    int m = 0;
    for (const auto& [n, d] : gens_)
        m = (m == 0) ? d : std::min(m, d);
    return m;
}

std::size_t GradedPolynomialRing::find_generator(const std::string& n) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].first == n)
            return i;
    return npos;
}

RingPtr make_ring(std::string name, std::vector<std::pair<std::string, int>> generators) {
    return std::make_shared<const GradedPolynomialRing>(std::move(name), std::move(generators));
}

int Monomial::degree(const GradedPolynomialRing& ring) const {
    int d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        d += exponents[i] * ring.generator_degree(i);
    return d;
}

bool Monomial::lex_less(const Monomial& o) const {
    // "less" in list position: x^2 before xy before y^2, so compare reversed.
    return std::lexicographical_compare(o.exponents.begin(), o.exponents.end(),
                                        exponents.begin(), exponents.end());
}

std::string Monomial::str(const GradedPolynomialRing& ring) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!first)
            os << "*";
        os << ring.generator_name(i);
        if (exponents[i] > 1)
            os << "^" << exponents[i];
        first = false;
    }
    return first ? "1" : os.str();
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size())
        throw std::invalid_argument("monomial_product: rank mismatch");
    Monomial m = a;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] += b.exponents[i];
    return m;
}

namespace {
void enumerate(const GradedPolynomialRing& ring, std::size_t i, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
    if (i == ring.rank()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    if (i + 1 == ring.rank()) {
        int d = ring.generator_degree(i);
        if (remaining >= 0 && remaining % d == 0) {
            cur.exponents[i] = remaining / d;
            out.push_back(cur);
            cur.exponents[i] = 0;
        }
        return;
    }
    int d = ring.generator_degree(i);
    for (int e = remaining / d; e >= 0; --e) {
        cur.exponents[i] = e;
        enumerate(ring, i + 1, remaining - e * d, cur, out);
    }
    cur.exponents[i] = 0;
}
} // namespace

std::vector<Monomial> monomial_basis(const GradedPolynomialRing& ring, int t) {
    std::vector<Monomial> out;
    if (t < 0)
        return out;
    if (ring.rank() == 0) {
        if (t == 0)
            out.push_back(Monomial{{}});
        return out;
    }
    Monomial cur;
    cur.exponents.assign(ring.rank(), 0);
    enumerate(ring, 0, t, cur, out);
    return out;
}

std::map<int, long> hilbert_coefficients(const GradedPolynomialRing& ring, const DegreeWindow& w) {
    // Power series product of geometric series, truncated at w.t_max.
    int top = std::max(w.t_max, 0);
    std::vector<long> coeff(static_cast<std::size_t>(top) + 1, 0);
    coeff[0] = 1;
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        int d = ring.generator_degree(i);
        for (int t = d; t <= top; ++t)
            coeff[t] += coeff[t - d];
    }
    std::map<int, long> out;
    for (int t = w.t_min; t <= w.t_max; ++t)
        out[t] = (t >= 0) ? coeff[t] : 0;
    return out;
}

PolynomialElement::PolynomialElement(RingPtr ring, std::vector<std::pair<Monomial, Rational>> terms)
    : ring_(std::move(ring)) {
    if (!ring_)
        throw std::invalid_argument("PolynomialElement: null ring");
    for (const auto& [m, c] : terms)
        if (m.exponents.size() != ring_->rank())
            throw std::invalid_argument("PolynomialElement: monomial rank mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
    for (auto& [m, c] : terms) {
        if (!terms_.empty() && terms_.back().first == m)
            terms_.back().second += c;
        else
            terms_.emplace_back(std::move(m), std::move(c));
    }
    std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
}

PolynomialElement PolynomialElement::zero(RingPtr ring) {
    return PolynomialElement(std::move(ring), {});
}

PolynomialElement PolynomialElement::constant(RingPtr ring, const Rational& c) {
    Monomial one;
    one.exponents.assign(ring->rank(), 0);
    return PolynomialElement(std::move(ring), {{one, c}});
}

PolynomialElement PolynomialElement::generator(RingPtr ring, std::size_t i, int power) {
    if (i >= ring->rank())
        throw std::invalid_argument("PolynomialElement: generator index out of range");
    Monomial m;
    m.exponents.assign(ring->rank(), 0);
    m.exponents[i] = power;
    return PolynomialElement(std::move(ring), {{m, Rational(1)}});
}

bool PolynomialElement::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.front().first.degree(*ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*ring_) != d)
            return false;
    return true;
}

int PolynomialElement::degree() const {
    if (terms_.empty())
        throw std::logic_error("PolynomialElement: degree of zero");
    if (!is_homogeneous())
        throw std::logic_error("PolynomialElement: degree of inhomogeneous element");
    return terms_.front().first.degree(*ring_);
}

PolynomialElement PolynomialElement::operator+(const PolynomialElement& o) const {
    if (!(*ring_ == *o.ring_))
        throw std::invalid_argument("PolynomialElement: mixed rings");
    auto ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return PolynomialElement(ring_, std::move(ts));
}

PolynomialElement PolynomialElement::operator-(const PolynomialElement& o) const {
    return *this + o.scaled(Rational(-1));
}

PolynomialElement PolynomialElement::operator*(const PolynomialElement& o) const {
    if (!(*ring_ == *o.ring_))
        throw std::invalid_argument("PolynomialElement: mixed rings");
    std::vector<std::pair<Monomial, Rational>> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            ts.emplace_back(monomial_product(ma, mb), ca * cb);
    return PolynomialElement(ring_, std::move(ts));
}

PolynomialElement PolynomialElement::scaled(const Rational& c) const {
    if (c.is_zero())
        return zero(ring_);
    auto ts = terms_;
    for (auto& [m, v] : ts)
        v *= c;
    return PolynomialElement(ring_, std::move(ts));
}

bool PolynomialElement::operator==(const PolynomialElement& o) const {
    return terms_ == o.terms_;
}

std::string PolynomialElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        std::string mono = m.str(*ring_);
        if (mono == "1")
            os << a.str();
        else if (a.is_one())
            os << mono;
        else
            os << a.str() << "*" << mono;
        first = false;
    }
    return os.str();
}

PolynomialElement multiply(const PolynomialElement& a, const PolynomialElement& b) {
    return a * b;
}

} // namespace lodual
