#ifndef LODUAL_RING_HPP
#define LODUAL_RING_HPP

#include "lodual/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lodual {

/// Closed interval of internal degrees.
struct DegreeWindow {
    int t_min = 0;
    int t_max = 0;

    DegreeWindow() = default;
    DegreeWindow(int lo, int hi);
    bool contains(int t) const { return t_min <= t && t <= t_max; }
    int length() const { return t_max - t_min + 1; }
};

/// The coefficient ring Q[y_1,...,y_r] with every generator in a positive
/// even internal degree. The augmentation ideal I = (y_1,...,y_r) is always
/// the full generator list. r = 0 is allowed and gives the ring Q.
class GradedPolynomialRing {
public:
    GradedPolynomialRing() = default;
    GradedPolynomialRing(std::string name, std::vector<std::pair<std::string, int>> generators);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return gens_.size(); }
    const std::string& generator_name(std::size_t i) const { return gens_[i].first; }
    int generator_degree(std::size_t i) const { return gens_[i].second; }
    int max_generator_degree() const;
    int min_generator_degree() const;

    /// Index of a generator by name; npos when absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_generator(const std::string& n) const;

    friend bool operator==(const GradedPolynomialRing& a, const GradedPolynomialRing& b) {
        return a.gens_ == b.gens_;
    }

private:
    std::string name_ = "Q";
    std::vector<std::pair<std::string, int>> gens_;
};

using RingPtr = std::shared_ptr<const GradedPolynomialRing>;

RingPtr make_ring(std::string name, std::vector<std::pair<std::string, int>> generators);

/// Exponent vector, one entry per ring generator.
struct Monomial {
    std::vector<int> exponents;

    int degree(const GradedPolynomialRing& ring) const;
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    /// Lexicographic order with earlier generators dominating; x^2 > xy > y^2.
    bool lex_less(const Monomial& o) const;
    std::string str(const GradedPolynomialRing& ring) const;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

/// All monomials of internal degree t, lexicographically ordered (largest
/// first). Empty when t is negative or not realizable.
std::vector<Monomial> monomial_basis(const GradedPolynomialRing& ring, int t);

/// dim_Q A_t for t in the window; matches the expansion of
/// prod_i 1/(1 - q^{deg y_i}).
std::map<int, long> hilbert_coefficients(const GradedPolynomialRing& ring, const DegreeWindow& w);

/// A polynomial over the ring: sorted terms, no zero coefficients.
class PolynomialElement {
public:
    PolynomialElement() = default;
    PolynomialElement(RingPtr ring, std::vector<std::pair<Monomial, Rational>> terms);

    static PolynomialElement zero(RingPtr ring);
    static PolynomialElement constant(RingPtr ring, const Rational& c);
    static PolynomialElement generator(RingPtr ring, std::size_t i, int power = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when all terms share one internal degree (or the element is 0).
    bool is_homogeneous() const;
    /// The common internal degree of a homogeneous nonzero element.
    int degree() const;

    PolynomialElement operator+(const PolynomialElement& o) const;
    PolynomialElement operator-(const PolynomialElement& o) const;
    PolynomialElement operator*(const PolynomialElement& o) const;
    PolynomialElement scaled(const Rational& c) const;
    bool operator==(const PolynomialElement& o) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<std::pair<Monomial, Rational>> terms_;
};

PolynomialElement multiply(const PolynomialElement& a, const PolynomialElement& b);

} // namespace lodual

#endif
