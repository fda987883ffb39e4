#ifndef LODUAL_MODULE_HPP
#define LODUAL_MODULE_HPP

#include "lodual/linalg.hpp"
#include "lodual/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lodual {

/// A finitely presented graded module over A: free generators in prescribed
/// internal degrees, modulo the column span of a homogeneous relation matrix.
class GradedModulePresentation {
public:
    GradedModulePresentation(RingPtr ring, std::vector<int> generator_degrees,
                             std::vector<std::vector<PolynomialElement>> relation_columns,
                             std::string name = "M");

    static GradedModulePresentation free_module(RingPtr ring, std::vector<int> degrees,
                                                std::string name = "F");
    /// The unit module A itself.
    static GradedModulePresentation unit(RingPtr ring);
    /// The residue field Q = A/I.
    static GradedModulePresentation residue_field(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::string& name() const { return name_; }
    std::size_t generator_count() const { return generator_degrees_.size(); }
    const std::vector<int>& generator_degrees() const { return generator_degrees_; }
    std::size_t relation_count() const { return relations_.size(); }
    const std::vector<PolynomialElement>& relation(std::size_t c) const { return relations_[c]; }
    /// Internal degree of relation column c; nullopt for an all-zero column.
    std::optional<int> relation_degree(std::size_t c) const { return relation_degrees_[c]; }

    int min_generator_degree() const;
    int max_generator_degree() const;
    int max_relation_degree() const;

private:
    RingPtr ring_;
    std::string name_;
    std::vector<int> generator_degrees_;
    std::vector<std::vector<PolynomialElement>> relations_; // [column][generator row]
    std::vector<std::optional<int>> relation_degrees_;
};

/// Label of a basis element of a realized degreewise piece: generator index
/// plus the monomial multiplying it.
struct BasisLabel {
    std::size_t generator = 0;
    Monomial monomial;
    std::string str(const GradedPolynomialRing& ring, const std::string& gen_prefix = "g") const;
};

/// Exact degreewise realization of a presented module on a window: bases of
/// each graded piece and the multiplication maps between them. Direct
/// realizations are exact at every window degree, so every degree is trusted.
class WindowedModule {
public:
    WindowedModule() = default;

    const DegreeWindow& window() const { return window_; }
    const RingPtr& ring() const { return ring_; }

    std::size_t dim(int t) const;
    const std::vector<BasisLabel>& labels(int t) const;
    bool trusted(int t) const { return window_.contains(t); }

    /// Multiplication by y_i from degree t; requires t and t + |y_i| in window.
    const SparseMatrix& action(std::size_t i, int t) const;
    /// Matrix of multiplication by a homogeneous polynomial from degree t.
    SparseMatrix poly_action(const PolynomialElement& p, int t) const;

    /// Coordinates in M_t of the class of generator j (zero unless the
    /// generator degree is t).
    std::vector<Rational> generator_class(std::size_t j, int t) const;

    /// Pairwise commutativity of the action matrices where composable.
    bool actions_commute() const;

private:
    friend WindowedModule realize(const GradedModulePresentation& m, const DegreeWindow& w);

    RingPtr ring_;
    DegreeWindow window_;
    std::vector<int> generator_degrees_;
    std::map<int, std::vector<BasisLabel>> labels_;
    std::map<int, QuotientSpace> pieces_;                   // free piece -> module piece
    std::map<int, std::vector<BasisLabel>> free_labels_;    // basis of the free cover
    std::vector<std::map<int, SparseMatrix>> actions_;      // [i][t]

    const QuotientSpace& piece(int t) const;
};

WindowedModule realize(const GradedModulePresentation& m, const DegreeWindow& w);

std::map<int, long> hilbert_function(const GradedModulePresentation& m, const DegreeWindow& w);

/// Decision data for I-torsionness. The decision is exact: per generator and
/// ring generator the saturation kernel chain ker(y_i^k) is iterated to its
/// stabilization (at most dim M_{deg g} + 1 steps), which either kills the
/// generator class or proves it survives forever.
struct TorsionCertificate {
    bool torsion = false;
    bool degenerate_rank_zero = false; // r = 0: I = (0), vacuously torsion
    /// exponents[j][i]: least k with y_i^k g_j = 0 (only when torsion).
    std::vector<std::vector<int>> exponents;
    /// Internal degree beyond which the module provably vanishes (torsion case).
    std::optional<int> support_bound;
    /// Witness for the non-torsion case: generator and direction that survive.
    std::string witness;
};

TorsionCertificate is_I_torsion(const GradedModulePresentation& m);

/// Degreewise witness that I-adic completion fixes m: at each probed degree
/// t the piece (I^k M)_t vanishes once k exceeds the certified bound.
struct CompletionCertificate {
    DegreeWindow probe;
    bool degenerate_rank_zero = false;
    std::map<int, int> vanishing_power; // t -> k with (I^k M)_t = 0, verified
    bool verified = false;
};

struct L0CompletionResult {
    GradedModulePresentation module;
    CompletionCertificate certificate;
};

/// L0-completion of a finitely presented graded module: the identity, with a
/// verified certificate on the probe window.
L0CompletionResult l0_completion(const GradedModulePresentation& m, const DegreeWindow& probe);

} // namespace lodual

#endif
