#ifndef LODUAL_COMPLEX_HPP
#define LODUAL_COMPLEX_HPP

#include "lodual/module.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace lodual {

using PolyMatrix = std::vector<std::vector<PolynomialElement>>; // [row][col]

PolyMatrix poly_matrix_product(const PolyMatrix& a, const PolyMatrix& b);

/// Bounded complex of shifted graded free modules with homological indexing:
/// the differential maps degree s to s - 1 and preserves internal degree.
/// Sigma^t shifts internal degree up by t. d o d = 0 is checked symbolically
/// at construction, as is homogeneity of every matrix entry.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(RingPtr ring, std::map<int, std::vector<int>> terms,
                std::map<int, PolyMatrix> differentials, std::string name = "C");

    /// Skips validation; only for fault-injection paths in the verifier.
    static FreeComplex unchecked(RingPtr ring, std::map<int, std::vector<int>> terms,
                                 std::map<int, PolyMatrix> differentials, std::string name);

    static FreeComplex unit(RingPtr ring);
    static FreeComplex zero(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::string& name() const { return name_; }
    bool is_zero() const { return terms_.empty(); }
    int s_min() const;
    int s_max() const;
    /// Internal-degree shifts of the free summands in homological degree s.
    const std::vector<int>& term(int s) const;
    std::size_t rank(int s) const { return term(s).size(); }
    /// Matrix of d_s : C_s -> C_{s-1}; rank(s-1) x rank(s).
    PolyMatrix differential(int s) const;

    int min_shift() const;
    int max_shift() const;

    FreeComplex renamed(std::string name) const;

private:
    void validate() const;

    RingPtr ring_;
    std::string name_ = "C";
    std::map<int, std::vector<int>> terms_;
    std::map<int, PolyMatrix> diffs_;
};

/// Degree-0 chain map between free complexes; the chain property
/// d o f = f o d and entry homogeneity are verified at construction.
class ChainMap {
public:
    ChainMap(FreeComplex source, FreeComplex target, std::map<int, PolyMatrix> blocks,
             std::string name = "f");

    static ChainMap identity(const FreeComplex& c);
    static ChainMap zero(FreeComplex source, FreeComplex target);

    const FreeComplex& source() const { return source_; }
    const FreeComplex& target() const { return target_; }
    const std::string& name() const { return name_; }
    PolyMatrix block(int s) const; // target.rank(s) x source.rank(s)

private:
    FreeComplex source_;
    FreeComplex target_;
    std::map<int, PolyMatrix> blocks_;
    std::string name_;
};

FreeComplex shift_internal(const FreeComplex& c, int a);
FreeComplex shift_homological(const FreeComplex& c, int k);

FreeComplex tensor(const FreeComplex& c, const FreeComplex& d);
/// Hom(c, d); c must be perfect (FreeComplex always is). Differential
/// (delta f)_p = d_D f_p - (-1)^s f_{p-1} d_C.
FreeComplex hom_complex(const FreeComplex& c, const FreeComplex& d);
FreeComplex dual_complex(const FreeComplex& c);

/// Mapping cone: cone(f)_s = X_{s-1} (+) Y_s, d(x, y) = (-dx, fx + dy).
FreeComplex cone(const ChainMap& f);
/// The fiber of f in the bigraded encoding used throughout: for a map of
/// internally shifted frees the source lands in homological degree 1, so the
/// cone itself realizes the (total-degree desuspended) fiber. See koszul.hpp.
FreeComplex fiber(const ChainMap& f);

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap tensor_map(const ChainMap& f, const ChainMap& g);
ChainMap tensor_map_left(const FreeComplex& x, const ChainMap& g);  // id_x (x) g
ChainMap tensor_map_right(const ChainMap& f, const FreeComplex& y); // f (x) id_y
/// Hom(f, y) : Hom(X', y) -> Hom(X, y) for f : X -> X'.
ChainMap hom_map_pre(const ChainMap& f, const FreeComplex& y);
/// Hom(x, g) : Hom(x, Y) -> Hom(x, Y') for g : Y -> Y'.
ChainMap hom_map_post(const FreeComplex& x, const ChainMap& g);
/// The augmentation of a complex whose degree-0 term carries a shift-0
/// summand mapping onto the unit (used for Gamma m -> m).
ChainMap augmentation_to_unit(const FreeComplex& c, std::size_t unit_summand);

/// Bigraded homology dimensions with explicit trust flags.
struct WindowedHomology {
    DegreeWindow window;
    int s_min = 0;
    int s_max = 0;
    std::map<std::pair<int, int>, std::size_t> dims; // nonzero entries only
    std::set<std::pair<int, int>> untrusted;

    std::size_t dim(int s, int t) const;
    bool trusted(int s, int t) const;
    void set(int s, int t, std::size_t d);
    bool agrees_on_trusted(const WindowedHomology& other) const;
};

using SharedWindowedModule = std::shared_ptr<const WindowedModule>;

SharedWindowedModule realize_shared(const GradedModulePresentation& m, const DegreeWindow& hull);

/// Coefficient window large enough to realize each listed complex (and maps
/// between them) degreewise over w, with `headroom` extra degrees on top for
/// iterated multiplication maps.
DegreeWindow coefficient_hull(const std::vector<const FreeComplex*>& cs, const DegreeWindow& w,
                              int headroom = 0);

/// Exact degreewise realization of c (x)_A M over a window.
class RealizedComplex {
public:
    RealizedComplex() = default;

    const DegreeWindow& window() const { return window_; }
    int s_min() const { return s_min_; }
    int s_max() const { return s_max_; }
    std::size_t dim(int s, int t) const;
    /// d : C_{s,t} -> C_{s-1,t}.
    SparseMatrix differential(int s, int t) const;
    /// Multiplication by y_i : C_{s,t} -> C_{s,t+|y_i|}.
    SparseMatrix action(std::size_t i, int s, int t) const;

    std::size_t homology_dim(int s, int t);
    const Subquotient& homology_space(int s, int t);

    const WindowedModule& coefficients() const { return *coeff_; }
    const SharedWindowedModule& shared_coefficients() const { return coeff_; }

private:
    friend RealizedComplex realize_complex(const FreeComplex& c, SharedWindowedModule coeff,
                                           const DegreeWindow& w);
    friend struct RealizedMap;

    RingPtr ring_;
    DegreeWindow window_;
    int s_min_ = 0, s_max_ = 0;
    std::vector<int> shifts(int s) const;
    std::map<int, std::vector<int>> terms_;
    std::map<int, PolyMatrix> diffs_;
    SharedWindowedModule coeff_;
    std::map<std::pair<int, int>, Subquotient> homology_cache_;
    std::map<std::pair<int, int>, std::size_t> homology_dim_cache_;
};

RealizedComplex realize_complex(const FreeComplex& c, SharedWindowedModule coeff,
                                const DegreeWindow& w);
RealizedComplex realize_complex(const FreeComplex& c, const GradedModulePresentation& coeff,
                                const DegreeWindow& w);

/// Realization of a chain map against the same coefficient module/window.
struct RealizedMap {
    SparseMatrix at(int s, int t) const;

    const ChainMap* symbolic = nullptr;
    RealizedComplex* source = nullptr;
    RealizedComplex* target = nullptr;
};

RealizedMap realize_map(const ChainMap& f, RealizedComplex& source, RealizedComplex& target);

/// Matrix of the induced map on homology classes.
SparseMatrix induced_on_homology(const Subquotient& src, const Subquotient& tgt,
                                 const SparseMatrix& chain_level);

/// Homology of c (x) M over the window; exact, so everything is trusted.
WindowedHomology homology(const FreeComplex& c, const DegreeWindow& w);
WindowedHomology homology(const FreeComplex& c, const GradedModulePresentation& coeff,
                          const DegreeWindow& w);

} // namespace lodual

#endif
