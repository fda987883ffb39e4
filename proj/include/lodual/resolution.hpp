#ifndef LODUAL_RESOLUTION_HPP
#define LODUAL_RESOLUTION_HPP

#include "lodual/complex.hpp"

namespace lodual {

/// Minimal graded free resolution 0 <- M <- F_0 <- ... <- F_len. Every map
/// entry lies in the augmentation ideal (minimality is by construction:
/// each syzygy step lifts a basis of ker (x)_A Q), and exactness is verified
/// degreewise on the probe window.
struct FreeResolution {
    RingPtr ring;
    std::vector<std::vector<int>> shifts; // F_0 .. F_len
    std::vector<PolyMatrix> maps;         // maps[s-1] : F_s -> F_{s-1}
    DegreeWindow probe{0, 0};
    bool exact_on_probe = false;
    bool minimal = false;

    std::size_t length() const { return shifts.empty() ? 0 : shifts.size() - 1; }
    FreeComplex as_complex() const;
    /// Graded Betti numbers: (s, t) -> multiplicity of Sigma^t A in F_s.
    std::map<std::pair<int, int>, std::size_t> betti() const;
};

struct ResolutionOptions {
    /// Window growths attempted before giving up on locating a syzygy degree.
    int enlargement_cap = 3;
};

FreeResolution minimal_resolution(const GradedModulePresentation& m, const DegreeWindow& probe,
                                  const ResolutionOptions& opt = {});

/// Presentation with unit relation entries eliminated and zero relations
/// dropped; presents the same module with a minimal generator set.
GradedModulePresentation minimize_presentation(const GradedModulePresentation& m);

/// Bigraded Ext table. Grading: Ext^{s,t} receives Hom(Sigma^t A, n)
/// contributions from the t-shifted summands of F_s, matching pi_{t-s}
/// bookkeeping downstream.
std::map<std::pair<int, int>, std::size_t> ext(const GradedModulePresentation& m,
                                               const GradedModulePresentation& n,
                                               const DegreeWindow& w,
                                               const ResolutionOptions& opt = {});

/// The Adams E2 page with its certificates.
struct E2Page {
    std::map<std::pair<int, int>, std::size_t> entries;
    std::size_t rank_bound = 0; // r = rank of the ring
    DegreeWindow window{0, 0};
    bool vanishing_certified = false; // all entries with s > r vanish, length <= r
    bool collapse_certified = false;  // nonzero columns within two adjacent s
    std::string abutment_note;

    std::size_t dim(int s, int t) const;
    /// Sum over the antidiagonal t - s = d.
    std::size_t total(int d) const;
};

E2Page adams_e2(const GradedModulePresentation& m, const GradedModulePresentation& n,
                const DegreeWindow& w, const ResolutionOptions& opt = {});

/// Independent abutment: homology of the internal Hom complex of two perfect
/// complexes, re-indexed to Adams (s,t) = (-s_hom, -t_internal) and summed
/// along t - s = d.
struct AbutmentTable {
    std::map<std::pair<int, int>, std::size_t> bigraded; // Adams-indexed
    std::map<int, std::size_t> totals;                   // d -> dimension
    int d_min = 0, d_max = 0;                            // trusted total range
};

AbutmentTable abutment_oracle(const FreeComplex& x, const FreeComplex& y, const DegreeWindow& w);

} // namespace lodual

#endif
