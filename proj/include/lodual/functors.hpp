#ifndef LODUAL_FUNCTORS_HPP
#define LODUAL_FUNCTORS_HPP

#include "lodual/koszul.hpp"

#include <optional>
#include <string>

namespace lodual {

/// Input of a duality functor: a perfect complex with coefficients in a
/// finitely presented module. Plain modules use the unit shape; plain
/// complexes use unit coefficients.
struct FunctorInput {
    FreeComplex shape;
    GradedModulePresentation coeff;
    std::string descriptor;

    static FunctorInput module(GradedModulePresentation m);
    static FunctorInput complex(FreeComplex x, RingPtr ring);
};

enum class FunctorTag { gamma, localize, lambda };

std::string tag_name(FunctorTag tag);

struct FunctorOptions {
    int k_max = 8;
    /// Number of consecutive isomorphic transitions required to certify a
    /// bidegree (dimension equality alone can mask pro-zero towers).
    int stable_run = 2;
};

struct FunctorResult {
    std::string input;
    FunctorTag tag = FunctorTag::gamma;
    WindowedHomology homology;
    /// Tower stage at which each trusted bidegree stabilized.
    std::map<std::pair<int, int>, int> stabilized_at;
    /// lambda only: certified lim^1 dimensions (0 whenever Mittag-Leffler
    /// image stabilization was observed; such degrees are the trusted ones).
    std::map<std::pair<int, int>, std::size_t> lim1;
    /// Raw stage dimensions for bidegrees that failed to certify.
    std::map<std::pair<int, int>, std::vector<std::size_t>> raw_tower;

    std::size_t cohomological_dim(int s_cohom, int t) const {
        return homology.dim(-s_cohom, t);
    }
};

/// Gamma_I via the colimit over Hom(K(y^k), A) (x) input.
FunctorResult gamma(const FunctorInput& in, const DegreeWindow& w, const FunctorOptions& opt = {});

/// Lambda^I via the limit over K(y^k) (x) input, assembled with the
/// two-term lim/lim^1 sequence (degreewise pieces are finite dimensional,
/// so observed image stabilization certifies lim^1 = 0).
FunctorResult lambda_completion(const FunctorInput& in, const DegreeWindow& w,
                                const FunctorOptions& opt = {});

/// -[I^{-1}] through the long exact sequence of Gamma m -> m -> m[I^{-1}];
/// for rank-1 rings and module inputs the result is cross-checked against
/// the direct degreewise localization.
FunctorResult localize_away(const FunctorInput& in, const DegreeWindow& w,
                            const FunctorOptions& opt = {});

/// Gamma applied `times` times, computed along the (cofinal) diagonal of the
/// iterated colimit system; times = 1 is gamma. Used for the idempotence
/// checks.
FunctorResult gamma_iterated(const FunctorInput& in, int times, const DegreeWindow& w,
                             const FunctorOptions& opt = {});
FunctorResult lambda_iterated(const FunctorInput& in, int times, const DegreeWindow& w,
                              const FunctorOptions& opt = {});

/// Direct degreewise localization dimensions for a module over a rank-1
/// ring: dim M[1/y]_t, decided by Fitting-stable kernel chains.
std::map<int, std::size_t> rank1_localization_dims(const GradedModulePresentation& m,
                                                   const DegreeWindow& w);

/// Certified y_i-power annihilation of the trusted homology classes of
/// gamma(in): the torsion statement checked class by class.
struct GammaTorsionReport {
    bool all_certified = true;
    /// (s,t) -> per-class, per-generator annihilation exponents.
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> exponents;
    std::vector<std::pair<int, int>> uncertified;
};

GammaTorsionReport gamma_torsion_certificates(const FunctorInput& in, const DegreeWindow& w,
                                              const FunctorOptions& opt = {});

/// Both sides of the local-duality adjunction, computed independently:
/// H Hom(Gamma x, y) as lim_j H Hom(dual_j (x) x, y) and H Hom(x, Lambda y)
/// as lim_k H Hom(x, K_k (x) y).
struct AdjunctionReport {
    WindowedHomology gamma_side;
    WindowedHomology lambda_side;
    bool agree = false;
};

AdjunctionReport check_adjunction(const FreeComplex& x, const FreeComplex& y,
                                  const DegreeWindow& w, const FunctorOptions& opt = {});

/// The torsion-complete round trip at homology level: H(Lambda Gamma m)
/// against H(Lambda m) and H(Gamma Lambda m) against H(Gamma m), all four
/// computed through (double) Koszul towers.
struct RoundTripReport {
    WindowedHomology lambda_gamma; // H(Lambda Gamma m)
    WindowedHomology lambda_only;  // H(Lambda m)
    WindowedHomology gamma_lambda; // H(Gamma Lambda m)
    WindowedHomology gamma_only;   // H(Gamma m)
    bool lambda_gamma_agrees = false;
    bool gamma_lambda_agrees = false;
};

RoundTripReport roundtrip_report(const FunctorInput& in, const DegreeWindow& w,
                                 const FunctorOptions& opt = {});

} // namespace lodual

#endif
