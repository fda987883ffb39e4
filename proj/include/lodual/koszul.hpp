#ifndef LODUAL_KOSZUL_HPP
#define LODUAL_KOSZUL_HPP

#include "lodual/complex.hpp"

namespace lodual {

/// Koszul complex on the k-th powers of the ideal generators, in homological
/// orientation: terms in degrees 0..n of ranks binomial(n, s), built as the
/// tensor product of the two-term complexes (Sigma^{k|y_i|} A --y_i^k--> A).
struct KoszulComplex {
    FreeComplex complex;
    int power = 1;

    const RingPtr& ring() const { return complex.ring(); }
};

/// K(y_1^k, ..., y_n^k); the unit complex when the ring has rank 0.
KoszulComplex koszul(RingPtr ring, int k);

/// The two transition systems attached to the Koszul complexes.
///
/// The colimit system runs through the duals C_k = Hom(K(y^k), A) (terms in
/// degrees -n..0) with maps C_k -> C_{k+1} that multiply the top strand by
/// each y_i; colim_k C_k (x) m computes Gamma_I m degreewise. The limit
/// system runs through the K(y^k) themselves with maps K(y^{k+1}) -> K(y^k),
/// and lim_k K(y^k) (x) m computes Lambda^I m degreewise.
class KoszulTower {
public:
    KoszulTower(RingPtr ring, int k_max);

    const RingPtr& ring() const { return ring_; }
    int k_max() const { return k_max_; }

    const KoszulComplex& stage(int k) const;            // K(y^k), k = 1..k_max
    const FreeComplex& dual_stage(int k) const;         // Hom(K(y^k), A)
    const ChainMap& restriction(int k) const;           // K(y^{k+1}) -> K(y^k)
    const ChainMap& extension(int k) const;             // dual_k -> dual_{k+1}

    /// Transition skipping from stage k to stage k + 2 directly; used to
    /// check that composites of consecutive transitions agree with it.
    ChainMap direct_restriction(int k) const;

private:
    RingPtr ring_;
    int k_max_ = 1;
    std::vector<KoszulComplex> stages_;
    std::vector<FreeComplex> duals_;
    std::vector<ChainMap> restrictions_;
    std::vector<ChainMap> extensions_;
};

KoszulTower tower(RingPtr ring, int k_max);

/// Verifies the classical self-duality Hom(K, A) = Sigma^{-a} K[-n] by an
/// explicit chain isomorphism supported on complementary index sets, and
/// returns a = sum_i k |y_i|. Throws std::logic_error when no such
/// isomorphism with unit entries exists (a sign-convention bug).
int self_duality_check(const KoszulComplex& K);

/// The explicit isomorphism found by self_duality_check.
ChainMap self_duality_iso(const KoszulComplex& K);

} // namespace lodual

#endif
