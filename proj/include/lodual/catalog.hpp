#ifndef LODUAL_CATALOG_HPP
#define LODUAL_CATALOG_HPP

#include "lodual/ring.hpp"

#include <string>
#include <vector>

namespace lodual {

/// A named connected finite loop space, recorded by the degree list
/// d_1 <= ... <= d_r (so the polynomial generators sit in degrees 2 d_i).
struct LoopSpaceEntry {
    std::string name;
    std::vector<int> degrees; // d_i, ascending

    std::size_t rank() const { return degrees.size(); }
    /// dim X = sum (2 d_i - 1).
    int dimension() const;
};

LoopSpaceEntry make_entry(std::string name, std::vector<int> degrees);
LoopSpaceEntry entry_product(const LoopSpaceEntry& a, const LoopSpaceEntry& b, std::string name = "");

/// Built-in catalog: point, S^1, tori up to T^4, SU(n) for n <= 5, Sp(n) for
/// n <= 3, G2, and a few products.
const std::vector<LoopSpaceEntry>& catalog();
const LoopSpaceEntry& catalog_entry(const std::string& name);
bool catalog_has(const std::string& name);

/// H*(BX) = Q[y_1..y_r] with |y_i| = 2 d_i.
RingPtr classifying_ring(const LoopSpaceEntry& e);

/// Exterior-algebra data of H*(X) with its Poincare duality certificate.
struct LoopCohomology {
    std::vector<int> exterior_degrees; // 2 d_i - 1
    int dimension = 0;                 // top class degree
    std::vector<long> hilbert;         // dims of the exterior algebra, degrees 0..dimension
    bool palindromic = false;
};

LoopCohomology loop_cohomology(const LoopSpaceEntry& e);

/// The reduction of "G-spectra at K" to a coefficient ring: K = {e} models
/// over the entry itself, K = G over the rank-0 entry. Other pairs must be
/// whitelisted; the connectedness of the Weyl group cannot be checked from
/// degree data.
LoopSpaceEntry weyl_model(const std::string& G, const std::string& K);

} // namespace lodual

#endif
