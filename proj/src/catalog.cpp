#include "lodual/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace lodual {

int LoopSpaceEntry::dimension() const {
    int d = 0;
    for (int di : degrees)
        d += 2 * di - 1;
    return d;
}

LoopSpaceEntry make_entry(std::string name, std::vector<int> degrees) {
    for (int d : degrees)
        if (d < 1)
            throw std::invalid_argument("loop space entry '" + name + "': degrees must be >= 1");
    std::sort(degrees.begin(), degrees.end());
    return LoopSpaceEntry{std::move(name), std::move(degrees)};
}

LoopSpaceEntry entry_product(const LoopSpaceEntry& a, const LoopSpaceEntry& b, std::string name) {
    std::vector<int> ds = a.degrees;
    ds.insert(ds.end(), b.degrees.begin(), b.degrees.end());
    if (name.empty())
        name = a.name + "x" + b.name;
    return make_entry(std::move(name), std::move(ds));
}

const std::vector<LoopSpaceEntry>& catalog() {
    static const std::vector<LoopSpaceEntry> entries = [] {
        std::vector<LoopSpaceEntry> es;
        es.push_back(make_entry("point", {}));
        es.push_back(make_entry("S1", {1}));
        es.push_back(make_entry("T2", {1, 1}));
        es.push_back(make_entry("T3", {1, 1, 1}));
        es.push_back(make_entry("T4", {1, 1, 1, 1}));
        es.push_back(make_entry("SU(2)", {2}));
        es.push_back(make_entry("SU(3)", {2, 3}));
        es.push_back(make_entry("SU(4)", {2, 3, 4}));
        es.push_back(make_entry("SU(5)", {2, 3, 4, 5}));
        es.push_back(make_entry("Sp(1)", {2}));
        es.push_back(make_entry("Sp(2)", {2, 4}));
        es.push_back(make_entry("Sp(3)", {2, 4, 6}));
        es.push_back(make_entry("G2", {2, 6}));
        es.push_back(entry_product(es[5], es[1], "SU(2)xS1"));
        es.push_back(entry_product(es[5], es[5], "SU(2)xSU(2)"));
        return es;
    }();
    return entries;
}

bool catalog_has(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name)
            return true;
    return false;
}

const LoopSpaceEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name)
            return e;
    throw std::invalid_argument("catalog: no entry named '" + name + "'");
}

RingPtr classifying_ring(const LoopSpaceEntry& e) {
    std::vector<std::pair<std::string, int>> gens;
    for (std::size_t i = 0; i < e.degrees.size(); ++i)
        gens.emplace_back("y" + std::to_string(i + 1), 2 * e.degrees[i]);
    return make_ring("H*(B " + e.name + ")", std::move(gens));
}

LoopCohomology loop_cohomology(const LoopSpaceEntry& e) {
    LoopCohomology lc;
    for (int d : e.degrees)
        lc.exterior_degrees.push_back(2 * d - 1);
    lc.dimension = e.dimension();
    lc.hilbert.assign(static_cast<std::size_t>(lc.dimension) + 1, 0);
    lc.hilbert[0] = 1;
    for (int deg : lc.exterior_degrees)
        for (int t = lc.dimension; t >= deg; --t)
            lc.hilbert[t] += lc.hilbert[t - deg];
    lc.palindromic = true;
    for (std::size_t t = 0; t < lc.hilbert.size(); ++t)
        if (lc.hilbert[t] != lc.hilbert[lc.hilbert.size() - 1 - t])
            lc.palindromic = false;
    return lc;
}

LoopSpaceEntry weyl_model(const std::string& G, const std::string& K) {
    if (!catalog_has(G))
        throw std::invalid_argument("weyl_model: unknown group '" + G + "'");
    if (K == "e" || K == "{e}" || K == "1")
        return catalog_entry(G);
    if (K == G)
        return catalog_entry("point");
    throw std::invalid_argument("weyl_model: unsupported pair (" + G + ", " + K +
                                "); only K = {e} and K = G are whitelisted (the Weyl group "
                                "connectedness hypothesis is not machine-checkable)");
}

} // namespace lodual
