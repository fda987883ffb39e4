#include "lodual/koszul.hpp"

#include "lodual/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lodual {

namespace {

FreeComplex koszul_factor(const RingPtr& ring, std::size_t i, int k) {
    int c = k * ring->generator_degree(i);
    PolyMatrix d(1, {PolynomialElement::generator(ring, i, k)});
    std::ostringstream nm;
    nm << "K(" << ring->generator_name(i) << "^" << k << ")";
    return FreeComplex(ring, {{0, {0}}, {1, {c}}}, {{1, d}}, nm.str());
}

// The factor-level transition K(y_i^{k+step}) -> K(y_i^k): identity on the
// bottom strand, multiplication by y_i^step on the top strand.
ChainMap koszul_factor_restriction(const RingPtr& ring, std::size_t i, int k, int step) {
    FreeComplex src = koszul_factor(ring, i, k + step);
    FreeComplex tgt = koszul_factor(ring, i, k);
    std::map<int, PolyMatrix> blocks;
    blocks[0] = PolyMatrix(1, {PolynomialElement::constant(ring, Rational(1))});
    blocks[1] = PolyMatrix(1, {PolynomialElement::generator(ring, i, step)});
    return ChainMap(std::move(src), std::move(tgt), std::move(blocks), "res");
}

ChainMap fold_restriction(const RingPtr& ring, int k, int step) {
    std::size_t n = ring->rank();
    ChainMap f = koszul_factor_restriction(ring, 0, k, step);
    for (std::size_t i = 1; i < n; ++i)
        f = tensor_map(f, koszul_factor_restriction(ring, i, k, step));
    return f;
}

} // namespace

KoszulComplex koszul(RingPtr ring, int k) {
    if (k < 1)
        throw std::invalid_argument("koszul: power must be >= 1");
    if (ring->rank() == 0)
        return {FreeComplex::unit(ring).renamed("K(I)"), k};
    FreeComplex c = koszul_factor(ring, 0, k);
    for (std::size_t i = 1; i < ring->rank(); ++i)
        c = tensor(c, koszul_factor(ring, i, k));
    std::ostringstream nm;
    nm << "K(I^" << k << ")";
    return {c.renamed(nm.str()), k};
}

KoszulTower::KoszulTower(RingPtr ring, int k_max) : ring_(std::move(ring)), k_max_(k_max) {
    if (k_max_ < 1)
        throw std::invalid_argument("tower: k_max must be >= 1");
    FreeComplex unit = FreeComplex::unit(ring_);
    for (int k = 1; k <= k_max_; ++k) {
        stages_.push_back(koszul(ring_, k));
        duals_.push_back(dual_complex(stages_.back().complex));
    }
    for (int k = 1; k < k_max_; ++k) {
        if (ring_->rank() == 0) {
            restrictions_.push_back(ChainMap::identity(unit));
            extensions_.push_back(ChainMap::identity(duals_.front()));
            continue;
        }
        ChainMap res = fold_restriction(ring_, k, 1);
        extensions_.push_back(hom_map_pre(res, unit));
        restrictions_.push_back(std::move(res));
    }
}

const KoszulComplex& KoszulTower::stage(int k) const {
    if (k < 1 || k > k_max_)
        throw std::out_of_range("tower: stage index");
    return stages_[static_cast<std::size_t>(k - 1)];
}

const FreeComplex& KoszulTower::dual_stage(int k) const {
    if (k < 1 || k > k_max_)
        throw std::out_of_range("tower: stage index");
    return duals_[static_cast<std::size_t>(k - 1)];
}

const ChainMap& KoszulTower::restriction(int k) const {
    if (k < 1 || k >= k_max_)
        throw std::out_of_range("tower: restriction index");
    return restrictions_[static_cast<std::size_t>(k - 1)];
}

const ChainMap& KoszulTower::extension(int k) const {
    if (k < 1 || k >= k_max_)
        throw std::out_of_range("tower: extension index");
    return extensions_[static_cast<std::size_t>(k - 1)];
}

ChainMap KoszulTower::direct_restriction(int k) const {
    if (ring_->rank() == 0)
        return ChainMap::identity(FreeComplex::unit(ring_));
    return fold_restriction(ring_, k, 2);
}

KoszulTower tower(RingPtr ring, int k_max) {
    return KoszulTower(std::move(ring), k_max);
}

namespace {

// Subset labels of the Koszul basis, tracked through the same left fold used
// to build the tensor product.
std::map<int, std::vector<std::vector<bool>>> koszul_subsets(const RingPtr& ring) {
    std::size_t n = ring->rank();
    std::map<int, std::vector<std::vector<bool>>> cur;
    cur[0] = {std::vector<bool>(n, false)};
    for (std::size_t i = 0; i < n; ++i) {
        // Mirror tensor_layout(c, factor_i, s): p ascending, then j, then k.
        std::map<int, std::vector<std::vector<bool>>> next;
        for (int s = 0; s <= static_cast<int>(i) + 1; ++s) {
            std::vector<std::vector<bool>> slot;
            for (int p = 0; p <= s; ++p) {
                int q = s - p;
                if (q > 1 || !cur.count(p))
                    continue;
                for (const auto& sub : cur[p]) {
                    std::vector<bool> ext = sub;
                    if (q == 1)
                        ext[i] = true;
                    slot.push_back(std::move(ext));
                }
            }
            if (!slot.empty())
                next[s] = std::move(slot);
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

ChainMap self_duality_iso(const KoszulComplex& K) {
    const RingPtr& ring = K.ring();
    std::size_t n = ring->rank();
    int a = 0;
    for (std::size_t i = 0; i < n; ++i)
        a += K.power * ring->generator_degree(i);

    FreeComplex dual = dual_complex(K.complex);
    FreeComplex target = shift_homological(shift_internal(K.complex, -a), -static_cast<int>(n));
    if (n == 0)
        return ChainMap::identity(FreeComplex::unit(ring));

    auto subsets = koszul_subsets(ring);

    // Unknown sign per subset S for the candidate map e_S^* -> sigma_S e_{S^c}.
    std::size_t total = 0;
    std::map<std::vector<bool>, std::size_t> var;
    for (const auto& [s, subs] : subsets)
        for (const auto& sub : subs)
            var[sub] = total++;

    auto complement_index = [&](const std::vector<bool>& sub, int level) -> std::size_t {
        std::vector<bool> comp(n);
        for (std::size_t i = 0; i < n; ++i)
            comp[i] = !sub[i];
        const auto& list = subsets.at(level);
        for (std::size_t j = 0; j < list.size(); ++j)
            if (list[j] == comp)
                return j;
        throw std::logic_error("self_duality: complement not found");
    };

    // Chain condition d_target o phi = phi o d_dual, linear in the signs.
    // Each matrix entry contributes one equation per monomial.
    std::vector<MatrixEntry> eq_entries;
    std::size_t eq_count = 0;
    for (int s = dual.s_min() + 1; s <= dual.s_max(); ++s) {
        // phi_s: dual_s basis = subsets of size -s; entry at complement row.
        const auto& src_subs = subsets.at(-s);
        const auto& mid_subs = subsets.at(-(s - 1));
        PolyMatrix d_dual = dual.differential(s);
        PolyMatrix d_tgt = target.differential(s);
        std::size_t rows = target.rank(s - 1);
        std::size_t cols = dual.rank(s);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                // lhs: sum_r d_tgt[i][r] * sigma_{S_j} [r == comp(S_j)]
                // rhs: sum_r sigma_{S'_r} [i == comp(S'_r)] * d_dual[r][j]
                PolynomialElement lhs = PolynomialElement::zero(ring);
                std::size_t comp_j = complement_index(src_subs[j], static_cast<int>(n) + s);
                lhs = d_tgt[i][comp_j];
                std::map<std::vector<int>, std::map<std::size_t, Rational>> eq;
                for (const auto& [mono, c] : lhs.terms())
                    eq[mono.exponents][var.at(src_subs[j])] += c;
                for (std::size_t r = 0; r < mid_subs.size(); ++r) {
                    if (complement_index(mid_subs[r], static_cast<int>(n) + s - 1) != i)
                        continue;
                    for (const auto& [mono, c] : d_dual[r][j].terms())
                        eq[mono.exponents][var.at(mid_subs[r])] -= c;
                }
                for (const auto& [mono, coeffs] : eq) {
                    bool nontrivial = false;
                    for (const auto& [v, c] : coeffs)
                        if (!c.is_zero())
                            nontrivial = true;
                    if (!nontrivial)
                        continue;
                    for (const auto& [v, c] : coeffs)
                        if (!c.is_zero())
                            eq_entries.push_back({eq_count, v, c});
                    ++eq_count;
                }
            }
    }

    SparseMatrix system(eq_count, total, std::move(eq_entries));
    auto kernel = kernel_basis(system);
    if (kernel.size() != 1)
        throw std::logic_error("self_duality: sign system has solution dimension " +
                               std::to_string(kernel.size()));
    std::vector<Rational> sigma = kernel.front();
    // Normalize so the empty set maps with sign +1.
    Rational base = sigma[var.at(std::vector<bool>(n, false))];
    if (base.is_zero())
        throw std::logic_error("self_duality: degenerate solution");
    for (auto& v : sigma)
        v /= base;
    for (const auto& v : sigma)
        if (!(v == Rational(1) || v == Rational(-1)))
            throw std::logic_error("self_duality: non-unit entry in isomorphism");

    std::map<int, PolyMatrix> blocks;
    for (int s = dual.s_min(); s <= dual.s_max(); ++s) {
        const auto& src_subs = subsets.at(-s);
        std::size_t rows = target.rank(s);
        PolyMatrix b(rows, std::vector<PolynomialElement>(src_subs.size(),
                                                          PolynomialElement::zero(ring)));
        for (std::size_t j = 0; j < src_subs.size(); ++j) {
            std::size_t i = complement_index(src_subs[j], static_cast<int>(n) + s);
            b[i][j] = PolynomialElement::constant(ring, sigma[var.at(src_subs[j])]);
        }
        blocks[s] = std::move(b);
    }
    return ChainMap(dual, target, std::move(blocks), "self-duality");
}

int self_duality_check(const KoszulComplex& K) {
    self_duality_iso(K); // construction validates the chain property
    int a = 0;
    for (std::size_t i = 0; i < K.ring()->rank(); ++i)
        a += K.power * K.ring()->generator_degree(i);
    return a;
}

} // namespace lodual
