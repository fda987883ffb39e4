#include "lodual/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lodual {

namespace {

PolyMatrix zero_matrix(RingPtr ring, std::size_t rows, std::size_t cols) {
    return PolyMatrix(rows, std::vector<PolynomialElement>(cols, PolynomialElement::zero(ring)));
}

bool matrix_is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero())
                return false;
    return true;
}

} // namespace

PolyMatrix poly_matrix_product(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty())
        return {};
    std::size_t n = a.size(), k = b.size(), m = b.front().size();
    for (const auto& row : a)
        if (row.size() != k)
            throw std::invalid_argument("poly_matrix_product: shape mismatch");
    RingPtr ring = b.front().empty() ? (a.front().empty() ? nullptr : a.front().front().ring())
                                     : b.front().front().ring();
    PolyMatrix out(n, std::vector<PolynomialElement>(m, PolynomialElement::zero(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l)
                if (!a[i][l].is_zero() && !b[l][j].is_zero())
                    out[i][j] = out[i][j] + a[i][l] * b[l][j];
    return out;
}

FreeComplex::FreeComplex(RingPtr ring, std::map<int, std::vector<int>> terms,
                         std::map<int, PolyMatrix> differentials, std::string name)
    : ring_(std::move(ring)), name_(std::move(name)), terms_(std::move(terms)),
      diffs_(std::move(differentials)) {
    if (!ring_)
        throw std::invalid_argument("FreeComplex: null ring");
    std::erase_if(terms_, [](const auto& kv) { return kv.second.empty(); });
    std::erase_if(diffs_, [](const auto& kv) { return kv.second.empty(); });
    validate();
}

FreeComplex FreeComplex::unchecked(RingPtr ring, std::map<int, std::vector<int>> terms,
                                   std::map<int, PolyMatrix> differentials, std::string name) {
    FreeComplex c;
    c.ring_ = std::move(ring);
    c.name_ = std::move(name);
    c.terms_ = std::move(terms);
    c.diffs_ = std::move(differentials);
    return c;
}

void FreeComplex::validate() const {
    for (const auto& [s, d] : diffs_) {
        std::size_t rows = rank(s - 1), cols = rank(s);
        if (d.size() != rows)
            throw std::invalid_argument("complex '" + name_ + "': d_" + std::to_string(s) +
                                        " has wrong row count");
        for (const auto& row : d)
            if (row.size() != cols)
                throw std::invalid_argument("complex '" + name_ + "': d_" + std::to_string(s) +
                                            " has a ragged row");
        const auto& src = term(s);
        const auto& tgt = term(s - 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const auto& e = d[i][j];
                if (e.is_zero())
                    continue;
                if (!e.is_homogeneous() || e.degree() != src[j] - tgt[i])
                    throw std::invalid_argument(
                        "complex '" + name_ + "': d_" + std::to_string(s) + " entry (" +
                        std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous of degree " +
                        std::to_string(src[j] - tgt[i]));
            }
    }
    for (const auto& [s, d] : diffs_) {
        auto lower = diffs_.find(s - 1);
        if (lower == diffs_.end())
            continue;
        PolyMatrix square = poly_matrix_product(lower->second, d);
        if (!matrix_is_zero(square))
            throw std::invalid_argument("complex '" + name_ + "': d o d != 0 at s = " +
                                        std::to_string(s));
    }
}

FreeComplex FreeComplex::unit(RingPtr ring) {
    return FreeComplex(std::move(ring), {{0, {0}}}, {}, "A");
}

FreeComplex FreeComplex::zero(RingPtr ring) {
    return FreeComplex(std::move(ring), {}, {}, "0");
}

int FreeComplex::s_min() const {
    return terms_.empty() ? 0 : terms_.begin()->first;
}

int FreeComplex::s_max() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

const std::vector<int>& FreeComplex::term(int s) const {
    static const std::vector<int> empty;
    auto it = terms_.find(s);
    return it == terms_.end() ? empty : it->second;
}

PolyMatrix FreeComplex::differential(int s) const {
    auto it = diffs_.find(s);
    if (it != diffs_.end())
        return it->second;
    return zero_matrix(ring_, rank(s - 1), rank(s));
}

int FreeComplex::min_shift() const {
    int m = 0;
    bool first = true;
    for (const auto& [s, shifts] : terms_)
        for (int u : shifts) {
            m = first ? u : std::min(m, u);
            first = false;
        }
    return m;
}

int FreeComplex::max_shift() const {
    int m = 0;
    bool first = true;
    for (const auto& [s, shifts] : terms_)
        for (int u : shifts) {
            m = first ? u : std::max(m, u);
            first = false;
        }
    return m;
}

FreeComplex FreeComplex::renamed(std::string name) const {
    FreeComplex c = *this;
    c.name_ = std::move(name);
    return c;
}

ChainMap::ChainMap(FreeComplex source, FreeComplex target, std::map<int, PolyMatrix> blocks,
                   std::string name)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)),
      name_(std::move(name)) {
    std::erase_if(blocks_, [](const auto& kv) { return kv.second.empty(); });
    for (const auto& [s, b] : blocks_) {
        std::size_t rows = target_.rank(s), cols = source_.rank(s);
        if (b.size() != rows)
            throw std::invalid_argument("chain map '" + name_ + "': block " + std::to_string(s) +
                                        " wrong row count");
        for (const auto& row : b)
            if (row.size() != cols)
                throw std::invalid_argument("chain map '" + name_ + "': block " + std::to_string(s) +
                                            " ragged");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const auto& e = b[i][j];
                if (e.is_zero())
                    continue;
                int want = source_.term(s)[j] - target_.term(s)[i];
                if (!e.is_homogeneous() || e.degree() != want)
                    throw std::invalid_argument("chain map '" + name_ + "': block " +
                                                std::to_string(s) + " entry (" + std::to_string(i) +
                                                "," + std::to_string(j) + ") not homogeneous of degree " +
                                                std::to_string(want));
            }
    }
    // d_target o f = f o d_source, degreewise.
    int lo = std::min(source_.s_min(), target_.s_min());
    int hi = std::max(source_.s_max(), target_.s_max());
    for (int s = lo; s <= hi + 1; ++s) {
        PolyMatrix lhs = poly_matrix_product(target_.differential(s), block(s));
        PolyMatrix rhs = poly_matrix_product(block(s - 1), source_.differential(s));
        if (lhs.empty() && rhs.empty())
            continue;
        if (lhs.empty())
            lhs = zero_matrix(source_.ring(), target_.rank(s - 1), source_.rank(s));
        if (rhs.empty())
            rhs = zero_matrix(source_.ring(), target_.rank(s - 1), source_.rank(s));
        for (std::size_t i = 0; i < lhs.size(); ++i)
            for (std::size_t j = 0; j < lhs[i].size(); ++j)
                if (!(lhs[i][j] == rhs[i][j]))
                    throw std::invalid_argument("chain map '" + name_ +
                                                "': not a chain map at s = " + std::to_string(s) +
                                                ", entry (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
    }
}

ChainMap ChainMap::identity(const FreeComplex& c) {
    std::map<int, PolyMatrix> blocks;
    for (int s = c.s_min(); s <= c.s_max(); ++s) {
        std::size_t n = c.rank(s);
        if (n == 0)
            continue;
        PolyMatrix b = zero_matrix(c.ring(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            b[i][i] = PolynomialElement::constant(c.ring(), Rational(1));
        blocks[s] = std::move(b);
    }
    return ChainMap(c, c, std::move(blocks), "id");
}

ChainMap ChainMap::zero(FreeComplex source, FreeComplex target) {
    return ChainMap(std::move(source), std::move(target), {}, "0");
}

PolyMatrix ChainMap::block(int s) const {
    auto it = blocks_.find(s);
    if (it != blocks_.end())
        return it->second;
    return zero_matrix(source_.ring(), target_.rank(s), source_.rank(s));
}

FreeComplex shift_internal(const FreeComplex& c, int a) {
    std::map<int, std::vector<int>> terms;
    for (int s = c.s_min(); s <= c.s_max(); ++s) {
        if (c.rank(s) == 0)
            continue;
        auto shifts = c.term(s);
        for (int& u : shifts)
            u += a;
        terms[s] = std::move(shifts);
    }
    std::map<int, PolyMatrix> diffs;
    for (int s = c.s_min(); s <= c.s_max() + 1; ++s) {
        PolyMatrix d = c.differential(s);
        if (!d.empty() && !matrix_is_zero(d))
            diffs[s] = std::move(d);
    }
    std::ostringstream nm;
    nm << "S^" << a << "(" << c.name() << ")";
    return FreeComplex(c.ring(), std::move(terms), std::move(diffs), nm.str());
}

FreeComplex shift_homological(const FreeComplex& c, int k) {
    std::map<int, std::vector<int>> terms;
    std::map<int, PolyMatrix> diffs;
    for (int s = c.s_min(); s <= c.s_max(); ++s)
        if (c.rank(s) > 0)
            terms[s + k] = c.term(s);
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (int s = c.s_min(); s <= c.s_max() + 1; ++s) {
        PolyMatrix d = c.differential(s);
        if (d.empty() || matrix_is_zero(d))
            continue;
        for (auto& row : d)
            for (auto& e : row)
                e = e.scaled(sign);
        diffs[s + k] = std::move(d);
    }
    std::ostringstream nm;
    nm << c.name() << "[" << k << "]";
    return FreeComplex(c.ring(), std::move(terms), std::move(diffs), nm.str());
}

namespace {

// Canonical summand enumeration of (c (x) d)_s: ascending p, then source
// index in c_p, then source index in d_{s-p}.
struct TensorSlot {
    int p;
    std::size_t j; // index in c_p
    std::size_t k; // index in d_{s-p}
};

std::vector<TensorSlot> tensor_layout(const FreeComplex& c, const FreeComplex& d, int s) {
    std::vector<TensorSlot> slots;
    for (int p = c.s_min(); p <= c.s_max(); ++p) {
        int q = s - p;
        if (c.rank(p) == 0 || d.rank(q) == 0)
            continue;
        for (std::size_t j = 0; j < c.rank(p); ++j)
            for (std::size_t k = 0; k < d.rank(q); ++k)
                slots.push_back({p, j, k});
    }
    return slots;
}

// Canonical summand enumeration of Hom(c, d)_s: ascending p, then source
// index in c_p, then target index in d_{p+s}.
struct HomSlot {
    int p;
    std::size_t j; // index in c_p
    std::size_t i; // index in d_{p+s}
};

std::vector<HomSlot> hom_layout(const FreeComplex& c, const FreeComplex& d, int s) {
    std::vector<HomSlot> slots;
    for (int p = c.s_min(); p <= c.s_max(); ++p) {
        if (c.rank(p) == 0 || d.rank(p + s) == 0)
            continue;
        for (std::size_t j = 0; j < c.rank(p); ++j)
            for (std::size_t i = 0; i < d.rank(p + s); ++i)
                slots.push_back({p, j, i});
    }
    return slots;
}

std::size_t slot_index(const std::vector<TensorSlot>& slots, int p, std::size_t j, std::size_t k) {
    for (std::size_t n = 0; n < slots.size(); ++n)
        if (slots[n].p == p && slots[n].j == j && slots[n].k == k)
            return n;
    throw std::logic_error("tensor slot lookup failed");
}

std::size_t slot_index(const std::vector<HomSlot>& slots, int p, std::size_t j, std::size_t i) {
    for (std::size_t n = 0; n < slots.size(); ++n)
        if (slots[n].p == p && slots[n].j == j && slots[n].i == i)
            return n;
    throw std::logic_error("hom slot lookup failed");
}

} // namespace

FreeComplex tensor(const FreeComplex& c, const FreeComplex& d) {
    if (!(*c.ring() == *d.ring()))
        throw std::invalid_argument("tensor: mixed rings");
    RingPtr ring = c.ring();
    if (c.is_zero() || d.is_zero())
        return FreeComplex::zero(ring);
    int lo = c.s_min() + d.s_min();
    int hi = c.s_max() + d.s_max();

    std::map<int, std::vector<TensorSlot>> layout;
    std::map<int, std::vector<int>> terms;
    for (int s = lo; s <= hi; ++s) {
        auto slots = tensor_layout(c, d, s);
        if (slots.empty())
            continue;
        std::vector<int> shifts;
        for (const auto& sl : slots)
            shifts.push_back(c.term(sl.p)[sl.j] + d.term(s - sl.p)[sl.k]);
        layout[s] = std::move(slots);
        terms[s] = std::move(shifts);
    }

    std::map<int, PolyMatrix> diffs;
    for (int s = lo + 1; s <= hi; ++s) {
        if (!layout.count(s) || !layout.count(s - 1))
            continue;
        const auto& src = layout[s];
        const auto& tgt = layout[s - 1];
        PolyMatrix dmat = zero_matrix(ring, tgt.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& sl = src[col];
            int q = s - sl.p;
            PolyMatrix dc = c.differential(sl.p);
            if (!dc.empty())
                for (std::size_t jp = 0; jp < c.rank(sl.p - 1); ++jp)
                    if (!dc[jp][sl.j].is_zero())
                        dmat[slot_index(tgt, sl.p - 1, jp, sl.k)][col] = dc[jp][sl.j];
            PolyMatrix dd = d.differential(q);
            Rational sign = (sl.p % 2 == 0) ? Rational(1) : Rational(-1);
            if (!dd.empty())
                for (std::size_t kp = 0; kp < d.rank(q - 1); ++kp)
                    if (!dd[kp][sl.k].is_zero())
                        dmat[slot_index(tgt, sl.p, sl.j, kp)][col] = dd[kp][sl.k].scaled(sign);
        }
        if (!matrix_is_zero(dmat))
            diffs[s] = std::move(dmat);
    }
    return FreeComplex(ring, std::move(terms), std::move(diffs),
                       c.name() + "(x)" + d.name());
}

FreeComplex hom_complex(const FreeComplex& c, const FreeComplex& d) {
    if (!(*c.ring() == *d.ring()))
        throw std::invalid_argument("hom_complex: mixed rings");
    RingPtr ring = c.ring();
    if (c.is_zero() || d.is_zero())
        return FreeComplex::zero(ring);
    int lo = d.s_min() - c.s_max();
    int hi = d.s_max() - c.s_min();

    std::map<int, std::vector<HomSlot>> layout;
    std::map<int, std::vector<int>> terms;
    for (int s = lo; s <= hi; ++s) {
        auto slots = hom_layout(c, d, s);
        if (slots.empty())
            continue;
        std::vector<int> shifts;
        for (const auto& sl : slots)
            shifts.push_back(d.term(sl.p + s)[sl.i] - c.term(sl.p)[sl.j]);
        layout[s] = std::move(slots);
        terms[s] = std::move(shifts);
    }

    std::map<int, PolyMatrix> diffs;
    for (int s = lo + 1; s <= hi; ++s) {
        if (!layout.count(s) || !layout.count(s - 1))
            continue;
        const auto& src = layout[s];
        const auto& tgt = layout[s - 1];
        PolyMatrix dmat = zero_matrix(ring, tgt.size(), src.size());
        Rational pre_sign = (s % 2 == 0) ? Rational(-1) : Rational(1); // -(-1)^s
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& sl = src[col];
            // d_D o f : target slot (p, j, i') over entries of d_D at spot p+s.
            PolyMatrix dd = d.differential(sl.p + s);
            if (!dd.empty())
                for (std::size_t ip = 0; ip < d.rank(sl.p + s - 1); ++ip)
                    if (!dd[ip][sl.i].is_zero())
                        dmat[slot_index(tgt, sl.p, sl.j, ip)][col] =
                            dmat[slot_index(tgt, sl.p, sl.j, ip)][col] + dd[ip][sl.i];
            // -(-1)^s f o d_C : target slot (p+1, j'', i) over entries of d_C at spot p+1.
            PolyMatrix dc = c.differential(sl.p + 1);
            if (!dc.empty())
                for (std::size_t jp = 0; jp < c.rank(sl.p + 1); ++jp)
                    if (!dc[sl.j][jp].is_zero())
                        dmat[slot_index(tgt, sl.p + 1, jp, sl.i)][col] =
                            dmat[slot_index(tgt, sl.p + 1, jp, sl.i)][col] +
                            dc[sl.j][jp].scaled(pre_sign);
        }
        if (!matrix_is_zero(dmat))
            diffs[s] = std::move(dmat);
    }
    return FreeComplex(ring, std::move(terms), std::move(diffs),
                       "Hom(" + c.name() + "," + d.name() + ")");
}

FreeComplex dual_complex(const FreeComplex& c) {
    return hom_complex(c, FreeComplex::unit(c.ring())).renamed(c.name() + "^v");
}

FreeComplex cone(const ChainMap& f) {
    const FreeComplex& X = f.source();
    const FreeComplex& Y = f.target();
    RingPtr ring = X.ring();
    std::map<int, std::vector<int>> terms;
    int lo = std::min(X.s_min() + 1, Y.s_min());
    int hi = std::max(X.s_max() + 1, Y.s_max());
    for (int s = lo; s <= hi; ++s) {
        std::vector<int> shifts = X.term(s - 1);
        const auto& ys = Y.term(s);
        shifts.insert(shifts.end(), ys.begin(), ys.end());
        if (!shifts.empty())
            terms[s] = std::move(shifts);
    }
    std::map<int, PolyMatrix> diffs;
    for (int s = lo + 1; s <= hi; ++s) {
        std::size_t rows = X.rank(s - 2) + Y.rank(s - 1);
        std::size_t cols = X.rank(s - 1) + Y.rank(s);
        if (rows == 0 || cols == 0)
            continue;
        PolyMatrix d = zero_matrix(ring, rows, cols);
        PolyMatrix dx = X.differential(s - 1);
        for (std::size_t i = 0; i < X.rank(s - 2); ++i)
            for (std::size_t j = 0; j < X.rank(s - 1); ++j)
                if (!dx[i][j].is_zero())
                    d[i][j] = dx[i][j].scaled(Rational(-1));
        PolyMatrix fb = f.block(s - 1);
        for (std::size_t i = 0; i < Y.rank(s - 1); ++i)
            for (std::size_t j = 0; j < X.rank(s - 1); ++j)
                if (!fb[i][j].is_zero())
                    d[X.rank(s - 2) + i][j] = fb[i][j];
        PolyMatrix dy = Y.differential(s);
        for (std::size_t i = 0; i < Y.rank(s - 1); ++i)
            for (std::size_t j = 0; j < Y.rank(s); ++j)
                if (!dy[i][j].is_zero())
                    d[X.rank(s - 2) + i][X.rank(s - 1) + j] = dy[i][j];
        if (!matrix_is_zero(d))
            diffs[s] = std::move(d);
    }
    return FreeComplex(ring, std::move(terms), std::move(diffs), "cone(" + f.name() + ")");
}

FreeComplex fiber(const ChainMap& f) {
    return cone(f).renamed("fib(" + f.name() + ")");
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, PolyMatrix> blocks;
    int lo = f.source().s_min(), hi = f.source().s_max();
    for (int s = lo; s <= hi; ++s) {
        PolyMatrix b = poly_matrix_product(g.block(s), f.block(s));
        if (!b.empty() && !matrix_is_zero(b))
            blocks[s] = std::move(b);
    }
    return ChainMap(f.source(), g.target(), std::move(blocks), g.name() + "o" + f.name());
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
    FreeComplex src = tensor(f.source(), g.source());
    FreeComplex tgt = tensor(f.target(), g.target());
    RingPtr ring = src.ring();
    std::map<int, PolyMatrix> blocks;
    for (int s = src.s_min(); s <= src.s_max(); ++s) {
        auto src_slots = tensor_layout(f.source(), g.source(), s);
        auto tgt_slots = tensor_layout(f.target(), g.target(), s);
        if (src_slots.empty() || tgt_slots.empty())
            continue;
        PolyMatrix b = zero_matrix(ring, tgt_slots.size(), src_slots.size());
        for (std::size_t col = 0; col < src_slots.size(); ++col) {
            const auto& sl = src_slots[col];
            PolyMatrix fb = f.block(sl.p);
            PolyMatrix gb = g.block(s - sl.p);
            for (std::size_t row = 0; row < tgt_slots.size(); ++row) {
                const auto& tl = tgt_slots[row];
                if (tl.p != sl.p)
                    continue;
                const auto& fe = fb.empty() ? PolynomialElement::zero(ring) : fb[tl.j][sl.j];
                const auto& ge = gb.empty() ? PolynomialElement::zero(ring) : gb[tl.k][sl.k];
                if (!fe.is_zero() && !ge.is_zero())
                    b[row][col] = fe * ge;
            }
        }
        if (!matrix_is_zero(b))
            blocks[s] = std::move(b);
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(blocks),
                    f.name() + "(x)" + g.name());
}

ChainMap tensor_map_left(const FreeComplex& x, const ChainMap& g) {
    return tensor_map(ChainMap::identity(x), g);
}

ChainMap tensor_map_right(const ChainMap& f, const FreeComplex& y) {
    return tensor_map(f, ChainMap::identity(y));
}

ChainMap hom_map_pre(const ChainMap& f, const FreeComplex& y) {
    FreeComplex src = hom_complex(f.target(), y);
    FreeComplex tgt = hom_complex(f.source(), y);
    RingPtr ring = src.ring();
    std::map<int, PolyMatrix> blocks;
    for (int s = std::min(src.s_min(), tgt.s_min()); s <= std::max(src.s_max(), tgt.s_max()); ++s) {
        auto src_slots = hom_layout(f.target(), y, s);
        auto tgt_slots = hom_layout(f.source(), y, s);
        if (src_slots.empty() || tgt_slots.empty())
            continue;
        PolyMatrix b = zero_matrix(ring, tgt_slots.size(), src_slots.size());
        for (std::size_t col = 0; col < src_slots.size(); ++col) {
            const auto& sl = src_slots[col]; // g : X'_p -> y_{p+s}, unit at (p, j', i)
            PolyMatrix fb = f.block(sl.p);
            if (fb.empty())
                continue;
            for (std::size_t row = 0; row < tgt_slots.size(); ++row) {
                const auto& tl = tgt_slots[row]; // X_p -> y_{p+s} at (p, j, i)
                if (tl.p != sl.p || tl.i != sl.i)
                    continue;
                if (!fb[sl.j][tl.j].is_zero())
                    b[row][col] = fb[sl.j][tl.j];
            }
        }
        if (!matrix_is_zero(b))
            blocks[s] = std::move(b);
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(blocks),
                    "Hom(" + f.name() + "," + y.name() + ")");
}

ChainMap hom_map_post(const FreeComplex& x, const ChainMap& g) {
    FreeComplex src = hom_complex(x, g.source());
    FreeComplex tgt = hom_complex(x, g.target());
    RingPtr ring = src.ring();
    std::map<int, PolyMatrix> blocks;
    for (int s = std::min(src.s_min(), tgt.s_min()); s <= std::max(src.s_max(), tgt.s_max()); ++s) {
        auto src_slots = hom_layout(x, g.source(), s);
        auto tgt_slots = hom_layout(x, g.target(), s);
        if (src_slots.empty() || tgt_slots.empty())
            continue;
        PolyMatrix b = zero_matrix(ring, tgt_slots.size(), src_slots.size());
        for (std::size_t col = 0; col < src_slots.size(); ++col) {
            const auto& sl = src_slots[col];
            PolyMatrix gb = g.block(sl.p + s);
            if (gb.empty())
                continue;
            for (std::size_t row = 0; row < tgt_slots.size(); ++row) {
                const auto& tl = tgt_slots[row];
                if (tl.p != sl.p || tl.j != sl.j)
                    continue;
                if (!gb[tl.i][sl.i].is_zero())
                    b[row][col] = gb[tl.i][sl.i];
            }
        }
        if (!matrix_is_zero(b))
            blocks[s] = std::move(b);
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(blocks),
                    "Hom(" + x.name() + "," + g.name() + ")");
}

ChainMap augmentation_to_unit(const FreeComplex& c, std::size_t unit_summand) {
    if (unit_summand >= c.rank(0) || c.term(0)[unit_summand] != 0)
        throw std::invalid_argument("augmentation_to_unit: no unit summand at s = 0");
    PolyMatrix b = zero_matrix(c.ring(), 1, c.rank(0));
    b[0][unit_summand] = PolynomialElement::constant(c.ring(), Rational(1));
    return ChainMap(c, FreeComplex::unit(c.ring()), {{0, std::move(b)}}, "aug");
}

std::size_t WindowedHomology::dim(int s, int t) const {
    auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
}

bool WindowedHomology::trusted(int s, int t) const {
    return window.contains(t) && !untrusted.count({s, t});
}

void WindowedHomology::set(int s, int t, std::size_t d) {
    if (d != 0)
        dims[{s, t}] = d;
    else
        dims.erase({s, t});
}

bool WindowedHomology::agrees_on_trusted(const WindowedHomology& other) const {
    int lo = std::max(window.t_min, other.window.t_min);
    int hi = std::min(window.t_max, other.window.t_max);
    int slo = std::min(s_min, other.s_min);
    int shi = std::max(s_max, other.s_max);
    for (int s = slo; s <= shi; ++s)
        for (int t = lo; t <= hi; ++t) {
            if (!trusted(s, t) || !other.trusted(s, t))
                continue;
            if (dim(s, t) != other.dim(s, t))
                return false;
        }
    return true;
}

SharedWindowedModule realize_shared(const GradedModulePresentation& m, const DegreeWindow& hull) {
    return std::make_shared<const WindowedModule>(realize(m, hull));
}

DegreeWindow coefficient_hull(const std::vector<const FreeComplex*>& cs, const DegreeWindow& w,
                              int headroom) {
    int lo = w.t_min, hi = w.t_max;
    int maxgen = 0;
    for (const FreeComplex* c : cs) {
        if (c->is_zero())
            continue;
        lo = std::min(lo, w.t_min - c->max_shift());
        hi = std::max(hi, w.t_max - c->min_shift());
        maxgen = std::max(maxgen, c->ring()->max_generator_degree());
    }
    return DegreeWindow(lo, hi + maxgen + headroom);
}

std::vector<int> RealizedComplex::shifts(int s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? std::vector<int>{} : it->second;
}

std::size_t RealizedComplex::dim(int s, int t) const {
    std::size_t n = 0;
    for (int u : shifts(s))
        n += coeff_->dim(t - u);
    return n;
}

SparseMatrix RealizedComplex::differential(int s, int t) const {
    auto src = shifts(s);
    auto tgt = shifts(s - 1);
    std::vector<std::size_t> src_off(src.size() + 1, 0), tgt_off(tgt.size() + 1, 0);
    for (std::size_t j = 0; j < src.size(); ++j)
        src_off[j + 1] = src_off[j] + coeff_->dim(t - src[j]);
    for (std::size_t i = 0; i < tgt.size(); ++i)
        tgt_off[i + 1] = tgt_off[i] + coeff_->dim(t - tgt[i]);

    std::vector<MatrixEntry> entries;
    auto it = diffs_.find(s);
    if (it != diffs_.end()) {
        for (std::size_t i = 0; i < tgt.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j) {
                const auto& e = it->second[i][j];
                if (e.is_zero())
                    continue;
                SparseMatrix blk = coeff_->poly_action(e, t - src[j]);
                for (const auto& be : blk.entries())
                    entries.push_back({tgt_off[i] + be.row, src_off[j] + be.col, be.value});
            }
    }
    return SparseMatrix(tgt_off.back(), src_off.back(), std::move(entries));
}

SparseMatrix RealizedComplex::action(std::size_t i, int s, int t) const {
    auto sh = shifts(s);
    int d = ring_->generator_degree(i);
    std::vector<std::size_t> src_off(sh.size() + 1, 0), tgt_off(sh.size() + 1, 0);
    for (std::size_t j = 0; j < sh.size(); ++j) {
        src_off[j + 1] = src_off[j] + coeff_->dim(t - sh[j]);
        tgt_off[j + 1] = tgt_off[j] + coeff_->dim(t + d - sh[j]);
    }
    std::vector<MatrixEntry> entries;
    for (std::size_t j = 0; j < sh.size(); ++j) {
        if (coeff_->dim(t - sh[j]) == 0)
            continue;
        const SparseMatrix& blk = coeff_->action(i, t - sh[j]);
        for (const auto& be : blk.entries())
            entries.push_back({tgt_off[j] + be.row, src_off[j] + be.col, be.value});
    }
    return SparseMatrix(tgt_off.back(), src_off.back(), std::move(entries));
}

std::size_t RealizedComplex::homology_dim(int s, int t) {
    auto key = std::make_pair(s, t);
    auto it = homology_dim_cache_.find(key);
    if (it != homology_dim_cache_.end())
        return it->second;
    std::size_t d = lodual::homology_dim(differential(s, t), differential(s + 1, t));
    homology_dim_cache_[key] = d;
    return d;
}

const Subquotient& RealizedComplex::homology_space(int s, int t) {
    auto key = std::make_pair(s, t);
    auto it = homology_cache_.find(key);
    if (it == homology_cache_.end()) {
        it = homology_cache_.emplace(key, subquotient(differential(s, t), differential(s + 1, t))).first;
        homology_dim_cache_[key] = it->second.dim;
    }
    return it->second;
}

RealizedComplex realize_complex(const FreeComplex& c, SharedWindowedModule coeff,
                                const DegreeWindow& w) {
    if (!coeff)
        throw std::invalid_argument("realize_complex: null coefficients");
    if (!(*c.ring() == *coeff->ring()))
        throw std::invalid_argument("realize_complex: mixed rings");
    RealizedComplex out;
    out.ring_ = c.ring();
    out.window_ = w;
    out.s_min_ = c.s_min();
    out.s_max_ = c.s_max();
    for (int s = c.s_min(); s <= c.s_max(); ++s)
        if (c.rank(s) > 0)
            out.terms_[s] = c.term(s);
    for (int s = c.s_min(); s <= c.s_max() + 1; ++s) {
        PolyMatrix d = c.differential(s);
        if (!d.empty())
            out.diffs_[s] = std::move(d);
    }
    if (!out.terms_.empty()) {
        if (coeff->window().t_min > w.t_min - c.max_shift() ||
            coeff->window().t_max < w.t_max - c.min_shift())
            throw std::invalid_argument("realize_complex: coefficient window too small for '" +
                                        c.name() + "'");
    }
    out.coeff_ = std::move(coeff);
    return out;
}

RealizedComplex realize_complex(const FreeComplex& c, const GradedModulePresentation& coeff,
                                const DegreeWindow& w) {
    DegreeWindow hull = coefficient_hull({&c}, w);
    return realize_complex(c, realize_shared(coeff, hull), w);
}

SparseMatrix RealizedMap::at(int s, int t) const {
    auto src_sh = source->shifts(s);
    auto tgt_sh = target->shifts(s);
    const WindowedModule& m = source->coefficients();
    std::vector<std::size_t> src_off(src_sh.size() + 1, 0), tgt_off(tgt_sh.size() + 1, 0);
    for (std::size_t j = 0; j < src_sh.size(); ++j)
        src_off[j + 1] = src_off[j] + m.dim(t - src_sh[j]);
    for (std::size_t i = 0; i < tgt_sh.size(); ++i)
        tgt_off[i + 1] = tgt_off[i] + m.dim(t - tgt_sh[i]);

    std::vector<MatrixEntry> entries;
    PolyMatrix b = symbolic->block(s);
    if (!b.empty()) {
        for (std::size_t i = 0; i < tgt_sh.size(); ++i)
            for (std::size_t j = 0; j < src_sh.size(); ++j) {
                const auto& e = b[i][j];
                if (e.is_zero())
                    continue;
                SparseMatrix blk = m.poly_action(e, t - src_sh[j]);
                for (const auto& be : blk.entries())
                    entries.push_back({tgt_off[i] + be.row, src_off[j] + be.col, be.value});
            }
    }
    return SparseMatrix(tgt_off.back(), src_off.back(), std::move(entries));
}

RealizedMap realize_map(const ChainMap& f, RealizedComplex& source, RealizedComplex& target) {
    if (source.shared_coefficients() != target.shared_coefficients())
        throw std::invalid_argument("realize_map: source and target must share coefficients");
    RealizedMap m;
    m.symbolic = &f;
    m.source = &source;
    m.target = &target;
    return m;
}

SparseMatrix induced_on_homology(const Subquotient& src, const Subquotient& tgt,
                                 const SparseMatrix& chain_level) {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t i = 0; i < src.dim; ++i)
        cols.push_back(tgt.coords(chain_level.apply(src.representative(i))));
    return SparseMatrix::from_columns(tgt.dim, cols);
}

WindowedHomology homology(const FreeComplex& c, const DegreeWindow& w) {
    return homology(c, GradedModulePresentation::unit(c.ring()), w);
}

WindowedHomology homology(const FreeComplex& c, const GradedModulePresentation& coeff,
                          const DegreeWindow& w) {
    RealizedComplex rc = realize_complex(c, coeff, w);
    WindowedHomology h;
    h.window = w;
    h.s_min = c.s_min();
    h.s_max = c.s_max();
    for (int s = c.s_min(); s <= c.s_max(); ++s)
        for (int t = w.t_min; t <= w.t_max; ++t)
            h.set(s, t, rc.homology_dim(s, t));
    return h;
}

} // namespace lodual
