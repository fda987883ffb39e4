#include "lodual/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lodual {

namespace {

// Spanning columns of the degree-t piece of the submodule generated by the
// given polynomial columns inside the realized free module; multiples with
// monomial degree >= min_mult_degree only.
std::vector<std::vector<Rational>> submodule_span(const GradedPolynomialRing& ring,
                                                  const WindowedModule& free,
                                                  const std::vector<std::vector<PolynomialElement>>& cols,
                                                  const std::vector<int>& col_degrees,
                                                  const std::vector<int>& gen_degrees, int t,
                                                  int min_mult_degree) {
    std::vector<std::vector<Rational>> out;
    const auto& labels = free.labels(t);
    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
    for (std::size_t b = 0; b < labels.size(); ++b)
        index[{labels[b].generator, labels[b].monomial.exponents}] = b;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int delta = col_degrees[c];
        int mdeg = t - delta;
        if (mdeg < min_mult_degree)
            continue;
        for (const auto& mono : monomial_basis(ring, mdeg)) {
            std::vector<Rational> v(labels.size(), Rational(0));
            bool nonzero = false;
            for (std::size_t j = 0; j < cols[c].size(); ++j) {
                for (const auto& [em, ec] : cols[c][j].terms()) {
                    Monomial prod = monomial_product(mono, em);
                    auto it = index.find({j, prod.exponents});
                    if (it == index.end())
                        throw std::logic_error("submodule_span: basis element missing");
                    v[it->second] += ec;
                    nonzero = true;
                }
            }
            if (nonzero)
                out.push_back(std::move(v));
        }
    }
    (void)gen_degrees;
    return out;
}

std::vector<PolynomialElement> vector_to_column(const RingPtr& ring, const WindowedModule& free,
                                                std::size_t gen_count, int t,
                                                const std::vector<Rational>& v) {
    std::vector<PolynomialElement> col(gen_count, PolynomialElement::zero(ring));
    const auto& labels = free.labels(t);
    for (std::size_t b = 0; b < labels.size(); ++b) {
        if (v[b].is_zero())
            continue;
        col[labels[b].generator] =
            col[labels[b].generator] +
            PolynomialElement(ring, {{labels[b].monomial, v[b]}});
    }
    return col;
}

} // namespace

GradedModulePresentation minimize_presentation(const GradedModulePresentation& m) {
    RingPtr ring = m.ring();
    std::vector<int> gens = m.generator_degrees();
    std::vector<std::vector<PolynomialElement>> rels;
    for (std::size_t c = 0; c < m.relation_count(); ++c)
        rels.push_back(m.relation(c));

    auto is_unit = [](const PolynomialElement& p) {
        return !p.is_zero() && p.is_homogeneous() && p.degree() == 0;
    };

    while (true) {
        std::size_t uc = rels.size(), uj = 0;
        for (std::size_t c = 0; c < rels.size() && uc == rels.size(); ++c)
            for (std::size_t j = 0; j < rels[c].size(); ++j)
                if (is_unit(rels[c][j])) {
                    uc = c;
                    uj = j;
                    break;
                }
        if (uc == rels.size())
            break;
        Rational u = rels[uc][uj].terms().front().second;
        Rational factor = -(u.inverse());
        // Substitute generator uj into every other relation, then delete the
        // generator and the relation that defined it.
        for (std::size_t e = 0; e < rels.size(); ++e) {
            if (e == uc)
                continue;
            PolynomialElement p = rels[e][uj];
            if (p.is_zero())
                continue;
            for (std::size_t j = 0; j < rels[e].size(); ++j) {
                if (j == uj)
                    continue;
                rels[e][j] = rels[e][j] + (p * rels[uc][j]).scaled(factor);
            }
        }
        for (std::size_t e = 0; e < rels.size(); ++e)
            rels[e].erase(rels[e].begin() + static_cast<long>(uj));
        gens.erase(gens.begin() + static_cast<long>(uj));
        rels.erase(rels.begin() + static_cast<long>(uc));
    }
    std::erase_if(rels, [](const std::vector<PolynomialElement>& col) {
        return std::all_of(col.begin(), col.end(),
                           [](const PolynomialElement& p) { return p.is_zero(); });
    });
    return GradedModulePresentation(ring, std::move(gens), std::move(rels), m.name());
}

FreeComplex FreeResolution::as_complex() const {
    std::map<int, std::vector<int>> terms;
    std::map<int, PolyMatrix> diffs;
    for (std::size_t s = 0; s < shifts.size(); ++s)
        if (!shifts[s].empty())
            terms[static_cast<int>(s)] = shifts[s];
    for (std::size_t s = 0; s < maps.size(); ++s)
        diffs[static_cast<int>(s) + 1] = maps[s];
    return FreeComplex(ring, std::move(terms), std::move(diffs), "resolution");
}

std::map<std::pair<int, int>, std::size_t> FreeResolution::betti() const {
    std::map<std::pair<int, int>, std::size_t> b;
    for (std::size_t s = 0; s < shifts.size(); ++s)
        for (int u : shifts[s])
            b[{static_cast<int>(s), u}]++;
    return b;
}

FreeResolution minimal_resolution(const GradedModulePresentation& m, const DegreeWindow& probe,
                                  const ResolutionOptions& opt) {
    RingPtr ring = m.ring();
    const std::size_t r = ring->rank();
    GradedModulePresentation base = minimize_presentation(m);

    int growth = std::max(2 * ring->max_generator_degree(), 4);
    int scan_top = std::max(probe.t_max, base.max_relation_degree());

    for (int attempt = 0;; ++attempt) {
        bool window_suspect = false;
        int needed_degree = scan_top;

        FreeResolution res;
        res.ring = ring;
        res.probe = probe;
        res.shifts.push_back(base.generator_degrees());

        // Step 1: minimal generators of the relation submodule. A relation
        // multiple with a nonconstant monomial lies in I.R, so candidates
        // are the original columns in their own degree.
        std::vector<std::vector<PolynomialElement>> rel_cols;
        std::vector<int> rel_degs;
        for (std::size_t c = 0; c < base.relation_count(); ++c)
            if (base.relation_degree(c)) {
                rel_cols.push_back(base.relation(c));
                rel_degs.push_back(*base.relation_degree(c));
            }

        GradedModulePresentation f0 =
            GradedModulePresentation::free_module(ring, base.generator_degrees());
        int lo0 = base.min_generator_degree();
        WindowedModule free0 = realize(f0, DegreeWindow(lo0, scan_top));

        std::vector<std::vector<PolynomialElement>> chosen_cols;
        std::vector<int> chosen_degs;
        if (!rel_cols.empty()) {
            for (int t = lo0; t <= scan_top; ++t) {
                auto ir = submodule_span(*ring, free0, rel_cols, rel_degs,
                                         base.generator_degrees(), t, 1);
                SparseMatrix basis = SparseMatrix::from_columns(free0.dim(t), ir);
                std::size_t rk = rank_of(basis);
                for (std::size_t c = 0; c < rel_cols.size(); ++c) {
                    if (rel_degs[c] != t)
                        continue;
                    auto one = submodule_span(*ring, free0, {rel_cols[c]}, {t},
                                              base.generator_degrees(), t, 0);
                    if (one.empty())
                        continue;
                    SparseMatrix cand = basis.augment_columns(
                        SparseMatrix::from_columns(free0.dim(t), {one.front()}));
                    std::size_t rk2 = rank_of(cand);
                    if (rk2 > rk) {
                        basis = cand;
                        rk = rk2;
                        chosen_cols.push_back(rel_cols[c]);
                        chosen_degs.push_back(t);
                    }
                }
            }
        }
        if (!chosen_cols.empty()) {
            PolyMatrix d1(base.generator_count(),
                          std::vector<PolynomialElement>(chosen_cols.size(),
                                                         PolynomialElement::zero(ring)));
            for (std::size_t c = 0; c < chosen_cols.size(); ++c)
                for (std::size_t j = 0; j < base.generator_count(); ++j)
                    d1[j][c] = chosen_cols[c][j];
            res.shifts.push_back(chosen_degs);
            res.maps.push_back(std::move(d1));
        }

        // Higher syzygies: lift kernels degreewise, newest generators chosen
        // as a complement of I.S inside S.
        while (!res.shifts.back().empty() && res.maps.size() == res.shifts.size() - 1 &&
               !res.maps.empty()) {
            std::size_t s = res.shifts.size() - 1; // about to build F_{s+1}
            GradedModulePresentation fs =
                GradedModulePresentation::free_module(ring, res.shifts[s]);
            GradedModulePresentation fsm1 =
                GradedModulePresentation::free_module(ring, res.shifts[s - 1]);
            int lo = *std::min_element(res.shifts[s].begin(), res.shifts[s].end());
            int lo_prev = *std::min_element(res.shifts[s - 1].begin(), res.shifts[s - 1].end());
            WindowedModule frees = realize(fs, DegreeWindow(lo, scan_top));
            WindowedModule freesm1 = realize(fsm1, DegreeWindow(std::min(lo, lo_prev), scan_top));

            // Realized d_s per degree.
            auto d_at = [&](int t) {
                std::vector<std::vector<Rational>> cols;
                const auto& labels = frees.labels(t);
                for (std::size_t b = 0; b < labels.size(); ++b) {
                    // image of basis element (gen j, monomial mu)
                    std::vector<PolynomialElement> col(res.shifts[s - 1].size(),
                                                       PolynomialElement::zero(ring));
                    for (std::size_t i = 0; i < res.shifts[s - 1].size(); ++i) {
                        const auto& entry = res.maps[s - 1][i][labels[b].generator];
                        if (!entry.is_zero())
                            col[i] = PolynomialElement(ring, {{labels[b].monomial, Rational(1)}}) * entry;
                    }
                    // expand into the realized basis of F_{s-1} at degree t
                    std::vector<Rational> vec(freesm1.dim(t), Rational(0));
                    const auto& tl = freesm1.labels(t);
                    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> tindex;
                    for (std::size_t bb = 0; bb < tl.size(); ++bb)
                        tindex[{tl[bb].generator, tl[bb].monomial.exponents}] = bb;
                    for (std::size_t i = 0; i < col.size(); ++i)
                        for (const auto& [em, ec] : col[i].terms())
                            vec[tindex.at({i, em.exponents})] += ec;
                    cols.push_back(std::move(vec));
                }
                return SparseMatrix::from_columns(freesm1.dim(t), cols);
            };

            std::map<int, SparseMatrix> kernels;
            for (int t = lo; t <= scan_top; ++t)
                kernels.emplace(t, kernel_matrix(d_at(t)));

            std::vector<std::vector<PolynomialElement>> new_cols;
            std::vector<int> new_degs;
            for (int t = lo; t <= scan_top; ++t) {
                const SparseMatrix& ker = kernels.at(t);
                if (ker.cols() == 0)
                    continue;
                // I.S at degree t: images of lower kernels under each y_i.
                SparseMatrix is(frees.dim(t), 0);
                for (std::size_t i = 0; i < r; ++i) {
                    int src = t - ring->generator_degree(i);
                    if (src < lo)
                        continue;
                    is = is.augment_columns(frees.action(i, src) * kernels.at(src));
                }
                std::size_t rk = rank_of(is);
                SparseMatrix basis = is;
                for (std::size_t c = 0; c < ker.cols(); ++c) {
                    SparseMatrix cand = basis.augment_columns(
                        SparseMatrix::from_columns(frees.dim(t), {ker.column(c)}));
                    std::size_t rk2 = rank_of(cand);
                    if (rk2 > rk) {
                        basis = cand;
                        rk = rk2;
                        new_cols.push_back(vector_to_column(ring, frees, res.shifts[s].size(), t,
                                                            ker.column(c)));
                        new_degs.push_back(t);
                    }
                }
            }
            if (new_cols.empty())
                break;
            for (int t : new_degs)
                if (t > scan_top - ring->max_generator_degree()) {
                    window_suspect = true;
                    needed_degree = std::max(needed_degree, t + ring->max_generator_degree());
                }
            PolyMatrix d(res.shifts[s].size(),
                         std::vector<PolynomialElement>(new_cols.size(),
                                                        PolynomialElement::zero(ring)));
            for (std::size_t c = 0; c < new_cols.size(); ++c)
                for (std::size_t j = 0; j < res.shifts[s].size(); ++j)
                    d[j][c] = new_cols[c][j];
            res.shifts.push_back(new_degs);
            res.maps.push_back(std::move(d));
            if (res.length() > r)
                throw std::logic_error("minimal_resolution: length exceeded the ring rank");
        }

        if (window_suspect && attempt < opt.enlargement_cap) {
            scan_top = needed_degree + growth;
            continue;
        }
        if (window_suspect)
            throw std::runtime_error("minimal_resolution: probe window too small; syzygy "
                                     "degrees reach " + std::to_string(needed_degree) +
                                     " (cap exhausted)");

        // Certificates: minimality and degreewise exactness on the probe.
        res.minimal = true;
        for (const auto& mp : res.maps)
            for (const auto& row : mp)
                for (const auto& e : row)
                    if (!e.is_zero() && e.degree() == 0)
                        res.minimal = false;
        if (!res.minimal)
            throw std::logic_error("minimal_resolution: unit entry escaped minimization");

        FreeComplex cx = res.as_complex(); // validates d o d = 0
        RealizedComplex rc = realize_complex(cx, GradedModulePresentation::unit(ring), probe);
        res.exact_on_probe = true;
        // Exactness against the module: H_0 must be M, higher homology zero.
        WindowedModule wm = realize(m, probe);
        for (int t = probe.t_min; t <= probe.t_max; ++t) {
            for (std::size_t s = 1; s <= res.length(); ++s)
                if (rc.homology_dim(static_cast<int>(s), t) != 0)
                    res.exact_on_probe = false;
            if (rc.homology_dim(0, t) != wm.dim(t))
                res.exact_on_probe = false;
        }
        return res;
    }
}

std::map<std::pair<int, int>, std::size_t> ext(const GradedModulePresentation& m,
                                               const GradedModulePresentation& n,
                                               const DegreeWindow& w,
                                               const ResolutionOptions& opt) {
    RingPtr ring = m.ring();
    DegreeWindow probe(std::min(m.min_generator_degree(), w.t_min),
                       std::max(w.t_max, m.max_relation_degree()) +
                           std::max(1, ring->max_generator_degree()));
    FreeResolution res = minimal_resolution(m, probe, opt);

    int min_shift = 0, max_shift = 0;
    for (const auto& sh : res.shifts)
        for (int u : sh) {
            min_shift = std::min(min_shift, u);
            max_shift = std::max(max_shift, u);
        }
    DegreeWindow hull(std::min(min_shift - w.t_max, n.min_generator_degree()),
                      max_shift - w.t_min + ring->max_generator_degree());
    WindowedModule wn = realize(n, hull);

    // Cochain spot s at Adams degree t: (+)_j n_{u_{s,j} - t}; the
    // codifferential precomposes with d_{s+1}.
    auto spot = [&](std::size_t s, int t) {
        std::vector<std::size_t> offs(1, 0);
        if (s < res.shifts.size())
            for (int u : res.shifts[s])
                offs.push_back(offs.back() + wn.dim(u - t));
        return offs;
    };
    auto delta = [&](std::size_t s, int t) {
        // C^s -> C^{s+1}
        auto so = spot(s, t), to = spot(s + 1, t);
        std::vector<MatrixEntry> es;
        if (s + 1 < res.shifts.size()) {
            const PolyMatrix& d = res.maps[s]; // F_{s+1} -> F_s : rows F_s, cols F_{s+1}
            for (std::size_t j = 0; j < res.shifts[s].size(); ++j)
                for (std::size_t i = 0; i < res.shifts[s + 1].size(); ++i) {
                    const auto& p = d[j][i];
                    if (p.is_zero())
                        continue;
                    SparseMatrix blk = wn.poly_action(p, res.shifts[s][j] - t);
                    for (const auto& be : blk.entries())
                        es.push_back({to[i] + be.row, so[j] + be.col, be.value});
                }
        }
        return SparseMatrix(to.back(), so.back(), std::move(es));
    };

    std::map<std::pair<int, int>, std::size_t> table;
    for (std::size_t s = 0; s < res.shifts.size(); ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            SparseMatrix out = delta(s, t);
            std::size_t kd = out.cols() - rank_of(out);
            std::size_t im = 0;
            if (s > 0)
                im = rank_of(delta(s - 1, t));
            std::size_t dim = kd - im;
            if (dim > 0)
                table[{static_cast<int>(s), t}] = dim;
        }
    return table;
}

std::size_t E2Page::dim(int s, int t) const {
    auto it = entries.find({s, t});
    return it == entries.end() ? 0 : it->second;
}

std::size_t E2Page::total(int d) const {
    std::size_t n = 0;
    for (const auto& [st, v] : entries)
        if (st.second - st.first == d)
            n += v;
    return n;
}

E2Page adams_e2(const GradedModulePresentation& m, const GradedModulePresentation& n,
                const DegreeWindow& w, const ResolutionOptions& opt) {
    E2Page page;
    page.window = w;
    page.rank_bound = m.ring()->rank();
    page.entries = ext(m, n, w, opt);
    page.vanishing_certified = true;
    for (const auto& [st, v] : page.entries)
        if (st.first < 0 || st.first > static_cast<int>(page.rank_bound))
            page.vanishing_certified = false;

    int smin = 0, smax = 0;
    bool any = false;
    for (const auto& [st, v] : page.entries) {
        if (!any) {
            smin = smax = st.first;
            any = true;
        } else {
            smin = std::min(smin, st.first);
            smax = std::max(smax, st.first);
        }
    }
    // Every d_rho with rho >= 2 moves s by rho; two adjacent columns cannot
    // support any of them.
    page.collapse_certified = !any || (smax - smin <= 1);
    page.abutment_note = "abuts pi_{t-s} Hom(M, N) for modules realized in the algebraic model";
    return page;
}

AbutmentTable abutment_oracle(const FreeComplex& x, const FreeComplex& y, const DegreeWindow& w) {
    AbutmentTable out;
    FreeComplex h = hom_complex(x, y);
    WindowedHomology wh = homology(h, w);
    for (const auto& [st, v] : wh.dims) {
        int s_adams = -st.first;
        int t_adams = -st.second;
        out.bigraded[{s_adams, t_adams}] = v;
        out.totals[t_adams - s_adams] += v;
    }
    if (h.is_zero()) {
        out.d_min = -w.t_max;
        out.d_max = -w.t_min;
    } else {
        out.d_min = h.s_max() - w.t_max;
        out.d_max = h.s_min() - w.t_min;
    }
    return out;
}

} // namespace lodual
