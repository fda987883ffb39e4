#include "lodual/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lodual {

GradedModulePresentation::GradedModulePresentation(
    RingPtr ring, std::vector<int> generator_degrees,
    std::vector<std::vector<PolynomialElement>> relation_columns, std::string name)
    : ring_(std::move(ring)), name_(std::move(name)),
      generator_degrees_(std::move(generator_degrees)), relations_(std::move(relation_columns)) {
    if (!ring_)
        throw std::invalid_argument("module: null ring");
    for (std::size_t c = 0; c < relations_.size(); ++c) {
        const auto& col = relations_[c];
        if (col.size() != generator_degrees_.size())
            throw std::invalid_argument("module '" + name_ + "': relation " + std::to_string(c) +
                                        " has " + std::to_string(col.size()) + " entries, expected " +
                                        std::to_string(generator_degrees_.size()));
        std::optional<int> degree;
        for (std::size_t j = 0; j < col.size(); ++j) {
            if (col[j].is_zero())
                continue;
            if (!col[j].is_homogeneous())
                throw std::invalid_argument("module '" + name_ + "': relation " + std::to_string(c) +
                                            ", row " + std::to_string(j) + ": inhomogeneous entry");
            int d = col[j].degree() + generator_degrees_[j];
            if (degree && *degree != d)
                throw std::invalid_argument("module '" + name_ + "': relation " + std::to_string(c) +
                                            ", row " + std::to_string(j) +
                                            ": mixed relation degree (" + std::to_string(d) +
                                            " vs " + std::to_string(*degree) + ")");
            degree = d;
        }
        relation_degrees_.push_back(degree);
    }
}

GradedModulePresentation GradedModulePresentation::free_module(RingPtr ring, std::vector<int> degrees,
                                                               std::string name) {
    return GradedModulePresentation(std::move(ring), std::move(degrees), {}, std::move(name));
}

GradedModulePresentation GradedModulePresentation::unit(RingPtr ring) {
    return free_module(std::move(ring), {0}, "A");
}

GradedModulePresentation GradedModulePresentation::residue_field(RingPtr ring) {
    std::vector<std::vector<PolynomialElement>> rels;
    for (std::size_t i = 0; i < ring->rank(); ++i)
        rels.push_back({PolynomialElement::generator(ring, i)});
    return GradedModulePresentation(ring, {0}, std::move(rels), "Q");
}

int GradedModulePresentation::min_generator_degree() const {
    int m = 0;
    for (std::size_t j = 0; j < generator_degrees_.size(); ++j)
        m = (j == 0) ? generator_degrees_[j] : std::min(m, generator_degrees_[j]);
    return m;
}

int GradedModulePresentation::max_generator_degree() const {
    int m = 0;
    for (std::size_t j = 0; j < generator_degrees_.size(); ++j)
        m = (j == 0) ? generator_degrees_[j] : std::max(m, generator_degrees_[j]);
    return m;
}

int GradedModulePresentation::max_relation_degree() const {
    int m = min_generator_degree();
    for (const auto& d : relation_degrees_)
        if (d)
            m = std::max(m, *d);
    return m;
}

std::string BasisLabel::str(const GradedPolynomialRing& ring, const std::string& gen_prefix) const {
    std::ostringstream os;
    os << gen_prefix << generator;
    std::string mono = monomial.str(ring);
    if (mono != "1")
        os << "*" << mono;
    return os.str();
}

std::size_t WindowedModule::dim(int t) const {
    auto it = pieces_.find(t);
    return it == pieces_.end() ? 0 : it->second.dim;
}

const std::vector<BasisLabel>& WindowedModule::labels(int t) const {
    static const std::vector<BasisLabel> empty;
    auto it = labels_.find(t);
    return it == labels_.end() ? empty : it->second;
}

const QuotientSpace& WindowedModule::piece(int t) const {
    auto it = pieces_.find(t);
    if (it == pieces_.end())
        throw std::out_of_range("WindowedModule: degree " + std::to_string(t) + " outside window");
    return it->second;
}

const SparseMatrix& WindowedModule::action(std::size_t i, int t) const {
    if (i >= actions_.size())
        throw std::out_of_range("WindowedModule: generator index");
    auto it = actions_[i].find(t);
    if (it == actions_[i].end())
        throw std::out_of_range("WindowedModule: action from degree " + std::to_string(t) +
                                " not inside window");
    return it->second;
}

SparseMatrix WindowedModule::poly_action(const PolynomialElement& p, int t) const {
    if (!p.is_homogeneous())
        throw std::invalid_argument("WindowedModule: inhomogeneous action polynomial");
    if (p.is_zero())
        throw std::invalid_argument("WindowedModule: zero action polynomial has no degree");
    int target = t + p.degree();
    SparseMatrix out(dim(target), dim(t));
    if (dim(t) == 0)
        return out;
    for (const auto& [mono, coeff] : p.terms()) {
        // Compose single-generator steps; the actions commute, so order is free.
        SparseMatrix step = SparseMatrix::identity(dim(t));
        int cur = t;
        for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
            for (int e = 0; e < mono.exponents[i]; ++e) {
                step = action(i, cur) * step;
                cur += ring_->generator_degree(i);
            }
        }
        out = out + step.scaled(coeff);
    }
    return out;
}

std::vector<Rational> WindowedModule::generator_class(std::size_t j, int t) const {
    if (j >= generator_degrees_.size())
        throw std::out_of_range("WindowedModule: generator index");
    std::vector<Rational> v(dim(t), Rational(0));
    if (generator_degrees_[j] != t)
        return v;
    const auto& fl = free_labels_.at(t);
    std::size_t idx = fl.size();
    for (std::size_t k = 0; k < fl.size(); ++k) {
        bool unit_mono = true;
        for (int e : fl[k].monomial.exponents)
            if (e != 0)
                unit_mono = false;
        if (fl[k].generator == j && unit_mono)
            idx = k;
    }
    if (idx == fl.size())
        throw std::logic_error("WindowedModule: generator basis element missing");
    std::vector<Rational> free_vec(fl.size(), Rational(0));
    free_vec[idx] = Rational(1);
    return piece(t).projection.apply(free_vec);
}

bool WindowedModule::actions_commute() const {
    for (std::size_t i = 0; i < actions_.size(); ++i)
        for (std::size_t k = i + 1; k < actions_.size(); ++k) {
            int di = ring_->generator_degree(i);
            int dk = ring_->generator_degree(k);
            for (int t = window_.t_min; t + di + dk <= window_.t_max; ++t) {
                if (!pieces_.count(t))
                    continue;
                SparseMatrix a = action(k, t + di) * action(i, t);
                SparseMatrix b = action(i, t + dk) * action(k, t);
                if (!(a == b))
                    return false;
            }
        }
    return true;
}

WindowedModule realize(const GradedModulePresentation& m, const DegreeWindow& w) {
    WindowedModule out;
    out.ring_ = m.ring();
    out.window_ = w;
    out.generator_degrees_ = m.generator_degrees();
    const auto& ring = *m.ring();

    // Free cover bases per degree.
    std::map<int, std::vector<BasisLabel>> free_basis;
    std::map<int, std::map<std::pair<std::size_t, std::vector<int>>, std::size_t>> index;
    for (int t = w.t_min; t <= w.t_max; ++t) {
        std::vector<BasisLabel> basis;
        for (std::size_t j = 0; j < m.generator_count(); ++j) {
            for (const auto& mono : monomial_basis(ring, t - m.generator_degrees()[j])) {
                index[t][{j, mono.exponents}] = basis.size();
                basis.push_back(BasisLabel{j, mono});
            }
        }
        free_basis[t] = std::move(basis);
    }

    // Relation subspace at each degree: all monomial multiples of each column.
    for (int t = w.t_min; t <= w.t_max; ++t) {
        const auto& basis = free_basis[t];
        std::vector<std::vector<Rational>> columns;
        for (std::size_t c = 0; c < m.relation_count(); ++c) {
            auto rd = m.relation_degree(c);
            if (!rd || *rd > t)
                continue;
            for (const auto& mono : monomial_basis(ring, t - *rd)) {
                std::vector<Rational> col(basis.size(), Rational(0));
                for (std::size_t j = 0; j < m.generator_count(); ++j) {
                    const auto& entry = m.relation(c)[j];
                    if (entry.is_zero())
                        continue;
                    for (const auto& [em, ec] : entry.terms()) {
                        Monomial prod = monomial_product(mono, em);
                        auto it = index[t].find({j, prod.exponents});
                        if (it == index[t].end())
                            throw std::logic_error("realize: missing free basis element");
                        col[it->second] += ec;
                    }
                }
                columns.push_back(std::move(col));
            }
        }
        QuotientSpace q = quotient_basis(SparseMatrix::from_columns(basis.size(), columns), basis.size());
        std::vector<BasisLabel> labels;
        for (std::size_t rc : q.representative_cols)
            labels.push_back(basis[rc]);
        out.labels_[t] = std::move(labels);
        out.pieces_[t] = std::move(q);
        out.free_labels_[t] = basis;
    }

    // Multiplication maps between realized pieces.
    out.actions_.resize(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        int d = ring.generator_degree(i);
        for (int t = w.t_min; t + d <= w.t_max; ++t) {
            const auto& src = out.pieces_[t];
            const auto& tgt = out.pieces_[t + d];
            std::vector<std::vector<Rational>> cols;
            for (std::size_t q = 0; q < src.dim; ++q) {
                const BasisLabel& rep = out.labels_[t][q];
                Monomial shifted = rep.monomial;
                shifted.exponents[i] += 1;
                auto it = index[t + d].find({rep.generator, shifted.exponents});
                if (it == index[t + d].end())
                    throw std::logic_error("realize: missing target basis element");
                std::vector<Rational> free_vec(free_basis[t + d].size(), Rational(0));
                free_vec[it->second] = Rational(1);
                cols.push_back(tgt.projection.apply(free_vec));
            }
            out.actions_[i][t] = SparseMatrix::from_columns(tgt.dim, cols);
        }
    }
    return out;
}

std::map<int, long> hilbert_function(const GradedModulePresentation& m, const DegreeWindow& w) {
    WindowedModule wm = realize(m, w);
    std::map<int, long> out;
    for (int t = w.t_min; t <= w.t_max; ++t)
        out[t] = static_cast<long>(wm.dim(t));
    return out;
}

TorsionCertificate is_I_torsion(const GradedModulePresentation& m) {
    TorsionCertificate cert;
    const auto& ring = *m.ring();
    if (ring.rank() == 0) {
        cert.torsion = true;
        cert.degenerate_rank_zero = true;
        cert.exponents.assign(m.generator_count(), {});
        cert.support_bound = m.max_generator_degree();
        return cert;
    }

    // Every degree-t element with t above the generator degrees is
    // decomposable, so a zero run of length max|y_i| in the Hilbert function
    // above the top generator forces the module to vanish from there on.
    int D = ring.max_generator_degree();
    int G = m.max_generator_degree();
    int lo = m.min_generator_degree();
    int base = std::max(G, m.max_relation_degree());
    int scan_top = base + 8 * D + 16;
    WindowedModule wm = realize(m, DegreeWindow(lo, scan_top));

    std::optional<int> support;
    int run = 0;
    for (int t = G + 1; t <= scan_top; ++t) {
        run = (wm.dim(t) == 0) ? run + 1 : 0;
        if (run == D) {
            support = t - D;
            break;
        }
    }

    // Iterate every generator tower within the scan; when a support bound is
    // known the towers must die inside it.
    cert.exponents.assign(m.generator_count(), std::vector<int>(ring.rank(), 0));
    bool all_die = true;
    std::string witness;
    for (std::size_t j = 0; j < m.generator_count(); ++j) {
        int g = m.generator_degrees()[j];
        std::vector<Rational> gen = wm.generator_class(j, g);
        for (std::size_t i = 0; i < ring.rank(); ++i) {
            int d = ring.generator_degree(i);
            std::vector<Rational> v = gen;
            int k = 0;
            auto dead = [&]() {
                return std::all_of(v.begin(), v.end(),
                                   [](const Rational& x) { return x.is_zero(); });
            };
            while (!dead() && g + (k + 1) * d <= scan_top) {
                v = wm.action(i, g + k * d).apply(v);
                ++k;
            }
            if (dead())
                cert.exponents[j][i] = k;
            else {
                all_die = false;
                if (witness.empty())
                    witness = "generator " + std::to_string(j) + " survives " +
                              ring.generator_name(i) + "^" + std::to_string(k) +
                              " through degree " + std::to_string(g + k * d) +
                              " (scan bound " + std::to_string(scan_top) + ")";
            }
        }
    }

    if (all_die) {
        cert.torsion = true;
        int bound = lo;
        for (std::size_t j = 0; j < m.generator_count(); ++j) {
            int b = m.generator_degrees()[j];
            for (std::size_t i = 0; i < ring.rank(); ++i)
                b += std::max(0, cert.exponents[j][i] - 1) * ring.generator_degree(i);
            bound = std::max(bound, b);
        }
        cert.support_bound = support ? std::min(*support, bound) : bound;
        return cert;
    }
    if (support)
        throw std::logic_error("is_I_torsion: generator tower escaped a certified support bound");
    // No Hilbert gap and a surviving tower. For rank 1 this is conclusive:
    // the torsion of a rank-1 graded module lives below its relation degrees,
    // so a gap would have appeared inside the scan.
    cert.torsion = false;
    cert.witness = witness;
    return cert;
}

L0CompletionResult l0_completion(const GradedModulePresentation& m, const DegreeWindow& probe) {
    CompletionCertificate cert;
    cert.probe = probe;
    const auto& ring = *m.ring();
    if (ring.rank() == 0) {
        cert.degenerate_rank_zero = true;
        cert.verified = true;
        for (int t = probe.t_min; t <= probe.t_max; ++t)
            cert.vanishing_power[t] = 1;
        return {m, cert};
    }

    int d_min = ring.min_generator_degree();
    int g_min = m.min_generator_degree();
    // Realize far enough below each probed degree to reach the generators.
    DegreeWindow w(std::min(probe.t_min, g_min), probe.t_max);
    WindowedModule wm = realize(m, w);

    // power_piece[t] starts as all of M_t and is replaced by (I^k M)_t.
    std::map<int, SparseMatrix> power_piece;
    for (int t = w.t_min; t <= w.t_max; ++t)
        power_piece[t] = SparseMatrix::identity(wm.dim(t));

    int k_top = 1;
    for (int t = probe.t_min; t <= probe.t_max; ++t)
        k_top = std::max(k_top, (t - g_min) / d_min + 1);

    cert.verified = true;
    for (int k = 1; k <= k_top; ++k) {
        std::map<int, SparseMatrix> next;
        for (int t = w.t_min; t <= w.t_max; ++t) {
            SparseMatrix span(wm.dim(t), 0);
            for (std::size_t i = 0; i < ring.rank(); ++i) {
                int src = t - ring.generator_degree(i);
                if (src < w.t_min || src > w.t_max)
                    continue;
                span = span.augment_columns(wm.action(i, src) * power_piece[src]);
            }
            next[t] = std::move(span);
        }
        power_piece = std::move(next);
        for (int t = probe.t_min; t <= probe.t_max; ++t) {
            int needed = std::max(1, (t - g_min) / d_min + 1);
            if (k == needed) {
                cert.vanishing_power[t] = k;
                if (rank_of(power_piece[t]) != 0)
                    cert.verified = false;
            }
        }
    }
    return {m, cert};
}

} // namespace lodual
