#include "lodual/functors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lodual {

namespace {

using Cell = std::pair<int, int>;

// One-directional tower of realized stages with its transition maps.
struct StageTower {
    std::vector<FreeComplex> shapes;
    std::vector<ChainMap> trans; // colim: [k]: k -> k+1; lim: [k]: k+1 -> k
    bool colim = true;
    SharedWindowedModule coeff;
    std::vector<RealizedComplex> realized;

    void realize_all(const GradedModulePresentation& pres, const DegreeWindow& w, int headroom) {
        std::vector<const FreeComplex*> cs;
        for (const auto& c : shapes)
            cs.push_back(&c);
        coeff = realize_shared(pres, coefficient_hull(cs, w, headroom));
        for (const auto& c : shapes)
            realized.push_back(realize_complex(c, coeff, w));
    }

    int s_min() const {
        int v = shapes.front().s_min();
        for (const auto& c : shapes)
            v = std::min(v, c.s_min());
        return v;
    }
    int s_max() const {
        int v = shapes.front().s_max();
        for (const auto& c : shapes)
            v = std::max(v, c.s_max());
        return v;
    }

    // Is the transition trans[k] an isomorphism on homology at (s,t)?
    bool transition_iso(std::size_t k, int s, int t) {
        std::size_t a = colim ? k : k + 1;
        std::size_t b = colim ? k + 1 : k;
        std::size_t da = realized[a].homology_dim(s, t);
        std::size_t db = realized[b].homology_dim(s, t);
        if (da != db)
            return false;
        if (da == 0)
            return true;
        RealizedMap rm = realize_map(trans[k], realized[a], realized[b]);
        SparseMatrix ind = induced_on_homology(realized[a].homology_space(s, t),
                                               realized[b].homology_space(s, t), rm.at(s, t));
        return rank_of(ind) == da;
    }
};

struct CellResult {
    std::optional<std::size_t> value;
    int stage = 0; // 1-based first stage of the certified stable tail
    std::vector<std::size_t> raw;
};

// Tail criterion: trusted when every transition from some stage onward is an
// isomorphism and the stable tail contains at least `run` transitions.
CellResult analyze_cell(StageTower& tw, int s, int t, int run) {
    CellResult out;
    std::size_t K = tw.realized.size();
    for (std::size_t k = 0; k < K; ++k)
        out.raw.push_back(tw.realized[k].homology_dim(s, t));
    std::size_t tail = 0;
    while (tail < tw.trans.size() && tw.transition_iso(tw.trans.size() - 1 - tail, s, t))
        ++tail;
    if (static_cast<int>(tail) >= run) {
        out.value = out.raw.back();
        out.stage = static_cast<int>(K - tail);
    }
    return out;
}

FunctorResult run_tower(StageTower& tw, FunctorTag tag, const std::string& input,
                        const DegreeWindow& w, const FunctorOptions& opt) {
    FunctorResult res;
    res.input = input;
    res.tag = tag;
    res.homology.window = w;
    res.homology.s_min = tw.s_min();
    res.homology.s_max = tw.s_max();
    for (int s = res.homology.s_min; s <= res.homology.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            CellResult c = analyze_cell(tw, s, t, opt.stable_run);
            if (c.value) {
                res.homology.set(s, t, *c.value);
                res.stabilized_at[{s, t}] = c.stage;
                if (tag == FunctorTag::lambda)
                    res.lim1[{s, t}] = 0; // image chains stabilized: Mittag-Leffler
            } else {
                res.homology.untrusted.insert({s, t});
                res.raw_tower[{s, t}] = c.raw;
            }
        }
    return res;
}

FunctorResult identity_result(const FunctorInput& in, FunctorTag tag, const DegreeWindow& w) {
    FunctorResult res;
    res.input = in.descriptor;
    res.tag = tag;
    res.homology = homology(in.shape, in.coeff, w);
    for (int s = res.homology.s_min; s <= res.homology.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t)
            res.stabilized_at[{s, t}] = 1;
    return res;
}

StageTower gamma_tower(const FunctorInput& in, const KoszulTower& kt, int headroom,
                       const DegreeWindow& w) {
    StageTower tw;
    tw.colim = true;
    for (int j = 1; j <= kt.k_max(); ++j)
        tw.shapes.push_back(tensor(kt.dual_stage(j), in.shape));
    for (int j = 1; j < kt.k_max(); ++j)
        tw.trans.push_back(tensor_map(kt.extension(j), ChainMap::identity(in.shape)));
    tw.realize_all(in.coeff, w, headroom);
    return tw;
}

StageTower lambda_tower(const FunctorInput& in, const KoszulTower& kt, const DegreeWindow& w) {
    StageTower tw;
    tw.colim = false;
    for (int k = 1; k <= kt.k_max(); ++k)
        tw.shapes.push_back(tensor(kt.stage(k).complex, in.shape));
    for (int k = 1; k < kt.k_max(); ++k)
        tw.trans.push_back(tensor_map(kt.restriction(k), ChainMap::identity(in.shape)));
    tw.realize_all(in.coeff, w, 0);
    return tw;
}

} // namespace

FunctorInput FunctorInput::module(GradedModulePresentation m) {
    RingPtr ring = m.ring();
    std::string d = "module " + m.name();
    return FunctorInput{FreeComplex::unit(ring), std::move(m), std::move(d)};
}

FunctorInput FunctorInput::complex(FreeComplex x, RingPtr ring) {
    std::string d = "complex " + x.name();
    return FunctorInput{std::move(x), GradedModulePresentation::unit(std::move(ring)), std::move(d)};
}

std::string tag_name(FunctorTag tag) {
    switch (tag) {
    case FunctorTag::gamma: return "gamma";
    case FunctorTag::localize: return "localize";
    case FunctorTag::lambda: return "lambda";
    }
    return "?";
}

FunctorResult gamma(const FunctorInput& in, const DegreeWindow& w, const FunctorOptions& opt) {
    RingPtr ring = in.coeff.ring();
    if (ring->rank() == 0)
        return identity_result(in, FunctorTag::gamma, w);
    KoszulTower kt = tower(ring, opt.k_max);
    StageTower tw = gamma_tower(in, kt, 0, w);
    return run_tower(tw, FunctorTag::gamma, in.descriptor, w, opt);
}

FunctorResult lambda_completion(const FunctorInput& in, const DegreeWindow& w,
                                const FunctorOptions& opt) {
    RingPtr ring = in.coeff.ring();
    if (ring->rank() == 0)
        return identity_result(in, FunctorTag::lambda, w);
    KoszulTower kt = tower(ring, opt.k_max);
    StageTower tw = lambda_tower(in, kt, w);
    return run_tower(tw, FunctorTag::lambda, in.descriptor, w, opt);
}

FunctorResult gamma_iterated(const FunctorInput& in, int times, const DegreeWindow& w,
                             const FunctorOptions& opt) {
    if (times < 1)
        throw std::invalid_argument("gamma_iterated: times must be >= 1");
    RingPtr ring = in.coeff.ring();
    if (ring->rank() == 0)
        return identity_result(in, FunctorTag::gamma, w);
    KoszulTower kt = tower(ring, opt.k_max);
    StageTower tw;
    tw.colim = true;
    for (int j = 1; j <= kt.k_max(); ++j) {
        FreeComplex stage = in.shape;
        for (int rep = 0; rep < times; ++rep)
            stage = tensor(kt.dual_stage(j), stage);
        tw.shapes.push_back(std::move(stage));
    }
    for (int j = 1; j < kt.k_max(); ++j) {
        ChainMap step = ChainMap::identity(in.shape);
        for (int rep = 0; rep < times; ++rep)
            step = tensor_map(kt.extension(j), step);
        tw.trans.push_back(std::move(step));
    }
    tw.realize_all(in.coeff, w, 0);
    return run_tower(tw, FunctorTag::gamma, in.descriptor, w, opt);
}

FunctorResult lambda_iterated(const FunctorInput& in, int times, const DegreeWindow& w,
                              const FunctorOptions& opt) {
    if (times < 1)
        throw std::invalid_argument("lambda_iterated: times must be >= 1");
    RingPtr ring = in.coeff.ring();
    if (ring->rank() == 0)
        return identity_result(in, FunctorTag::lambda, w);
    KoszulTower kt = tower(ring, opt.k_max);
    StageTower tw;
    tw.colim = false;
    for (int k = 1; k <= kt.k_max(); ++k) {
        FreeComplex stage = in.shape;
        for (int rep = 0; rep < times; ++rep)
            stage = tensor(kt.stage(k).complex, stage);
        tw.shapes.push_back(std::move(stage));
    }
    for (int k = 1; k < kt.k_max(); ++k) {
        ChainMap step = ChainMap::identity(in.shape);
        for (int rep = 0; rep < times; ++rep)
            step = tensor_map(kt.restriction(k), step);
        tw.trans.push_back(std::move(step));
    }
    tw.realize_all(in.coeff, w, 0);
    return run_tower(tw, FunctorTag::lambda, in.descriptor, w, opt);
}

std::map<int, std::size_t> rank1_localization_dims(const GradedModulePresentation& m,
                                                   const DegreeWindow& w) {
    RingPtr ring = m.ring();
    if (ring->rank() != 1)
        throw std::invalid_argument("rank1_localization_dims: ring rank must be 1");
    int dc = ring->generator_degree(0);
    int maxgen = m.max_generator_degree();
    int relmax = m.max_relation_degree();

    // Anchor degree per t: first u >= max(t, maxgen + 1) with u = t (mod dc).
    // Above the generator degrees multiplication identifies the images of
    // M_u in the localization, so the anchor value is already stable.
    std::map<int, int> anchor;
    int top = 0;
    for (int t = w.t_min; t <= w.t_max; ++t) {
        int u = std::max(t, maxgen + 1);
        int r = ((u - t) % dc + dc) % dc;
        if (r != 0)
            u += dc - r;
        anchor[t] = u;
        // Graded Smith form over Q[y]: torsion classes at degree u have
        // exponent at most (relmax - u)/dc, so this power detects them all.
        int K = std::max(0, (relmax - u) / dc + 1);
        top = std::max(top, u + K * dc);
    }
    WindowedModule wm = realize(m, DegreeWindow(m.min_generator_degree(), top));

    std::map<int, std::size_t> out;
    for (int t = w.t_min; t <= w.t_max; ++t) {
        int u = anchor[t];
        std::size_t n = wm.dim(u);
        if (n == 0) {
            out[t] = 0;
            continue;
        }
        int K = std::max(0, (relmax - u) / dc + 1);
        SparseMatrix comp = SparseMatrix::identity(n);
        for (int e = 0; e < K; ++e)
            comp = wm.action(0, u + e * dc) * comp;
        out[t] = rank_of(comp); // h(u) minus the torsion at u
    }
    return out;
}

FunctorResult localize_away(const FunctorInput& in, const DegreeWindow& w,
                            const FunctorOptions& opt) {
    RingPtr ring = in.coeff.ring();
    FunctorResult res;
    res.input = in.descriptor;
    res.tag = FunctorTag::localize;
    res.homology.window = w;
    if (ring->rank() == 0) {
        // Gamma is the identity, so the cofiber vanishes.
        FunctorResult g = identity_result(in, FunctorTag::localize, w);
        res.homology.s_min = g.homology.s_min;
        res.homology.s_max = g.homology.s_max;
        res.stabilized_at = g.stabilized_at;
        return res;
    }

    KoszulTower kt = tower(ring, opt.k_max);
    StageTower tw = gamma_tower(in, kt, 0, w);
    FunctorResult g = run_tower(tw, FunctorTag::gamma, in.descriptor, w, opt);

    // Augmentation Gamma-stage -> input at the last stage.
    int last = kt.k_max();
    ChainMap aug = tensor_map(augmentation_to_unit(kt.dual_stage(last), 0),
                              ChainMap::identity(in.shape));
    RealizedComplex target = realize_complex(tensor(FreeComplex::unit(ring), in.shape), tw.coeff, w);
    RealizedComplex& source = tw.realized.back();
    RealizedMap alpha = realize_map(aug, source, target);

    res.homology.s_min = std::min(g.homology.s_min, target.s_min());
    res.homology.s_max = std::max(g.homology.s_max, target.s_max()) + 1;

    std::map<Cell, std::size_t> alpha_rank;
    std::map<Cell, std::size_t> target_dim;
    for (int s = g.homology.s_min - 1; s <= res.homology.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            std::size_t hsrc = source.homology_dim(s, t);
            std::size_t htgt = target.homology_dim(s, t);
            target_dim[{s, t}] = htgt;
            if (hsrc == 0 || htgt == 0) {
                alpha_rank[{s, t}] = 0;
                continue;
            }
            SparseMatrix ind = induced_on_homology(source.homology_space(s, t),
                                                   target.homology_space(s, t), alpha.at(s, t));
            alpha_rank[{s, t}] = rank_of(ind);
        }

    // Long exact sequence of Gamma m -> m -> m[I^{-1}]:
    // dim H_s = coker(alpha_s) + ker(alpha_{s-1}).
    for (int s = res.homology.s_min; s <= res.homology.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            bool ok = g.homology.trusted(s, t) && g.homology.trusted(s - 1, t);
            if (!ok) {
                res.homology.untrusted.insert({s, t});
                continue;
            }
            std::size_t coker = target_dim[{s, t}] - alpha_rank[{s, t}];
            std::size_t kernel = g.homology.dim(s - 1, t) - alpha_rank[{s - 1, t}];
            res.homology.set(s, t, coker + kernel);
            res.stabilized_at[{s, t}] = std::max(g.stabilized_at.count({s, t})
                                                     ? g.stabilized_at[{s, t}]
                                                     : 1,
                                                 g.stabilized_at.count({s - 1, t})
                                                     ? g.stabilized_at[{s - 1, t}]
                                                     : 1);
        }

    // Rank-1 module inputs admit a direct degreewise localization; use it as
    // an independent cross-check of the LES route.
    bool unit_shape = (in.shape.s_min() == 0 && in.shape.s_max() == 0 &&
                       in.shape.term(0) == std::vector<int>{0});
    if (ring->rank() == 1 && unit_shape) {
        auto direct = rank1_localization_dims(in.coeff, w);
        for (int t = w.t_min; t <= w.t_max; ++t) {
            if (!res.homology.trusted(0, t))
                continue;
            if (res.homology.dim(0, t) != direct[t])
                throw std::logic_error("localize_away: LES route disagrees with direct "
                                       "localization at t = " + std::to_string(t));
            for (int s = res.homology.s_min; s < 0; ++s)
                if (res.homology.trusted(s, t) && res.homology.dim(s, t) != 0)
                    throw std::logic_error("localize_away: direct route expects flat "
                                           "localization, found higher homology");
        }
    }
    return res;
}

GammaTorsionReport gamma_torsion_certificates(const FunctorInput& in, const DegreeWindow& w,
                                              const FunctorOptions& opt) {
    GammaTorsionReport rep;
    RingPtr ring = in.coeff.ring();
    if (ring->rank() == 0)
        return rep; // I = (0): nothing to certify
    KoszulTower kt = tower(ring, opt.k_max);
    int headroom = opt.k_max * ring->max_generator_degree() + ring->max_generator_degree();
    StageTower tw = gamma_tower(in, kt, headroom, w);
    FunctorResult g = run_tower(tw, FunctorTag::gamma, in.descriptor, w, opt);
    RealizedComplex& top = tw.realized.back();

    for (int s = g.homology.s_min; s <= g.homology.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            if (!g.homology.trusted(s, t) || g.homology.dim(s, t) == 0)
                continue;
            const Subquotient& h = top.homology_space(s, t);
            std::vector<std::vector<int>> per_class;
            bool cell_ok = true;
            for (std::size_t c = 0; c < h.dim && cell_ok; ++c) {
                std::vector<int> exps;
                for (std::size_t i = 0; i < ring->rank(); ++i) {
                    int d = ring->generator_degree(i);
                    std::vector<Rational> v = h.representative(c);
                    int e = 0;
                    bool dead = false;
                    // The stage is K-dual at power k_max, so y_i^{k_max}
                    // annihilates its homology; the headroom covers this.
                    while (e <= opt.k_max) {
                        v = top.action(i, s, t + e * d).apply(v);
                        ++e;
                        auto coords = top.homology_space(s, t + e * d).coords(v);
                        if (std::all_of(coords.begin(), coords.end(),
                                        [](const Rational& x) { return x.is_zero(); })) {
                            dead = true;
                            break;
                        }
                    }
                    if (!dead) {
                        cell_ok = false;
                        break;
                    }
                    exps.push_back(e);
                }
                if (cell_ok)
                    per_class.push_back(std::move(exps));
            }
            if (cell_ok)
                rep.exponents[{s, t}] = std::move(per_class);
            else {
                rep.all_certified = false;
                rep.uncertified.push_back({s, t});
            }
        }
    return rep;
}

AdjunctionReport check_adjunction(const FreeComplex& x, const FreeComplex& y,
                                  const DegreeWindow& w, const FunctorOptions& opt) {
    RingPtr ring = x.ring();
    AdjunctionReport rep;
    GradedModulePresentation unit_pres = GradedModulePresentation::unit(ring);
    if (ring->rank() == 0) {
        rep.gamma_side = homology(hom_complex(x, y), w);
        rep.lambda_side = rep.gamma_side;
        rep.agree = true;
        return rep;
    }
    KoszulTower kt = tower(ring, opt.k_max);

    StageTower gside;
    gside.colim = false;
    for (int j = 1; j <= kt.k_max(); ++j)
        gside.shapes.push_back(hom_complex(tensor(kt.dual_stage(j), x), y));
    for (int j = 1; j < kt.k_max(); ++j)
        gside.trans.push_back(
            hom_map_pre(tensor_map(kt.extension(j), ChainMap::identity(x)), y));
    gside.realize_all(unit_pres, w, 0);
    FunctorResult gres = run_tower(gside, FunctorTag::gamma, "Hom(Gamma " + x.name() + ", " + y.name() + ")",
                                   w, opt);

    StageTower lside;
    lside.colim = false;
    for (int k = 1; k <= kt.k_max(); ++k)
        lside.shapes.push_back(hom_complex(x, tensor(kt.stage(k).complex, y)));
    for (int k = 1; k < kt.k_max(); ++k)
        lside.trans.push_back(
            hom_map_post(x, tensor_map(kt.restriction(k), ChainMap::identity(y))));
    lside.realize_all(unit_pres, w, 0);
    FunctorResult lres = run_tower(lside, FunctorTag::lambda, "Hom(" + x.name() + ", Lambda " + y.name() + ")",
                                   w, opt);

    rep.gamma_side = gres.homology;
    rep.lambda_side = lres.homology;
    rep.agree = rep.gamma_side.agrees_on_trusted(rep.lambda_side);
    return rep;
}

namespace {

// Lazy (k, j) grid of realized stages K_k (x) dual_j (x) shape. The
// k-direction admits an arithmetic stabilization bound: at fixed j and
// internal degree t every Koszul strand with a positive power of y dies from
// the chain groups once k min|y| outruns the window, and above that row the
// restriction transitions are literal identities on the surviving strands.
// The j-direction (the Gamma colimit) is certified observationally.
struct GridTower {
    RingPtr ring;
    const FunctorInput* in = nullptr;
    DegreeWindow w{0, 0};
    int sum_deg = 0; // a(1)
    int min_deg = 0;
    int coeff_min = 0;
    int span = 0;
    KoszulTower kt;
    SharedWindowedModule coeff;
    std::map<std::pair<int, int>, FreeComplex> shapes;
    std::map<std::pair<int, int>, RealizedComplex> realized;
    std::map<std::pair<int, int>, ChainMap> jmaps, kmaps;
    std::map<std::tuple<int, int, int, int, char>, bool> iso_memo;

    GridTower(const FunctorInput& input, const DegreeWindow& window, int n_out, int run)
        : ring(input.coeff.ring()), in(&input), w(window), kt(ring, 1) {
        for (std::size_t i = 0; i < ring->rank(); ++i) {
            sum_deg += ring->generator_degree(i);
            min_deg = min_deg == 0 ? ring->generator_degree(i)
                                   : std::min(min_deg, ring->generator_degree(i));
        }
        coeff_min = input.coeff.min_generator_degree();
        span = (input.coeff.max_relation_degree() - coeff_min) + ring->max_generator_degree() +
               (input.shape.is_zero() ? 0
                                      : input.shape.max_shift() - input.shape.min_shift());
        int t_abs = std::max(std::abs(w.t_min), std::abs(w.t_max));
        int j_hi = gamma_depth(n_out, t_abs, run);
        int k_hi = std::max(n_out, khat(n_out, t_abs));
        kt = KoszulTower(ring, std::max(j_hi, k_hi));
        int minsh = in->shape.is_zero() ? 0 : in->shape.min_shift();
        int maxsh = in->shape.is_zero() ? 0 : in->shape.max_shift();
        DegreeWindow hull(std::min(w.t_min - k_hi * sum_deg - maxsh, coeff_min),
                          w.t_max + j_hi * sum_deg - minsh + ring->max_generator_degree());
        coeff = realize_shared(in->coeff, hull);
    }

    // Row above which the K_k strands are gone from the chain groups at
    // internal degree <= |t| for every dual stage <= j.
    int khat(int j, int t_abs) const {
        int minsh = in->shape.is_zero() ? 0 : in->shape.min_shift();
        return std::max(1, (t_abs + j * sum_deg - minsh - coeff_min) / min_deg + 1);
    }
    // Observation depth for the Gamma colimit against the k-th Lambda stage.
    int gamma_depth(int k, int t_abs, int run) const {
        int maxsh = in->shape.is_zero() ? 0 : in->shape.max_shift();
        return (t_abs + k * sum_deg + maxsh - coeff_min + span) / min_deg + run + 2;
    }

    RealizedComplex& stage(int k, int j) {
        auto key = std::make_pair(k, j);
        auto it = realized.find(key);
        if (it != realized.end())
            return it->second;
        FreeComplex shape = tensor(kt.stage(k).complex, tensor(kt.dual_stage(j), in->shape));
        auto sit = shapes.emplace(key, std::move(shape)).first;
        return realized.emplace(key, realize_complex(sit->second, coeff, w)).first->second;
    }

    const ChainMap& jmap(int k, int j) { // stage(k,j) -> stage(k,j+1)
        auto key = std::make_pair(k, j);
        auto it = jmaps.find(key);
        if (it == jmaps.end())
            it = jmaps.emplace(key,
                               tensor_map(ChainMap::identity(kt.stage(k).complex),
                                          tensor_map(kt.extension(j), ChainMap::identity(in->shape))))
                     .first;
        return it->second;
    }
    const ChainMap& kmap(int k, int j) { // stage(k+1,j) -> stage(k,j)
        auto key = std::make_pair(k, j);
        auto it = kmaps.find(key);
        if (it == kmaps.end())
            it = kmaps.emplace(key,
                               tensor_map(kt.restriction(k),
                                          ChainMap::identity(tensor(kt.dual_stage(j), in->shape))))
                     .first;
        return it->second;
    }

    bool iso(char dir, int k, int j, int s, int t) {
        auto key = std::make_tuple(k, j, s, t, dir);
        auto it = iso_memo.find(key);
        if (it != iso_memo.end())
            return it->second;
        RealizedComplex& a = dir == 'k' ? stage(k + 1, j) : stage(k, j);
        RealizedComplex& b = dir == 'k' ? stage(k, j) : stage(k, j + 1);
        const ChainMap& f = dir == 'k' ? kmap(k, j) : jmap(k, j);
        bool ok;
        std::size_t da = a.homology_dim(s, t), db = b.homology_dim(s, t);
        if (da != db)
            ok = false;
        else if (da == 0)
            ok = true;
        else {
            RealizedMap rm = realize_map(f, a, b);
            ok = rank_of(induced_on_homology(a.homology_space(s, t), b.homology_space(s, t),
                                             rm.at(s, t))) == da;
        }
        iso_memo.emplace(key, ok);
        return ok;
    }
};

} // namespace

RoundTripReport roundtrip_report(const FunctorInput& in, const DegreeWindow& w,
                                 const FunctorOptions& opt) {
    RoundTripReport rep;
    RingPtr ring = in.coeff.ring();
    rep.gamma_only = gamma(in, w, opt).homology;
    rep.lambda_only = lambda_completion(in, w, opt).homology;
    if (ring->rank() == 0) {
        rep.lambda_gamma = rep.lambda_only;
        rep.gamma_lambda = rep.gamma_only;
        rep.lambda_gamma_agrees = true;
        rep.gamma_lambda_agrees = true;
        return rep;
    }

    const int n_out = opt.k_max;
    const int run = opt.stable_run;
    GridTower grid(in, w, n_out, run);

    int n = static_cast<int>(ring->rank());
    int s_lo = (in.shape.is_zero() ? 0 : in.shape.s_min()) - n;
    int s_hi = (in.shape.is_zero() ? 0 : in.shape.s_max()) + n;

    // Lambda Gamma: outer limit over k observed on inner Gamma colimits,
    // each certified by its tail at the structurally safe depth.
    WindowedHomology lg;
    lg.window = w;
    lg.s_min = s_lo;
    lg.s_max = s_hi;
    for (int s = s_lo; s <= s_hi; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            int j_top = grid.gamma_depth(n_out, std::abs(t), run);
            bool ok = true;
            for (int k = n_out - run; k <= n_out && ok; ++k)
                for (int j = j_top - run; j < j_top && ok; ++j)
                    ok = grid.iso('j', k, j, s, t);
            for (int k = n_out - run; k < n_out && ok; ++k)
                ok = grid.iso('k', k, j_top, s, t);
            if (ok)
                lg.set(s, t, grid.stage(n_out, j_top).homology_dim(s, t));
            else
                lg.untrusted.insert({s, t});
        }

    // Gamma Lambda: the inner limit over k is exact at the chain-death row;
    // the outer Gamma colimit along that row is certified by its tail.
    WindowedHomology gl;
    gl.window = w;
    gl.s_min = s_lo;
    gl.s_max = s_hi;
    for (int s = s_lo; s <= s_hi; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            int k_bar = grid.khat(n_out, std::abs(t));
            bool ok = true;
            for (int j = n_out - run; j < n_out && ok; ++j)
                ok = grid.iso('j', k_bar, j, s, t);
            if (ok)
                gl.set(s, t, grid.stage(k_bar, n_out).homology_dim(s, t));
            else
                gl.untrusted.insert({s, t});
        }

    rep.lambda_gamma = std::move(lg);
    rep.gamma_lambda = std::move(gl);
    rep.lambda_gamma_agrees = rep.lambda_gamma.agrees_on_trusted(rep.lambda_only);
    rep.gamma_lambda_agrees = rep.gamma_lambda.agrees_on_trusted(rep.gamma_only);
    return rep;
}

} // namespace lodual
