#include "doctest.h"

#include "lodual/functors.hpp"

using namespace lodual;

namespace {

RingPtr ring_c2() { return make_ring("A", {{"c", 2}}); }
RingPtr ring_xy() { return make_ring("A", {{"x", 2}, {"y", 2}}); }

GradedModulePresentation mod_c_squared(RingPtr r) {
    return GradedModulePresentation(r, {0}, {{PolynomialElement::generator(r, 0, 2)}}, "A/(c^2)");
}

} // namespace

TEST_CASE("gamma of the unit in rank 1: H^0 = 0, H^1 = Q in negative even degrees") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
    DegreeWindow w(-10, 6);
    FunctorResult g = gamma(in, w, {8, 2});
    for (int t = w.t_min; t <= w.t_max; ++t) {
        REQUIRE(g.homology.trusted(0, t));
        REQUIRE(g.homology.trusted(-1, t));
        CHECK(g.cohomological_dim(0, t) == 0);
        std::size_t expect = (t < 0 && t % 2 == 0) ? 1 : 0;
        CHECK(g.cohomological_dim(1, t) == expect);
    }
    // stabilization certificate present for the nonzero entries
    CHECK(g.stabilized_at.count({-1, -4}) == 1);
}

TEST_CASE("gamma is the identity on an already torsion module") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::module(mod_c_squared(r));
    DegreeWindow w(-4, 6);
    FunctorResult g = gamma(in, w, {8, 2});
    CHECK(g.homology.dim(0, 0) == 1);
    CHECK(g.homology.dim(0, 2) == 1);
    CHECK(g.homology.dim(0, 4) == 0);
    CHECK(g.homology.dim(-1, 0) == 0);
    // the tower settles once k reaches the torsion exponent
    CHECK(g.stabilized_at.at({0, 0}) <= 2);
}

TEST_CASE("gamma in rank 0 is the identity") {
    RingPtr q = make_ring("Q", {});
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(q));
    FunctorResult g = gamma(in, DegreeWindow(-3, 3), {4, 2});
    CHECK(g.homology.dim(0, 0) == 1);
    CHECK(g.homology.dims.size() == 1);
}

TEST_CASE("gamma of the unit in rank 2: H^2 only, with dim m-1 at t = -2m") {
    RingPtr r = ring_xy();
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
    DegreeWindow w(-12, 4);
    FunctorResult g = gamma(in, w, {9, 2});
    for (int t = w.t_min; t <= w.t_max; ++t) {
        if (g.homology.trusted(0, t))
            CHECK(g.cohomological_dim(0, t) == 0);
        if (g.homology.trusted(-1, t))
            CHECK(g.cohomological_dim(1, t) == 0);
    }
    for (int m = 2; m <= 5; ++m) {
        REQUIRE(g.homology.trusted(-2, -2 * m));
        CHECK(g.cohomological_dim(2, -2 * m) == static_cast<std::size_t>(m - 1));
    }
    CHECK(g.cohomological_dim(2, -2) == 0);
    CHECK(g.cohomological_dim(2, -5) == 0);
}

TEST_CASE("localize the unit in rank 1: the Laurent ring") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
    DegreeWindow w(-8, 8);
    FunctorResult l = localize_away(in, w, {8, 2});
    for (int t = w.t_min; t <= w.t_max; ++t) {
        if (!l.homology.trusted(0, t))
            continue;
        CHECK(l.homology.dim(0, t) == static_cast<std::size_t>(t % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("localization of a torsion module vanishes") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::module(mod_c_squared(r));
    DegreeWindow w(-6, 6);
    FunctorResult l = localize_away(in, w, {8, 2});
    for (const auto& [st, d] : l.homology.dims)
        if (l.homology.trusted(st.first, st.second))
            CHECK(d == 0);
}

TEST_CASE("localize in rank 0 vanishes") {
    RingPtr q = make_ring("Q", {});
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(q));
    FunctorResult l = localize_away(in, DegreeWindow(-3, 3), {4, 2});
    CHECK(l.homology.dims.empty());
}

TEST_CASE("direct rank-1 localization dimensions") {
    RingPtr r = ring_c2();
    auto d1 = rank1_localization_dims(GradedModulePresentation::unit(r), DegreeWindow(-6, 6));
    for (int t = -6; t <= 6; ++t)
        CHECK(d1[t] == static_cast<std::size_t>(t % 2 == 0 ? 1 : 0));
    auto d2 = rank1_localization_dims(mod_c_squared(r), DegreeWindow(-6, 6));
    for (int t = -6; t <= 6; ++t)
        CHECK(d2[t] == 0);
}

TEST_CASE("lambda of the unit is the unit on homology") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
    DegreeWindow w(-6, 8);
    FunctorResult l = lambda_completion(in, w, {8, 2});
    for (int t = w.t_min; t <= w.t_max; ++t) {
        if (!l.homology.trusted(0, t))
            continue;
        CHECK(l.homology.dim(0, t) == static_cast<std::size_t>((t >= 0 && t % 2 == 0) ? 1 : 0));
    }
    // lim^1 certified zero on trusted degrees
    for (const auto& [st, v] : l.lim1)
        CHECK(v == 0);

    RingPtr r2 = ring_xy();
    FunctorInput in2 = FunctorInput::module(GradedModulePresentation::unit(r2));
    FunctorResult l2 = lambda_completion(in2, DegreeWindow(-4, 6), {8, 2});
    CHECK(l2.homology.dim(0, 0) == 1);
    CHECK(l2.homology.dim(0, 2) == 2);
    CHECK(l2.homology.dim(0, 4) == 3);
}

TEST_CASE("lambda in rank 0 is the identity") {
    RingPtr q = make_ring("Q", {});
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(q));
    FunctorResult l = lambda_completion(in, DegreeWindow(-3, 3), {4, 2});
    CHECK(l.homology.dim(0, 0) == 1);
}

TEST_CASE("gamma and lambda are idempotent on homology") {
    for (RingPtr r : {ring_c2(), ring_xy()}) {
        FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
        DegreeWindow w(-8, 4);
        FunctorOptions opt{9, 2};
        FunctorResult g1 = gamma(in, w, opt);
        FunctorResult g2 = gamma_iterated(in, 2, w, opt);
        CHECK(g1.homology.agrees_on_trusted(g2.homology));

        DegreeWindow wl(-4, 8);
        FunctorResult l1 = lambda_completion(in, wl, opt);
        FunctorResult l2 = lambda_iterated(in, 2, wl, opt);
        CHECK(l1.homology.agrees_on_trusted(l2.homology));
    }
}

TEST_CASE("tower colimit is independent of the cofinal subsequence") {
    // Evaluate the gamma tower along stages k = 2, 4, 6 with composed
    // transitions and compare against the consecutive tower.
    RingPtr r = ring_c2();
    GradedModulePresentation unit = GradedModulePresentation::unit(r);
    DegreeWindow w(-8, 2);
    FunctorResult g = gamma(FunctorInput::module(unit), w, {7, 2});

    KoszulTower kt = tower(r, 7);
    std::vector<const FreeComplex*> cs = {&kt.dual_stage(2), &kt.dual_stage(4),
                                          &kt.dual_stage(6)};
    SharedWindowedModule coeff = realize_shared(unit, coefficient_hull(cs, w));
    RealizedComplex s2 = realize_complex(kt.dual_stage(2), coeff, w);
    RealizedComplex s4 = realize_complex(kt.dual_stage(4), coeff, w);
    RealizedComplex s6 = realize_complex(kt.dual_stage(6), coeff, w);
    ChainMap e24 = compose(kt.extension(3), kt.extension(2));
    ChainMap e46 = compose(kt.extension(5), kt.extension(4));
    RealizedMap m24 = realize_map(e24, s2, s4);
    RealizedMap m46 = realize_map(e46, s4, s6);

    for (int s = -1; s <= 0; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            if (!g.homology.trusted(s, t) || g.stabilized_at[{s, t}] > 2)
                continue;
            // both transitions along the subsequence must already be isos
            std::size_t d2 = s2.homology_dim(s, t);
            CHECK(d2 == g.homology.dim(s, t));
            if (d2 == 0)
                continue;
            SparseMatrix i24 = induced_on_homology(s2.homology_space(s, t),
                                                   s4.homology_space(s, t), m24.at(s, t));
            SparseMatrix i46 = induced_on_homology(s4.homology_space(s, t),
                                                   s6.homology_space(s, t), m46.at(s, t));
            CHECK(rank_of(i24) == d2);
            CHECK(rank_of(i46) == d2);
        }
}

TEST_CASE("gamma torsion certificates for the unit") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
    GammaTorsionReport rep = gamma_torsion_certificates(in, DegreeWindow(-8, 2), {6, 2});
    CHECK(rep.all_certified);
    // every certified class of H^1 is killed by some power of c
    for (const auto& [st, classes] : rep.exponents)
        for (const auto& exps : classes) {
            REQUIRE(exps.size() == 1);
            CHECK(exps[0] >= 1);
        }
}

TEST_CASE("adjunction tables agree") {
    for (RingPtr r : {ring_c2(), ring_xy()}) {
        FreeComplex unit = FreeComplex::unit(r);
        FreeComplex K = koszul(r, 1).complex;
        DegreeWindow w(-6, 6);
        FunctorOptions opt{7, 2};

        AdjunctionReport a1 = check_adjunction(K, unit, w, opt);
        CHECK(a1.agree);
        AdjunctionReport a2 = check_adjunction(unit, K, w, opt);
        CHECK(a2.agree);
        AdjunctionReport a3 = check_adjunction(K, FreeComplex::zero(r), w, opt);
        CHECK(a3.agree);
        for (const auto& [st, d] : a3.gamma_side.dims)
            CHECK(d == 0);
        // x = unit: both sides are H(Lambda y)
        FunctorInput iny = FunctorInput::complex(K, r);
        FunctorResult ly = lambda_completion(iny, w, opt);
        CHECK(a2.lambda_side.agrees_on_trusted(ly.homology));
    }
}

TEST_CASE("round trips at the unit") {
    for (RingPtr r : {ring_c2(), ring_xy()}) {
        FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(r));
        DegreeWindow w(-8, 8);
        RoundTripReport rr = roundtrip_report(in, w, {8, 2});
        CHECK(rr.lambda_gamma_agrees);
        CHECK(rr.gamma_lambda_agrees);
        // H(Lambda Gamma A) is the Hilbert table of A in the s = 0 column
        for (int t = 0; t <= 8; ++t) {
            if (!rr.lambda_gamma.trusted(0, t))
                continue;
            CHECK(rr.lambda_gamma.dim(0, t) == rr.lambda_only.dim(0, t));
        }
    }
    // rank 0: everything is the identity
    RingPtr q = make_ring("Q", {});
    FunctorInput in = FunctorInput::module(GradedModulePresentation::unit(q));
    RoundTripReport rr = roundtrip_report(in, DegreeWindow(-2, 2), {3, 2});
    CHECK(rr.lambda_gamma_agrees);
    CHECK(rr.gamma_lambda_agrees);
}

TEST_CASE("round trip of the zero complex is zero") {
    RingPtr r = ring_c2();
    FunctorInput in = FunctorInput::complex(FreeComplex::zero(r), r);
    RoundTripReport rr = roundtrip_report(in, DegreeWindow(-4, 4), {5, 2});
    CHECK(rr.lambda_gamma_agrees);
    CHECK(rr.gamma_lambda_agrees);
    for (const auto& [st, d] : rr.lambda_gamma.dims)
        CHECK(d == 0);
    for (const auto& [st, d] : rr.gamma_only.dims)
        CHECK(d == 0);
}

TEST_CASE("adjunction holds for a tensor square source") {
    RingPtr r = ring_c2();
    FreeComplex K = koszul(r, 1).complex;
    FreeComplex KK = tensor(K, K);
    AdjunctionReport rep = check_adjunction(KK, K, DegreeWindow(-6, 6), {6, 2});
    CHECK(rep.agree);
}

TEST_CASE("round trip on a torsion complex input") {
    RingPtr r = ring_c2();
    FreeComplex K = koszul(r, 1).complex;
    FunctorInput in = FunctorInput::complex(K, r);
    DegreeWindow w(-6, 6);
    RoundTripReport rr = roundtrip_report(in, w, {7, 2});
    CHECK(rr.gamma_lambda_agrees);
    CHECK(rr.lambda_gamma_agrees);
    // Gamma K = K: homology Q at (0,0)
    CHECK(rr.gamma_only.dim(0, 0) == 1);
}
