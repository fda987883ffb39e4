#include "doctest.h"

#include "lodual/resolution.hpp"
#include "lodual/koszul.hpp"

using namespace lodual;

namespace {

RingPtr ring_c2() { return make_ring("A", {{"c", 2}}); }
RingPtr ring_y4() { return make_ring("A", {{"y", 4}}); }
RingPtr ring_xy() { return make_ring("A", {{"x", 2}, {"y", 2}}); }

} // namespace

TEST_CASE("resolution of the residue field in rank 1") {
    RingPtr r = ring_c2();
    auto Q = GradedModulePresentation::residue_field(r);
    FreeResolution res = minimal_resolution(Q, DegreeWindow(0, 12));
    CHECK(res.length() == 1);
    CHECK(res.shifts[0] == std::vector<int>{0});
    CHECK(res.shifts[1] == std::vector<int>{2});
    CHECK(res.minimal);
    CHECK(res.exact_on_probe);
}

TEST_CASE("free modules resolve in length 0") {
    RingPtr r = ring_xy();
    auto F = GradedModulePresentation::free_module(r, {0, 4});
    FreeResolution res = minimal_resolution(F, DegreeWindow(0, 10));
    CHECK(res.length() == 0);
    CHECK(res.exact_on_probe);
}

TEST_CASE("residue field over Q[x,y] has the koszul betti table") {
    RingPtr r = ring_xy();
    auto Q = GradedModulePresentation::residue_field(r);
    FreeResolution res = minimal_resolution(Q, DegreeWindow(0, 12));
    CHECK(res.length() == 2);
    CHECK(res.shifts[0] == std::vector<int>{0});
    CHECK(res.shifts[1] == std::vector<int>{2, 2});
    CHECK(res.shifts[2] == std::vector<int>{4});
    CHECK(res.minimal);
    CHECK(res.exact_on_probe);
}

TEST_CASE("betti numbers are presentation invariants") {
    RingPtr r = ring_c2();
    // Q presented redundantly: two generators, one identified with the other,
    // plus the honest relation.
    PolynomialElement c = PolynomialElement::generator(r, 0);
    PolynomialElement one = PolynomialElement::constant(r, Rational(1));
    GradedModulePresentation redundant(
        r, {0, 0},
        {{one, one.scaled(Rational(-1))}, {c, PolynomialElement::zero(r)}},
        "Q-redundant");
    auto clean = GradedModulePresentation::residue_field(r);
    FreeResolution r1 = minimal_resolution(redundant, DegreeWindow(0, 10));
    FreeResolution r2 = minimal_resolution(clean, DegreeWindow(0, 10));
    CHECK(r1.betti() == r2.betti());

    // the same relation listed twice changes nothing either
    GradedModulePresentation doubled(r, {0}, {{c}, {c}, {c.scaled(Rational(3))}}, "Q-doubled");
    FreeResolution r3 = minimal_resolution(doubled, DegreeWindow(0, 10));
    CHECK(r3.betti() == r2.betti());
}

TEST_CASE("resolution hilbert series consistency") {
    // sum_s (-1)^s q^{shifts} / prod(1 - q^{d_i}) must reproduce the module.
    RingPtr r = ring_xy();
    PolynomialElement rel = PolynomialElement::generator(r, 0, 2) +
                            PolynomialElement::generator(r, 1, 2);
    GradedModulePresentation m(r, {0, 2}, {{rel, PolynomialElement::zero(r)}}, "M");
    DegreeWindow w(0, 14);
    FreeResolution res = minimal_resolution(m, w);
    REQUIRE(res.exact_on_probe);
    auto h = hilbert_function(m, w);
    auto ha = hilbert_coefficients(*r, w);
    for (int t = 0; t <= 14; ++t) {
        long acc = 0;
        for (std::size_t s = 0; s < res.shifts.size(); ++s)
            for (int u : res.shifts[s]) {
                if (t - u >= 0)
                    acc += (s % 2 == 0 ? 1 : -1) * ha[t - u];
            }
        CHECK(acc == h[t]);
    }
}

TEST_CASE("ext of the residue field with itself") {
    RingPtr r = ring_c2();
    auto Q = GradedModulePresentation::residue_field(r);
    auto table = ext(Q, Q, DegreeWindow(-4, 8));
    CHECK(table.size() == 2);
    CHECK(table.at({0, 0}) == 1);
    CHECK(table.at({1, 2}) == 1);

    RingPtr r4 = ring_y4();
    auto Q4 = GradedModulePresentation::residue_field(r4);
    auto table4 = ext(Q4, Q4, DegreeWindow(-4, 8));
    CHECK(table4.size() == 2);
    CHECK(table4.at({0, 0}) == 1);
    CHECK(table4.at({1, 4}) == 1);

    RingPtr rxy = ring_xy();
    auto Qxy = GradedModulePresentation::residue_field(rxy);
    auto txy = ext(Qxy, Qxy, DegreeWindow(-4, 8));
    CHECK(txy.at({0, 0}) == 1);
    CHECK(txy.at({1, 2}) == 2);
    CHECK(txy.at({2, 4}) == 1);
    std::size_t col0 = 0, col1 = 0, col2 = 0;
    for (const auto& [st, v] : txy) {
        if (st.first == 0) col0 += v;
        if (st.first == 1) col1 += v;
        if (st.first == 2) col2 += v;
    }
    CHECK(col0 == 1);
    CHECK(col1 == 2);
    CHECK(col2 == 1);
}

TEST_CASE("ext out of a free module is concentrated at s = 0") {
    RingPtr r = ring_c2();
    auto A = GradedModulePresentation::unit(r);
    auto Q = GradedModulePresentation::residue_field(r);
    auto table = ext(A, Q, DegreeWindow(-4, 4));
    CHECK(table.size() == 1);
    CHECK(table.at({0, 0}) == 1);

    // against the unit: Hom(A, A)^{0,t} = A_{-t}
    auto t2 = ext(A, A, DegreeWindow(-6, 6));
    for (const auto& [st, v] : t2)
        CHECK(st.first == 0);
    CHECK(t2.at({0, 0}) == 1);
    CHECK(t2.at({0, -2}) == 1);
    CHECK(t2.count({0, 2}) == 0);
}

TEST_CASE("adams e2 page certificates") {
    RingPtr r = ring_y4();
    auto Q = GradedModulePresentation::residue_field(r);
    E2Page page = adams_e2(Q, Q, DegreeWindow(-8, 8));
    CHECK(page.rank_bound == 1);
    CHECK(page.vanishing_certified);
    CHECK(page.collapse_certified);
    CHECK(page.dim(0, 0) == 1);
    CHECK(page.dim(1, 4) == 1);
    CHECK(page.total(0) == 1);
    CHECK(page.total(3) == 1);
    CHECK(page.total(1) == 0);

    // free input: E2 concentrated at s = 0
    auto A = GradedModulePresentation::unit(r);
    E2Page pfree = adams_e2(A, A, DegreeWindow(-8, 8));
    CHECK(pfree.collapse_certified);
    for (const auto& [st, v] : pfree.entries)
        CHECK(st.first == 0);
}

TEST_CASE("abutment oracle against collapsed pages") {
    RingPtr r = ring_y4();
    FreeComplex K = koszul(r, 1).complex;
    DegreeWindow w(-20, 20);
    AbutmentTable oracle = abutment_oracle(K, K, w);
    auto Q = GradedModulePresentation::residue_field(r);
    E2Page page = adams_e2(Q, Q, w);
    REQUIRE(page.collapse_certified);
    for (int d = std::max(oracle.d_min, -12); d <= std::min(oracle.d_max, 12); ++d) {
        auto it = oracle.totals.find(d);
        std::size_t got = it == oracle.totals.end() ? 0 : it->second;
        CHECK(page.total(d) == got);
    }

    // unit against unit: totals are the coefficients of A in nonpositive d
    AbutmentTable u = abutment_oracle(FreeComplex::unit(r), FreeComplex::unit(r), w);
    CHECK(u.totals.at(0) == 1);
    CHECK(u.totals.at(-4) == 1);

    // zero target
    AbutmentTable z = abutment_oracle(K, FreeComplex::zero(r), w);
    CHECK(z.totals.empty());
}

TEST_CASE("probe enlargement finds late syzygies") {
    RingPtr r = ring_xy();
    auto Q = GradedModulePresentation::residue_field(r);
    // the second syzygy lives in degree 4, beyond this probe
    FreeResolution res = minimal_resolution(Q, DegreeWindow(0, 3));
    CHECK(res.length() == 2);
    CHECK(res.shifts[2] == std::vector<int>{4});
}

TEST_CASE("modules with negative generator degrees resolve and pair") {
    RingPtr r = ring_c2();
    // cohomologically graded input: one generator in internal degree -4
    PolynomialElement c2 = PolynomialElement::generator(r, 0, 2);
    GradedModulePresentation m(r, {-4}, {{c2}}, "S-4(A/c^2)");
    auto h = hilbert_function(m, DegreeWindow(-6, 2));
    CHECK(h[-4] == 1);
    CHECK(h[-2] == 1);
    CHECK(h[0] == 0);
    FreeResolution res = minimal_resolution(m, DegreeWindow(-6, 8));
    CHECK(res.length() == 1);
    CHECK(res.shifts[0] == std::vector<int>{-4});
    CHECK(res.shifts[1] == std::vector<int>{0});
    auto Q = GradedModulePresentation::residue_field(r);
    auto table = ext(m, Q, DegreeWindow(-8, 4));
    // Hom(S^{-4}A, Q) contributes at t = -4, the syzygy at t = 0
    CHECK(table.at({0, -4}) == 1);
    CHECK(table.at({1, 0}) == 1);
}

TEST_CASE("minimize_presentation eliminates unit entries") {
    RingPtr r = ring_c2();
    PolynomialElement c = PolynomialElement::generator(r, 0);
    PolynomialElement one = PolynomialElement::constant(r, Rational(1));
    GradedModulePresentation redundant(
        r, {0, 0}, {{one.scaled(Rational(2)), one}, {PolynomialElement::zero(r), c}}, "M");
    auto minimized = minimize_presentation(redundant);
    CHECK(minimized.generator_count() == 1);
    // the minimized module is A/(c) up to the substitution
    auto h = hilbert_function(minimized, DegreeWindow(0, 6));
    auto h0 = hilbert_function(redundant, DegreeWindow(0, 6));
    for (int t = 0; t <= 6; ++t)
        CHECK(h[t] == h0[t]);
}
