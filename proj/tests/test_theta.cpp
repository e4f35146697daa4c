#include <random>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "thetadiv/io.hpp"
#include "thetadiv/semistable.hpp"
#include "thetadiv/theta.hpp"

using namespace thetadiv;

TEST_CASE("theta existence on the corpus") {
    const DualGraph ex44k4 = fixture("ex44k4");
    SUBCASE("all-rational acyclic realization kills the divisor") {
        const ThetaVerdict v = theta_exists(ex44k4, Multidegree({-1, 3}));
        CHECK(v.semistable);
        CHECK_FALSE(v.exists);
        CHECK(v.reason == ThetaReason::AllRationalAcyclic);
        REQUIRE(v.witness_orientation.has_value());
        CHECK(is_acyclic(ex44k4, *v.witness_orientation));
        CHECK(multidegree_of(ex44k4, *v.witness_orientation) == Multidegree({-1, 3}));
    }
    SUBCASE("forced directed cycle keeps it") {
        const ThetaVerdict v = theta_exists(ex44k4, Multidegree({1, 1}));
        CHECK(v.semistable);
        CHECK(v.exists);
        CHECK(v.reason == ThetaReason::CyclicRealization);
        REQUIRE(v.witness_orientation.has_value());
        CHECK(multidegree_of(ex44k4, *v.witness_orientation) == Multidegree({1, 1}));
        // The realizing orientation carries a directed cycle somewhere.
        bool cycle = false;
        for (EdgeIndex e = 0; e < ex44k4.edge_count(); ++e)
            if (minty_decompose(ex44k4, *v.witness_orientation, e).kind ==
                MintyWitness::Kind::DirectedCycle)
                cycle = true;
        CHECK(cycle);
    }
    SUBCASE("positive weight vertex") {
        const DualGraph ex54 = fixture("ex54");
        const ThetaVerdict v = theta_exists(ex54, Multidegree({0, 2, 0}));
        CHECK(v.semistable);
        CHECK(v.exists);
        CHECK(v.reason == ThetaReason::PositiveWeightVertex);
        CHECK(v.witness_vertex == 2);
    }
    SUBCASE("not semistable") {
        const ThetaVerdict v = theta_exists(ex44k4, Multidegree({-2, 4}));
        CHECK_FALSE(v.semistable);
        CHECK_FALSE(v.exists);
        CHECK(v.reason == ThetaReason::NotSemistable);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(theta_exists(ex44k4, Multidegree({0, 0})), PreconditionError);
        const DualGraph path =
            DualGraph::from_indexed({{"a", 0}, {"b", 0}, {"c", 0}}, {{0, 1}, {1, 2}});
        CHECK_THROWS_AS(theta_exists(path, Multidegree({0, 0, -1})), PreconditionError);
    }
}

TEST_CASE("theta component index sets") {
    const DualGraph fig1 = fixture("fig1");
    const auto only_full =
        theta_components(fig1, parse_orientation_tokens(fig1, "ba,ab,ab"));
    REQUIRE(only_full.size() == 1);
    CHECK(only_full[0] == VertexSet::full(fig1));

    const DualGraph ex44k3 = fixture("ex44k3");
    CHECK(theta_components(ex44k3, parse_orientation_tokens(ex44k3, "ab,ab,ab")).empty());

    const DualGraph mixed = DualGraph::from_indexed({{"v", 1}, {"w", 0}}, {{0, 1}, {0, 1}, {0, 1}});
    const auto comps = theta_components(mixed, parse_orientation_tokens(mixed, "ab,ab,ab"));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet::full(mixed));
}

TEST_CASE("degree-g criterion") {
    const DualGraph fig1 = fixture("fig1");
    const Multidegree d({1, 1});  // total 2 = g
    for (VertexIndex v = 0; v < 2; ++v) {
        const auto o = degree_g_criterion(fig1, d, v);
        REQUIRE(o.has_value());
        CHECK(multidegree_of(fig1, *o) == d.minus(v));
        for (const VertexSet& y : directed_cuts_toward(fig1, *o)) CHECK_FALSE(y.contains(v));
    }

    // Witness existence matches semistability, for every vertex choice.
    const DualGraph ex44k3 = fixture("ex44k3");
    for (long long a = -2; a <= 4; ++a) {
        const Multidegree cand({a, 2 - a});
        const bool ss = is_semistable(ex44k3, cand);
        for (VertexIndex v = 0; v < 2; ++v)
            CHECK(degree_g_criterion(ex44k3, cand, v).has_value() == ss);
    }

    CHECK_THROWS_AS(degree_g_criterion(fig1, Multidegree({0, 1}), 0), PreconditionError);
    CHECK_THROWS_AS(degree_g_criterion(fig1, d, 5), InputError);
}

TEST_CASE("degree-(g-2) criterion") {
    const DualGraph ex54 = fixture("ex54");
    SUBCASE("semistable multidegree has witnesses at every vertex") {
        const Multidegree d({-1, 2, 0});
        for (VertexIndex v = 0; v < 3; ++v) {
            const auto o = degree_g_minus_2_criterion(ex54, d, v);
            REQUIRE(o.has_value());
            CHECK(multidegree_of(ex54, *o) == d.plus(v));
        }
    }
    SUBCASE("non-semistable multidegrees have none") {
        for (VertexIndex v = 0; v < 3; ++v)
            CHECK_FALSE(degree_g_minus_2_criterion(ex54, Multidegree({2, -1, 0}), v).has_value());
        const DualGraph ex55 = fixture("ex55");
        for (VertexIndex v = 0; v < 3; ++v)
            CHECK_FALSE(degree_g_minus_2_criterion(ex55, Multidegree({2, 0, 0}), v).has_value());
    }
    SUBCASE("wrong degree") {
        CHECK_THROWS_AS(degree_g_minus_2_criterion(ex54, Multidegree({0, 2, 0}), 0),
                        PreconditionError);
    }
}

TEST_CASE("vertex-shift characterization") {
    const DualGraph ex54 = fixture("ex54");
    CHECK(semistable_via_vertex_shifts(ex54, Multidegree({-1, 2, 0})));
    CHECK_FALSE(semistable_via_vertex_shifts(fixture("ex55"), Multidegree({2, 0, 0})));

    const DualGraph ex63 = fixture("ex63");
    const Multidegree d({1, 3, 1});  // total 5 = g - 2
    CHECK(semistable_via_vertex_shifts(ex63, d) == is_semistable(ex63, d));

    CHECK_THROWS_AS(semistable_via_vertex_shifts(ex63, Multidegree({0, 0, 0})),
                    PreconditionError);
}

TEST_CASE("shift characterization matches the definition on stable fixtures") {
    std::mt19937 rng(60611);
    for (const char* name : {"fig1", "ex54", "ex55", "ex63", "ex44k4"}) {
        const DualGraph g = fixture(name);
        for (int trial = 0; trial < 60; ++trial) {
            Multidegree d = gen::random_multidegree(rng, g, 2);
            const long long target = (trial % 2 == 0) ? genus(g) - 2 : genus(g);
            d.values[0] += target - d.total();
            CHECK(semistable_via_vertex_shifts(g, d) == is_semistable(g, d));
        }
    }
}

TEST_CASE("theta consistency properties on stable fixtures") {
    for (const char* name : {"fig1", "ex44k3", "ex44k4", "ex54"}) {
        const DualGraph g = fixture(name);
        for (const Orientation& o : enumerate_orientations(g)) {
            const Multidegree d = multidegree_of(g, o);
            const ThetaVerdict v = theta_exists(g, d);
            CHECK(v.semistable);  // realized multidegrees always are
            const auto comps = theta_components(g, o);
            CHECK(comps.empty() == !v.exists);
            if (is_stable(g, d)) {
                REQUIRE(comps.size() == 1);
                CHECK(comps[0] == VertexSet::full(g));
            }
            if (is_effective(d)) CHECK(v.exists);
        }
    }
}
