#include <doctest.h>

#include <numeric>

#include "indyn/classify.hpp"
#include "indyn/fixtures.hpp"
#include "indyn/recurrence.hpp"

using namespace indyn;

namespace {

// two disjoint cycles (sizes 2 and 3) as one t.d.s.
FiniteSystem two_cycles() {
    return FiniteSystem::create({1, 0, 3, 4, 2},
                                Metric::from_coords({0.0, 1.0, 2.0, 3.0, 4.0}), true);
}

}  // namespace

TEST_CASE("transitivity of finite systems") {
    CHECK(is_transitive(make_cycle(5)).transitive);
    const TransitivityReport split = is_transitive(two_cycles());
    CHECK_FALSE(split.transitive);
    CHECK(split.proper_invariant_set == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(is_transitive(make_harmonic(2)).transitive);
}

TEST_CASE("total transitivity") {
    const TotalTransitivityReport c4 = is_totally_transitive(make_cycle(4), 4);
    CHECK_FALSE(c4.totally_transitive);
    CHECK(c4.first_failing_power == 2);

    CHECK(is_totally_transitive(make_cycle(1), 10).totally_transitive);

    // cycle(p) is totally transitive up to n iff no k in 2..n shares a factor with p
    for (std::size_t p = 1; p <= 8; ++p) {
        for (std::size_t n = 1; n <= 8; ++n) {
            bool coprime = true;
            for (std::size_t k = 2; k <= n; ++k) {
                if (std::gcd(p, k) > 1) coprime = false;
            }
            CHECK(is_totally_transitive(make_cycle(p), n).totally_transitive == coprime);
        }
    }
}

TEST_CASE("periodic and minimal point sets") {
    const FiniteSystem perm = make_harmonic(2);
    std::vector<std::size_t> everything(perm.points());
    std::iota(everything.begin(), everything.end(), std::size_t{0});
    CHECK(periodic_points(perm) == everything);
    CHECK(minimal_points(perm) == everything);

    const FiniteSystem eventually =
        FiniteSystem::create({1, 1}, Metric::from_coords({0.0, 1.0}), false);
    CHECK(periodic_points(eventually) == std::vector<std::size_t>{1});
    CHECK(minimal_points(eventually) == std::vector<std::size_t>{1});
}

TEST_CASE("minimal points have syndetic return times with gap at most the period") {
    for (const FiniteSystem& sys : {make_cycle(6), make_harmonic(3)}) {
        for (std::size_t x = 0; x < sys.points(); ++x) {
            const TimeSet n = return_times_point(sys, x, FiniteSubset::of(sys, {x}), 64);
            CHECK(syndetic_gap(n).max_gap <= sys.point_period(x));
        }
    }
}

TEST_CASE("classification of catalog systems") {
    for (std::size_t p = 1; p <= 6; ++p) {
        const ClassificationReport r = classify(make_cycle(p));
        CHECK(r.transitive);
        CHECK(r.p_system);
        CHECK(r.m_system);
        CHECK(r.e_system);
        CHECK(r.periodic);
        CHECK(r.period == p);
        REQUIRE(r.full_support_invariant.has_value());
        CHECK(r.full_support_invariant->support().size() == p);
        CHECK(pushforward(make_cycle(p), *r.full_support_invariant) == *r.full_support_invariant);
    }

    const ClassificationReport split = classify(two_cycles());
    CHECK_FALSE(split.transitive);
    CHECK_FALSE(split.p_system);
    CHECK_FALSE(split.m_system);
    CHECK_FALSE(split.e_system);
    CHECK(split.periodic);
    CHECK(split.period == 6);

    const ClassificationReport tower = classify(make_harmonic(3));
    CHECK(tower.pointwise_periodic);
    CHECK(tower.periodic);
    CHECK(tower.period == 8);
    CHECK_FALSE(tower.transitive);
}

TEST_CASE("classification flags stay consistent") {
    for (const FiniteSystem& sys :
         {make_cycle(4), make_harmonic(2), two_cycles(),
          product_system(make_cycle(2), make_cycle(3))}) {
        const ClassificationReport r = classify(sys);
        if (r.p_system) CHECK(r.m_system);
        if (r.m_system) CHECK(r.e_system);
        CHECK(r.periodic == r.pointwise_periodic);
    }
}

TEST_CASE("no nontrivial catalog system is totally transitive") {
    // contrapositive route to the weak-mixing implication: every finite
    // t.d.s. has the periodic-measure witnesses, so a nontrivial one must
    // fail total transitivity
    std::vector<FiniteSystem> systems;
    for (std::size_t p = 2; p <= 8; ++p) systems.push_back(make_cycle(p));
    systems.push_back(make_harmonic(2));
    systems.push_back(product_system(make_cycle(2), make_cycle(3)));
    for (const FiniteSystem& sys : systems) {
        CHECK_FALSE(is_totally_transitive(sys, sys.points()).totally_transitive);
    }
    CHECK(is_totally_transitive(make_cycle(1), 8).totally_transitive);
}

TEST_CASE("odometer quotients are minimal but never totally transitive") {
    for (std::size_t depth = 1; depth <= 6; ++depth) {
        const FiniteSystem q = CylinderSystem::odometer().finite_quotient(depth);
        CHECK(is_transitive(q).transitive);
        const TotalTransitivityReport tt = is_totally_transitive(q, 4);
        CHECK_FALSE(tt.totally_transitive);
        CHECK(tt.first_failing_power == 2);  // T^2 splits the 2^depth cycle
    }
}

TEST_CASE("products of transitive systems are transitive iff the periods are coprime") {
    for (std::size_t p = 1; p <= 6; ++p) {
        for (std::size_t q = 1; q <= 6; ++q) {
            const bool got =
                classify(product_system(make_cycle(p), make_cycle(q))).transitive;
            CHECK(got == (std::gcd(p, q) == 1));
        }
    }
}

TEST_CASE("periodic-measure probe on finite systems") {
    const FiniteSystem c3 = make_cycle(3);
    // a single point with moderate epsilon: the uniform measure spills too
    // much, the point mass wins
    const auto w = almost_dense_periodic_probe(c3, FiniteSubset::of(c3, {1}), 0.5);
    REQUIRE(w.has_value());
    CHECK(w->complement_mass == Rat(0));
    CHECK(w->candidate == "dirac[1]");
    CHECK(w->period == 3);

    // the whole space: the invariant uniform measure is the first candidate
    const auto full = almost_dense_periodic_probe(c3, full_set(c3), 0.5);
    REQUIRE(full.has_value());
    CHECK(full->candidate == "uniform[0]");
    CHECK(full->period == 1);

    const FiniteSystem c1 = make_cycle(1);
    CHECK(almost_dense_periodic_probe(c1, full_set(c1), 0.25)->complement_mass == Rat(0));
}

TEST_CASE("periodic-measure probe on the odometer") {
    const CylinderSystem odo = CylinderSystem::odometer();
    const auto w = almost_dense_periodic_probe(odo, parse_word("01"), 0.1);
    REQUIRE(w.has_value());
    CHECK(w->cylinder == parse_word("01"));
    CHECK(w->complement_mass == Rat(0));
    CHECK(w->period == 4);

    // with a generous epsilon a shallower conditional is still not enough:
    // half the mass of [0] escapes [01]
    const auto loose = almost_dense_periodic_probe(odo, parse_word("01"), 0.5);
    REQUIRE(loose.has_value());
    CHECK(loose->cylinder == parse_word("01"));
}

TEST_CASE("factor maps preserve probe success") {
    const FiniteSystem c4 = make_cycle(4);
    const FiniteSystem c2 = make_cycle(2);
    const FactorMap pi = cycle_projection(c4, c2);
    const FiniteSubset v = FiniteSubset::of(c2, {1});
    // preimage of v upstairs
    std::vector<std::size_t> pre;
    for (std::size_t i = 0; i < 4; ++i) {
        if (pi.to[i] == 1) pre.push_back(i);
    }
    const auto up = almost_dense_periodic_probe(c4, FiniteSubset::of(c4, pre), 0.25);
    REQUIRE(up.has_value());
    // pushing the witness down gives a periodic witness for v
    const AtomicMeasure down = pushforward_along(pi, c4, c2, up->measure);
    CHECK(down.mass_outside(v).to_double() < 0.25);
    const auto p = measure_period(c2, down, 4);
    REQUIRE(p.has_value());
    CHECK(up->period % *p == 0);
}

TEST_CASE("products preserve probe success with multiplied periods") {
    const FiniteSystem c2 = make_cycle(2);
    const FiniteSystem c3 = make_cycle(3);
    const auto wx = almost_dense_periodic_probe(c2, FiniteSubset::of(c2, {0}), 0.25);
    const auto wy = almost_dense_periodic_probe(c3, FiniteSubset::of(c3, {1}), 0.25);
    REQUIRE(wx.has_value());
    REQUIRE(wy.has_value());
    const FiniteSystem prod = product_system(c2, c3);
    const AtomicMeasure joint = product_measure(c2, c3, wx->measure, wy->measure);
    const FiniteSubset box =
        product_subset(c2, c3, FiniteSubset::of(c2, {0}), FiniteSubset::of(c3, {1}));
    CHECK(joint.mass_outside(box).to_double() < 0.5);
    // invariant under T^(k1*k2)
    AtomicMeasure rolled = joint;
    for (std::uint64_t s = 0; s < wx->period * wy->period; ++s) rolled = pushforward(prod, rolled);
    CHECK(rolled == joint);
}

TEST_CASE("density curve probe") {
    const FiniteSystem q4 = CylinderSystem::odometer().finite_quotient(4);
    const std::vector<std::size_t> depths{0, 1, 2, 3, 4};

    // a cylinder conditional is hit exactly from its own depth on
    const AtomicMeasure target = cylinder_conditional(q4, parse_word("01"));
    const auto curve = dense_periodic_measures_probe(q4, target, depths);
    REQUIRE(curve.size() == 5);
    CHECK(curve[0].distance > 0.0);
    CHECK(curve[2].distance == 0.0);
    CHECK(curve[3].distance == 0.0);

    // the uniform measure is its own conditioning average at every depth
    const auto flat = dense_periodic_measures_probe(q4, haar_on_quotient(q4), depths);
    for (const auto& pt : flat) CHECK(pt.distance == 0.0);

    // lattice targets: nonincreasing, exact representation at full depth
    Sampler sampler(87);
    for (int t = 0; t < 10; ++t) {
        const AtomicMeasure lattice = sampler.measure(q4, 5);
        const auto c = dense_periodic_measures_probe(q4, lattice, depths);
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].distance <= c[i - 1].distance);
        CHECK(c.back().distance == 0.0);
    }

    CHECK_THROWS_AS(dense_periodic_measures_probe(q4, target, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dense_periodic_measures_probe(q4, target, {9}), std::invalid_argument);
}
