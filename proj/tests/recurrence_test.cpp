#include <doctest.h>

#include <random>

#include "indyn/fixtures.hpp"
#include "indyn/recurrence.hpp"

using namespace indyn;

TEST_CASE("point return times on the odometer quotient") {
    const FiniteSystem q3 = CylinderSystem::odometer().finite_quotient(3);
    const FiniteSubset u00 = cylinder_subset(q3, parse_word("00"));
    const TimeSet n = return_times_point(q3, 0, u00, 16);
    CHECK(n.members == std::vector<std::uint64_t>{0, 4, 8, 12});
}

TEST_CASE("point return times degenerate cases") {
    const FiniteSystem tower = make_harmonic(2);
    // fixed point inside u: every time is a return time
    const TimeSet all = return_times_point(tower, 0, FiniteSubset::of(tower, {0, 1}), 20);
    CHECK(all.members.size() == 20);
    // orbit disjoint from u: empty
    const TimeSet none = return_times_point(tower, 2, FiniteSubset::of(tower, {0}), 20);
    CHECK(none.empty());
}

TEST_CASE("windowed N(U,V) agrees with the exact residue sets on the odometer") {
    const CylinderSystem odo = CylinderSystem::odometer();
    const std::size_t depth = 4;
    const FiniteSystem q = odo.finite_quotient(depth);
    for (const Word& u : odo.words_up_to(3)) {
        for (const Word& v : odo.words_up_to(3)) {
            const ResidueTimeSet exact = odo.return_times(u, v);
            const TimeSet windowed =
                return_times_set(q, cylinder_subset(q, u), cylinder_subset(q, v), 64);
            CHECK(windowed.members == exact.window(64).members);
        }
    }
}

TEST_CASE("N(U,U) contains zero and N is monotone in both arguments") {
    Sampler sampler(77);
    const FiniteSystem sys = make_harmonic(3);
    for (int t = 0; t < 40; ++t) {
        const FiniteSubset u = sampler.subset(sys, 4);
        CHECK(return_times_set(sys, u, u, 32).contains(0));

        FiniteSubset v = sampler.subset(sys, 4);
        std::vector<std::size_t> bigger_u = u.elems;
        bigger_u.push_back(sampler.point(sys));
        std::vector<std::size_t> bigger_v = v.elems;
        bigger_v.push_back(sampler.point(sys));
        const TimeSet small = return_times_set(sys, u, v, 32);
        const TimeSet big = return_times_set(sys, FiniteSubset::of(sys, bigger_u),
                                             FiniteSubset::of(sys, bigger_v), 32);
        for (std::uint64_t n : small.members) CHECK(big.contains(n));
    }
}

TEST_CASE("proximality probes") {
    const FiniteSystem c5 = make_cycle(5);
    CHECK(pair_proximality(c5, 2, 2, 16).proximal_in_window);
    const ProximalityReport distinct = pair_proximality(c5, 0, 2, 64);
    CHECK_FALSE(distinct.proximal_in_window);
    CHECK(distinct.min_dist > 0.0);

    const FiniteSystem prod = product_system(make_cycle(3), make_cycle(4));
    // points differing in one coordinate stay apart forever
    const ProximalityReport p = pair_proximality(prod, 0 * 4 + 1, 0 * 4 + 2, 64);
    CHECK_FALSE(p.proximal_in_window);
}

TEST_CASE("odometer return sets are syndetic with gap exactly 2^k") {
    const CylinderSystem odo = CylinderSystem::odometer();
    for (std::size_t k = 1; k <= 6; ++k) {
        const Word zeros(k, 0);
        const ResidueTimeSet n = odo.return_times(zeros, zeros);
        CHECK(n.exact_max_gap() == std::uint64_t{1} << k);
        CHECK(n.tail_density() == doctest::Approx(std::ldexp(1.0, -static_cast<int>(k))));

        const TimeSet windowed = n.window(std::uint64_t{1} << (k + 3));
        CHECK(syndetic_gap(windowed).max_gap == std::uint64_t{1} << k);
        CHECK(banach_density_estimate(windowed, std::uint64_t{1} << k) ==
              doctest::Approx(std::ldexp(1.0, -static_cast<int>(k))));
    }
}

TEST_CASE("full shift return sets are thick, odometer ones are not") {
    const CylinderSystem shift = CylinderSystem::full_shift(2);
    const CylinderSystem odo = CylinderSystem::odometer();
    for (const Word& u : shift.words_up_to(3)) {
        for (const Word& v : shift.words_up_to(3)) {
            CHECK(shift.return_times(u, v).thick());
            CHECK_FALSE(odo.return_times(u, v).thick());
        }
    }
}

TEST_CASE("weak mixing criterion separates the catalog cylinder systems") {
    const WeakMixingReport shift2 = weak_mixing_criterion(CylinderSystem::full_shift(2), 2);
    CHECK(shift2.pass);
    // recorded witness for U=[0], V=[1]: 1 lies in N(U,U) and N(U,V)
    bool found = false;
    for (const auto& w : shift2.witnesses) {
        if (word_text(w.u) == "0" && word_text(w.v) == "1") {
            CHECK(w.n == 1);
            found = true;
        }
    }
    CHECK(found);

    CHECK(weak_mixing_criterion(CylinderSystem::full_shift(2), 4).pass);

    const WeakMixingReport odo = weak_mixing_criterion(CylinderSystem::odometer(), 1);
    CHECK_FALSE(odo.pass);
    REQUIRE(odo.counterexample.has_value());
    CHECK(word_text(odo.counterexample->first) == "0");
    CHECK(word_text(odo.counterexample->second) == "1");
}

TEST_CASE("residue-class return sets behave as a filter in the window probes") {
    const CylinderSystem odo = CylinderSystem::odometer();
    const std::uint64_t window = 1 << 10;
    const std::vector<std::vector<std::uint64_t>> samples = {
        {1, 2, 4, 8, 16, 32}, {3, 5, 9, 17, 33, 65}, {7, 11, 23, 90, 180}};

    const Word z2(2, 0), z3(3, 0);
    const TimeSet a = odo.return_times(z2, z2).window(window);  // multiples of 4
    const TimeSet b = odo.return_times(z3, z3).window(window);  // multiples of 8
    for (const auto& r : ip_star_window_check(a, samples)) CHECK(r.intersects);
    for (const auto& r : ip_star_window_check(b, samples)) CHECK(r.intersects);

    // the exact intersection is again a return set (multiples of 8) and keeps
    // meeting every sampled finite-sums set
    const ResidueTimeSet both = odo.return_times(z2, z2).intersect(odo.return_times(z3, z3));
    CHECK(both.modulus == 8);
    for (const auto& r : ip_star_window_check(both.window(window), samples)) CHECK(r.intersects);
}
