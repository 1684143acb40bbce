#include <doctest.h>

#include <numeric>

#include "indyn/classify.hpp"
#include "indyn/errors.hpp"
#include "indyn/fixtures.hpp"
#include "indyn/joinings.hpp"

using namespace indyn;

TEST_CASE("orbit closures in products") {
    const ProductPair p23 = make_product_pair(make_cycle(2), make_cycle(3));
    CHECK(orbit_closure(p23, 0, 0).size() == 6);

    const ProductPair p22 = make_product_pair(make_cycle(2), make_cycle(2));
    const auto diag = orbit_closure(p22, 0, 0);
    CHECK(diag == std::vector<std::size_t>{0, 3});

    const ProductPair fixed = make_product_pair(make_cycle(1), make_cycle(1));
    CHECK(orbit_closure(fixed, 0, 0).size() == 1);
}

TEST_CASE("joining enumeration on coprime cycles") {
    const ProductPair pair = make_product_pair(make_cycle(2), make_cycle(3));
    const auto joinings = enumerate_joinings(pair);
    REQUIRE(joinings.size() == 1);
    CHECK(joinings[0].cells.size() == 6);  // only the full product
    CHECK(joining_valid(pair, joinings[0]));
}

TEST_CASE("self-joinings of the 2-cycle") {
    const ProductPair pair = make_product_pair(make_cycle(2), make_cycle(2));
    const auto joinings = enumerate_joinings(pair);
    REQUIRE(joinings.size() == 3);
    CHECK(joinings[0].cells == std::vector<std::size_t>{0, 3});  // diagonal
    CHECK(joinings[1].cells == std::vector<std::size_t>{1, 2});  // antidiagonal
    CHECK(joinings[2].cells.size() == 4);                        // full product
    for (const auto& j : joinings) CHECK(joining_valid(pair, j));
}

TEST_CASE("every enumerated joining passes the independent validity check") {
    for (std::size_t p = 2; p <= 5; ++p) {
        for (std::size_t q = 2; q <= 5; ++q) {
            const ProductPair pair = make_product_pair(make_cycle(p), make_cycle(q));
            const auto joinings = enumerate_joinings(pair);
            CHECK(!joinings.empty());
            CHECK(joinings.back().cells.size() == p * q);  // full product present
            for (const auto& j : joinings) CHECK(joining_valid(pair, j));
        }
    }
}

TEST_CASE("disjointness of cycles follows the gcd rule") {
    for (std::size_t p = 2; p <= 6; ++p) {
        for (std::size_t q = 2; q <= 6; ++q) {
            const DisjointnessReport r = is_disjoint(make_cycle(p), make_cycle(q));
            CHECK(r.disjoint == (std::gcd(p, q) == 1));
            const DisjointnessReport sym = is_disjoint(make_cycle(q), make_cycle(p));
            CHECK(sym.disjoint == r.disjoint);
        }
    }
}

TEST_CASE("no nontrivial system is disjoint from itself") {
    const DisjointnessReport self = is_disjoint(make_cycle(3), make_cycle(3));
    CHECK_FALSE(self.disjoint);
    REQUIRE(self.witness.has_value());
    // the witness is the diagonal
    CHECK(self.witness->cells == std::vector<std::size_t>{0, 4, 8});

    const DisjointnessReport trivial = is_disjoint(make_cycle(1), make_cycle(1));
    CHECK(trivial.disjoint);
}

TEST_CASE("the trivial system is disjoint from every minimal system") {
    for (std::size_t q = 1; q <= 8; ++q) {
        CHECK(is_disjoint(make_cycle(1), make_cycle(q)).disjoint);
    }
}

TEST_CASE("orbit closures fill the product when the factors are disjoint") {
    // the mechanism behind the hyperspace-to-base transfer: every seed pair
    // has a dense orbit in the product
    const FiniteSystem x = make_cycle(3);
    const FiniteSystem y = make_cycle(4);
    REQUIRE(is_disjoint(x, y).disjoint);
    const ProductPair pair = make_product_pair(x, y);
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(orbit_closure(pair, a, b).size() == 12);
        }
    }
}

TEST_CASE("joining caps") {
    CHECK_THROWS_AS(make_product_pair(make_cycle(9), make_cycle(9)), cap_error);
    // identity maps blow up the orbit count
    const FiniteSystem id5 =
        FiniteSystem::create({0, 1, 2, 3, 4}, Metric::from_coords({0, 1, 2, 3, 4}), true);
    CHECK_THROWS_AS(enumerate_joinings(make_product_pair(id5, id5), 20), cap_error);
}

TEST_CASE("projection inequality") {
    const FiniteSystem tower = make_harmonic(3);
    Sampler sampler(13);
    for (int t = 0; t < 40; ++t) {
        const FiniteSubset a = sampler.subset(tower, 5);
        CHECK(projection_inequality_check(tower, a, sampler.point(tower), 64));
    }
    // singleton sets give equality at every step, still within the bound
    const FiniteSubset x = FiniteSubset::of(tower, {4});
    CHECK(projection_inequality_check(tower, x, 2, 32));
    FiniteSubset image = x;
    for (int n = 0; n < 8; ++n) {
        CHECK(hausdorff_distance(tower, image, FiniteSubset::of(tower, {2})) ==
              tower.distance(image.elems[0], 2));
        image = induced_image(tower, image);
    }
}
