#include <doctest.h>

#include <random>

#include "indyn/cylinder.hpp"
#include "indyn/fixtures.hpp"
#include "oracles.hpp"

using namespace indyn;

TEST_CASE("odometer add frozen cases") {
    CHECK(odometer_add({1, 0, 0}, {1, 0, 0}) == Word{0, 1, 0});
    CHECK(odometer_add({1, 1, 0}, {1, 0, 0}) == Word{0, 0, 1});
    CHECK(odometer_add({1, 0, 1}, {0, 0, 0}) == Word{1, 0, 1});
    CHECK(odometer_add({1, 1, 1}, {1, 0, 0}) == Word{0, 0, 0});  // carry walks off the end
    CHECK_THROWS_AS(odometer_add({1, 0}, {1}), std::invalid_argument);
}

TEST_CASE("odometer add equals integer addition mod 2^len") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<std::size_t> len_d(1, 16);
        const std::size_t len = len_d(rng);
        std::uniform_int_distribution<std::uint64_t> v_d(0, (std::uint64_t{1} << len) - 1);
        const std::uint64_t a = v_d(rng), b = v_d(rng), c = v_d(rng);
        const Word wa = word_from_value(a, len), wb = word_from_value(b, len),
                   wc = word_from_value(c, len);
        CHECK(word_value(odometer_add(wa, wb)) == ((a + b) & ((std::uint64_t{1} << len) - 1)));
        CHECK(odometer_add(wa, wb) == odometer_add(wb, wa));
        CHECK(odometer_add(odometer_add(wa, wb), wc) == odometer_add(wa, odometer_add(wb, wc)));
    }
}

TEST_CASE("word value round trip") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::size_t> len_d(1, 20);
        const std::size_t len = len_d(rng);
        std::uniform_int_distribution<std::uint64_t> v_d(0, (std::uint64_t{1} << len) - 1);
        const std::uint64_t v = v_d(rng);
        CHECK(word_value(word_from_value(v, len)) == v);
    }
    CHECK(word_text(Word{1, 1, 0}) == "110");
    CHECK(parse_word("110") == Word{1, 1, 0});
    CHECK_THROWS_AS(parse_word("102"), std::invalid_argument);
}

TEST_CASE("full shift return times") {
    const CylinderSystem shift = CylinderSystem::full_shift(2);
    const ResidueTimeSet n01 = shift.return_times(parse_word("0"), parse_word("1"));
    CHECK_FALSE(n01.contains(0));
    for (std::uint64_t n = 1; n < 20; ++n) CHECK(n01.contains(n));
    CHECK(n01.thick());

    const ResidueTimeSet nuu = shift.return_times(parse_word("01"), parse_word("01"));
    CHECK(nuu.contains(0));
    CHECK_FALSE(nuu.contains(1));  // 01 cannot overlap itself at shift 1
    CHECK(nuu.contains(2));
}

TEST_CASE("full shift return times match the word-construction oracle") {
    const CylinderSystem shift = CylinderSystem::full_shift(2);
    const auto words = shift.words_up_to(4);
    for (const Word& u : words) {
        for (const Word& v : words) {
            const ResidueTimeSet rts = shift.return_times(u, v);
            for (std::uint64_t n = 0; n < 12; ++n) {
                CHECK(rts.contains(n) == oracle::shift_word_witness(u, v, n, 2));
            }
        }
    }
}

TEST_CASE("odometer return times are residue classes") {
    const CylinderSystem odo = CylinderSystem::odometer();
    const ResidueTimeSet odd = odo.return_times(parse_word("0"), parse_word("1"));
    CHECK(odd.modulus == 2);
    CHECK(odd.residues == std::vector<std::uint64_t>{1});
    CHECK_FALSE(odd.thick());
    CHECK(odd.syndetic());

    // differing lengths use the coarser modulus: [01] sits inside [0]
    const ResidueTimeSet evens = odo.return_times(parse_word("0"), parse_word("01"));
    CHECK(evens.modulus == 2);
    CHECK(evens.contains(0));

    const ResidueTimeSet self = odo.return_times(parse_word("011"), parse_word("011"));
    CHECK(self.modulus == 8);
    CHECK(self.residues == std::vector<std::uint64_t>{0});
}

TEST_CASE("odometer finite quotient") {
    const FiniteSystem q3 = CylinderSystem::odometer().finite_quotient(3);
    CHECK(q3.points() == 8);
    CHECK(q3.cycles().size() == 1);
    CHECK(q3.label(3) == "110");  // value 3 LSB-first
    CHECK(q3.distance(0, 1) == 1.0);
    CHECK(q3.distance(0, 2) == 0.5);
    CHECK(q3.distance(0, 4) == 0.25);
    CHECK(q3.distance(5, 5) == 0.0);
    CHECK_THROWS_AS(CylinderSystem::full_shift(2).finite_quotient(3), std::invalid_argument);
}

TEST_CASE("quotient map agrees with word addition") {
    const CylinderSystem odo = CylinderSystem::odometer();
    const FiniteSystem q = odo.finite_quotient(5);
    const Word one = word_from_value(1, 5);
    for (std::size_t i = 0; i < q.points(); ++i) {
        CHECK(q.step(i) == word_value(odometer_add(word_from_value(i, 5), one)));
    }
}

TEST_CASE("cylinder subsets of the quotient follow the residue classes") {
    const FiniteSystem q3 = CylinderSystem::odometer().finite_quotient(3);
    CHECK(cylinder_subset(q3, parse_word("11")).elems == std::vector<std::size_t>{3, 7});
    CHECK(cylinder_subset(q3, parse_word("0")).elems == std::vector<std::size_t>{0, 2, 4, 6});
    CHECK(cylinder_subset(q3, parse_word("010")).elems == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(cylinder_subset(q3, parse_word("0101")), std::invalid_argument);
}

TEST_CASE("words_up_to counts") {
    CHECK(CylinderSystem::full_shift(2).words_up_to(3).size() == 2 + 4 + 8);
    CHECK(CylinderSystem::full_shift(3).words_up_to(2).size() == 3 + 9);
}
