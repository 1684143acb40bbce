#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "indyn/system.hpp"
#include "indyn/timeset.hpp"

namespace indyn {

/// Finite word of symbols, first coordinate first. For the odometer this is
/// the low-order digit first, so word values read as base-2 integers LSB
/// first.
using Word = std::vector<std::uint8_t>;

/// Coordinatewise dyadic addition with carry on equal-length words; the final
/// carry is discarded, so this is addition mod 2^len under the LSB-first
/// encoding.
Word odometer_add(const Word& lhs, const Word& rhs);

std::uint64_t word_value(const Word& w);
Word word_from_value(std::uint64_t value, std::size_t length);
std::string word_text(const Word& w);
Word parse_word(std::string_view text, std::size_t alphabet = 2);

/// Exact symbolic system: the full shift on a finite alphabet or the dyadic
/// odometer (+1 with carry). Cylinders are finite words; return-time sets
/// between cylinders are computed exactly as eventually periodic sets.
class CylinderSystem {
public:
    enum class Kind { full_shift, odometer };

    static CylinderSystem full_shift(std::size_t alphabet = 2);
    static CylinderSystem odometer();

    Kind kind() const { return kind_; }
    std::size_t alphabet() const { return alphabet_; }
    void check_word(const Word& w) const;

    /// N([u], [v]) = {n : T^-n[v] meets [u]}, exactly.
    /// Full shift: every n >= |u| works, plus the overlap-compatible n < |u|.
    /// Odometer: the single residue class n = int(v) - int(u) mod
    /// 2^min(|u|,|v|).
    ResidueTimeSet return_times(const Word& u, const Word& v) const;

    /// Odometer only: the cyclic permutation of the 2^depth depth-cylinders
    /// as a finite system, with the dyadic ultrametric and word labels.
    FiniteSystem finite_quotient(std::size_t depth) const;

    /// All cylinders of length 1..max_len, ordered by length then value.
    std::vector<Word> words_up_to(std::size_t max_len) const;

private:
    CylinderSystem(Kind kind, std::size_t alphabet) : kind_(kind), alphabet_(alphabet) {}

    Kind kind_;
    std::size_t alphabet_;
};

}  // namespace indyn
