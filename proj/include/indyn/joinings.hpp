#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indyn/hyperspace.hpp"
#include "indyn/system.hpp"

namespace indyn {

/// Product of two finite systems remembering the factor sizes; the cell of
/// (l, r) is l * right_points + r, matching product_system.
struct ProductPair {
    FiniteSystem product;
    std::size_t left_points = 0;
    std::size_t right_points = 0;

    std::size_t cell(std::size_t l, std::size_t r) const { return l * right_points + r; }
    std::pair<std::size_t, std::size_t> split(std::size_t cell) const {
        return {cell / right_points, cell % right_points};
    }
};

ProductPair make_product_pair(const FiniteSystem& left, const FiniteSystem& right,
                              std::size_t point_cap = 64);

/// Forward orbit of the seed pair; on a finite system the closure is the
/// orbit itself. Sorted cell indices.
std::vector<std::size_t> orbit_closure(const ProductPair& pair, std::size_t left_seed,
                                       std::size_t right_seed);

/// Nonempty closed invariant subset of the product projecting onto both
/// factors; stored as sorted cell indices.
struct Joining {
    std::vector<std::size_t> cells;
    friend bool operator==(const Joining&, const Joining&) = default;
};

/// All joinings: every union of product-orbits whose projections cover both
/// factors. Ordered by cell count, then lexicographically. The full product
/// is always present. Throws cap_error past orbit_cap orbits (the scan is
/// exponential in the orbit count).
std::vector<Joining> enumerate_joinings(const ProductPair& pair, std::size_t orbit_cap = 20);

/// Independent re-check of the joining invariants.
bool joining_valid(const ProductPair& pair, const Joining& j);

struct DisjointnessReport {
    bool disjoint = false;
    std::size_t joining_count = 0;
    std::optional<Joining> witness;  // a smallest proper joining when not disjoint
};

DisjointnessReport is_disjoint(const FiniteSystem& left, const FiniteSystem& right,
                               std::size_t point_cap = 64, std::size_t orbit_cap = 20);

/// rho(T^n x, u) <= d_H(T_K^n a, {u}) for every x in a and every n <= horizon.
bool projection_inequality_check(const FiniteSystem& sys, const FiniteSubset& a,
                                 std::size_t target, std::uint64_t horizon);

}  // namespace indyn
