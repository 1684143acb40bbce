#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indyn/system.hpp"

namespace indyn {

/// A point of the hyperspace at desk scale: nonempty set of point indices of
/// a host system, kept sorted so equality is set equality.
struct FiniteSubset {
    std::size_t host_points = 0;
    std::vector<std::size_t> elems;

    static FiniteSubset of(const FiniteSystem& sys, std::vector<std::size_t> elems);
    bool contains(std::size_t i) const;
    std::size_t size() const { return elems.size(); }
    friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;
};

/// Basis element <U_1, ..., U_n>. In the finite setting every subset is open,
/// so membership is purely combinatorial.
struct VietorisBasisElement {
    std::vector<std::vector<std::size_t>> opens;
};

/// max(max_{x in a} min_{y in b} rho(x,y), max_{y in b} min_{x in a} rho(x,y)).
double hausdorff_distance(const FiniteSystem& sys, const FiniteSubset& a, const FiniteSubset& b);

/// Image set {T(x) : x in a}, canonicalized.
FiniteSubset induced_image(const FiniteSystem& sys, const FiniteSubset& a);

/// a is covered by the union of the opens and meets every one of them.
bool vietoris_contains(const FiniteSystem& sys, const FiniteSubset& a,
                       const VietorisBasisElement& v);

/// All nonempty subsets of cardinality <= max_card, by cardinality then
/// lexicographic. Throws cap_error when the count would exceed the cap.
std::vector<FiniteSubset> enumerate_kn(const FiniteSystem& sys, std::size_t max_card,
                                       std::uint64_t cap = std::uint64_t{1} << 20);

/// Least p <= bound with T_K^p(a) = a, or nullopt.
std::optional<std::uint64_t> period_of_set(const FiniteSystem& sys, const FiniteSubset& a,
                                           std::uint64_t bound);

FiniteSubset full_set(const FiniteSystem& sys);

}  // namespace indyn
