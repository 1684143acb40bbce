#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indyn/cylinder.hpp"
#include "indyn/hyperspace.hpp"
#include "indyn/measure.hpp"
#include "indyn/system.hpp"

namespace indyn {

struct TransitivityReport {
    bool transitive = false;
    std::optional<std::size_t> transitive_point;
    std::vector<std::size_t> proper_invariant_set;  // separating witness when not transitive
};

/// A finite t.d.s. is transitive iff the permutation is a single cycle.
TransitivityReport is_transitive(const FiniteSystem& sys);

struct TotalTransitivityReport {
    bool totally_transitive = false;
    std::size_t checked_up_to = 0;
    std::optional<std::size_t> first_failing_power;
};

/// Checks transitivity of T^k for k = 1..up_to. T^k restricted to a cycle of
/// length L splits into gcd(L, k) cycles, so the verdict is pure arithmetic.
TotalTransitivityReport is_totally_transitive(const FiniteSystem& sys, std::size_t up_to);

/// Points lying on a cycle of the functional graph. For finite maps the orbit
/// closure of x is minimal exactly when x is on a cycle, so the two sets
/// coincide.
std::vector<std::size_t> periodic_points(const FiniteSystem& sys);
std::vector<std::size_t> minimal_points(const FiniteSystem& sys);

struct ClassificationReport {
    bool transitive = false;
    std::optional<std::size_t> transitive_point;
    std::vector<std::size_t> proper_invariant_set;
    bool totally_transitive = false;
    std::size_t totally_checked_up_to = 0;
    std::optional<std::size_t> first_failing_power;
    bool pointwise_periodic = false;
    bool periodic = false;
    std::uint64_t period = 0;
    bool p_system = false;
    bool m_system = false;
    bool e_system = false;
    std::optional<AtomicMeasure> full_support_invariant;  // E-system witness
};

ClassificationReport classify(const FiniteSystem& sys);

struct PeriodicWitness {
    AtomicMeasure measure;
    std::uint64_t period = 0;
    Rat complement_mass;
    std::string candidate;
};

/// Searches the periodic measures available at desk scale for one giving the
/// complement of `open_set` mass below epsilon. Candidates, in order: the
/// uniform measure on each cycle (by smallest cycle element), then the point
/// mass at each point. Absence of a witness means "none at this resolution",
/// never a negative theorem.
std::optional<PeriodicWitness> almost_dense_periodic_probe(const FiniteSystem& sys,
                                                           const FiniteSubset& open_set,
                                                           double epsilon);

struct CylinderPeriodicWitness {
    FiniteSystem quotient;  // host of the witness measure
    AtomicMeasure measure;
    std::uint64_t period = 0;
    Rat complement_mass;
    Word cylinder;
};

/// Odometer version. Candidates are the cylinder conditionals, by depth then
/// by word value, up to depth_cap; each is evaluated on the quotient of depth
/// max(candidate length, |open_cylinder|).
std::optional<CylinderPeriodicWitness> almost_dense_periodic_probe(const CylinderSystem& odo,
                                                                   const Word& open_cylinder,
                                                                   double epsilon,
                                                                   std::size_t depth_cap = 10);

struct DensityCurvePoint {
    std::size_t depth = 0;
    double distance = 0.0;
};

/// Best series-metric distance from `target` to the enumerated periodic
/// combinations at each depth. The candidate set at depth d is the
/// conditioning average sum_C target([C]) mu_C over depth-e cylinder
/// partitions for every e <= d; since a depth-e conditional is an exact
/// average of its depth-d refinements, candidates nest and the curve is
/// nonincreasing by construction. `depths` must be strictly increasing and at
/// most the quotient depth.
std::vector<DensityCurvePoint> dense_periodic_measures_probe(const FiniteSystem& quotient,
                                                             const AtomicMeasure& target,
                                                             const std::vector<std::size_t>& depths);

}  // namespace indyn
