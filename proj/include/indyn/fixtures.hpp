#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "indyn/cylinder.hpp"
#include "indyn/hyperspace.hpp"
#include "indyn/measure.hpp"
#include "indyn/system.hpp"

namespace indyn {

/// On make_harmonic(depth): the set {0, 1, 1/2, 1/4, ..., 1/2^depth}, one
/// point from each block plus both fixed points. Its hyperspace period is
/// 2^depth while every element has period at most 2^depth.
FiniteSubset power_point_subset(const FiniteSystem& harmonic, std::size_t depth);

/// On make_harmonic(depth): the measure with mass proportional to 2^-n at the
/// point 1/2^(n-1) for n = 1..depth+1, renormalized to total mass 1. Its
/// measure period is 2^depth.
AtomicMeasure geometric_tail_measure(const FiniteSystem& harmonic, std::size_t depth);

/// On an odometer quotient: the set of depth-quotient points extending the
/// cylinder word w, i.e. the indices congruent to value(w) mod 2^|w|.
FiniteSubset cylinder_subset(const FiniteSystem& quotient, const Word& w);

/// Conditional of the uniform measure on the cylinder: uniform on
/// cylinder_subset(quotient, w).
AtomicMeasure cylinder_conditional(const FiniteSystem& quotient, const Word& w);

AtomicMeasure haar_on_quotient(const FiniteSystem& quotient);

/// a x b inside product_system(x, y).
FiniteSubset product_subset(const FiniteSystem& x, const FiniteSystem& y, const FiniteSubset& a,
                            const FiniteSubset& b);

/// Deterministic generators for randomized sweeps; all draws flow from the
/// seed, so runs are reproducible.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    std::size_t point(const FiniteSystem& sys);
    FiniteSubset subset(const FiniteSystem& sys, std::size_t max_card);
    /// Random rational measure supported on at most max_support points, with
    /// integer weights up to max_weight before normalization.
    AtomicMeasure measure(const FiniteSystem& sys, std::size_t max_support,
                          std::uint64_t max_weight = 16);
    /// Random permutation system on points scattered in the unit square with
    /// the Euclidean matrix metric.
    FiniteSystem metric_permutation_system(std::size_t npoints);

private:
    std::mt19937_64 rng_;
};

}  // namespace indyn
