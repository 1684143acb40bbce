#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indyn/cylinder.hpp"
#include "indyn/hyperspace.hpp"
#include "indyn/system.hpp"
#include "indyn/timeset.hpp"

namespace indyn {

/// N(x, U) = {n < W : T^n x in U}.
TimeSet return_times_point(const FiniteSystem& sys, std::size_t x, const FiniteSubset& u,
                           std::uint64_t window);

/// N(U, V) = {n < W : T^-n V meets U}, windowed.
TimeSet return_times_set(const FiniteSystem& sys, const FiniteSubset& u, const FiniteSubset& v,
                         std::uint64_t window);

struct ProximalityReport {
    double min_dist = 0.0;
    std::uint64_t argmin = 0;
    bool proximal_in_window = false;  // min_dist == 0; exact on finite hosts
};

/// min over n < W of rho(T^n x, T^n y).
ProximalityReport pair_proximality(const FiniteSystem& sys, std::size_t x, std::size_t y,
                                   std::uint64_t window);

struct WeakMixingPairWitness {
    Word u, v;
    std::uint64_t n = 0;  // element of N(U,U) cap N(U,V)
};

struct WeakMixingReport {
    bool pass = false;
    std::vector<WeakMixingPairWitness> witnesses;       // one per ordered pair when passing
    std::optional<std::pair<Word, Word>> counterexample;  // first failing pair otherwise
};

/// Evaluates the intersection criterion N(U,U) cap N(U,V) != {} exactly over
/// all ordered pairs of cylinders of length <= max_len. The full shift passes
/// at every length; a nontrivial odometer already fails at length 1.
WeakMixingReport weak_mixing_criterion(const CylinderSystem& cyl, std::size_t max_len);

}  // namespace indyn
