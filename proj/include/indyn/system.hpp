#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace indyn {

/// Distance backend for a finite point set. Matrix data is validated against
/// the metric axioms on construction; the other backends satisfy them by
/// construction (1-d coordinates, the dyadic ultrametric on binary words, and
/// the max metric on a product of validated factors).
class Metric {
public:
    static Metric from_matrix(std::vector<std::vector<double>> rows);
    static Metric from_coords(std::vector<double> coords);
    static Metric dyadic(std::size_t depth);
    static Metric product_max(Metric lhs, Metric rhs);

    std::size_t points() const;
    double operator()(std::size_t i, std::size_t j) const;
    std::string kind() const;

private:
    struct Matrix {
        std::vector<double> d;
        std::size_t n = 0;
    };
    struct Coords {
        std::vector<double> x;
    };
    struct Dyadic {
        std::size_t depth = 0;
        std::size_t n = 1;
    };
    struct Product {
        std::shared_ptr<const Metric> lhs;
        std::shared_ptr<const Metric> rhs;
    };
    using Impl = std::variant<Matrix, Coords, Dyadic, Product>;

    explicit Metric(Impl impl) : impl_(std::move(impl)) {}

    Impl impl_;
};

/// Finite metric space together with a self-map. With tds = true the map must
/// be surjective (hence a permutation), matching the standing assumption for
/// a topological dynamical system; non-surjective maps are allowed otherwise
/// and flagged in reports. Immutable after construction.
class FiniteSystem {
public:
    static FiniteSystem create(std::vector<std::size_t> forward, Metric metric,
                               bool tds = true, std::vector<std::string> labels = {});

    std::size_t points() const { return forward_.size(); }
    std::size_t step(std::size_t i) const;
    std::size_t step_n(std::size_t i, std::uint64_t n) const;
    double distance(std::size_t i, std::size_t j) const;
    const Metric& metric() const { return metric_; }
    bool tds() const { return tds_; }
    bool surjective() const { return surjective_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const;

    const std::vector<std::vector<std::size_t>>& preimages() const { return preimages_; }
    /// Disjoint cycles of the periodic part, each listed from its smallest
    /// element, ordered by that element.
    const std::vector<std::vector<std::size_t>>& cycles() const { return cycles_; }
    /// Least period of point i, or 0 when i is pre-periodic (never for a
    /// permutation).
    std::uint64_t point_period(std::size_t i) const;
    bool pointwise_periodic() const { return pointwise_periodic_; }
    /// lcm of all cycle lengths; the least m with T^m = id when the system is
    /// pointwise periodic. Throws std::overflow_error past 64 bits.
    std::uint64_t global_period() const;

private:
    FiniteSystem(std::vector<std::size_t> forward, Metric metric, bool tds,
                 std::vector<std::string> labels);
    void analyze_orbits();

    std::vector<std::size_t> forward_;
    Metric metric_;
    bool tds_ = true;
    bool surjective_ = false;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> preimages_;
    std::vector<std::vector<std::size_t>> cycles_;
    std::vector<std::uint64_t> period_;
    bool pointwise_periodic_ = false;
    std::uint64_t global_period_ = 0;
};

/// Reads the JSON system description format:
///   {"points": N, "labels": [...], "metric": {"kind": "matrix"|"coords1d",
///    "data": ...}, "map": [...], "tds": true|false}
/// Errors name the offending field or entry.
FiniteSystem load_system(const std::filesystem::path& path);

/// Single cycle 0 -> 1 -> ... -> p-1 -> 0 with distance |i-j|/p.
FiniteSystem make_cycle(std::size_t length);

/// The space {0} and {1/k : 1 <= k <= 2^(depth+1)-1} with distance |x-y|.
/// 0 and 1 are fixed; for each 1 <= n <= depth the block {1/k : 2^n <= k <
/// 2^(n+1)} is cycled forward (1/k -> 1/(k+1), last point back to 1/2^n), so
/// block n is a cycle of length 2^n. Point indices: 0 holds the value 0 and
/// index k >= 1 holds 1/k.
FiniteSystem make_harmonic(std::size_t depth);

/// Coordinatewise product with the max metric. Index of (l, r) is
/// l * rhs.points() + r.
FiniteSystem product_system(const FiniteSystem& lhs, const FiniteSystem& rhs,
                            std::size_t point_cap = 4096);

std::vector<std::size_t> orbit(const FiniteSystem& sys, std::size_t x, std::uint64_t steps);

/// Surjective equivariant map onto a factor, validated on construction.
struct FactorMap {
    std::vector<std::size_t> to;  // domain index -> codomain index
};

FactorMap make_factor_map(const FiniteSystem& domain, const FiniteSystem& codomain,
                          std::vector<std::size_t> to);

/// i -> i mod |small|, a factor map cycle(a*k) -> cycle(k).
FactorMap cycle_projection(const FiniteSystem& big, const FiniteSystem& small);

}  // namespace indyn
