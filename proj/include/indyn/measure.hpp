#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indyn/hyperspace.hpp"
#include "indyn/rational.hpp"
#include "indyn/system.hpp"

namespace indyn {

/// Finitely supported probability measure with exact rational masses. Atoms
/// are stored sorted by point index with strictly positive mass, so equality
/// of measures is equality of the atom lists.
class AtomicMeasure {
public:
    static AtomicMeasure from_weights(const FiniteSystem& sys,
                                      std::vector<std::pair<std::size_t, Rat>> weights);
    static AtomicMeasure from_weights(std::size_t host_points,
                                      std::vector<std::pair<std::size_t, Rat>> weights);

    std::size_t host_points() const { return host_points_; }
    const std::vector<std::pair<std::size_t, Rat>>& atoms() const { return atoms_; }
    Rat mass(std::size_t point) const;
    Rat mass_of(const FiniteSubset& set) const;
    Rat mass_outside(const FiniteSubset& set) const;
    std::vector<std::size_t> support() const;

    friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

private:
    AtomicMeasure(std::size_t host_points, std::vector<std::pair<std::size_t, Rat>> atoms)
        : host_points_(host_points), atoms_(std::move(atoms)) {}

    std::size_t host_points_ = 0;
    std::vector<std::pair<std::size_t, Rat>> atoms_;
};

AtomicMeasure dirac(const FiniteSystem& sys, std::size_t x);
AtomicMeasure uniform_on(const FiniteSystem& sys, const std::vector<std::size_t>& pts);

/// (T_M mu)(i) = sum of mu over the preimage of i; equivalently mass is
/// carried forward along the map.
AtomicMeasure pushforward(const FiniteSystem& sys, const AtomicMeasure& mu);

/// Image measure under a factor map.
AtomicMeasure pushforward_along(const FactorMap& pi, const FiniteSystem& domain,
                                const FiniteSystem& codomain, const AtomicMeasure& mu);

/// t*a + (1-t)*b with 0 <= t <= 1, exact.
AtomicMeasure mix(const Rat& t, const AtomicMeasure& a, const AtomicMeasure& b);

/// mu x nu on product_system(x, y) (same index convention).
AtomicMeasure product_measure(const FiniteSystem& x, const FiniteSystem& y,
                              const AtomicMeasure& mu, const AtomicMeasure& nu,
                              std::size_t point_cap = 4096);

/// (1/steps) * sum of dirac(T^n x) over n < steps.
AtomicMeasure empirical_measure(const FiniteSystem& sys, std::size_t x, std::uint64_t steps);

/// inf{eps : mu(A) <= nu(A^eps) + eps and nu(A) <= mu(A^eps) + eps for all A},
/// with A^eps = {x : rho(x, A) < eps}. Computed by bisection on eps to 1e-9;
/// each feasibility test checks every subset of the two supports, which
/// suffices because enlarging A outside the support only weakens the
/// constraint. Throws cap_error when the union support exceeds support_cap.
double prohorov_distance(const FiniteSystem& sys, const AtomicMeasure& mu,
                         const AtomicMeasure& nu, std::size_t support_cap = 20);

struct TestFunction {
    std::string name;
    std::vector<double> values;  // one per point
};

/// The fixed family used for reproducible series-metric values: singleton
/// indicators ordered by point index, then the distance functions rho(., p).
std::vector<TestFunction> default_family(const FiniteSystem& sys);

/// sum_n |integral f_n dmu - integral f_n dnu| / (2^n (||f_n|| + 1)), n from 1.
double series_metric(const AtomicMeasure& mu, const AtomicMeasure& nu,
                     const std::vector<TestFunction>& family);

/// Restriction to a, renormalized. Requires mu(a) > 0.
AtomicMeasure conditional(const AtomicMeasure& mu, const FiniteSubset& a);

struct PerturbationReport {
    Rat ratio;           // mu(A symdiff B) / mu(A), exact
    double epsilon;      // declared bound
    bool applicable;     // ratio < epsilon
    double distance;     // series metric between the two conditionals
    bool bound_holds;    // distance <= 2 * epsilon
};

/// Checks d(mu_A, mu_B) <= 2*eps whenever mu(A symdiff B) < mu(A)*eps.
PerturbationReport conditional_perturbation_check(const FiniteSystem& sys, const AtomicMeasure& mu,
                                                  const FiniteSubset& a, const FiniteSubset& b,
                                                  double epsilon,
                                                  const std::vector<TestFunction>& family);

/// Exact identity: pushing forward the conditional of mu on pi^-1(a) equals
/// the conditional of the pushforward on a.
bool pushforward_conditional_check(const FiniteSystem& domain, const FiniteSystem& codomain,
                                   const FactorMap& pi, const AtomicMeasure& mu,
                                   const FiniteSubset& codomain_set);

/// Finitely supported measure on the measure space itself.
struct MeasureOnMeasures {
    std::vector<std::pair<AtomicMeasure, Rat>> atoms;
};

/// Weighted average of the atoms, exact.
AtomicMeasure barycenter(const MeasureOnMeasures& nu);

/// All measures with masses in {0, 1/n, ..., n/n}: the image of the n-fold
/// product under the empirical embedding. Ordered by composition.
std::vector<AtomicMeasure> enumerate_mn(const FiniteSystem& sys, std::size_t n,
                                        std::uint64_t cap = std::uint64_t{1} << 20);

/// Least p <= bound with T_M^p mu = mu, exact; nullopt when none. Requires
/// t.d.s. mode.
std::optional<std::uint64_t> measure_period(const FiniteSystem& sys, const AtomicMeasure& mu,
                                            std::uint64_t bound);

}  // namespace indyn
