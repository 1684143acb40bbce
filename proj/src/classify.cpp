#include "indyn/classify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "indyn/fixtures.hpp"

namespace indyn {

namespace {

void require_tds(const FiniteSystem& sys, const char* what) {
    if (!sys.tds()) {
        throw std::invalid_argument(std::string(what) + " requires t.d.s. mode");
    }
}

}  // namespace

TransitivityReport is_transitive(const FiniteSystem& sys) {
    require_tds(sys, "transitivity");
    TransitivityReport r;
    r.transitive = sys.cycles().size() == 1;
    if (r.transitive) {
        r.transitive_point = sys.cycles().front().front();
    } else {
        r.proper_invariant_set = sys.cycles().front();
        std::sort(r.proper_invariant_set.begin(), r.proper_invariant_set.end());
    }
    return r;
}

TotalTransitivityReport is_totally_transitive(const FiniteSystem& sys, std::size_t up_to) {
    require_tds(sys, "total transitivity");
    if (up_to == 0) throw std::invalid_argument("power bound must be positive");
    TotalTransitivityReport r;
    r.checked_up_to = up_to;
    for (std::size_t k = 1; k <= up_to; ++k) {
        std::uint64_t components = 0;
        for (const auto& cycle : sys.cycles()) {
            components += std::gcd(cycle.size(), k);
        }
        if (components != 1) {
            r.first_failing_power = k;
            return r;
        }
    }
    r.totally_transitive = true;
    return r;
}

std::vector<std::size_t> periodic_points(const FiniteSystem& sys) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sys.points(); ++i) {
        if (sys.point_period(i) > 0) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> minimal_points(const FiniteSystem& sys) { return periodic_points(sys); }

ClassificationReport classify(const FiniteSystem& sys) {
    require_tds(sys, "classification");
    ClassificationReport r;
    const TransitivityReport t = is_transitive(sys);
    r.transitive = t.transitive;
    r.transitive_point = t.transitive_point;
    r.proper_invariant_set = t.proper_invariant_set;

    const TotalTransitivityReport tt = is_totally_transitive(sys, sys.points());
    r.totally_transitive = tt.totally_transitive;
    r.totally_checked_up_to = tt.checked_up_to;
    r.first_failing_power = tt.first_failing_power;

    r.pointwise_periodic = sys.pointwise_periodic();
    r.periodic = r.pointwise_periodic;
    r.period = sys.global_period();

    // On a finite t.d.s. every point is periodic, so a transitive system has
    // dense periodic points, dense minimal points and a full-support invariant
    // measure all at once.
    r.p_system = r.transitive;
    r.m_system = r.transitive;
    r.e_system = r.transitive;
    if (r.transitive) {
        r.full_support_invariant = uniform_on(sys, sys.cycles().front());
    }
    return r;
}

std::optional<PeriodicWitness> almost_dense_periodic_probe(const FiniteSystem& sys,
                                                           const FiniteSubset& open_set,
                                                           double epsilon) {
    require_tds(sys, "periodic-measure probe");
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    const auto consider = [&](AtomicMeasure mu, std::string name) -> std::optional<PeriodicWitness> {
        const Rat outside = mu.mass_outside(open_set);
        if (outside.to_double() < epsilon) {
            const auto period = measure_period(sys, mu, sys.global_period());
            PeriodicWitness w{std::move(mu), period.value(), outside, std::move(name)};
            return w;
        }
        return std::nullopt;
    };
    for (const auto& cycle : sys.cycles()) {
        auto w = consider(uniform_on(sys, cycle), "uniform[" + std::to_string(cycle.front()) + "]");
        if (w) return w;
    }
    for (std::size_t i = 0; i < sys.points(); ++i) {
        auto w = consider(dirac(sys, i), "dirac[" + std::to_string(i) + "]");
        if (w) return w;
    }
    return std::nullopt;
}

std::optional<CylinderPeriodicWitness> almost_dense_periodic_probe(const CylinderSystem& odo,
                                                                   const Word& open_cylinder,
                                                                   double epsilon,
                                                                   std::size_t depth_cap) {
    if (odo.kind() != CylinderSystem::Kind::odometer) {
        throw std::invalid_argument("cylinder probe is only defined for the odometer");
    }
    odo.check_word(open_cylinder);
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    if (open_cylinder.size() > depth_cap) {
        throw std::invalid_argument("open cylinder deeper than the search cap");
    }
    for (std::size_t d = 1; d <= depth_cap; ++d) {
        const std::size_t resolution = std::max(d, open_cylinder.size());
        const FiniteSystem quotient = odo.finite_quotient(resolution);
        const FiniteSubset open_set = cylinder_subset(quotient, open_cylinder);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
            const Word candidate = word_from_value(v, d);
            AtomicMeasure mu = cylinder_conditional(quotient, candidate);
            const Rat outside = mu.mass_outside(open_set);
            if (outside.to_double() < epsilon) {
                const auto period =
                    measure_period(quotient, mu, std::uint64_t{1} << resolution);
                return CylinderPeriodicWitness{quotient, std::move(mu), period.value(), outside,
                                               candidate};
            }
        }
    }
    return std::nullopt;
}

std::vector<DensityCurvePoint> dense_periodic_measures_probe(const FiniteSystem& quotient,
                                                             const AtomicMeasure& target,
                                                             const std::vector<std::size_t>& depths) {
    const std::size_t n = quotient.points();
    if (!std::has_single_bit(n)) {
        throw std::invalid_argument("quotient host must have a power-of-two point count");
    }
    const std::size_t resolution = static_cast<std::size_t>(std::countr_zero(n));
    if (target.host_points() != n) throw std::invalid_argument("target lives on the wrong host");
    for (std::size_t i = 1; i < depths.size(); ++i) {
        if (depths[i] <= depths[i - 1]) {
            throw std::invalid_argument("depths must be strictly increasing");
        }
    }
    if (!depths.empty() && depths.back() > resolution) {
        throw std::invalid_argument("depth exceeds the quotient resolution");
    }

    const std::vector<TestFunction> family = default_family(quotient);
    std::vector<DensityCurvePoint> curve;
    double best = std::numeric_limits<double>::infinity();
    for (const std::size_t d : depths) {
        // Conditioning average at depth d: mass of each depth-d class spread
        // uniformly over the class.
        const std::size_t classes = std::size_t{1} << d;
        std::vector<Rat> class_mass(classes);
        for (const auto& [i, m] : target.atoms()) class_mass[i & (classes - 1)] += m;
        const Rat spread(1, static_cast<std::int64_t>(n / classes));
        std::vector<std::pair<std::size_t, Rat>> w;
        for (std::size_t c = 0; c < classes; ++c) {
            if (class_mass[c].is_zero()) continue;
            for (std::size_t z = c; z < n; z += classes) {
                w.emplace_back(z, class_mass[c] * spread);
            }
        }
        const AtomicMeasure candidate = AtomicMeasure::from_weights(n, std::move(w));
        best = std::min(best, series_metric(target, candidate, family));
        curve.push_back(DensityCurvePoint{d, best});
    }
    return curve;
}

}  // namespace indyn
