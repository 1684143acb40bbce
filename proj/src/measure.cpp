#include "indyn/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "indyn/errors.hpp"

namespace indyn {

namespace {

void check_host(const FiniteSystem& sys, const AtomicMeasure& mu) {
    if (mu.host_points() != sys.points()) {
        throw std::invalid_argument("measure belongs to a host with " +
                                    std::to_string(mu.host_points()) + " points, system has " +
                                    std::to_string(sys.points()));
    }
}

double integral(const TestFunction& f, const AtomicMeasure& mu) {
    double s = 0.0;
    for (const auto& [i, w] : mu.atoms()) s += f.values[i] * w.to_double();
    return s;
}

double sup_norm(const TestFunction& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

AtomicMeasure AtomicMeasure::from_weights(std::size_t host_points,
                                          std::vector<std::pair<std::size_t, Rat>> weights) {
    std::map<std::size_t, Rat> acc;
    for (const auto& [i, w] : weights) {
        if (i >= host_points) {
            throw std::invalid_argument("atom index " + std::to_string(i) + " out of range");
        }
        if (w.is_negative()) {
            throw std::invalid_argument("negative mass " + w.str() + " at point " +
                                        std::to_string(i));
        }
        acc[i] += w;
    }
    std::vector<std::pair<std::size_t, Rat>> atoms;
    Rat total;
    for (const auto& [i, w] : acc) {
        total += w;
        if (!w.is_zero()) atoms.emplace_back(i, w);
    }
    if (total != Rat(1)) {
        throw std::invalid_argument("masses sum to " + total.str() + ", expected 1");
    }
    return AtomicMeasure(host_points, std::move(atoms));
}

AtomicMeasure AtomicMeasure::from_weights(const FiniteSystem& sys,
                                          std::vector<std::pair<std::size_t, Rat>> weights) {
    return from_weights(sys.points(), std::move(weights));
}

Rat AtomicMeasure::mass(std::size_t point) const {
    const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), point,
                                     [](const auto& a, std::size_t p) { return a.first < p; });
    if (it != atoms_.end() && it->first == point) return it->second;
    return Rat(0);
}

Rat AtomicMeasure::mass_of(const FiniteSubset& set) const {
    if (set.host_points != host_points_) throw std::invalid_argument("subset host mismatch");
    Rat m;
    for (const auto& [i, w] : atoms_) {
        if (set.contains(i)) m += w;
    }
    return m;
}

Rat AtomicMeasure::mass_outside(const FiniteSubset& set) const {
    return Rat(1) - mass_of(set);
}

std::vector<std::size_t> AtomicMeasure::support() const {
    std::vector<std::size_t> s;
    s.reserve(atoms_.size());
    for (const auto& [i, w] : atoms_) s.push_back(i);
    return s;
}

AtomicMeasure dirac(const FiniteSystem& sys, std::size_t x) {
    return AtomicMeasure::from_weights(sys, {{x, Rat(1)}});
}

AtomicMeasure uniform_on(const FiniteSystem& sys, const std::vector<std::size_t>& pts) {
    if (pts.empty()) throw std::invalid_argument("uniform measure needs a nonempty support");
    std::vector<std::pair<std::size_t, Rat>> w;
    const Rat share(1, static_cast<std::int64_t>(pts.size()));
    for (std::size_t p : pts) w.emplace_back(p, share);
    return AtomicMeasure::from_weights(sys, std::move(w));
}

AtomicMeasure pushforward(const FiniteSystem& sys, const AtomicMeasure& mu) {
    check_host(sys, mu);
    std::vector<std::pair<std::size_t, Rat>> w;
    w.reserve(mu.atoms().size());
    for (const auto& [i, m] : mu.atoms()) w.emplace_back(sys.step(i), m);
    return AtomicMeasure::from_weights(sys, std::move(w));
}

AtomicMeasure pushforward_along(const FactorMap& pi, const FiniteSystem& domain,
                                const FiniteSystem& codomain, const AtomicMeasure& mu) {
    check_host(domain, mu);
    std::vector<std::pair<std::size_t, Rat>> w;
    w.reserve(mu.atoms().size());
    for (const auto& [i, m] : mu.atoms()) w.emplace_back(pi.to[i], m);
    return AtomicMeasure::from_weights(codomain, std::move(w));
}

AtomicMeasure mix(const Rat& t, const AtomicMeasure& a, const AtomicMeasure& b) {
    if (a.host_points() != b.host_points()) throw std::invalid_argument("measure host mismatch");
    if (t.is_negative() || t > Rat(1)) throw std::invalid_argument("mix weight outside [0,1]");
    std::vector<std::pair<std::size_t, Rat>> w;
    for (const auto& [i, m] : a.atoms()) w.emplace_back(i, t * m);
    const Rat s = Rat(1) - t;
    for (const auto& [i, m] : b.atoms()) w.emplace_back(i, s * m);
    return AtomicMeasure::from_weights(a.host_points(), std::move(w));
}

AtomicMeasure product_measure(const FiniteSystem& x, const FiniteSystem& y,
                              const AtomicMeasure& mu, const AtomicMeasure& nu,
                              std::size_t point_cap) {
    check_host(x, mu);
    check_host(y, nu);
    const std::size_t n = x.points() * y.points();
    if (n > point_cap) throw cap_error("product measure host exceeds cap");
    std::vector<std::pair<std::size_t, Rat>> w;
    for (const auto& [i, mi] : mu.atoms()) {
        for (const auto& [j, mj] : nu.atoms()) {
            w.emplace_back(i * y.points() + j, mi * mj);
        }
    }
    return AtomicMeasure::from_weights(n, std::move(w));
}

AtomicMeasure empirical_measure(const FiniteSystem& sys, std::size_t x, std::uint64_t steps) {
    if (steps == 0) throw std::invalid_argument("empirical measure needs at least one step");
    std::map<std::size_t, std::uint64_t> hits;
    std::size_t v = x;
    if (x >= sys.points()) throw std::invalid_argument("point index out of range");
    for (std::uint64_t n = 0; n < steps; ++n) {
        ++hits[v];
        v = sys.step(v);
    }
    std::vector<std::pair<std::size_t, Rat>> w;
    for (const auto& [i, c] : hits) {
        w.emplace_back(i, Rat(static_cast<std::int64_t>(c), static_cast<std::int64_t>(steps)));
    }
    return AtomicMeasure::from_weights(sys, std::move(w));
}

double prohorov_distance(const FiniteSystem& sys, const AtomicMeasure& mu,
                         const AtomicMeasure& nu, std::size_t support_cap) {
    check_host(sys, mu);
    check_host(sys, nu);
    if (mu == nu) return 0.0;

    const std::vector<std::size_t> sup_mu = mu.support();
    const std::vector<std::size_t> sup_nu = nu.support();
    std::vector<std::size_t> united = sup_mu;
    united.insert(united.end(), sup_nu.begin(), sup_nu.end());
    std::sort(united.begin(), united.end());
    united.erase(std::unique(united.begin(), united.end()), united.end());
    if (united.size() > support_cap) {
        throw cap_error("union support has " + std::to_string(united.size()) +
                        " points, cap is " + std::to_string(support_cap));
    }

    // One side of the Prohorov condition: for every subset A of `from`'s
    // support, from(A) <= to(A^eps) + eps. Subsets outside the support only
    // weaken the constraint, so this scan is exhaustive in effect.
    const auto side_ok = [&](const AtomicMeasure& from, const std::vector<std::size_t>& sup_from,
                             const AtomicMeasure& to, const std::vector<std::size_t>& sup_to,
                             double eps) {
        const std::size_t k = sup_from.size();
        std::vector<double> from_mass(k), to_mass(sup_to.size());
        for (std::size_t i = 0; i < k; ++i) from_mass[i] = from.mass(sup_from[i]).to_double();
        for (std::size_t j = 0; j < sup_to.size(); ++j) to_mass[j] = to.mass(sup_to[j]).to_double();
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                if (bits & (std::uint64_t{1} << i)) lhs += from_mass[i];
            }
            double rhs = eps;
            for (std::size_t j = 0; j < sup_to.size(); ++j) {
                double dmin = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < k; ++i) {
                    if (bits & (std::uint64_t{1} << i)) {
                        dmin = std::min(dmin, sys.distance(sup_to[j], sup_from[i]));
                    }
                }
                if (dmin < eps) rhs += to_mass[j];
            }
            if (lhs > rhs + 1e-15) return false;
        }
        return true;
    };

    const auto feasible = [&](double eps) {
        return side_ok(mu, sup_mu, nu, sup_nu, eps) && side_ok(nu, sup_nu, mu, sup_mu, eps);
    };

    double lo = 0.0, hi = 1.0;  // eps = 1 is always feasible
    for (int iter = 0; iter < 34; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::vector<TestFunction> default_family(const FiniteSystem& sys) {
    std::vector<TestFunction> fam;
    const std::size_t n = sys.points();
    fam.reserve(2 * n);
    for (std::size_t p = 0; p < n; ++p) {
        TestFunction f;
        f.name = "indicator[" + std::to_string(p) + "]";
        f.values.assign(n, 0.0);
        f.values[p] = 1.0;
        fam.push_back(std::move(f));
    }
    for (std::size_t p = 0; p < n; ++p) {
        TestFunction f;
        f.name = "dist[" + std::to_string(p) + "]";
        f.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) f.values[i] = sys.distance(i, p);
        fam.push_back(std::move(f));
    }
    return fam;
}

double series_metric(const AtomicMeasure& mu, const AtomicMeasure& nu,
                     const std::vector<TestFunction>& family) {
    if (family.empty()) throw std::invalid_argument("series metric needs a nonempty family");
    if (mu.host_points() != nu.host_points()) throw std::invalid_argument("measure host mismatch");
    double total = 0.0;
    double weight = 1.0;
    for (const auto& f : family) {
        if (f.values.size() != mu.host_points()) {
            throw std::invalid_argument("family function '" + f.name +
                                        "' is undefined on some point of the host");
        }
        weight *= 0.5;  // 2^-n, n starting at 1
        total += weight * std::abs(integral(f, mu) - integral(f, nu)) / (sup_norm(f) + 1.0);
    }
    return total;
}

AtomicMeasure conditional(const AtomicMeasure& mu, const FiniteSubset& a) {
    const Rat ma = mu.mass_of(a);
    if (ma.is_zero()) throw std::invalid_argument("conditioning set has measure zero");
    std::vector<std::pair<std::size_t, Rat>> w;
    for (const auto& [i, m] : mu.atoms()) {
        if (a.contains(i)) w.emplace_back(i, m / ma);
    }
    return AtomicMeasure::from_weights(mu.host_points(), std::move(w));
}

PerturbationReport conditional_perturbation_check(const FiniteSystem& sys, const AtomicMeasure& mu,
                                                  const FiniteSubset& a, const FiniteSubset& b,
                                                  double epsilon,
                                                  const std::vector<TestFunction>& family) {
    check_host(sys, mu);
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    const Rat ma = mu.mass_of(a);
    const Rat mb = mu.mass_of(b);
    if (ma.is_zero() || mb.is_zero()) {
        throw std::invalid_argument("conditioning sets must have positive measure");
    }
    Rat symdiff;
    for (const auto& [i, m] : mu.atoms()) {
        if (a.contains(i) != b.contains(i)) symdiff += m;
    }
    PerturbationReport r;
    r.ratio = symdiff / ma;
    r.epsilon = epsilon;
    r.applicable = r.ratio.to_double() < epsilon;
    r.distance = series_metric(conditional(mu, a), conditional(mu, b), family);
    r.bound_holds = r.distance <= 2.0 * epsilon;
    return r;
}

bool pushforward_conditional_check(const FiniteSystem& domain, const FiniteSystem& codomain,
                                   const FactorMap& pi, const AtomicMeasure& mu,
                                   const FiniteSubset& codomain_set) {
    check_host(domain, mu);
    if (codomain_set.host_points != codomain.points()) {
        throw std::invalid_argument("conditioning set lives on the wrong host");
    }
    std::vector<std::size_t> preimage;
    for (std::size_t i = 0; i < domain.points(); ++i) {
        if (codomain_set.contains(pi.to[i])) preimage.push_back(i);
    }
    const FiniteSubset pre = FiniteSubset::of(domain, std::move(preimage));
    const AtomicMeasure lhs =
        pushforward_along(pi, domain, codomain, conditional(mu, pre));
    const AtomicMeasure rhs =
        conditional(pushforward_along(pi, domain, codomain, mu), codomain_set);
    return lhs == rhs;
}

AtomicMeasure barycenter(const MeasureOnMeasures& nu) {
    if (nu.atoms.empty()) throw std::invalid_argument("barycenter of an empty measure");
    const std::size_t host = nu.atoms.front().first.host_points();
    std::vector<std::pair<std::size_t, Rat>> w;
    Rat total;
    for (const auto& [theta, weight] : nu.atoms) {
        if (theta.host_points() != host) throw std::invalid_argument("measure host mismatch");
        if (weight.is_negative()) throw std::invalid_argument("negative weight in barycenter");
        total += weight;
        for (const auto& [i, m] : theta.atoms()) w.emplace_back(i, weight * m);
    }
    if (total != Rat(1)) {
        throw std::invalid_argument("weights sum to " + total.str() + ", expected 1");
    }
    return AtomicMeasure::from_weights(host, std::move(w));
}

std::vector<AtomicMeasure> enumerate_mn(const FiniteSystem& sys, std::size_t n,
                                        std::uint64_t cap) {
    if (n == 0) throw std::invalid_argument("lattice resolution must be positive");
    const std::size_t p = sys.points();

    unsigned __int128 count = 1;  // C(n + p - 1, p - 1)
    for (std::size_t k = 1; k < p; ++k) {
        count = count * (n + k) / k;
        if (count > cap) {
            throw cap_error("M_n lattice needs more than " + std::to_string(cap) + " measures");
        }
    }

    std::vector<AtomicMeasure> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> parts(p, 0);
    parts[0] = n;
    while (true) {
        std::vector<std::pair<std::size_t, Rat>> w;
        for (std::size_t i = 0; i < p; ++i) {
            if (parts[i] > 0) {
                w.emplace_back(i, Rat(static_cast<std::int64_t>(parts[i]),
                                      static_cast<std::int64_t>(n)));
            }
        }
        out.push_back(AtomicMeasure::from_weights(sys, std::move(w)));
        // next composition of n into p parts, colexicographic walk
        if (p == 1) break;
        std::size_t i = 0;
        while (i + 1 < p && parts[i] == 0) ++i;
        if (i + 1 == p) break;
        const std::size_t head = parts[i];
        parts[i] = 0;
        parts[0] = head - 1;
        ++parts[i + 1];
    }
    return out;
}

std::optional<std::uint64_t> measure_period(const FiniteSystem& sys, const AtomicMeasure& mu,
                                            std::uint64_t bound) {
    check_host(sys, mu);
    if (!sys.tds()) throw std::invalid_argument("measure period requires t.d.s. mode");
    if (bound == 0) throw std::invalid_argument("period bound must be positive");
    AtomicMeasure cur = mu;
    for (std::uint64_t p = 1; p <= bound; ++p) {
        cur = pushforward(sys, cur);
        if (cur == mu) return p;
    }
    return std::nullopt;
}

}  // namespace indyn
