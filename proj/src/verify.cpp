#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "indyn/classify.hpp"
#include "indyn/errors.hpp"
#include "indyn/fixtures.hpp"
#include "indyn/joinings.hpp"
#include "indyn/recurrence.hpp"
#include "indyn/runner.hpp"
#include "indyn/serialize.hpp"

namespace indyn {

namespace {

CheckRecord verdict_of(bool pass, Json detail) {
    CheckRecord rec;
    rec.verdict = pass ? "pass" : "fail";
    rec.detail = std::move(detail);
    return rec;
}

// ---------------------------------------------------------------------------
// Conditional-measure suite
// ---------------------------------------------------------------------------

CheckRecord check_conditional_split(const RunConfig& config) {
    Sampler sampler(config.seed);
    const FiniteSystem sys = make_cycle(10);
    std::size_t failures = 0;
    const std::size_t instances = 200;
    for (std::size_t t = 0; t < instances; ++t) {
        const AtomicMeasure mu = sampler.measure(sys, 10, 16);
        const std::vector<std::size_t> support = mu.support();
        // Split the sampled support into up to three essential blocks.
        std::uniform_int_distribution<std::size_t> block_d(1, std::min<std::size_t>(3, support.size()));
        const std::size_t blocks = block_d(sampler.rng());
        std::uniform_int_distribution<std::size_t> assign_d(0, blocks - 1);
        std::vector<std::vector<std::size_t>> parts(blocks);
        for (std::size_t i = 0; i < support.size(); ++i) {
            parts[i < blocks ? i : assign_d(sampler.rng())].push_back(support[i]);
        }
        MeasureOnMeasures split;
        const FiniteSubset a = FiniteSubset::of(sys, support);
        const Rat total = mu.mass_of(a);
        for (const auto& part : parts) {
            const FiniteSubset piece = FiniteSubset::of(sys, part);
            split.atoms.emplace_back(conditional(mu, piece), mu.mass_of(piece) / total);
        }
        if (barycenter(split) != conditional(mu, a)) ++failures;
    }
    Json detail;
    detail["instances"] = instances;
    detail["failures"] = failures;
    detail["mode"] = "exact rational";
    return verdict_of(failures == 0, std::move(detail));
}

CheckRecord check_conditional_perturbation(const RunConfig& config) {
    Sampler sampler(config.seed);
    const FiniteSystem sys = make_cycle(12);
    const std::vector<TestFunction> family = default_family(sys);
    const std::size_t instances = 1000;
    std::size_t violations = 0;
    std::vector<std::string> csv{"instance,distance,bound,ok"};
    std::uniform_real_distribution<double> slack(0.1, 1.0);
    for (std::size_t t = 0; t < instances; ++t) {
        const AtomicMeasure mu = sampler.measure(sys, 12, 20);
        FiniteSubset a = sampler.subset(sys, 8);
        FiniteSubset b = sampler.subset(sys, 8);
        if (mu.mass_of(a).is_zero() || mu.mass_of(b).is_zero()) {
            // retarget to the support so both conditionals exist
            a = FiniteSubset::of(sys, mu.support());
            b = sampler.subset(sys, 8);
            if (mu.mass_of(b).is_zero()) b = a;
        }
        Rat symdiff;
        for (const auto& [i, m] : mu.atoms()) {
            if (a.contains(i) != b.contains(i)) symdiff += m;
        }
        const double ratio = (symdiff / mu.mass_of(a)).to_double();
        const double epsilon = ratio * (1.0 + slack(sampler.rng())) + 0.01;
        const PerturbationReport r = conditional_perturbation_check(sys, mu, a, b, epsilon, family);
        if (!r.applicable || !r.bound_holds) ++violations;
        csv.push_back(std::to_string(t) + "," + std::to_string(r.distance) + "," +
                      std::to_string(2.0 * epsilon) + "," + (r.bound_holds ? "1" : "0"));
    }
    Json detail;
    detail["instances"] = instances;
    detail["violations"] = violations;
    CheckRecord rec = verdict_of(violations == 0, std::move(detail));
    rec.csv = std::move(csv);
    return rec;
}

CheckRecord check_conditional_factor(const RunConfig& config) {
    Sampler sampler(config.seed);
    std::size_t cases = 0, failures = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
        const FiniteSystem big = make_cycle(2 * k);
        const FiniteSystem small = make_cycle(k);
        const FactorMap pi = cycle_projection(big, small);
        for (std::size_t trial = 0; trial < 3; ++trial) {
            const AtomicMeasure mu = sampler.measure(big, 2 * k, 16);
            const AtomicMeasure image = pushforward_along(pi, big, small, mu);
            for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
                std::vector<std::size_t> elems;
                for (std::size_t y = 0; y < k; ++y) {
                    if (bits & (std::uint64_t{1} << y)) elems.push_back(y);
                }
                const FiniteSubset a = FiniteSubset::of(small, std::move(elems));
                if (image.mass_of(a).is_zero()) continue;
                ++cases;
                if (!pushforward_conditional_check(big, small, pi, mu, a)) ++failures;
            }
        }
    }
    Json detail;
    detail["cases"] = cases;
    detail["failures"] = failures;
    detail["fixtures"] = "cycle(2k) -> cycle(k), k = 1..6";
    return verdict_of(cases > 0 && failures == 0, std::move(detail));
}

// ---------------------------------------------------------------------------
// Metric suites
// ---------------------------------------------------------------------------

CheckRecord check_hausdorff_axioms(const RunConfig& config) {
    Sampler sampler(config.seed);
    std::vector<FiniteSystem> hosts;
    for (std::size_t p = 2; p <= 6; ++p) hosts.push_back(make_cycle(p));
    hosts.push_back(make_harmonic(1));
    hosts.push_back(sampler.metric_permutation_system(6));

    std::size_t violations = 0;
    std::size_t pairs = 0;
    for (const FiniteSystem& sys : hosts) {
        const std::vector<FiniteSubset> k3 = enumerate_kn(sys, 3);
        const std::size_t m = k3.size();
        std::vector<double> d(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                d[i * m + j] = hausdorff_distance(sys, k3[i], k3[j]);
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (d[i * m + i] != 0.0) ++violations;
            for (std::size_t j = 0; j < m; ++j) {
                ++pairs;
                if (d[i * m + j] != d[j * m + i]) ++violations;
                if (i != j && d[i * m + j] <= 0.0) ++violations;
                for (std::size_t l = 0; l < m; ++l) {
                    if (d[i * m + l] > d[i * m + j] + d[j * m + l] + 1e-9) ++violations;
                }
            }
        }
        // The singleton embedding is isometric.
        for (std::size_t x = 0; x < sys.points(); ++x) {
            for (std::size_t y = 0; y < sys.points(); ++y) {
                const double dxy = hausdorff_distance(sys, FiniteSubset::of(sys, {x}),
                                                      FiniteSubset::of(sys, {y}));
                if (dxy != sys.distance(x, y)) ++violations;
            }
        }
    }
    Json detail;
    detail["hosts"] = hosts.size();
    detail["pairs"] = pairs;
    detail["violations"] = violations;
    return verdict_of(violations == 0, std::move(detail));
}

CheckRecord check_prohorov_axioms(const RunConfig& config) {
    Sampler sampler(config.seed);
    const FiniteSystem scatter = sampler.metric_permutation_system(8);
    const FiniteSystem cyc = make_cycle(5);
    std::size_t violations = 0;
    const std::size_t trials = 500;
    for (std::size_t t = 0; t < trials; ++t) {
        const FiniteSystem& sys = (t % 2 == 0) ? scatter : cyc;
        const AtomicMeasure mu = sampler.measure(sys, 6, 12);
        const AtomicMeasure nu = sampler.measure(sys, 6, 12);
        const AtomicMeasure lam = sampler.measure(sys, 6, 12);
        if (prohorov_distance(sys, mu, mu) != 0.0) ++violations;
        const double dmn = prohorov_distance(sys, mu, nu);
        const double dnm = prohorov_distance(sys, nu, mu);
        if (std::abs(dmn - dnm) > 1e-9) ++violations;
        const double dml = prohorov_distance(sys, mu, lam);
        const double dnl = prohorov_distance(sys, nu, lam);
        if (dml > dmn + dnl + 1e-9) ++violations;
    }
    // Dirac pairs pin the metric exactly: D(delta_x, delta_y) = min(rho, 1).
    std::size_t dirac_pairs = 0;
    for (const FiniteSystem& sys : {scatter, cyc, make_harmonic(2)}) {
        for (std::size_t x = 0; x < sys.points(); ++x) {
            for (std::size_t y = 0; y < sys.points(); ++y) {
                ++dirac_pairs;
                const double want = std::min(sys.distance(x, y), 1.0);
                const double got = prohorov_distance(sys, dirac(sys, x), dirac(sys, y));
                if (std::abs(got - want) > 1e-9) ++violations;
            }
        }
    }
    Json detail;
    detail["random_triples"] = trials;
    detail["dirac_pairs"] = dirac_pairs;
    detail["violations"] = violations;
    detail["tolerance"] = 1e-9;
    return verdict_of(violations == 0, std::move(detail));
}

// ---------------------------------------------------------------------------
// Odometer suite
// ---------------------------------------------------------------------------

CheckRecord check_odometer_add(const RunConfig&) {
    std::size_t failures = 0;
    const std::size_t len = 8;
    for (std::uint64_t a = 0; a < 256; ++a) {
        for (std::uint64_t b = 0; b < 256; ++b) {
            const Word sum = odometer_add(word_from_value(a, len), word_from_value(b, len));
            if (word_value(sum) != ((a + b) & 255u)) ++failures;
        }
    }
    Json detail;
    detail["cases"] = 65536;
    detail["failures"] = failures;
    detail["oracle"] = "integer addition mod 2^8";
    return verdict_of(failures == 0, std::move(detail));
}

CheckRecord check_odometer_cycle(const RunConfig&) {
    std::size_t failures = 0;
    for (std::size_t depth = 1; depth <= 12; ++depth) {
        const Word one = word_from_value(1, depth);
        Word w(depth, 0);
        std::uint64_t steps = 0;
        do {
            w = odometer_add(w, one);
            ++steps;
        } while (word_value(w) != 0);
        if (steps != (std::uint64_t{1} << depth)) ++failures;
        // the quotient permutation agrees: one orbit covering everything
        const FiniteSystem quotient = CylinderSystem::odometer().finite_quotient(depth);
        if (quotient.cycles().size() != 1) ++failures;
    }
    Json detail;
    detail["depths"] = "1..12";
    detail["failures"] = failures;
    return verdict_of(failures == 0, std::move(detail));
}

CheckRecord check_odometer_cylinder_period(const RunConfig&) {
    const CylinderSystem odo = CylinderSystem::odometer();
    const std::size_t resolution = 10;
    const FiniteSystem quotient = odo.finite_quotient(resolution);
    std::size_t failures = 0, cases = 0;
    for (std::size_t len = 1; len <= resolution; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            ++cases;
            const AtomicMeasure mu = cylinder_conditional(quotient, word_from_value(v, len));
            const auto p = measure_period(quotient, mu, std::uint64_t{1} << resolution);
            if (!p || *p != (std::uint64_t{1} << len)) ++failures;
        }
    }
    Json detail;
    detail["cases"] = cases;
    detail["failures"] = failures;
    detail["identity"] = "period of the cylinder conditional is 2^|C|";
    return verdict_of(failures == 0, std::move(detail));
}

CheckRecord check_odometer_birkhoff(const RunConfig& config) {
    Sampler sampler(config.seed);
    std::size_t failures = 0, cases = 0;
    for (std::size_t k = 1; k <= 8; ++k) {
        std::uniform_int_distribution<std::uint64_t> start_d(0, (std::uint64_t{1} << k) - 1);
        const std::uint64_t random_start = start_d(sampler.rng());
        for (std::size_t j = 0; j <= 4; ++j) {
            const std::uint64_t steps = std::uint64_t{1} << (k + j);
            for (const std::uint64_t start : {std::uint64_t{0}, random_start}) {
                std::vector<std::uint64_t> hits(std::size_t{1} << k, 0);
                Word w = word_from_value(start, k);
                const Word one = word_from_value(1, k);
                for (std::uint64_t n = 0; n < steps; ++n) {
                    ++hits[word_value(w)];
                    w = odometer_add(w, one);
                }
                for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
                    ++cases;
                    const Rat average(static_cast<std::int64_t>(hits[v]),
                                      static_cast<std::int64_t>(steps));
                    if (average != Rat(1, std::int64_t{1} << k)) ++failures;
                }
            }
        }
    }
    Json detail;
    detail["cases"] = cases;
    detail["failures"] = failures;
    detail["claim"] = "cylinder indicator averages over 2^(k+j) steps equal 2^-k exactly";
    return verdict_of(failures == 0, std::move(detail));
}

// ---------------------------------------------------------------------------
// Weak-mixing separation, tower periods
// ---------------------------------------------------------------------------

CheckRecord check_weak_mixing_separation(const RunConfig&) {
    const WeakMixingReport shift = weak_mixing_criterion(CylinderSystem::full_shift(2), 5);
    const WeakMixingReport odo = weak_mixing_criterion(CylinderSystem::odometer(), 1);
    bool pass = shift.pass && !shift.witnesses.empty();
    pass = pass && !odo.pass && odo.counterexample &&
           word_text(odo.counterexample->first) == "0" &&
           word_text(odo.counterexample->second) == "1";
    Json detail;
    detail["full_shift_pairs"] = shift.witnesses.size();
    detail["full_shift_pass"] = shift.pass;
    detail["odometer_pass"] = odo.pass;
    if (odo.counterexample) {
        detail["odometer_counterexample"] = Json::array(
            {word_text(odo.counterexample->first), word_text(odo.counterexample->second)});
    }
    return verdict_of(pass, std::move(detail));
}

CheckRecord check_tower_set_period(const RunConfig&) {
    Json per_depth = Json::array();
    bool pass = true;
    for (std::size_t m = 1; m <= 12; ++m) {
        const auto start = std::chrono::steady_clock::now();
        const FiniteSystem sys = make_harmonic(m);
        const auto p = period_of_set(sys, power_point_subset(sys, m), std::uint64_t{1} << m);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        const bool ok = p && *p == (std::uint64_t{1} << m) && ms < 1000.0;
        pass = pass && ok;
        per_depth.push_back(Json{{"m", m}, {"period", p ? Json(*p) : Json()}, {"ok", ok}});
    }
    Json detail;
    detail["per_depth"] = per_depth;
    return verdict_of(pass, std::move(detail));
}

CheckRecord check_tower_measure_period(const RunConfig&) {
    Json per_depth = Json::array();
    bool pass = true;
    for (std::size_t m = 1; m <= 12; ++m) {
        const auto start = std::chrono::steady_clock::now();
        const FiniteSystem sys = make_harmonic(m);
        const auto p = measure_period(sys, geometric_tail_measure(sys, m), std::uint64_t{1} << m);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        const bool ok = p && *p == (std::uint64_t{1} << m) && ms < 1000.0;
        pass = pass && ok;
        per_depth.push_back(Json{{"m", m}, {"period", p ? Json(*p) : Json()}, {"ok", ok}});
    }
    Json detail;
    detail["per_depth"] = per_depth;
    return verdict_of(pass, std::move(detail));
}

// ---------------------------------------------------------------------------
// Periodicity transfer, disjointness, projection inequality
// ---------------------------------------------------------------------------

std::vector<FiniteSystem> transfer_catalog() {
    std::vector<FiniteSystem> systems;
    for (std::size_t p = 1; p <= 8; ++p) systems.push_back(make_cycle(p));
    for (std::size_t m = 1; m <= 3; ++m) systems.push_back(make_harmonic(m));
    systems.push_back(product_system(make_cycle(2), make_cycle(3)));
    systems.push_back(product_system(make_cycle(2), make_cycle(2)));
    systems.push_back(product_system(make_cycle(4), make_cycle(6)));
    return systems;
}

CheckRecord check_periodicity_transfer(const RunConfig&) {
    std::size_t failures = 0, systems = 0;
    for (const FiniteSystem& sys : transfer_catalog()) {
        ++systems;
        const std::uint64_t period = sys.global_period();
        // base space: T^period is the identity
        for (std::size_t x = 0; x < sys.points(); ++x) {
            if (period % sys.point_period(x) != 0) ++failures;
        }
        // hyperspace: every K_3 element is periodic with period dividing the
        // ambient period
        for (const FiniteSubset& a : enumerate_kn(sys, 3)) {
            const auto p = period_of_set(sys, a, period);
            if (!p || period % *p != 0) ++failures;
        }
        // measure lattice: same for every M_3 element
        for (const AtomicMeasure& mu : enumerate_mn(sys, 3)) {
            const auto p = measure_period(sys, mu, period);
            if (!p || period % *p != 0) ++failures;
        }
    }
    Json detail;
    detail["systems"] = systems;
    detail["failures"] = failures;
    detail["statement"] = "periodic iff hyperspace pointwise periodic iff measure pointwise periodic";
    return verdict_of(failures == 0, std::move(detail));
}

CheckRecord check_disjointness_sweep(const RunConfig&) {
    std::size_t failures = 0;
    std::vector<std::string> csv{"p,q,disjoint,witness_size"};
    for (std::size_t p = 2; p <= 8; ++p) {
        for (std::size_t q = 2; q <= 8; ++q) {
            const FiniteSystem x = make_cycle(p);
            const FiniteSystem y = make_cycle(q);
            const DisjointnessReport r = is_disjoint(x, y);
            const DisjointnessReport rt = is_disjoint(y, x);
            const bool want = std::gcd(p, q) == 1;
            if (r.disjoint != want || rt.disjoint != want) ++failures;
            if (r.disjoint && !(is_transitive(x).transitive || is_transitive(y).transitive)) {
                ++failures;  // a disjoint pair must have a minimal factor
            }
            if (r.witness && !joining_valid(make_product_pair(x, y), *r.witness)) ++failures;
            csv.push_back(std::to_string(p) + "," + std::to_string(q) + "," +
                          (r.disjoint ? "1" : "0") + "," +
                          std::to_string(r.witness ? r.witness->cells.size() : 0));
        }
    }
    Json detail;
    detail["pairs"] = 49;
    detail["failures"] = failures;
    detail["criterion"] = "cycle(p) disjoint from cycle(q) iff gcd(p,q) = 1";
    CheckRecord rec = verdict_of(failures == 0, std::move(detail));
    rec.csv = std::move(csv);
    return rec;
}

CheckRecord check_projection_inequality(const RunConfig& config) {
    Sampler sampler(config.seed);
    std::vector<FiniteSystem> hosts;
    hosts.push_back(make_cycle(5));
    hosts.push_back(make_cycle(8));
    hosts.push_back(make_harmonic(2));
    hosts.push_back(make_harmonic(3));
    hosts.push_back(product_system(make_cycle(2), make_cycle(3)));

    const std::size_t trials = 10000;
    std::size_t violations = 0;
    std::uniform_int_distribution<std::size_t> host_d(0, hosts.size() - 1);
    std::uniform_int_distribution<std::uint64_t> step_d(0, 64);
    for (std::size_t t = 0; t < trials; ++t) {
        const FiniteSystem& sys = hosts[host_d(sampler.rng())];
        const FiniteSubset a = sampler.subset(sys, 5);
        const std::size_t u = sampler.point(sys);
        const std::uint64_t n = step_d(sampler.rng());
        FiniteSubset image = a;
        for (std::uint64_t s = 0; s < n; ++s) image = induced_image(sys, image);
        const double bound =
            hausdorff_distance(sys, image, FiniteSubset::of(sys, {u}));
        for (std::size_t x : a.elems) {
            if (sys.distance(sys.step_n(x, n), u) > bound) {
                ++violations;
                break;
            }
        }
    }
    Json detail;
    detail["triples"] = trials;
    detail["horizon"] = 64;
    detail["violations"] = violations;
    detail["comparison"] = "exact";
    return verdict_of(violations == 0, std::move(detail));
}

// ---------------------------------------------------------------------------
// Periodic-measure probes
// ---------------------------------------------------------------------------

CheckRecord check_periodic_witness_probe(const RunConfig&) {
    const CylinderSystem odo = CylinderSystem::odometer();
    std::size_t failures = 0, cases = 0;
    for (std::size_t len = 1; len <= 6; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            const Word u = word_from_value(v, len);
            for (const double eps : {0.5, 0.1, 0.01}) {
                ++cases;
                const auto w = almost_dense_periodic_probe(odo, u, eps);
                if (!w || !w->complement_mass.is_zero() ||
                    w->period != (std::uint64_t{1} << len) || w->cylinder != u) {
                    ++failures;
                }
            }
        }
    }
    Json detail;
    detail["cases"] = cases;
    detail["failures"] = failures;
    detail["witness"] = "the cylinder conditional itself, complement mass 0";
    return verdict_of(failures == 0, std::move(detail));
}

CheckRecord check_density_curve(const RunConfig& config) {
    Sampler sampler(config.seed);
    const FiniteSystem quotient = CylinderSystem::odometer().finite_quotient(8);
    std::vector<std::size_t> depths(9);
    std::iota(depths.begin(), depths.end(), std::size_t{0});
    std::size_t failures = 0;
    Json curves = Json::array();
    for (std::size_t t = 0; t < 20; ++t) {
        const AtomicMeasure target = sampler.measure(quotient, 6, 16);
        const auto curve = dense_periodic_measures_probe(quotient, target, depths);
        bool ok = true;
        for (std::size_t i = 1; i < curve.size(); ++i) {
            if (curve[i].distance > curve[i - 1].distance) ok = false;
        }
        if (curve.back().distance >= 0.01) ok = false;
        if (!ok) ++failures;
        Json c = Json::array();
        for (const auto& pt : curve) c.push_back(pt.distance);
        curves.push_back(std::move(c));
    }
    Json detail;
    detail["targets"] = 20;
    detail["failures"] = failures;
    detail["curves"] = curves;
    return verdict_of(failures == 0, std::move(detail));
}

}  // namespace

const std::vector<VerifyCheck>& verify_checks() {
    static const std::vector<VerifyCheck> checks = {
        {"conditional-split", "conditional measure splits exactly over an essential partition",
         check_conditional_split},
        {"conditional-perturbation",
         "d(mu_A, mu_B) <= 2*eps whenever mu(A symdiff B) < mu(A)*eps", check_conditional_perturbation},
        {"conditional-factor", "factor maps carry conditionals to conditionals exactly",
         check_conditional_factor},
        {"hausdorff-axioms", "Hausdorff distance is a metric; the singleton embedding is isometric",
         check_hausdorff_axioms},
        {"prohorov-axioms", "Prohorov distance is a metric; Dirac pairs give min(rho, 1)",
         check_prohorov_axioms},
        {"odometer-add", "word addition with carry equals integer addition mod 2^N",
         check_odometer_add},
        {"odometer-cycle", "the +1 map on depth-N words is a single 2^N cycle", check_odometer_cycle},
        {"odometer-cylinder-period", "cylinder conditionals have measure period 2^|C|",
         check_odometer_cylinder_period},
        {"odometer-birkhoff", "cylinder indicator averages over full periods are exactly 2^-k",
         check_odometer_birkhoff},
        {"weak-mixing-separation",
         "the return-time intersection criterion passes on the full shift and fails on the odometer",
         check_weak_mixing_separation},
        {"tower-set-period", "the power-point subset of the block tower has hyperspace period 2^m",
         check_tower_set_period},
        {"tower-measure-period", "the geometric tail measure on the block tower has period 2^m",
         check_tower_measure_period},
        {"periodicity-transfer",
         "base, hyperspace and measure lattice are periodic together on finite t.d.s.",
         check_periodicity_transfer},
        {"disjointness-sweep", "cycles are disjoint iff their lengths are coprime",
         check_disjointness_sweep},
        {"projection-inequality", "rho(T^n x, u) <= d_H(T_K^n A, {u}) for x in A",
         check_projection_inequality},
        {"periodic-witness-probe",
         "every cylinder admits a periodic measure witness with zero complement mass",
         check_periodic_witness_probe},
        {"density-curve",
         "conditioning averages of cylinder conditionals approach lattice targets monotonically",
         check_density_curve},
    };
    return checks;
}

}  // namespace indyn
