#include "indyn/recurrence.hpp"

#include <stdexcept>

namespace indyn {

TimeSet return_times_point(const FiniteSystem& sys, std::size_t x, const FiniteSubset& u,
                           std::uint64_t window) {
    if (window == 0) throw std::invalid_argument("window must be positive");
    std::vector<std::uint64_t> members;
    std::size_t v = x;
    if (x >= sys.points()) throw std::invalid_argument("point index out of range");
    for (std::uint64_t n = 0; n < window; ++n) {
        if (u.contains(v)) members.push_back(n);
        v = sys.step(v);
    }
    return TimeSet::of(window, std::move(members));
}

TimeSet return_times_set(const FiniteSystem& sys, const FiniteSubset& u, const FiniteSubset& v,
                         std::uint64_t window) {
    if (window == 0) throw std::invalid_argument("window must be positive");
    // n is a hit iff some point of U lands in V after n steps.
    std::vector<std::size_t> front = u.elems;
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; n < window; ++n) {
        for (std::size_t p : front) {
            if (v.contains(p)) {
                members.push_back(n);
                break;
            }
        }
        for (std::size_t& p : front) p = sys.step(p);
    }
    return TimeSet::of(window, std::move(members));
}

ProximalityReport pair_proximality(const FiniteSystem& sys, std::size_t x, std::size_t y,
                                   std::uint64_t window) {
    if (window == 0) throw std::invalid_argument("window must be positive");
    std::size_t a = x, b = y;
    ProximalityReport r;
    r.min_dist = sys.distance(a, b);
    r.argmin = 0;
    for (std::uint64_t n = 1; n < window; ++n) {
        a = sys.step(a);
        b = sys.step(b);
        const double d = sys.distance(a, b);
        if (d < r.min_dist) {
            r.min_dist = d;
            r.argmin = n;
        }
    }
    r.proximal_in_window = r.min_dist == 0.0;
    return r;
}

WeakMixingReport weak_mixing_criterion(const CylinderSystem& cyl, std::size_t max_len) {
    WeakMixingReport report;
    report.pass = true;
    const std::vector<Word> words = cyl.words_up_to(max_len);
    for (const Word& u : words) {
        const ResidueTimeSet nuu = cyl.return_times(u, u);
        for (const Word& v : words) {
            const ResidueTimeSet both = nuu.intersect(cyl.return_times(u, v));
            const auto witness = both.first();
            if (!witness) {
                report.pass = false;
                report.witnesses.clear();
                report.counterexample = std::make_pair(u, v);
                return report;
            }
            report.witnesses.push_back(WeakMixingPairWitness{u, v, *witness});
        }
    }
    return report;
}

}  // namespace indyn
