#include "indyn/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace indyn {

namespace {

std::size_t quotient_depth(const FiniteSystem& quotient) {
    const std::size_t n = quotient.points();
    if (!std::has_single_bit(n)) {
        throw std::invalid_argument("quotient host must have a power-of-two point count");
    }
    return static_cast<std::size_t>(std::countr_zero(n));
}

}  // namespace

FiniteSubset power_point_subset(const FiniteSystem& harmonic, std::size_t depth) {
    std::vector<std::size_t> elems{0};
    for (std::size_t n = 0; n <= depth; ++n) elems.push_back(std::size_t{1} << n);
    return FiniteSubset::of(harmonic, std::move(elems));
}

AtomicMeasure geometric_tail_measure(const FiniteSystem& harmonic, std::size_t depth) {
    if (depth == 0 || depth > 40) throw std::invalid_argument("depth out of range");
    const std::int64_t den = (std::int64_t{2} << depth) - 1;  // 2^(depth+1) - 1
    std::vector<std::pair<std::size_t, Rat>> w;
    for (std::size_t n = 1; n <= depth + 1; ++n) {
        const std::size_t point = std::size_t{1} << (n - 1);  // index of 1/2^(n-1)
        const std::int64_t num = std::int64_t{1} << (depth + 1 - n);
        w.emplace_back(point, Rat(num, den));
    }
    return AtomicMeasure::from_weights(harmonic, std::move(w));
}

FiniteSubset cylinder_subset(const FiniteSystem& quotient, const Word& w) {
    const std::size_t depth = quotient_depth(quotient);
    if (w.empty() || w.size() > depth) {
        throw std::invalid_argument("cylinder word length outside 1.." + std::to_string(depth));
    }
    const std::uint64_t base = word_value(w);
    const std::uint64_t step = std::uint64_t{1} << w.size();
    std::vector<std::size_t> elems;
    for (std::uint64_t z = base; z < quotient.points(); z += step) {
        elems.push_back(static_cast<std::size_t>(z));
    }
    return FiniteSubset::of(quotient, std::move(elems));
}

AtomicMeasure cylinder_conditional(const FiniteSystem& quotient, const Word& w) {
    return uniform_on(quotient, cylinder_subset(quotient, w).elems);
}

AtomicMeasure haar_on_quotient(const FiniteSystem& quotient) {
    return uniform_on(quotient, full_set(quotient).elems);
}

FiniteSubset product_subset(const FiniteSystem& x, const FiniteSystem& y, const FiniteSubset& a,
                            const FiniteSubset& b) {
    if (a.host_points != x.points() || b.host_points != y.points()) {
        throw std::invalid_argument("subset host mismatch");
    }
    std::vector<std::size_t> elems;
    elems.reserve(a.size() * b.size());
    for (std::size_t i : a.elems) {
        for (std::size_t j : b.elems) elems.push_back(i * y.points() + j);
    }
    FiniteSubset s;
    s.host_points = x.points() * y.points();
    std::sort(elems.begin(), elems.end());
    s.elems = std::move(elems);
    return s;
}

std::size_t Sampler::point(const FiniteSystem& sys) {
    std::uniform_int_distribution<std::size_t> d(0, sys.points() - 1);
    return d(rng_);
}

FiniteSubset Sampler::subset(const FiniteSystem& sys, std::size_t max_card) {
    const std::size_t cap = std::min(max_card, sys.points());
    std::uniform_int_distribution<std::size_t> card_d(1, cap);
    const std::size_t card = card_d(rng_);
    std::vector<std::size_t> elems;
    while (elems.size() < card) {
        elems.push_back(point(sys));
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    }
    return FiniteSubset::of(sys, std::move(elems));
}

AtomicMeasure Sampler::measure(const FiniteSystem& sys, std::size_t max_support,
                               std::uint64_t max_weight) {
    const FiniteSubset sup = subset(sys, max_support);
    std::uniform_int_distribution<std::int64_t> weight_d(1, static_cast<std::int64_t>(max_weight));
    std::vector<std::int64_t> raw(sup.size());
    std::int64_t total = 0;
    for (auto& r : raw) {
        r = weight_d(rng_);
        total += r;
    }
    std::vector<std::pair<std::size_t, Rat>> w;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        w.emplace_back(sup.elems[i], Rat(raw[i], total));
    }
    return AtomicMeasure::from_weights(sys, std::move(w));
}

FiniteSystem Sampler::metric_permutation_system(std::size_t npoints) {
    if (npoints == 0) throw std::invalid_argument("need at least one point");
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::pair<double, double>> pts;
    while (pts.size() < npoints) {
        const std::pair<double, double> p{coord(rng_), coord(rng_)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<std::vector<double>> rows(npoints, std::vector<double>(npoints, 0.0));
    for (std::size_t i = 0; i < npoints; ++i) {
        for (std::size_t j = i + 1; j < npoints; ++j) {
            const double dx = pts[i].first - pts[j].first;
            const double dy = pts[i].second - pts[j].second;
            rows[i][j] = rows[j][i] = std::hypot(dx, dy);
        }
    }
    std::vector<std::size_t> perm(npoints);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng_);
    return FiniteSystem::create(std::move(perm), Metric::from_matrix(std::move(rows)), true);
}

}  // namespace indyn
