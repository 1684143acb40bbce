#include "indyn/hyperspace.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "indyn/errors.hpp"

namespace indyn {

namespace {

void check_host(const FiniteSystem& sys, const FiniteSubset& a) {
    if (a.host_points != sys.points()) {
        throw std::invalid_argument("subset belongs to a host with " +
                                    std::to_string(a.host_points) + " points, system has " +
                                    std::to_string(sys.points()));
    }
}

double min_distance_to(const FiniteSystem& sys, std::size_t x, const std::vector<std::size_t>& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y : b) best = std::min(best, sys.distance(x, y));
    return best;
}

}  // namespace

FiniteSubset FiniteSubset::of(const FiniteSystem& sys, std::vector<std::size_t> elems) {
    if (elems.empty()) throw std::invalid_argument("hyperspace points are nonempty sets");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.back() >= sys.points()) {
        throw std::invalid_argument("subset element " + std::to_string(elems.back()) +
                                    " out of range");
    }
    return FiniteSubset{sys.points(), std::move(elems)};
}

bool FiniteSubset::contains(std::size_t i) const {
    return std::binary_search(elems.begin(), elems.end(), i);
}

double hausdorff_distance(const FiniteSystem& sys, const FiniteSubset& a, const FiniteSubset& b) {
    check_host(sys, a);
    check_host(sys, b);
    double d = 0.0;
    for (std::size_t x : a.elems) d = std::max(d, min_distance_to(sys, x, b.elems));
    for (std::size_t y : b.elems) d = std::max(d, min_distance_to(sys, y, a.elems));
    return d;
}

FiniteSubset induced_image(const FiniteSystem& sys, const FiniteSubset& a) {
    check_host(sys, a);
    std::vector<std::size_t> image;
    image.reserve(a.elems.size());
    for (std::size_t x : a.elems) image.push_back(sys.step(x));
    return FiniteSubset::of(sys, std::move(image));
}

bool vietoris_contains(const FiniteSystem& sys, const FiniteSubset& a,
                       const VietorisBasisElement& v) {
    check_host(sys, a);
    if (v.opens.empty()) throw std::invalid_argument("Vietoris element needs at least one open");
    std::vector<bool> covered(sys.points(), false);
    for (const auto& open : v.opens) {
        if (open.empty()) throw std::invalid_argument("Vietoris opens must be nonempty");
        bool meets = false;
        for (std::size_t p : open) {
            if (p >= sys.points()) throw std::invalid_argument("Vietoris open has a bad index");
            covered[p] = true;
            meets = meets || a.contains(p);
        }
        if (!meets) return false;
    }
    for (std::size_t x : a.elems) {
        if (!covered[x]) return false;
    }
    return true;
}

std::vector<FiniteSubset> enumerate_kn(const FiniteSystem& sys, std::size_t max_card,
                                       std::uint64_t cap) {
    if (max_card == 0) throw std::invalid_argument("cardinality bound must be positive");
    const std::size_t n = sys.points();
    const std::size_t k_max = std::min(max_card, n);

    unsigned __int128 total = 0;
    {
        unsigned __int128 binom = 1;
        for (std::size_t k = 1; k <= k_max; ++k) {
            binom = binom * (n - k + 1) / k;
            total += binom;
            if (total > cap) {
                throw cap_error("K_n enumeration needs more than " + std::to_string(cap) +
                                " subsets");
            }
        }
    }

    std::vector<FiniteSubset> out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::size_t k = 1; k <= k_max; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            out.push_back(FiniteSubset{n, idx});
            // next k-combination of {0..n-1} in lexicographic order
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

std::optional<std::uint64_t> period_of_set(const FiniteSystem& sys, const FiniteSubset& a,
                                           std::uint64_t bound) {
    check_host(sys, a);
    if (!sys.tds()) throw std::invalid_argument("set period requires t.d.s. mode");
    if (bound == 0) throw std::invalid_argument("period bound must be positive");
    FiniteSubset cur = a;
    for (std::uint64_t p = 1; p <= bound; ++p) {
        cur = induced_image(sys, cur);
        if (cur == a) return p;
    }
    return std::nullopt;
}

FiniteSubset full_set(const FiniteSystem& sys) {
    std::vector<std::size_t> all(sys.points());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return FiniteSubset{sys.points(), std::move(all)};
}

}  // namespace indyn
