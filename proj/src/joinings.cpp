#include "indyn/joinings.hpp"

#include <algorithm>
#include <stdexcept>

#include "indyn/errors.hpp"

namespace indyn {

ProductPair make_product_pair(const FiniteSystem& left, const FiniteSystem& right,
                              std::size_t point_cap) {
    if (!left.tds() || !right.tds()) {
        throw std::invalid_argument("joinings are defined for t.d.s. factors");
    }
    ProductPair pair{product_system(left, right, point_cap), left.points(), right.points()};
    return pair;
}

std::vector<std::size_t> orbit_closure(const ProductPair& pair, std::size_t left_seed,
                                       std::size_t right_seed) {
    if (left_seed >= pair.left_points || right_seed >= pair.right_points) {
        throw std::invalid_argument("seed pair out of range");
    }
    std::vector<std::size_t> cells;
    std::size_t v = pair.cell(left_seed, right_seed);
    const std::size_t start = v;
    do {
        cells.push_back(v);
        v = pair.product.step(v);
    } while (v != start);
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Joining> enumerate_joinings(const ProductPair& pair, std::size_t orbit_cap) {
    const auto& orbits = pair.product.cycles();
    if (orbits.size() > orbit_cap) {
        throw cap_error("product has " + std::to_string(orbits.size()) +
                        " orbits, enumeration cap is " + std::to_string(orbit_cap));
    }
    if (pair.left_points > 64 || pair.right_points > 64) {
        throw cap_error("factors exceed 64 points");
    }

    // Coverage masks of each orbit over the two factors.
    const std::size_t k = orbits.size();
    std::vector<std::uint64_t> left_mask(k, 0), right_mask(k, 0);
    for (std::size_t o = 0; o < k; ++o) {
        for (std::size_t cell : orbits[o]) {
            const auto [l, r] = pair.split(cell);
            left_mask[o] |= std::uint64_t{1} << l;
            right_mask[o] |= std::uint64_t{1} << r;
        }
    }
    const std::uint64_t left_full =
        pair.left_points == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pair.left_points) - 1;
    const std::uint64_t right_full =
        pair.right_points == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pair.right_points) - 1;

    std::vector<Joining> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
        std::uint64_t lm = 0, rm = 0;
        for (std::size_t o = 0; o < k; ++o) {
            if (bits & (std::uint64_t{1} << o)) {
                lm |= left_mask[o];
                rm |= right_mask[o];
            }
        }
        if (lm != left_full || rm != right_full) continue;
        Joining j;
        for (std::size_t o = 0; o < k; ++o) {
            if (bits & (std::uint64_t{1} << o)) {
                j.cells.insert(j.cells.end(), orbits[o].begin(), orbits[o].end());
            }
        }
        std::sort(j.cells.begin(), j.cells.end());
        out.push_back(std::move(j));
    }
    std::sort(out.begin(), out.end(), [](const Joining& a, const Joining& b) {
        if (a.cells.size() != b.cells.size()) return a.cells.size() < b.cells.size();
        return a.cells < b.cells;
    });
    return out;
}

bool joining_valid(const ProductPair& pair, const Joining& j) {
    if (j.cells.empty()) return false;
    std::vector<bool> member(pair.product.points(), false);
    for (std::size_t cell : j.cells) {
        if (cell >= pair.product.points()) return false;
        member[cell] = true;
    }
    std::vector<bool> left_hit(pair.left_points, false), right_hit(pair.right_points, false);
    for (std::size_t cell : j.cells) {
        if (!member[pair.product.step(cell)]) return false;  // not invariant
        const auto [l, r] = pair.split(cell);
        left_hit[l] = true;
        right_hit[r] = true;
    }
    return std::find(left_hit.begin(), left_hit.end(), false) == left_hit.end() &&
           std::find(right_hit.begin(), right_hit.end(), false) == right_hit.end();
}

DisjointnessReport is_disjoint(const FiniteSystem& left, const FiniteSystem& right,
                               std::size_t point_cap, std::size_t orbit_cap) {
    const ProductPair pair = make_product_pair(left, right, point_cap);
    const std::vector<Joining> joinings = enumerate_joinings(pair, orbit_cap);
    DisjointnessReport r;
    r.joining_count = joinings.size();
    r.disjoint = joinings.size() == 1;
    if (!r.disjoint) {
        // Smallest proper joining; the list is ordered by size, the full
        // product sits last.
        r.witness = joinings.front();
    }
    return r;
}

bool projection_inequality_check(const FiniteSystem& sys, const FiniteSubset& a,
                                 std::size_t target, std::uint64_t horizon) {
    if (target >= sys.points()) throw std::invalid_argument("target point out of range");
    const FiniteSubset target_set = FiniteSubset::of(sys, {target});
    std::vector<std::size_t> front = a.elems;
    FiniteSubset image = a;
    for (std::uint64_t n = 0; n <= horizon; ++n) {
        const double bound = hausdorff_distance(sys, image, target_set);
        for (std::size_t x : front) {
            if (sys.distance(x, target) > bound) return false;
        }
        for (std::size_t& x : front) x = sys.step(x);
        image = induced_image(sys, image);
    }
    return true;
}

}  // namespace indyn
