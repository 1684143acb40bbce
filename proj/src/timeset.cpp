#include "indyn/timeset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "indyn/errors.hpp"

namespace indyn {

TimeSet TimeSet::of(std::uint64_t window, std::vector<std::uint64_t> members) {
    if (window == 0) throw std::invalid_argument("window must be positive");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= window) {
        throw std::invalid_argument("member " + std::to_string(members.back()) +
                                    " outside window [0," + std::to_string(window) + ")");
    }
    return TimeSet{window, std::move(members)};
}

bool TimeSet::contains(std::uint64_t n) const {
    return std::binary_search(members.begin(), members.end(), n);
}

GapReport syndetic_gap(const TimeSet& s) {
    if (s.members.empty()) throw std::invalid_argument("gap of an empty time set");
    std::uint64_t gap = s.members.front();  // wait from 0 to the first hit
    for (std::size_t i = 1; i < s.members.size(); ++i) {
        gap = std::max(gap, s.members[i] - s.members[i - 1]);
    }
    gap = std::max(gap, s.window - s.members.back());
    return GapReport{gap, gap < s.window};
}

std::uint64_t max_run(const TimeSet& s) {
    std::uint64_t best = 0;
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i > 0 && s.members[i] == s.members[i - 1] + 1) {
            ++run;
        } else {
            run = 1;
        }
        best = std::max(best, run);
    }
    return best;
}

double upper_density_estimate(const TimeSet& s) {
    const std::uint64_t w = s.window;
    double best = 0.0;
    std::size_t count = 0;
    const std::uint64_t start = (w + 1) / 2;
    // advance the member cursor once across the suffix schedule
    while (count < s.members.size() && s.members[count] < start) ++count;
    for (std::uint64_t n = start; n <= w; ++n) {
        while (count < s.members.size() && s.members[count] < n) ++count;
        best = std::max(best, static_cast<double>(count) / static_cast<double>(n));
    }
    return best;
}

double banach_density_estimate(const TimeSet& s, std::uint64_t len) {
    if (len == 0 || len > s.window) {
        throw std::invalid_argument("interval length " + std::to_string(len) +
                                    " outside [1," + std::to_string(s.window) + "]");
    }
    std::uint64_t best = 0;
    std::size_t lo = 0, hi = 0;
    for (std::uint64_t a = 0; a + len <= s.window; ++a) {
        while (hi < s.members.size() && s.members[hi] < a + len) ++hi;
        while (lo < s.members.size() && s.members[lo] < a) ++lo;
        best = std::max(best, static_cast<std::uint64_t>(hi - lo));
    }
    return static_cast<double>(best) / static_cast<double>(len);
}

TimeSet fs_generate(const std::vector<std::uint64_t>& generators) {
    if (generators.empty() || generators.size() > 20) {
        throw std::invalid_argument("need between 1 and 20 generators");
    }
    std::uint64_t total = 0;
    for (std::uint64_t g : generators) {
        if (g == 0) throw std::invalid_argument("generators must be positive");
        if (total > UINT64_MAX - g) throw std::overflow_error("generator sum overflows");
        total += g;
    }
    std::vector<std::uint64_t> sums;
    sums.reserve((std::size_t{1} << generators.size()) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << generators.size()); ++mask) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) sum += generators[i];
        }
        sums.push_back(sum);
    }
    return TimeSet::of(total + 1, std::move(sums));
}

std::vector<IpSampleResult> ip_star_window_check(
    const TimeSet& s, const std::vector<std::vector<std::uint64_t>>& samples) {
    std::vector<IpSampleResult> out;
    out.reserve(samples.size());
    for (const auto& gens : samples) {
        const TimeSet fs = fs_generate(gens);
        if (fs.window > s.window) {
            throw cap_error("finite-sums set reaches " + std::to_string(fs.window - 1) +
                            ", window is " + std::to_string(s.window));
        }
        IpSampleResult r;
        for (std::uint64_t m : fs.members) {
            if (s.contains(m)) {
                r.intersects = true;
                r.witness = m;
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

bool ResidueTimeSet::contains(std::uint64_t n) const {
    if (n < prefix_len) {
        return std::binary_search(prefix_members.begin(), prefix_members.end(), n);
    }
    return std::binary_search(residues.begin(), residues.end(), n % modulus);
}

bool ResidueTimeSet::empty() const { return prefix_members.empty() && residues.empty(); }

std::optional<std::uint64_t> ResidueTimeSet::first() const {
    if (!prefix_members.empty()) return prefix_members.front();
    if (residues.empty()) return std::nullopt;
    // first member of the tail: smallest n >= prefix_len with n mod modulus a residue
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t r : residues) {
        const std::uint64_t base = prefix_len > r ? prefix_len - r : 0;
        const std::uint64_t k = (base + modulus - 1) / modulus;
        best = std::min(best, r + k * modulus);
    }
    return best;
}

ResidueTimeSet ResidueTimeSet::intersect(const ResidueTimeSet& other) const {
    const std::uint64_t g = std::gcd(modulus, other.modulus);
    const std::uint64_t l = modulus / g * other.modulus;
    if (l > (std::uint64_t{1} << 32)) throw cap_error("residue modulus lcm too large");
    ResidueTimeSet out;
    out.modulus = l;
    out.prefix_len = std::max(prefix_len, other.prefix_len);
    for (std::uint64_t n = 0; n < out.prefix_len; ++n) {
        if (contains(n) && other.contains(n)) out.prefix_members.push_back(n);
    }
    for (std::uint64_t r = 0; r < l; ++r) {
        const bool a = std::binary_search(residues.begin(), residues.end(), r % modulus);
        const bool b =
            std::binary_search(other.residues.begin(), other.residues.end(), r % other.modulus);
        if (a && b) out.residues.push_back(r);
    }
    return out;
}

TimeSet ResidueTimeSet::window(std::uint64_t w) const {
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; n < w; ++n) {
        if (contains(n)) members.push_back(n);
    }
    return TimeSet::of(w, std::move(members));
}

std::optional<std::uint64_t> ResidueTimeSet::exact_max_gap() const {
    if (residues.empty()) return std::nullopt;
    // Beyond prefix_len + modulus the gap pattern repeats, so scanning two
    // extra periods sees every gap, including the prefix/tail seam.
    const std::uint64_t horizon = prefix_len + 2 * modulus;
    std::uint64_t gap = 0;
    std::optional<std::uint64_t> prev;
    for (std::uint64_t n = 0; n < horizon; ++n) {
        if (!contains(n)) continue;
        gap = std::max(gap, prev ? n - *prev : n);
        prev = n;
    }
    return gap;
}

double ResidueTimeSet::tail_density() const {
    return static_cast<double>(residues.size()) / static_cast<double>(modulus);
}

}  // namespace indyn
