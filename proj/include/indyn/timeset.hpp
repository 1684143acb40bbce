#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace indyn {

/// Set of nonnegative integers restricted to the observation window [0, W).
/// All verdicts computed from a TimeSet are in-window estimates.
struct TimeSet {
    std::uint64_t window = 0;
    std::vector<std::uint64_t> members;  // sorted, unique, < window

    static TimeSet of(std::uint64_t window, std::vector<std::uint64_t> members);
    bool contains(std::uint64_t n) const;
    bool empty() const { return members.empty(); }
};

struct GapReport {
    std::uint64_t max_gap = 0;
    bool covers_window = false;  // max_gap < window, i.e. the set recurs across the window
};

/// Largest wait between hits, counting the lead-in from 0 and the tail out to
/// the window end. Throws on an empty set.
GapReport syndetic_gap(const TimeSet& s);

/// Length of the longest block of consecutive integers; 0 for the empty set.
std::uint64_t max_run(const TimeSet& s);

/// max over n in [ceil(W/2), W] of |S cap [0,n)| / n. A limsup proxy, valid
/// only within the window.
double upper_density_estimate(const TimeSet& s);

/// max over intervals I of length exactly `len` inside [0, W) of |S cap I|/|I|.
/// The fixed length keeps the sliding-window ratio comparable across windows
/// and avoids the degenerate short-interval value 1.
double banach_density_estimate(const TimeSet& s, std::uint64_t len);

/// All nonempty finite subset sums of the generators, windowed to max sum + 1.
/// At most 20 generators.
TimeSet fs_generate(const std::vector<std::uint64_t>& generators);

struct IpSampleResult {
    bool intersects = false;
    std::optional<std::uint64_t> witness;
};

/// Whether s meets the finite-sums set of each sampled generator list. An
/// evidence probe only: window-limited, never a proof that s meets every such
/// set.
std::vector<IpSampleResult> ip_star_window_check(
    const TimeSet& s, const std::vector<std::vector<std::uint64_t>>& samples);

/// Eventually periodic subset of Z+, stored exactly: an explicit prefix
/// [0, prefix_len) plus a union of residue classes mod `modulus` from
/// prefix_len on. This represents cylinder return-time sets exactly, so
/// verdicts drawn from it are proofs, not estimates.
struct ResidueTimeSet {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> residues;        // sorted, unique, < modulus
    std::uint64_t prefix_len = 0;
    std::vector<std::uint64_t> prefix_members;  // sorted, unique, < prefix_len

    bool contains(std::uint64_t n) const;
    bool empty() const;
    std::optional<std::uint64_t> first() const;
    ResidueTimeSet intersect(const ResidueTimeSet& other) const;
    TimeSet window(std::uint64_t window) const;

    /// Contains arbitrarily long runs iff the periodic tail is all of Z+.
    bool thick() const { return residues.size() == modulus; }
    /// Bounded gaps iff the periodic tail is nonempty.
    bool syndetic() const { return !residues.empty(); }
    /// Exact sup of gaps over all of Z+; nullopt when the set is not syndetic.
    std::optional<std::uint64_t> exact_max_gap() const;
    /// Density of the periodic tail (the exact Banach and natural density).
    double tail_density() const;
};

}  // namespace indyn
