#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indyn/catalog.hpp"
#include "indyn/system.hpp"

namespace indyn {

using Json = nlohmann::ordered_json;

/// All randomness in sweeps flows from this single documented default seed.
inline constexpr std::uint64_t default_seed = 123456789;

struct RunConfig {
    std::string command;
    std::vector<std::string> systems;  // descriptors: "cycle:5", "file:path", ...
    std::uint64_t window = 256;
    std::size_t depth = 4;
    std::size_t lattice_n = 2;
    std::string target = "hyperspace";  // induce: hyperspace | measures
    std::string check_id = "all";       // verify
    std::uint64_t cap = std::uint64_t{1} << 20;  // enumeration budget
    std::uint64_t seed = default_seed;
    std::string out_path;
    std::string format = "json";  // json | csv
    bool timings = false;         // timings are off by default so reports are byte-stable
};

struct CheckRecord {
    std::string id;
    std::string anchor;   // the mathematical fact being checked, or "plumbing"
    std::string verdict;  // pass | fail | info
    Json detail;
    std::vector<std::string> csv;  // optional table, first row is the header
    double elapsed_ms = 0.0;
};

struct Report {
    std::string command;
    Json config;
    std::vector<CheckRecord> records;
    bool all_pass = true;

    Json to_json(bool with_timings) const;
    std::string to_csv() const;
};

/// Descriptor grammar: "name", "name:param", "file:path", a bare path
/// containing '/' or ending in ".json", or "product:A,B" for two finite
/// descriptors A and B. Cylinder systems also resolve to a finite odometer
/// quotient of the given depth where one is defined.
struct ResolvedSystem {
    std::string descriptor;
    std::optional<FiniteSystem> finite;
    std::optional<CylinderSystem> cylinder;
};

ResolvedSystem resolve_descriptor(const std::string& descriptor, std::size_t quotient_depth);

Report run_analyze(const RunConfig& config);
Report run_induce(const RunConfig& config);
Report run_recurrence(const RunConfig& config);
Report run_joining(const RunConfig& config);
Report run_verify(const RunConfig& config);

struct VerifyCheck {
    std::string id;
    std::string anchor;
    std::function<CheckRecord(const RunConfig&)> run;
};

/// The anchored checks dispatched by `verify`; the acceptance suite drives
/// the same list.
const std::vector<VerifyCheck>& verify_checks();

/// Writes/prints the report per config; returns the process exit code
/// (0 pass, 1 any failed record).
int finish(const RunConfig& config, const Report& report);

}  // namespace indyn
