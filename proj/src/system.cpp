#include "indyn/system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "indyn/errors.hpp"

namespace indyn {

namespace {

std::string entry(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Metric Metric::from_matrix(std::vector<std::vector<double>> rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("metric matrix is empty");
    Matrix m;
    m.n = n;
    m.d.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw std::invalid_argument("metric row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) m.d[i * n + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m.d[i * n + i] != 0.0) {
            throw std::invalid_argument("metric" + entry(i, i) + " must be 0");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = m.d[i * n + j];
            if (dij != m.d[j * n + i]) {
                throw std::invalid_argument("metric not symmetric at " + entry(i, j));
            }
            if (!(dij > 0.0)) {
                throw std::invalid_argument("metric" + entry(i, j) +
                                            " must be positive for distinct points");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (m.d[i * n + k] > m.d[i * n + j] + m.d[j * n + k] + 1e-12) {
                    throw std::invalid_argument("metric violates the triangle inequality at (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
                }
            }
        }
    }
    return Metric(Impl{std::move(m)});
}

Metric Metric::from_coords(std::vector<double> coords) {
    if (coords.empty()) throw std::invalid_argument("coordinate list is empty");
    std::vector<std::size_t> order(coords.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return coords[a] < coords[b]; });
    for (std::size_t t = 1; t < order.size(); ++t) {
        if (coords[order[t - 1]] == coords[order[t]]) {
            throw std::invalid_argument("coords1d points " + std::to_string(order[t - 1]) + " and " +
                                        std::to_string(order[t]) + " coincide");
        }
    }
    return Metric(Impl{Coords{std::move(coords)}});
}

Metric Metric::dyadic(std::size_t depth) {
    if (depth == 0 || depth > 62) throw std::invalid_argument("dyadic metric depth out of range");
    Dyadic d;
    d.depth = depth;
    d.n = std::size_t{1} << depth;
    return Metric(Impl{d});
}

Metric Metric::product_max(Metric lhs, Metric rhs) {
    Product p;
    p.lhs = std::make_shared<const Metric>(std::move(lhs));
    p.rhs = std::make_shared<const Metric>(std::move(rhs));
    return Metric(Impl{std::move(p)});
}

std::size_t Metric::points() const {
    return std::visit(
        [](const auto& m) -> std::size_t {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Matrix>) return m.n;
            else if constexpr (std::is_same_v<T, Coords>) return m.x.size();
            else if constexpr (std::is_same_v<T, Dyadic>) return m.n;
            else return m.lhs->points() * m.rhs->points();
        },
        impl_);
}

double Metric::operator()(std::size_t i, std::size_t j) const {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Matrix>) {
                return m.d[i * m.n + j];
            } else if constexpr (std::is_same_v<T, Coords>) {
                return std::abs(m.x[i] - m.x[j]);
            } else if constexpr (std::is_same_v<T, Dyadic>) {
                if (i == j) return 0.0;
                return std::ldexp(1.0, -std::countr_zero(i ^ j));
            } else {
                const std::size_t nr = m.rhs->points();
                const double a = (*m.lhs)(i / nr, j / nr);
                const double b = (*m.rhs)(i % nr, j % nr);
                return a > b ? a : b;
            }
        },
        impl_);
}

std::string Metric::kind() const {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Matrix>) return "matrix";
            else if constexpr (std::is_same_v<T, Coords>) return "coords1d";
            else if constexpr (std::is_same_v<T, Dyadic>) return "dyadic";
            else return "product-max";
        },
        impl_);
}

FiniteSystem::FiniteSystem(std::vector<std::size_t> forward, Metric metric, bool tds,
                           std::vector<std::string> labels)
    : forward_(std::move(forward)),
      metric_(std::move(metric)),
      tds_(tds),
      labels_(std::move(labels)) {}

FiniteSystem FiniteSystem::create(std::vector<std::size_t> forward, Metric metric, bool tds,
                                  std::vector<std::string> labels) {
    const std::size_t n = forward.size();
    if (n == 0) throw std::invalid_argument("system has no points");
    if (metric.points() != n) {
        throw std::invalid_argument("metric covers " + std::to_string(metric.points()) +
                                    " points, map covers " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (forward[i] >= n) {
            throw std::invalid_argument("map[" + std::to_string(i) + "] = " +
                                        std::to_string(forward[i]) + " out of range");
        }
    }
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    } else if (labels.size() != n) {
        throw std::invalid_argument("labels has " + std::to_string(labels.size()) +
                                    " entries, expected " + std::to_string(n));
    }
    FiniteSystem sys(std::move(forward), std::move(metric), tds, std::move(labels));
    sys.analyze_orbits();
    if (tds && !sys.surjective_) {
        std::size_t missing = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (sys.preimages_[i].empty()) {
                missing = i;
                break;
            }
        }
        throw std::invalid_argument("map is not surjective: point " + std::to_string(missing) +
                                    " has no preimage (required in t.d.s. mode)");
    }
    return sys;
}

void FiniteSystem::analyze_orbits() {
    const std::size_t n = forward_.size();
    preimages_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) preimages_[forward_[i]].push_back(i);
    surjective_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (preimages_[i].empty()) {
            surjective_ = false;
            break;
        }
    }

    // Walk the functional graph once to find all cycles.
    period_.assign(n, 0);
    std::vector<int> state(n, 0);  // 0 fresh, 1 on current path, 2 finished
    std::vector<std::size_t> path;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        path.clear();
        std::size_t v = start;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = forward_[v];
        }
        if (state[v] == 1) {
            // Found a new cycle: the path tail from v.
            auto it = std::find(path.begin(), path.end(), v);
            std::vector<std::size_t> cycle(it, path.end());
            const auto smallest = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), smallest, cycle.end());
            for (std::size_t c : cycle) period_[c] = cycle.size();
            cycles_.push_back(std::move(cycle));
        }
        for (std::size_t p : path) state[p] = 2;
    }
    std::sort(cycles_.begin(), cycles_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    pointwise_periodic_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (period_[i] == 0) {
            pointwise_periodic_ = false;
            break;
        }
    }
    if (pointwise_periodic_) {
        unsigned __int128 l = 1;
        for (const auto& cycle : cycles_) {
            const std::uint64_t len = cycle.size();
            const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(l % len), len);
            l = l / g * len;
            if (l > UINT64_MAX) throw std::overflow_error("global period exceeds 64 bits");
        }
        global_period_ = static_cast<std::uint64_t>(l);
    }
}

std::size_t FiniteSystem::step(std::size_t i) const {
    if (i >= forward_.size()) {
        throw std::invalid_argument("point index " + std::to_string(i) + " out of range");
    }
    return forward_[i];
}

std::size_t FiniteSystem::step_n(std::size_t i, std::uint64_t n) const {
    std::size_t v = i;
    if (i >= forward_.size()) {
        throw std::invalid_argument("point index " + std::to_string(i) + " out of range");
    }
    const std::uint64_t p = period_[i];
    if (p > 0) n %= p;  // valid once on a cycle; pre-periodic points keep the full walk
    for (std::uint64_t k = 0; k < n; ++k) v = forward_[v];
    return v;
}

double FiniteSystem::distance(std::size_t i, std::size_t j) const {
    if (i >= points() || j >= points()) {
        throw std::invalid_argument("point index out of range");
    }
    return metric_(i, j);
}

const std::string& FiniteSystem::label(std::size_t i) const {
    if (i >= labels_.size()) throw std::invalid_argument("point index out of range");
    return labels_[i];
}

std::uint64_t FiniteSystem::point_period(std::size_t i) const {
    if (i >= period_.size()) throw std::invalid_argument("point index out of range");
    return period_[i];
}

std::uint64_t FiniteSystem::global_period() const {
    if (!pointwise_periodic_) {
        throw std::invalid_argument("system is not pointwise periodic, no global period");
    }
    return global_period_;
}

FiniteSystem load_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("parse error in '" + path.string() + "': " + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("system file must hold a JSON object");
    if (!doc.contains("points") || !doc["points"].is_number_unsigned()) {
        throw std::invalid_argument("field 'points' missing or not a nonnegative integer");
    }
    const std::size_t n = doc["points"].get<std::size_t>();
    if (!doc.contains("map") || !doc["map"].is_array()) {
        throw std::invalid_argument("field 'map' missing or not an array");
    }
    std::vector<std::size_t> forward;
    for (const auto& v : doc["map"]) {
        if (!v.is_number_unsigned()) throw std::invalid_argument("field 'map' has a non-index entry");
        forward.push_back(v.get<std::size_t>());
    }
    if (forward.size() != n) {
        throw std::invalid_argument("field 'map' has " + std::to_string(forward.size()) +
                                    " entries, expected " + std::to_string(n));
    }
    if (!doc.contains("metric") || !doc["metric"].is_object()) {
        throw std::invalid_argument("field 'metric' missing or not an object");
    }
    const auto& met = doc["metric"];
    const std::string kind = met.value("kind", "");
    Metric metric = [&] {
        if (kind == "matrix") {
            std::vector<std::vector<double>> rows;
            for (const auto& row : met.at("data")) rows.push_back(row.get<std::vector<double>>());
            return Metric::from_matrix(std::move(rows));
        }
        if (kind == "coords1d") {
            return Metric::from_coords(met.at("data").get<std::vector<double>>());
        }
        throw std::invalid_argument("metric.kind must be 'matrix' or 'coords1d', got '" + kind + "'");
    }();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    const bool tds = doc.value("tds", true);
    return FiniteSystem::create(std::move(forward), std::move(metric), tds, std::move(labels));
}

FiniteSystem make_cycle(std::size_t length) {
    if (length == 0 || length > (std::size_t{1} << 20)) {
        throw std::invalid_argument("cycle length out of range");
    }
    std::vector<std::size_t> forward(length);
    std::vector<double> coords(length);
    for (std::size_t i = 0; i < length; ++i) {
        forward[i] = (i + 1) % length;
        coords[i] = static_cast<double>(i) / static_cast<double>(length);
    }
    return FiniteSystem::create(std::move(forward), Metric::from_coords(std::move(coords)), true);
}

FiniteSystem make_harmonic(std::size_t depth) {
    if (depth == 0 || depth > 16) throw std::invalid_argument("harmonic depth out of range (1..16)");
    const std::size_t top = (std::size_t{2} << depth) - 1;  // 2^(depth+1) - 1
    const std::size_t n = top + 1;
    std::vector<std::size_t> forward(n);
    std::vector<double> coords(n);
    std::vector<std::string> labels(n);
    coords[0] = 0.0;
    labels[0] = "0";
    forward[0] = 0;
    forward[1] = 1;
    coords[1] = 1.0;
    labels[1] = "1";
    for (std::size_t k = 2; k <= top; ++k) {
        coords[k] = 1.0 / static_cast<double>(k);
        labels[k] = "1/" + std::to_string(k);
        const std::size_t block = std::bit_floor(k);  // 2^floor(log2 k)
        forward[k] = (k + 1 < 2 * block) ? k + 1 : block;
    }
    return FiniteSystem::create(std::move(forward), Metric::from_coords(std::move(coords)), true,
                                std::move(labels));
}

FiniteSystem product_system(const FiniteSystem& lhs, const FiniteSystem& rhs,
                            std::size_t point_cap) {
    const std::size_t nl = lhs.points();
    const std::size_t nr = rhs.points();
    if (nl * nr > point_cap) {
        throw cap_error("product would have " + std::to_string(nl) + "*" + std::to_string(nr) +
                        " points, cap is " + std::to_string(point_cap));
    }
    const std::size_t n = nl * nr;
    std::vector<std::size_t> forward(n);
    std::vector<std::string> labels(n);
    for (std::size_t l = 0; l < nl; ++l) {
        for (std::size_t r = 0; r < nr; ++r) {
            forward[l * nr + r] = lhs.step(l) * nr + rhs.step(r);
            labels[l * nr + r] = "(" + lhs.label(l) + "," + rhs.label(r) + ")";
        }
    }
    return FiniteSystem::create(std::move(forward),
                                Metric::product_max(lhs.metric(), rhs.metric()),
                                lhs.tds() && rhs.tds(), std::move(labels));
}

std::vector<std::size_t> orbit(const FiniteSystem& sys, std::size_t x, std::uint64_t steps) {
    if (x >= sys.points()) {
        throw std::invalid_argument("point index " + std::to_string(x) + " out of range");
    }
    std::vector<std::size_t> out;
    out.reserve(steps + 1);
    std::size_t v = x;
    out.push_back(v);
    for (std::uint64_t k = 0; k < steps; ++k) {
        v = sys.step(v);
        out.push_back(v);
    }
    return out;
}

FactorMap make_factor_map(const FiniteSystem& domain, const FiniteSystem& codomain,
                          std::vector<std::size_t> to) {
    if (to.size() != domain.points()) {
        throw std::invalid_argument("factor map covers " + std::to_string(to.size()) +
                                    " points, domain has " + std::to_string(domain.points()));
    }
    std::vector<bool> hit(codomain.points(), false);
    for (std::size_t i = 0; i < to.size(); ++i) {
        if (to[i] >= codomain.points()) {
            throw std::invalid_argument("factor map image of " + std::to_string(i) + " out of range");
        }
        hit[to[i]] = true;
    }
    for (std::size_t y = 0; y < codomain.points(); ++y) {
        if (!hit[y]) {
            throw std::invalid_argument("factor map misses codomain point " + std::to_string(y));
        }
    }
    for (std::size_t i = 0; i < to.size(); ++i) {
        if (to[domain.step(i)] != codomain.step(to[i])) {
            throw std::invalid_argument("factor map is not equivariant at point " +
                                        std::to_string(i));
        }
    }
    return FactorMap{std::move(to)};
}

FactorMap cycle_projection(const FiniteSystem& big, const FiniteSystem& small) {
    if (small.points() == 0 || big.points() % small.points() != 0) {
        throw std::invalid_argument("cycle projection needs |big| divisible by |small|");
    }
    std::vector<std::size_t> to(big.points());
    for (std::size_t i = 0; i < to.size(); ++i) to[i] = i % small.points();
    return make_factor_map(big, small, std::move(to));
}

}  // namespace indyn
