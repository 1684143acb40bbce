#include "indyn/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <stdexcept>

#include "indyn/classify.hpp"
#include "indyn/errors.hpp"
#include "indyn/fixtures.hpp"
#include "indyn/joinings.hpp"
#include "indyn/recurrence.hpp"
#include "indyn/serialize.hpp"
#include "indyn/version.hpp"

namespace indyn {

namespace {

Json config_echo(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["systems"] = c.systems;
    j["window"] = c.window;
    j["depth"] = c.depth;
    j["n"] = c.lattice_n;
    j["cap"] = c.cap;
    if (c.command == "induce") j["target"] = c.target;
    if (c.command == "verify") j["check"] = c.check_id;
    j["seed"] = c.seed;
    j["format"] = c.format;
    return j;
}

Report base_report(const RunConfig& c) {
    Report r;
    r.command = c.command;
    r.config = config_echo(c);
    return r;
}

void push(Report& report, CheckRecord record) {
    if (record.verdict == "fail") report.all_pass = false;
    report.records.push_back(std::move(record));
}

ResolvedSystem single_system(const RunConfig& c) {
    if (c.systems.size() != 1) {
        throw std::invalid_argument("expected exactly one system, got " +
                                    std::to_string(c.systems.size()));
    }
    return resolve_descriptor(c.systems.front(), c.depth);
}

const FiniteSystem& finite_or_throw(const ResolvedSystem& rs) {
    if (!rs.finite) {
        throw std::invalid_argument("'" + rs.descriptor +
                                    "' does not resolve to a finite system at this depth");
    }
    return *rs.finite;
}

Json period_histogram(const std::map<std::uint64_t, std::size_t>& hist) {
    Json j = Json::object();
    for (const auto& [p, count] : hist) j[std::to_string(p)] = count;
    return j;
}

}  // namespace

ResolvedSystem resolve_descriptor(const std::string& descriptor, std::size_t quotient_depth) {
    ResolvedSystem rs;
    rs.descriptor = descriptor;
    std::string name = descriptor;
    std::uint64_t param = 0;
    if (const auto colon = descriptor.find(':'); colon != std::string::npos) {
        name = descriptor.substr(0, colon);
        const std::string rest = descriptor.substr(colon + 1);
        if (name == "file") {
            rs.finite = load_system(rest);
            return rs;
        }
        if (name == "product") {
            const auto comma = rest.find(',');
            if (comma == std::string::npos) {
                throw std::invalid_argument("product descriptor needs two factors: '" +
                                            descriptor + "'");
            }
            const ResolvedSystem left = resolve_descriptor(rest.substr(0, comma), quotient_depth);
            const ResolvedSystem right = resolve_descriptor(rest.substr(comma + 1), quotient_depth);
            rs.finite = product_system(finite_or_throw(left), finite_or_throw(right));
            return rs;
        }
        try {
            param = std::stoull(rest);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad parameter '" + rest + "' in descriptor '" +
                                        descriptor + "'");
        }
    }
    if (name.find('/') != std::string::npos ||
        (name.size() > 5 && name.substr(name.size() - 5) == ".json")) {
        rs.finite = load_system(name);
        return rs;
    }
    if (param == 0) param = name == "full-shift" ? 2 : 1;
    CatalogSystem cat = make_catalog_system(name, param);
    if (std::holds_alternative<FiniteSystem>(cat)) {
        rs.finite = std::get<FiniteSystem>(std::move(cat));
    } else {
        rs.cylinder = std::get<CylinderSystem>(std::move(cat));
        if (rs.cylinder->kind() == CylinderSystem::Kind::odometer && quotient_depth > 0) {
            rs.finite = rs.cylinder->finite_quotient(quotient_depth);
        }
    }
    return rs;
}

Json Report::to_json(bool with_timings) const {
    Json j;
    j["schema"] = 1;
    j["tool"] = std::string(tool_name);
    j["version"] = std::string(tool_version);
    j["config"] = config;
    Json recs = Json::array();
    for (const auto& r : records) {
        Json jr;
        jr["id"] = r.id;
        jr["anchor"] = r.anchor;
        jr["verdict"] = r.verdict;
        jr["detail"] = r.detail;
        if (with_timings) jr["elapsed_ms"] = r.elapsed_ms;
        recs.push_back(std::move(jr));
    }
    j["records"] = recs;
    j["all_pass"] = all_pass;
    return j;
}

std::string Report::to_csv() const {
    std::string out;
    for (const auto& r : records) {
        for (const auto& row : r.csv) {
            out += row;
            out += '\n';
        }
    }
    if (out.empty()) {
        out = "id,verdict\n";
        for (const auto& r : records) out += r.id + "," + r.verdict + "\n";
    }
    return out;
}

Report run_analyze(const RunConfig& config) {
    Report report = base_report(config);
    const ResolvedSystem rs = single_system(config);
    const FiniteSystem& sys = finite_or_throw(rs);

    if (!sys.tds()) {
        // Non-surjective mode: no induced-system claims, report the exact
        // periodic/minimal structure and flag the mode.
        CheckRecord rec;
        rec.id = "non-tds-structure";
        rec.anchor = "plumbing";
        rec.verdict = "info";
        rec.detail["tds"] = false;
        rec.detail["periodic_points"] = periodic_points(sys);
        rec.detail["minimal_points"] = minimal_points(sys);
        push(report, std::move(rec));
        return report;
    }

    {
        CheckRecord rec;
        rec.id = "classification";
        rec.anchor = "transitivity, total transitivity, P/M/E verdicts, periodicity";
        rec.verdict = "info";
        rec.detail = json_of(classify(sys));
        push(report, std::move(rec));
    }
    {
        // The ambient period transfers to both induced systems on a finite
        // t.d.s.; cross-check it on the singletons plus sampled subsets.
        CheckRecord rec;
        rec.id = "induced-periods";
        rec.anchor = "base, hyperspace and measure space share the global period";
        const std::uint64_t period = sys.global_period();
        if (period <= 4096) {
            bool ok = true;
            Sampler sampler(config.seed);
            for (std::size_t x = 0; x < sys.points() && ok; ++x) {
                const auto p = period_of_set(sys, FiniteSubset::of(sys, {x}), period);
                ok = p && period % *p == 0;
            }
            for (int t = 0; t < 20 && ok; ++t) {
                const FiniteSubset a = sampler.subset(sys, 4);
                const auto p = period_of_set(sys, a, period);
                ok = p && period % *p == 0;
                const auto mp = measure_period(sys, uniform_on(sys, a.elems), period);
                ok = ok && mp && period % *mp == 0;
            }
            rec.verdict = ok ? "pass" : "fail";
        } else {
            rec.verdict = "info";
            rec.detail["note"] = "period too large for the sampled cross-check";
        }
        rec.detail["period"] = period;
        rec.detail["hyperspace_period"] = period;
        rec.detail["measure_period"] = period;
        push(report, std::move(rec));
    }
    {
        CheckRecord rec;
        rec.id = "return-times";
        rec.anchor = "N(x, U) gap and density analytics over the window";
        rec.verdict = "info";
        Json rows = Json::array();
        const std::size_t sample = std::min<std::size_t>(sys.points(), 16);
        for (std::size_t x = 0; x < sample; ++x) {
            const TimeSet n_x =
                return_times_point(sys, x, FiniteSubset::of(sys, {x}), config.window);
            Json row;
            row["point"] = x;
            row["label"] = sys.label(x);
            row["set"] = json_of(n_x);
            if (!n_x.empty()) {
                const GapReport gap = syndetic_gap(n_x);
                row["max_gap"] = gap.max_gap;
                row["covers_window"] = gap.covers_window;
                row["upper_density"] = upper_density_estimate(n_x);
            }
            row["qualifier"] = "in-window estimate";
            rows.push_back(std::move(row));
        }
        rec.detail["points"] = rows;
        push(report, std::move(rec));
    }
    if (rs.cylinder) {
        CheckRecord rec;
        rec.id = "quotient-note";
        rec.anchor = "plumbing";
        rec.verdict = "info";
        rec.detail["note"] = "cylinder system analyzed through its depth-" +
                             std::to_string(config.depth) + " quotient";
        push(report, std::move(rec));
    }
    return report;
}

Report run_induce(const RunConfig& config) {
    Report report = base_report(config);
    const ResolvedSystem rs = single_system(config);
    const FiniteSystem& sys = finite_or_throw(rs);
    if (!sys.tds()) {
        throw std::invalid_argument("induce requires a t.d.s. (surjective map)");
    }
    const std::uint64_t bound = sys.global_period();

    CheckRecord rec;
    rec.verdict = "pass";
    std::map<std::uint64_t, std::size_t> hist;
    if (config.target == "hyperspace") {
        rec.id = "induced-hyperspace-periods";
        rec.anchor = "every K_n element of a finite t.d.s. is periodic";
        const auto subsets = enumerate_kn(sys, config.lattice_n, config.cap);
        for (const auto& a : subsets) {
            const auto p = period_of_set(sys, a, bound);
            if (!p) {
                rec.verdict = "fail";
                rec.detail["counterexample"] = json_of(a);
                break;
            }
            ++hist[*p];
        }
        rec.detail["elements"] = subsets.size();
    } else if (config.target == "measures") {
        rec.id = "induced-measure-periods";
        rec.anchor = "every M_n lattice measure of a finite t.d.s. is periodic";
        const auto lattice = enumerate_mn(sys, config.lattice_n, config.cap);
        for (const auto& mu : lattice) {
            const auto p = measure_period(sys, mu, bound);
            if (!p) {
                rec.verdict = "fail";
                rec.detail["counterexample"] = json_of(mu);
                break;
            }
            ++hist[*p];
        }
        rec.detail["elements"] = lattice.size();
    } else {
        throw std::invalid_argument("induce target must be 'hyperspace' or 'measures'");
    }
    rec.detail["period_histogram"] = period_histogram(hist);
    rec.detail["ambient_period"] = bound;
    std::vector<std::string> csv{"period,count"};
    for (const auto& [p, count] : hist) {
        csv.push_back(std::to_string(p) + "," + std::to_string(count));
    }
    rec.csv = std::move(csv);
    push(report, std::move(rec));
    return report;
}

Report run_recurrence(const RunConfig& config) {
    Report report = base_report(config);
    const ResolvedSystem rs = single_system(config);

    if (rs.cylinder) {
        const CylinderSystem& cyl = *rs.cylinder;
        CheckRecord rec;
        rec.id = "cylinder-return-times";
        rec.anchor = "exact N(U, V) for cylinder pairs";
        rec.verdict = "info";
        Json rows = Json::array();
        const std::size_t depth = std::min<std::size_t>(config.depth, 3);
        for (const Word& u : cyl.words_up_to(depth)) {
            for (const Word& v : cyl.words_up_to(depth)) {
                const ResidueTimeSet n_uv = cyl.return_times(u, v);
                Json row;
                row["u"] = word_text(u);
                row["v"] = word_text(v);
                row["set"] = json_of(n_uv);
                row["thick"] = n_uv.thick();
                row["syndetic"] = n_uv.syndetic();
                row["qualifier"] = "exact";
                rows.push_back(std::move(row));
            }
        }
        rec.detail["pairs"] = rows;
        push(report, std::move(rec));

        CheckRecord wm;
        wm.id = "weak-mixing-criterion";
        wm.anchor = "N(U,U) meets N(U,V) for all cylinder pairs iff weakly mixing";
        const WeakMixingReport w = weak_mixing_criterion(cyl, std::min<std::size_t>(config.depth, 5));
        wm.verdict = "info";
        wm.detail["pass"] = w.pass;
        if (w.counterexample) {
            wm.detail["counterexample"] =
                Json::array({word_text(w.counterexample->first), word_text(w.counterexample->second)});
        } else {
            wm.detail["pairs_witnessed"] = w.witnesses.size();
        }
        push(report, std::move(wm));
        return report;
    }

    const FiniteSystem& sys = finite_or_throw(rs);
    CheckRecord rec;
    rec.id = "point-return-times";
    rec.anchor = "N(x, U) windowed return-time analytics";
    rec.verdict = "info";
    Json rows = Json::array();
    const std::size_t sample = std::min<std::size_t>(sys.points(), 16);
    std::vector<std::string> csv;
    for (std::size_t x = 0; x < sample; ++x) {
        const TimeSet n_x = return_times_point(sys, x, FiniteSubset::of(sys, {x}), config.window);
        Json row;
        row["point"] = x;
        row["set"] = json_of(n_x);
        if (!n_x.empty()) {
            row["max_gap"] = syndetic_gap(n_x).max_gap;
            row["max_run"] = max_run(n_x);
            row["upper_density"] = upper_density_estimate(n_x);
        }
        rows.push_back(std::move(row));
        if (x == 0) {
            for (std::uint64_t m : n_x.members) csv.push_back(std::to_string(m));
        }
    }
    rec.detail["points"] = rows;
    rec.csv = std::move(csv);
    push(report, std::move(rec));
    return report;
}

Report run_joining(const RunConfig& config) {
    Report report = base_report(config);
    if (config.systems.size() != 2) {
        throw std::invalid_argument("joining needs exactly two systems");
    }
    const ResolvedSystem left = resolve_descriptor(config.systems[0], config.depth);
    const ResolvedSystem right = resolve_descriptor(config.systems[1], config.depth);
    const FiniteSystem& x = finite_or_throw(left);
    const FiniteSystem& y = finite_or_throw(right);

    const ProductPair pair = make_product_pair(x, y);
    const auto joinings = enumerate_joinings(pair);
    const DisjointnessReport d = is_disjoint(x, y);

    CheckRecord rec;
    rec.id = "joinings";
    rec.anchor = "invariant bi-surjective subsets of the product";
    rec.verdict = "info";
    rec.detail["count"] = joinings.size();
    Json sizes = Json::array();
    for (const auto& j : joinings) sizes.push_back(j.cells.size());
    rec.detail["sizes"] = sizes;
    rec.detail["disjoint"] = d.disjoint;
    if (d.witness) rec.detail["witness"] = json_of(*d.witness);
    rec.csv = {"left,right,disjoint,witness_size",
               left.descriptor + "," + right.descriptor + "," + (d.disjoint ? "1" : "0") + "," +
                   std::to_string(d.witness ? d.witness->cells.size() : 0)};
    push(report, std::move(rec));
    return report;
}

Report run_verify(const RunConfig& config) {
    Report report = base_report(config);
    const auto& checks = verify_checks();
    bool matched = false;
    for (const auto& check : checks) {
        if (config.check_id != "all" && config.check_id != check.id) continue;
        matched = true;
        const auto start = std::chrono::steady_clock::now();
        CheckRecord rec = check.run(config);
        rec.id = check.id;
        rec.anchor = check.anchor;
        rec.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        push(report, std::move(rec));
    }
    if (!matched) {
        std::string known;
        for (const auto& check : checks) known += " " + check.id;
        throw std::invalid_argument("unknown check id '" + config.check_id + "'; known:" + known);
    }
    return report;
}

int finish(const RunConfig& config, const Report& report) {
    std::string payload;
    if (config.format == "csv") {
        payload = report.to_csv();
    } else if (config.format == "json") {
        payload = report.to_json(config.timings).dump(2) + "\n";
    } else {
        throw std::invalid_argument("format must be 'json' or 'csv'");
    }
    if (config.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(config.out_path);
        if (!out) throw std::invalid_argument("cannot write '" + config.out_path + "'");
        out << payload;
    }
    return report.all_pass ? 0 : 1;
}

}  // namespace indyn
