/*
   Copyright 2026 The rankcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RANKCODES_EXPERIMENT_HPP
#define RANKCODES_EXPERIMENT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "channel.hpp"
#include "folded_gabidulin.hpp"
#include "io.hpp"
#include "subspace_code.hpp"

namespace rankcodes::experiment {

using json = nlohmann::json;

/// Exit codes of the experiment CLI.
enum exit_code : int { ok = 0, miss = 1, config_error = 2, io_error = 3 };

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Family { subspace, folded };

struct Cell {
    std::size_t rho = 0, t = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

struct ExperimentConfig {
    Family family = Family::subspace;
    FieldPtr field;
    std::size_t n = 0, k = 0, s = 1, h = 1;
    std::vector<Cell> cells;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    bool timing = false;
    std::size_t parallel = 1;

    std::variant<SubspaceCodeParams, FoldedParams> params() const {
        if (family == Family::subspace) return SubspaceCodeParams::make(field, n, k, s);
        return FoldedParams::make(field, n, k, h, s);
    }
};

struct TrialRecord {
    std::size_t rho = 0, t = 0, trial = 0;
    bool success = false;
    long long list_dim = -1;  ///< -1: empty list (infeasible or degenerate decode)
    bool guaranteed = false;
    long long micros = 0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

namespace detail {

inline std::vector<std::size_t> as_list(const json& j, const char* what) {
    if (j.is_number_unsigned()) return {j.get<std::size_t>()};
    if (j.is_array()) return j.get<std::vector<std::size_t>>();
    throw ConfigError(std::string(what) + " must be a non-negative integer or a list of them");
}

inline bool guaranteed(const ExperimentConfig& c, const Cell& cell) {
    if (c.family == Family::subspace) return within_guarantee(c.n, c.k, c.s, cell.rho, cell.t);
    return static_cast<long long>(cell.t) <= fg_max_errors(FoldedParams::make(c.field, c.n, c.k, c.h, c.s));
}

inline std::size_t max_t(const ExperimentConfig& c) {
    if (c.family == Family::subspace) return c.s * c.field->m();  // N - n
    return std::min(c.n / c.h, c.h * c.field->m());
}

}  // namespace detail

/// Parses an ExperimentConfig; every failure is reported as ConfigError.
///
///   { "family": "subspace" | "folded-gabidulin",
///     "field": {"p": 2, "e": 1, "m": 6, "modulus": [...]},
///     "code": {"n": 4, "k": 2, "s": 2, "h": 1},
///     "channel": {"rho": [..], "t": [..]}  or  {"region": "guarantee" | "full"},
///     "trials": 100, "seed": 1, "timing": false,
///     "output": {"path": "out.csv", "format": "csv" | "json"} }
inline ExperimentConfig parse_config(const json& j) {
    ExperimentConfig c;
    try {
        const auto fam = j.at("family").get<std::string>();
        if (fam == "subspace")
            c.family = Family::subspace;
        else if (fam == "folded-gabidulin")
            c.family = Family::folded;
        else
            throw ConfigError("unknown family '" + fam + "'");
        c.field = io::field_from_json(j.at("field"));
        const auto& code = j.at("code");
        c.n = code.at("n").get<std::size_t>();
        c.k = code.at("k").get<std::size_t>();
        c.s = code.value("s", std::size_t{1});
        c.h = code.value("h", std::size_t{1});
        c.trials = j.value("trials", std::size_t{1});
        c.seed = j.value("seed", std::uint64_t{0});
        c.timing = j.value("timing", false);
        if (j.contains("output")) {
            c.out_path = j["output"].value("path", std::string{});
            c.format = j["output"].value("format", std::string{"csv"});
        }
        (void)c.params();  // module validation

        const json ch = j.value("channel", json::object());
        const std::size_t tmax = detail::max_t(c);
        const std::size_t rho_max = c.family == Family::subspace ? c.n : 0;
        if (ch.contains("region")) {
            const auto region = ch.at("region").get<std::string>();
            if (region != "guarantee" && region != "full") throw ConfigError("unknown region '" + region + "'");
            for (std::size_t rho = 0; rho <= rho_max; ++rho)
                for (std::size_t t = 0; t <= tmax; ++t)
                    if (region == "full" || detail::guaranteed(c, {rho, t})) c.cells.push_back({rho, t});
        } else {
            const auto rhos = ch.contains("rho") ? detail::as_list(ch.at("rho"), "rho") : std::vector<std::size_t>{0};
            const auto ts = ch.contains("t") ? detail::as_list(ch.at("t"), "t") : std::vector<std::size_t>{0};
            for (auto rho : rhos)
                for (auto t : ts) {
                    if (rho > rho_max) throw ConfigError("rho = " + std::to_string(rho) + " out of range");
                    if (t > tmax) throw ConfigError("t = " + std::to_string(t) + " out of range");
                    c.cells.push_back({rho, t});
                }
        }
        if (c.cells.empty()) throw ConfigError("channel grid is empty");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
    if (c.trials == 0) throw ConfigError("trials must be at least 1");
    return c;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("malformed config: " + std::string(e.what()));
    }
    return parse_config(j);
}

/// encode -> channel -> decode with a seed derived from (seed, rho, t, trial).
inline TrialRecord run_trial(const ExperimentConfig& c, const Cell& cell, std::size_t trial) {
    TrialRecord rec{cell.rho, cell.t, trial};
    rec.guaranteed = detail::guaranteed(c, cell);
    Rng rng(derive_seed(c.seed, {cell.rho, cell.t, trial}));
    const auto& f = *c.field;
    Message u(c.k);
    for (auto& x : u) x = Elem{static_cast<std::uint32_t>(rng.below(f.size()))};

    const auto start = std::chrono::steady_clock::now();
    MessageSpace out;
    try {
        if (c.family == Family::subspace) {
            const auto p = SubspaceCodeParams::make(c.field, c.n, c.k, c.s);
            const Subspace received = operator_channel(encode(p, u), cell.rho, cell.t, rng);
            out = list_decode(p, received);
        } else {
            const auto p = FoldedParams::make(c.field, c.n, c.k, c.h, c.s);
            out = fg_list_decode(p, rank_error_channel(fg_encode(p, u), cell.t, rng));
        }
    } catch (const error& e) {
        if (e.code() != errc::degenerate_received_space && e.code() != errc::degenerate_params) throw;
    }
    const auto stop = std::chrono::steady_clock::now();
    if (c.timing) rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    rec.success = out.contains(u);
    rec.list_dim = out.feasible() ? static_cast<long long>(out.dimension()) : -1;
    return rec;
}

/// All trials of all cells in (cell, trial) order, independent of `parallel`.
inline std::vector<TrialRecord> run_sweep(const ExperimentConfig& c) {
    const std::size_t total = c.cells.size() * c.trials;
    std::vector<TrialRecord> recs(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < total;) {
            try {
                recs[i] = run_trial(c, c.cells[i / c.trials], i % c.trials);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(c.parallel, total));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return recs;
}

struct CellSummary {
    Cell cell;
    std::size_t trials = 0, successes = 0;
    bool guaranteed = false;
    long long max_list_dim = -1;
};

inline std::vector<CellSummary> summarize(const std::vector<TrialRecord>& recs) {
    std::vector<CellSummary> out;
    for (const auto& r : recs) {
        if (out.empty() || out.back().cell != Cell{r.rho, r.t}) out.push_back({{r.rho, r.t}, 0, 0, r.guaranteed, -1});
        auto& s = out.back();
        ++s.trials;
        s.successes += r.success;
        s.max_list_dim = std::max(s.max_list_dim, r.list_dim);
    }
    return out;
}

/// Rows whose guarantee flag is set but whose message was missed.
inline std::size_t guarantee_violations(const std::vector<TrialRecord>& recs) {
    return static_cast<std::size_t>(
        std::count_if(recs.begin(), recs.end(), [](const TrialRecord& r) { return r.guaranteed && !r.success; }));
}

inline void write_csv(std::ostream& os, const std::vector<TrialRecord>& recs) {
    os << "rho,t,trial,success,list_dim,guaranteed,micros\n";
    for (const auto& r : recs)
        os << r.rho << ',' << r.t << ',' << r.trial << ',' << int(r.success) << ',' << r.list_dim << ','
           << int(r.guaranteed) << ',' << r.micros << '\n';
}

inline json summary_json(const std::vector<CellSummary>& cells) {
    json out = json::array();
    for (const auto& s : cells)
        out.push_back({{"rho", s.cell.rho},
                       {"t", s.cell.t},
                       {"trials", s.trials},
                       {"successes", s.successes},
                       {"guaranteed", s.guaranteed},
                       {"max_list_dim", s.max_list_dim}});
    return out;
}

inline void write_json(std::ostream& os, const std::vector<TrialRecord>& recs) {
    json rows = json::array();
    for (const auto& r : recs)
        rows.push_back({{"rho", r.rho},
                        {"t", r.t},
                        {"trial", r.trial},
                        {"success", r.success},
                        {"list_dim", r.list_dim},
                        {"guaranteed", r.guaranteed},
                        {"micros", r.micros}});
    os << json{{"records", rows}, {"summary", summary_json(summarize(recs))}}.dump(2) << '\n';
}

inline void print_summary(std::ostream& os, const std::vector<TrialRecord>& recs) {
    os << "rho  t  success/trials  guaranteed  max_list_dim\n";
    for (const auto& s : summarize(recs))
        os << s.cell.rho << "  " << s.cell.t << "  " << s.successes << '/' << s.trials << "  "
           << (s.guaranteed ? "yes" : "no") << "  " << s.max_list_dim << '\n';
    os << "guarantee violations: " << guarantee_violations(recs) << '\n';
}

inline std::string field_label(const Field& f) {
    std::ostringstream os;
    os << "GF(" << f.q() << '^' << f.m() << ")";
    return os.str();
}

/// p/q in lowest terms, or just p when q = 1.
inline std::string fmt(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + '/' + std::to_string(r.denominator());
}

/// Code parameters, rates and guaranteed radii, all exact.
inline void write_info(std::ostream& os, const ExperimentConfig& c) {
    os << "field: " << field_label(*c.field) << " modulus " << io::json(c.field->modulus()).dump() << '\n';
    if (c.family == Family::subspace) {
        const auto p = SubspaceCodeParams::make(c.field, c.n, c.k, c.s);
        const auto base = radius_info(p, 0);
        os << "family: subspace\n"
           << "n = " << c.n << ", k = " << c.k << ", s = " << c.s << ", m = " << c.field->m() << '\n'
           << "N = " << p.ambient_dim() << '\n'
           << "R = " << fmt(base.symbol_rate) << '\n'
           << "R* = " << fmt(base.packet_rate) << '\n'
           << "normalized_radius = " << fmt(base.normalized_radius) << '\n'
           << "list_dim_bound = " << c.field->m() * (c.s - 1) << '\n';
        for (std::size_t rho = 0; rho <= c.n; ++rho) {
            const auto r = radius_info(p, rho);
            os << "rho = " << rho << ": t_max = " << r.t_max;
            if (r.t_max >= 0) {
                const std::size_t dim = c.n - rho + static_cast<std::size_t>(r.t_max);
                os << ", r = " << dim << ", d = " << decoder_d(dim, c.k, c.s);
            }
            os << '\n';
        }
    } else {
        const auto p = FoldedParams::make(c.field, c.n, c.k, c.h, c.s);
        const Rational rate(static_cast<long long>(c.k), static_cast<long long>(c.n));
        os << "family: folded-gabidulin\n"
           << "n = " << c.n << ", k = " << c.k << ", h = " << c.h << ", g = " << p.g() << ", s = " << c.s
           << ", m = " << c.field->m() << '\n'
           << "d = " << fg_decoder_d(p) << '\n'
           << "R = " << fmt(rate) << '\n'
           << "t_max = " << fg_max_errors(p) << '\n'
           << "normalized_radius = "
           << fmt(fg_normalized_radius(static_cast<long long>(c.s), static_cast<long long>(c.h), rate)) << '\n'
           << "list_dim_bound = " << c.field->m() * (c.s - 1) << '\n';
    }
}

}  // namespace rankcodes::experiment

#endif
