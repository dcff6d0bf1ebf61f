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

// Experiment CLI: info, roundtrip and sweep over the subspace and folded
// Gabidulin codes. Exit codes: 0 ok, 1 decode miss, 2 config error, 3 IO error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "rankcodes/experiment.hpp"

namespace ex = rankcodes::experiment;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::size_t> trials;
    std::size_t parallel = 1;
    bool timing = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "experiment config (JSON)")->required();
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--out", o.out, "output path (sweep)");
    cmd->add_option("--format", o.format, "csv or json (sweep)");
    cmd->add_option("--trials", o.trials, "trials per (rho, t) cell");
    cmd->add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--timing", o.timing, "record per-trial wall time (output no longer reproducible)");
}

ex::ExperimentConfig load(const Overrides& o) {
    auto c = ex::load_config(o.config);
    if (o.seed) c.seed = *o.seed;
    if (o.out) c.out_path = *o.out;
    if (o.format) c.format = *o.format;
    if (o.trials) c.trials = *o.trials;
    if (c.format != "csv" && c.format != "json") throw ex::ConfigError("format must be csv or json");
    if (c.trials == 0) throw ex::ConfigError("trials must be at least 1");
    c.parallel = o.parallel;
    c.timing = c.timing || o.timing;
    return c;
}

int cmd_info(const Overrides& o) {
    ex::write_info(std::cout, load(o));
    return ex::ok;
}

int cmd_roundtrip(const Overrides& o) {
    auto c = load(o);
    const ex::Cell cell = c.cells.front();
    const auto rec = ex::run_trial(c, cell, 0);
    std::cout << "rho = " << rec.rho << ", t = " << rec.t << ", list_dim = " << rec.list_dim
              << ", guaranteed = " << (rec.guaranteed ? "yes" : "no") << ", recovered = " << (rec.success ? "yes" : "no")
              << '\n';
    return rec.success ? ex::ok : ex::miss;
}

int cmd_sweep(const Overrides& o) {
    auto c = load(o);
    const auto recs = ex::run_sweep(c);
    if (c.out_path.empty()) {
        if (c.format == "csv")
            ex::write_csv(std::cout, recs);
        else
            ex::write_json(std::cout, recs);
    } else {
        std::ofstream out(c.out_path, std::ios::binary);
        if (!out) throw ex::IoError("cannot open '" + c.out_path + "' for writing");
        if (c.format == "csv")
            ex::write_csv(out, recs);
        else
            ex::write_json(out, recs);
        out.close();
        if (!out) throw ex::IoError("failed writing '" + c.out_path + "'");
        ex::print_summary(std::cout, recs);
    }
    return ex::guarantee_violations(recs) == 0 ? ex::ok : ex::miss;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"List decoding experiments for subspace and folded Gabidulin codes"};
    app.require_subcommand(1);
    Overrides info_o, rt_o, sweep_o;
    auto* info = app.add_subcommand("info", "print code parameters, rates and radii");
    auto* rt = app.add_subcommand("roundtrip", "one encode -> channel -> decode trial");
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo over the configured (rho, t) grid");
    add_common(info, info_o);
    add_common(rt, rt_o);
    add_common(sweep, sweep_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ex::config_error;
    }

    try {
        if (*info) return cmd_info(info_o);
        if (*rt) return cmd_roundtrip(rt_o);
        return cmd_sweep(sweep_o);
    } catch (const ex::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return ex::config_error;
    } catch (const ex::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return ex::io_error;
    } catch (const rankcodes::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ex::config_error;
    }
}
