// Copyright 2026 The netcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: simulate, certify, scan, heatmap, bootstrap.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "netcert/data.h"
#include "netcert/io.h"
#include "netcert/qsim.h"
#include "netcert/sdp.h"
#include "netcert/witness.h"

using namespace netcert;
namespace fs = std::filesystem;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string scenario = "ghz6";
    std::string network_path;
    int order = 2;
    std::string level = "1";
    std::string inputs;
    std::vector<std::string> bases;
    std::string distribution_path;
    std::string counts_path;
    double visibility = 1.0;
    std::string grid;
    double bisect = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    bool noisy_singles = true;
    std::string out = "out";
    std::uint64_t seed = 1;
    double tol = 1e-7;
    int jobs = 1;
    int max_iterations = 20000;
    bool full = false;
    bool sdpa = false;
    std::uint64_t events = 0;
    std::string witness;
    std::vector<double> fractions;
    int reps = 100;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)> &fn) {
    const std::size_t nt = std::min<std::size_t>(std::max(1, jobs), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; t++) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) {
                        err = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
}

// "all-XZ" and "all-XYZ" expand to every six-letter word over the alphabet.
std::vector<std::string> expand_bases(const std::vector<std::string> &spec) {
    std::vector<std::string> out;
    for (const auto &s : spec) {
        if (s.rfind("all-", 0) == 0) {
            std::string alpha = s.substr(4);
            if (alpha.empty() || alpha.find_first_not_of("XYZ") != std::string::npos) {
                throw ValidationError("bad basis family '" + s + "'");
            }
            std::size_t total = 1;
            for (int i = 0; i < 6; i++) {
                total *= alpha.size();
            }
            for (std::size_t k = 0; k < total; k++) {
                std::string w(6, ' ');
                std::size_t r = k;
                for (int i = 5; i >= 0; i--) {
                    w[i] = alpha[r % alpha.size()];
                    r /= alpha.size();
                }
                out.push_back(w);
            }
        } else {
            if (s.size() != 6 || s.find_first_not_of("XYZ") != std::string::npos) {
                throw ValidationError("bad bases '" + s + "': six letters from X, Y, Z expected");
            }
            out.push_back(s);
        }
    }
    return out;
}

std::pair<Basis, Basis> input_pair(const std::string &s) {
    if (s.size() != 2 || s.find_first_not_of("XYZ") != std::string::npos || s[0] == s[1]) {
        throw ValidationError("--inputs expects two distinct bases, e.g. XZ");
    }
    return {parse_basis(s[0]), parse_basis(s[1])};
}

Network scenario_network(const Config &c) {
    int n_inputs = c.inputs.empty() ? 1 : 2;
    if (c.scenario == "ghz6") {
        return ghz6_network(n_inputs, 2);
    }
    if (c.scenario == "trident") {
        return trident_network(n_inputs, 2);
    }
    if (c.scenario == "custom") {
        if (c.network_path.empty()) {
            throw ValidationError("--scenario custom needs --network");
        }
        return Network::from_file(c.network_path);
    }
    throw ValidationError("unknown scenario '" + c.scenario + "'");
}

// Noise family of the chosen scenario for one basis string or the two-input pair.
std::function<Distribution(double)> family(const Config &c, const std::string &bases) {
    if (c.scenario == "custom") {
        throw ValidationError("visibility families exist only for the ghz6 and trident scenarios");
    }
    const bool ghz = c.scenario == "ghz6";
    const bool ns = c.noisy_singles;
    if (!c.inputs.empty()) {
        auto [a, b] = input_pair(c.inputs);
        if (ghz) {
            if (c.inputs != "XZ") {
                throw ValidationError("the ghz6 two-input family uses --inputs XZ");
            }
            return [](double v) { return ghz_setup_two_input(v); };
        }
        return [a, b, ns](double v) { return trident_two_input(v, a, b, ns); };
    }
    auto bs = parse_bases(bases);
    if (ghz) {
        return [bs](double v) { return ghz_setup_distribution(v, bs); };
    }
    return [bs, ns](double v) { return trident_distribution(v, bs, ns); };
}

std::vector<std::string> input_alphabets(const Config &c, int parties) {
    if (c.inputs.empty()) {
        throw ValidationError("--counts needs --inputs to name each input's basis (e.g. XZ or Z)");
    }
    return std::vector<std::string>(parties, c.inputs);
}

// Target distributions with labels: --distribution, --counts or the scenario family.
std::vector<std::pair<std::string, Distribution>> targets(const Config &c) {
    std::vector<std::pair<std::string, Distribution>> out;
    if (!c.distribution_path.empty()) {
        out.emplace_back(fs::path(c.distribution_path).stem().string(),
                         Distribution::from_json(read_json_file(c.distribution_path)));
        return out;
    }
    if (!c.counts_path.empty()) {
        CountsTable t = load_counts(c.counts_path);
        if (c.inputs.size() == 2) {
            out.emplace_back("counts", to_distribution(t, input_alphabets(c, t.num_parties())));
        } else {
            for (const auto &s : t.settings) {
                out.emplace_back(s.bases, setting_distribution(s));
            }
        }
        return out;
    }
    if (!c.inputs.empty()) {
        out.emplace_back("inputs_" + c.inputs, family(c, "")(c.visibility));
        return out;
    }
    if (c.bases.empty()) {
        throw ValidationError("give --bases, --inputs, --distribution or --counts");
    }
    for (const auto &b : expand_bases(c.bases)) {
        out.emplace_back(b, family(c, b)(c.visibility));
    }
    return out;
}

SolverOptions solver_options(const Config &c) {
    SolverOptions o;
    o.tol = c.tol;
    o.decide = !c.full;
    o.max_iterations = c.max_iterations;
    return o;
}

int cmd_simulate(const Config &c) {
    auto ts = targets(c);
    if (c.events > 0) {
        // Synthetic counts: all settings of the family in one table.
        CountsTable all;
        for (std::size_t k = 0; k < ts.size(); k++) {
            const auto &[label, p] = ts[k];
            std::vector<std::string> alpha;
            if (c.inputs.empty()) {
                for (char ch : label) {
                    alpha.emplace_back(1, ch);
                }
            } else {
                alpha.assign(p.num_parties(), c.inputs);
            }
            auto t = sample_synthetic(p, alpha, c.events, repetition_seed(c.seed, k));
            all.settings.insert(all.settings.end(), t.settings.begin(), t.settings.end());
        }
        std::string path = (fs::path(c.out) / "counts.json").string();
        save_counts(all, path);
        std::cout << path << "\n";
        return 0;
    }
    for (const auto &[label, p] : ts) {
        std::string path = (fs::path(c.out) / (label + ".json")).string();
        write_file_atomic(path, p.to_json().dump() + "\n");
        std::cout << path << "\n";
    }
    return 0;
}

struct CertifyOutcome {
    std::string label;
    SolveReport report;
    std::optional<Witness> witness;
};

CertifyOutcome certify_one(const InflationModel &model, const std::string &label, const Distribution &p,
                           const SolverOptions &opt) {
    AdmmSolver solver;
    CertifyOutcome o;
    o.label = label;
    o.report = solver.solve(model.assemble(p), opt);
    if (o.report.status == SolveStatus::Infeasible) {
        Witness w = extract(o.report, model).normalized();
        w.name = label;
        o.witness = std::move(w);
    }
    return o;
}

int cmd_certify(const Config &c) {
    Network net = scenario_network(c);
    InflationModel model(net, c.order, c.level);
    auto ts = targets(c);
    std::vector<CertifyOutcome> results(ts.size());
    SolverOptions opt = solver_options(c);
    if (c.sdpa) {
        for (const auto &[label, p] : ts) {
            export_sdpa(model.assemble(p), (fs::path(c.out) / (label + ".dat-s")).string());
        }
    }
    parallel_for(ts.size(), c.jobs, [&](std::size_t i) { results[i] = certify_one(model, ts[i].first, ts[i].second, opt); });
    bool inconclusive = false;
    const SdpProblem shape = model.assemble(ts.front().second);
    for (const auto &r : results) {
        auto j = report_to_json(r.report, shape, model.moments(), model.scenario());
        j.erase("moments");
        write_file_atomic((fs::path(c.out) / (r.label + ".report.json")).string(), j.dump(2) + "\n");
        if (r.witness) {
            save_witness(*r.witness, (fs::path(c.out) / (r.label + ".witness.json")).string());
        }
        inconclusive |= r.report.status == SolveStatus::Inconclusive;
        std::cout << r.label << " " << status_name(r.report.status) << " lambda=" << fmt(r.report.lambda)
                  << " iterations=" << r.report.iterations << "\n";
    }
    return inconclusive ? kExitInconclusive : 0;
}

std::vector<double> parse_grid(const std::string &g) {
    std::vector<double> v;
    if (g.find(':') != std::string::npos) {
        double a, b, s;
        char c1, c2;
        std::istringstream is(g);
        if (!(is >> a >> c1 >> b >> c2 >> s) || c1 != ':' || c2 != ':' || !(s > 0) || b < a) {
            throw ValidationError("grid 'start:stop:step' expected");
        }
        for (int k = 0; a + k * s <= b + 1e-12; k++) {
            v.push_back(a + k * s);
        }
        return v;
    }
    std::istringstream is(g);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception &) {
            throw ValidationError("bad grid value '" + tok + "'");
        }
    }
    if (v.empty()) {
        throw ValidationError("empty visibility grid");
    }
    return v;
}

int cmd_scan(const Config &c) {
    Network net = scenario_network(c);
    InflationModel model(net, c.order, c.level);
    std::string label = c.inputs.empty() ? (c.bases.size() == 1 ? c.bases[0] : "") : "inputs_" + c.inputs;
    if (label.empty()) {
        throw ValidationError("scan needs --inputs or a single --bases");
    }
    auto fam = family(c, c.inputs.empty() ? expand_bases(c.bases)[0] : "");
    SolverOptions opt = solver_options(c);
    AdmmSolver solver;
    std::string csv = "step,v,status,lambda\n";
    bool inconclusive = false;
    nlohmann::ordered_json summary;
    if (c.bisect > 0.0) {
        auto res = critical_visibility(model, fam, c.bisect, solver, opt, c.lo, c.hi);
        for (std::size_t i = 0; i < res.steps.size(); i++) {
            csv += std::to_string(i) + "," + fmt(res.steps[i].v) + "," + status_name(res.steps[i].status) + "," +
                   fmt(res.steps[i].lambda) + "\n";
        }
        const char *names[] = {"bracketed", "never_infeasible", "always_infeasible"};
        summary = {{"outcome", names[static_cast<int>(res.outcome)]},
                   {"estimate", res.estimate},
                   {"feasible_v", res.feasible_v},
                   {"infeasible_v", res.infeasible_v}};
        std::cout << label << " critical visibility " << fmt(res.estimate) << " in [" << fmt(res.feasible_v) << ", "
                  << fmt(res.infeasible_v) << "]\n";
    } else {
        auto grid = parse_grid(c.grid.empty() ? fmt(c.visibility) : c.grid);
        std::vector<SolveReport> reps(grid.size());
        parallel_for(grid.size(), c.jobs, [&](std::size_t i) { reps[i] = solver.solve(model.assemble(fam(grid[i])), opt); });
        for (std::size_t i = 0; i < grid.size(); i++) {
            csv += std::to_string(i) + "," + fmt(grid[i]) + "," + status_name(reps[i].status) + "," +
                   fmt(reps[i].lambda) + "\n";
            inconclusive |= reps[i].status == SolveStatus::Inconclusive;
        }
        summary = {{"points", grid.size()}};
        std::cout << csv;
    }
    write_file_atomic((fs::path(c.out) / (label + ".scan.csv")).string(), csv);
    write_file_atomic((fs::path(c.out) / (label + ".scan.json")).string(), summary.dump(2) + "\n");
    return inconclusive ? kExitInconclusive : 0;
}

int cmd_heatmap(const Config &c) {
    Network net = scenario_network(c);
    if (!c.inputs.empty()) {
        throw ValidationError("heatmap works on no-input distributions; drop --inputs");
    }
    InflationModel model(net, c.order, c.level);
    // Witnesses come from the theory distributions at --visibility; columns are either the
    // same theory distributions or the settings of a counts file.
    Config theory = c;
    theory.counts_path.clear();
    theory.distribution_path.clear();
    auto rows = targets(theory);
    SolverOptions opt = solver_options(c);
    std::vector<CertifyOutcome> results(rows.size());
    parallel_for(rows.size(), c.jobs, [&](std::size_t i) { results[i] = certify_one(model, rows[i].first, rows[i].second, opt); });
    std::vector<Witness> ws;
    std::vector<std::string> wl;
    bool inconclusive = false;
    for (const auto &r : results) {
        inconclusive |= r.report.status == SolveStatus::Inconclusive;
        if (r.witness) {
            ws.push_back(*r.witness);
            wl.push_back(r.label);
            save_witness(*r.witness, (fs::path(c.out) / "witnesses" / (r.label + ".json")).string());
        }
    }
    auto cols = c.counts_path.empty() ? rows : targets(c);
    std::vector<Distribution> ds;
    std::vector<std::string> dl;
    for (auto &[l, d] : cols) {
        dl.push_back(l);
        ds.push_back(std::move(d));
    }
    WitnessMatrix m = witness_matrix(ws, wl, ds, dl);
    write_file_atomic((fs::path(c.out) / "heatmap.csv").string(), to_csv(m));
    std::cout << ws.size() << " of " << rows.size() << " distributions yield witnesses\n";
    return inconclusive ? kExitInconclusive : 0;
}

int cmd_bootstrap(const Config &c) {
    if (c.counts_path.empty() || c.witness.empty()) {
        throw ValidationError("bootstrap needs --counts and --witness");
    }
    CountsTable t = load_counts(c.counts_path);
    Witness w = fs::exists(c.witness) ? load_witness(c.witness) : builtin_fixture(c.witness);
    auto alpha = input_alphabets(c, t.num_parties());
    std::vector<double> fr = c.fractions;
    if (fr.empty()) {
        fr = {0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0};
    }
    std::vector<BootstrapResult> curve;
    for (double f : fr) {
        curve.push_back(bootstrap_witness(t, alpha, w, f, c.reps, c.seed, c.jobs));
        const auto &r = curve.back();
        std::cout << "fraction " << fmt(f) << " events " << r.events_per_repetition << " mean " << fmt(r.mean)
                  << " std " << fmt(r.std) << (r.band_high < 0.0 ? " violated" : "") << "\n";
    }
    write_file_atomic((fs::path(c.out) / (w.name + ".bootstrap.csv")).string(), bootstrap_csv(curve));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"netcert: network-structure certification by quantum inflation"};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App *s) {
        s->add_option("--scenario", c.scenario, "ghz6, trident or custom")->capture_default_str();
        s->add_option("--network", c.network_path, "network JSON for --scenario custom");
        s->add_option("--inflation-order", c.order, "copies per source")->capture_default_str();
        s->add_option("--level", c.level, "1, 1+AB, 1+AB+ABC or npa(n)")->capture_default_str();
        s->add_option("--inputs", c.inputs, "two-input family (e.g. XZ), or basis alphabet of a counts file");
        s->add_option("--bases", c.bases, "six-letter bases, or all-XZ / all-XYZ")->delimiter(',');
        s->add_option("--distribution", c.distribution_path, "distribution JSON");
        s->add_option("--counts", c.counts_path, "counts JSON");
        s->add_option("--visibility", c.visibility, "source visibility")->capture_default_str();
        s->add_flag("!--ideal-singles", c.noisy_singles, "trident: keep the single photons noiseless");
        s->add_option("--out", c.out, "output directory")->capture_default_str();
        s->add_option("--seed", c.seed, "random seed")->capture_default_str();
        s->add_option("--tol", c.tol, "feasibility tolerance on the minimum eigenvalue")->capture_default_str();
        s->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
        s->add_option("--max-iterations", c.max_iterations, "solver iteration cap")->capture_default_str();
        s->add_flag("--full", c.full, "solve to convergence instead of stopping at the first certificate");
    };

    auto *sim = app.add_subcommand("simulate", "write theory distributions or synthetic counts");
    common(sim);
    sim->add_option("--events", c.events, "sample this many events per setting into counts.json");
    auto *cert = app.add_subcommand("certify", "test compatibility and extract witnesses");
    common(cert);
    cert->add_flag("--sdpa", c.sdpa, "also export each problem in SDPA sparse format");
    auto *scan = app.add_subcommand("scan", "visibility grid or bisection");
    common(scan);
    scan->add_option("--grid", c.grid, "comma list or start:stop:step");
    scan->add_option("--bisect", c.bisect, "bisection bracket width");
    scan->add_option("--lo", c.lo, "lower end of the bisection bracket")->capture_default_str();
    scan->add_option("--hi", c.hi, "upper end of the bisection bracket")->capture_default_str();
    auto *heat = app.add_subcommand("heatmap", "witness matrix over no-input distributions");
    common(heat);
    auto *boot = app.add_subcommand("bootstrap", "subsampling curve of a witness on counts");
    common(boot);
    boot->add_option("--witness", c.witness, "witness JSON or fixture name (W1, W_XY, W_XZ, W_YZ)");
    boot->add_option("--fractions", c.fractions, "data fractions")->delimiter(',');
    boot->add_option("--reps", c.reps, "repetitions per fraction")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }
    try {
        if (c.jobs < 1) {
            throw ValidationError("--jobs must be positive");
        }
        if (!(c.visibility >= 0.0 && c.visibility <= 1.0)) {
            throw ValidationError("--visibility must lie in [0, 1]");
        }
        if (!(c.tol > 0.0)) {
            throw ValidationError("--tol must be positive");
        }
        if (c.order < 1) {
            throw ValidationError("--inflation-order must be positive");
        }
        if (*sim) {
            return cmd_simulate(c);
        }
        if (*cert) {
            return cmd_certify(c);
        }
        if (*scan) {
            return cmd_scan(c);
        }
        if (*heat) {
            return cmd_heatmap(c);
        }
        return cmd_bootstrap(c);
    } catch (const std::exception &e) {
        std::cerr << "netcert: " << e.what() << "\n";
        return kExitValidation;
    }
}
