// Copyright 2026 The noisytele Authors
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

#include "noisytele/cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "noisytele/errors.h"
#include "noisytele/format.h"
#include "noisytele/optimize.h"
#include "noisytele/verify.h"

namespace noisytele {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::optional<NoiseKind> parse_kind(std::string_view name) {
    static const std::map<std::string_view, NoiseKind> kinds{{"none", NoiseKind::kNone},
                                                             {"bf", NoiseKind::kBitFlip},
                                                             {"phf", NoiseKind::kPhaseFlip},
                                                             {"d", NoiseKind::kDepolarizing},
                                                             {"ad", NoiseKind::kAmplitudeDamping}};
    const auto it = kinds.find(name);
    if (it == kinds.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string optional_number(const std::optional<double> &v) { return v ? format_number(*v) : std::string(); }

/// RFC 4180 quoting; scenario labels such as "BF,0,AD" contain commas.
std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

/// Applies `fn` to every index in [0, n) on a small thread pool and returns
/// the results in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
    std::vector<T> out(n);
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < std::min(workers, n); ++w) {
        pool.emplace_back(work);
    }
    work();
    for (std::thread &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

/// Family label for a matched configuration; a clean input read as bit flip
/// with p = 0 is shown as clean.
std::string scenario_name(const NoiseConfig &config, const std::optional<Scenario> &match) {
    if (!match) {
        return "custom";
    }
    std::string name = label(match->family);
    const bool input_first =
        std::holds_alternative<InputOnly>(match->family) || std::holds_alternative<InputAndBob>(match->family);
    if (input_first && config.input.kind == NoiseKind::kNone && name.starts_with("BF,")) {
        name.replace(0, 2, "0");
    }
    return name;
}

CsvRow base_row(const NoiseConfig &config, double theta, double phi) {
    CsvRow row;
    row.config = config;
    row.p_in = config.input.effective_p();
    row.p_a = config.alice.effective_p();
    row.p_b = config.bob.effective_p();
    row.theta = theta;
    row.phi = phi;
    row.concurrence = concurrence(theta);
    return row;
}

Scenario series_scenario(const SeriesSpec &s, double v) {
    const bool shared = s.axis == SweptAxis::kShared;
    const bool input = s.axis == SweptAxis::kInput;
    return std::visit(Overloaded{
                          [&](const InputOnly &) { return Scenario{s.family, input ? v : s.fixed, 0.0}; },
                          [&](const InputAndBob &) {
                              return input ? Scenario{s.family, v, s.fixed} : Scenario{s.family, s.fixed, v};
                          },
                          [&](const AlicePair &) {
                              return shared ? Scenario{s.family, v, s.fixed} : Scenario{s.family, s.fixed, v};
                          },
                          [&](const ChannelPair &) {
                              return shared ? Scenario{s.family, s.fixed, v} : Scenario{s.family, v, s.fixed};
                          },
                          [&](const ChannelChoiceAD &) { return Scenario{s.family, v, 0.0}; },
                      },
                      s.family);
}

void write_rows(std::ostream &os, const std::vector<CsvRow> &rows) {
    os << csv_header() << '\n';
    for (const CsvRow &r : rows) {
        os << to_csv(r) << '\n';
    }
}

/// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + path + "'");
    }
    file << text;
}

struct NoiseArgs {
    std::string in = "none";
    std::string a = "none";
    std::string b = "none";
    std::string channel = "phi";
    double theta = 0.0;
    double phi = 0.0;
    CLI::Option *theta_opt = nullptr;
    CLI::Option *phi_opt = nullptr;

    void add_to(CLI::App *cmd, bool angles) {
        cmd->add_option("--in", in, "Noise on the input qubit (kind:p)");
        cmd->add_option("--a", a, "Noise on Alice's channel qubit (kind:p)");
        cmd->add_option("--b", b, "Noise on Bob's qubit (kind:p)");
        cmd->add_option("--channel", channel, "Shared resource: phi or psi")->check(CLI::IsMember({"phi", "psi"}));
        if (angles) {
            theta_opt = cmd->add_option("--theta", theta, "Channel angle (radians)");
            phi_opt = cmd->add_option("--phi", phi, "Measurement angle (radians)");
        }
    }

    ChannelKind channel_kind() const { return channel == "psi" ? ChannelKind::kPsi : ChannelKind::kPhi; }
    std::optional<double> theta_value() const {
        return theta_opt && theta_opt->count() ? std::optional(theta) : std::nullopt;
    }
    std::optional<double> phi_value() const {
        return phi_opt && phi_opt->count() ? std::optional(phi) : std::nullopt;
    }
    NoiseConfig config() const { return {parse_noise_spec(in), parse_noise_spec(a), parse_noise_spec(b)}; }
};

struct QuadArgs {
    int prob0 = QuadratureSpec{}.nodes_prob0;
    int phase = QuadratureSpec{}.nodes_phase;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--quad-prob0", prob0, "Gauss-Legendre nodes in |a|^2");
        cmd->add_option("--quad-phase", phase, "Uniform nodes in the relative phase");
    }
    QuadratureSpec spec() const {
        QuadratureSpec q{prob0, phase};
        q.validate();
        return q;
    }
};

/// Substitutes the swept value for "x" in a custom-sweep token.
std::optional<NoiseSpec> parse_swept(std::string_view token, double value) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos || token.substr(colon + 1) != "x") {
        return std::nullopt;
    }
    const std::string concrete = std::string(token.substr(0, colon + 1)) + format_number(value);
    return parse_noise_spec(concrete);
}

int cmd_run(const NoiseArgs &noise, const QuadArgs &quad, const std::string &out_path, std::ostream &out) {
    const CsvRow row =
        evaluate_config(noise.config(), noise.channel_kind(), noise.theta_value(), noise.phi_value(), quad.spec());
    emit(out_path, csv_header() + "\n" + to_csv(row) + "\n", out);
    return kExitOk;
}

int cmd_sweep(const std::string &figure, const NoiseArgs &noise, const QuadArgs &quad, double step, double tol,
              const std::string &out_path, std::ostream &out, std::ostream &err) {
    if (!(step > 0.0 && step <= 1.0)) {
        throw UsageError("--step must be in (0, 1]");
    }
    const QuadratureSpec q = quad.spec();
    std::vector<CsvRow> rows;
    if (!figure.empty()) {
        const auto id = parse_figure(figure);
        if (!id) {
            throw UsageError("unknown figure id '" + figure + "'");
        }
        rows = figure_rows(figure_sweep(*id, step), q);
    } else {
        const std::vector<double> values = sweep_values(step);
        const bool any_swept = parse_swept(noise.in, 0.0) || parse_swept(noise.a, 0.0) || parse_swept(noise.b, 0.0);
        if (!any_swept) {
            throw UsageError("custom sweep needs --figure or a noise spec with probability 'x' (e.g. --b ad:x)");
        }
        auto resolve = [](const std::string &token, double v) {
            const auto swept = parse_swept(token, v);
            return swept ? *swept : parse_noise_spec(token);
        };
        for (const std::string *token : {&noise.in, &noise.a, &noise.b}) {
            (void)resolve(*token, 0.0);
        }
        rows = parallel_map<CsvRow>(values.size(), [&](std::size_t i) {
            const double v = values[i];
            const NoiseConfig config{resolve(noise.in, v), resolve(noise.a, v), resolve(noise.b, v)};
            return evaluate_config(config, noise.channel_kind(), noise.theta_value(), noise.phi_value(), q);
        });
    }
    std::ostringstream text;
    write_rows(text, rows);
    emit(out_path, text.str(), out);

    int status = kExitOk;
    for (const CsvRow &r : rows) {
        const auto d = r.delta();
        if (d && *d > tol) {
            err << "delta " << format_number(*d) << " exceeds tolerance " << format_number(tol) << " for "
                << r.scenario << " at p=(" << format_number(r.p_in) << "," << format_number(r.p_a) << ","
                << format_number(r.p_b) << ")\n";
            status = kExitVerifyFailed;
        }
    }
    return status;
}

int cmd_optimize(const NoiseArgs &noise, const QuadArgs &quad, int grid, const std::string &out_path,
                 std::ostream &out) {
    if (grid < kMinGrid) {
        throw UsageError("--grid must be at least " + std::to_string(kMinGrid) + " for optimize");
    }
    const NoiseConfig config = noise.config();
    const ChannelKind channel = noise.channel_kind();
    const OptimizeReport r = optimize_angles(config, channel, grid, quad.spec());
    const auto match = match_scenario(config, channel);
    std::ostringstream text;
    text << "scenario,kind_in,kind_a,kind_b,p_in,p_a,p_b,channel,best_theta,best_phi,best_value,concurrence,regime,"
            "grid_resolution,refinement_iterations\n";
    text << csv_field(scenario_name(config, match)) << ',' << to_string(config.input.kind) << ','
         << to_string(config.alice.kind) << ',' << to_string(config.bob.kind) << ','
         << format_number(config.input.effective_p()) << ',' << format_number(config.alice.effective_p()) << ','
         << format_number(config.bob.effective_p()) << ',' << to_string(channel) << ','
         << format_number(r.best_theta) << ',' << format_number(r.best_phi) << ',' << format_number(r.best_value)
         << ',' << format_number(concurrence(r.best_theta)) << ','
         << to_string(classify_regime(r.best_theta, r.best_phi)) << ',' << r.grid_resolution << ','
         << r.refinement_iterations << '\n';
    emit(out_path, text.str(), out);
    return kExitOk;
}

int cmd_verify(int grid, double tol, const std::string &out_path, std::ostream &out) {
    if (grid < 2) {
        throw UsageError("--grid must be at least 2 for verify");
    }
    if (!(tol >= 0.0)) {
        throw UsageError("--tol must be non-negative");
    }
    const std::vector<CheckResult> results = run_verification({grid, tol});

    struct GroupStats {
        int total = 0;
        int failed = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, GroupStats> groups;
    std::vector<const CheckResult *> failures;
    for (const CheckResult &r : results) {
        if (!groups.contains(r.group)) {
            order.push_back(r.group);
        }
        GroupStats &g = groups[r.group];
        ++g.total;
        if (!r.passed) {
            ++g.failed;
            failures.push_back(&r);
        }
    }

    std::ostringstream text;
    text << "group,checks,passed,failed\n";
    for (const std::string &name : order) {
        const GroupStats &g = groups[name];
        text << name << ',' << g.total << ',' << g.total - g.failed << ',' << g.failed << '\n';
    }
    text << "total," << results.size() << ',' << results.size() - failures.size() << ',' << failures.size() << '\n';
    if (!failures.empty()) {
        text << "\nfailed checks\ngroup,check,measured,threshold\n";
        for (const CheckResult *r : failures) {
            text << r->group << ',' << r->name << ',' << format_number(r->measured) << ','
                 << format_number(r->threshold) << '\n';
        }
    }
    emit(out_path, text.str(), out);
    return failures.empty() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

NoiseSpec parse_noise_spec(std::string_view token) {
    const std::string quoted = "'" + std::string(token) + "'";
    const auto colon = token.find(':');
    const auto kind = parse_kind(token.substr(0, colon));
    if (!kind) {
        throw UsageError("bad noise spec " + quoted + ": kind must be one of none, bf, phf, d, ad");
    }
    if (*kind == NoiseKind::kNone) {
        if (colon != std::string_view::npos) {
            throw UsageError("bad noise spec " + quoted + ": 'none' takes no probability");
        }
        return {};
    }
    if (colon == std::string_view::npos) {
        throw UsageError("bad noise spec " + quoted + ": expected kind:p");
    }
    const std::string_view number = token.substr(colon + 1);
    double p = 0.0;
    const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), p);
    if (number.empty() || ec != std::errc{} || end != number.data() + number.size()) {
        throw UsageError("bad noise spec " + quoted + ": probability is not a number");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("bad noise spec " + quoted + ": probability must be in [0, 1]");
    }
    return {*kind, p};
}

double p_of_time(double t, double T) {
    if (!(T > 0.0)) {
        throw UsageError("characteristic time must be positive");
    }
    if (!(t >= 0.0)) {
        throw UsageError("time must be non-negative");
    }
    return -std::expm1(-t / T);
}

std::optional<double> CsvRow::delta() const {
    if (!f_closed) {
        return std::nullopt;
    }
    return std::abs(*f_closed - f_numeric);
}

std::string csv_header() {
    return "scenario,kind_in,kind_a,kind_b,p_in,p_a,p_b,theta,phi,concurrence,f_closed,f_numeric,delta";
}

std::string to_csv(const CsvRow &row) {
    std::string s = csv_field(row.scenario);
    for (const NoiseSpec *spec : {&row.config.input, &row.config.alice, &row.config.bob}) {
        s += ',';
        s += to_string(spec->kind);
    }
    for (double v : {row.p_in, row.p_a, row.p_b, row.theta, row.phi, row.concurrence}) {
        s += ',';
        s += format_number(v);
    }
    s += ',' + optional_number(row.f_closed);
    s += ',' + format_number(row.f_numeric);
    s += ',' + optional_number(row.delta());
    return s;
}

std::optional<FigureId> parse_figure(std::string_view name) {
    static const std::map<std::string_view, FigureId> figures{
        {"fig1", FigureId::kFig1}, {"fig2", FigureId::kFig2},   {"fig3", FigureId::kFig3},   {"fig4", FigureId::kFig4},
        {"fig5", FigureId::kFig5}, {"figA1", FigureId::kFigA1}, {"figA2", FigureId::kFigA2},
    };
    const auto it = figures.find(name);
    if (it == figures.end()) {
        return std::nullopt;
    }
    return it->second;
}

SweepSpec figure_sweep(FigureId figure, double step) {
    using K = NoiseKind;
    SweepSpec spec{figure, {}, step};
    auto bob_panels = [&](K input, const std::vector<double> &fixed, const std::vector<K> &bobs) {
        for (double p_in : fixed) {
            spec.series.push_back({InputOnly{input}, SweptAxis::kBob, p_in});
            for (K bob : bobs) {
                spec.series.push_back({InputAndBob{input, bob}, SweptAxis::kBob, p_in});
            }
        }
    };
    const std::vector<K> noisy{K::kBitFlip, K::kPhaseFlip, K::kDepolarizing, K::kAmplitudeDamping};
    switch (figure) {
        case FigureId::kFig1:
            for (K k : noisy) {
                spec.series.push_back({InputOnly{k}, SweptAxis::kInput, 0.0});
            }
            break;
        case FigureId::kFig2:
            bob_panels(K::kBitFlip, {0.1, 0.3, 0.7, 0.9}, noisy);
            break;
        case FigureId::kFig3:
            bob_panels(K::kPhaseFlip, {0.1, 0.3, 0.7, 0.9}, noisy);
            break;
        case FigureId::kFig4:
            for (double p : {0.1, 0.2, 0.3, 0.4}) {
                for (K bob : {K::kNone, K::kBitFlip, K::kPhaseFlip, K::kDepolarizing, K::kAmplitudeDamping}) {
                    spec.series.push_back({AlicePair{bob}, SweptAxis::kBob, p});
                }
            }
            break;
        case FigureId::kFig5:
            spec.series.push_back({ChannelChoiceAD{ChannelKind::kPhi}, SweptAxis::kShared, 0.0});
            spec.series.push_back({ChannelChoiceAD{ChannelKind::kPsi}, SweptAxis::kShared, 0.0});
            break;
        case FigureId::kFigA1:
            bob_panels(K::kDepolarizing, {0.2}, noisy);
            break;
        case FigureId::kFigA2:
            bob_panels(K::kAmplitudeDamping, {0.2}, noisy);
            break;
    }
    return spec;
}

std::vector<double> sweep_values(double step) {
    if (!(step > 0.0 && step <= 1.0)) {
        throw UsageError("sweep step must be in (0, 1]");
    }
    std::vector<double> out;
    const double n = std::round(1.0 / step);
    if (std::abs(n * step - 1.0) < 1e-9) {
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            out.push_back(i / n);
        }
        return out;
    }
    for (int i = 0; i * step < 1.0 - 1e-12; ++i) {
        out.push_back(i * step);
    }
    out.push_back(1.0);
    return out;
}

CsvRow evaluate_series_point(const SeriesSpec &series, double value, const QuadratureSpec &quad) {
    const Scenario s = series_scenario(series, value);
    const ClosedForm cf = closed_form(s);
    const NoiseConfig config = noise_config(s);
    const ProtocolParams params{cf.setting.theta, cf.setting.phi, channel_of(s.family)};
    CsvRow row = base_row(config, params.theta, params.phi);
    row.scenario = label(s.family);
    // A clean qubit on the swept axis still reports the swept value.
    if (series.axis == SweptAxis::kBob && config.bob.kind == NoiseKind::kNone) {
        row.p_b = value;
    }
    row.f_closed = cf.value;
    row.f_numeric = haar_average(params, config, quad);
    return row;
}

std::vector<CsvRow> figure_rows(const SweepSpec &spec, const QuadratureSpec &quad) {
    const std::vector<double> values = sweep_values(spec.step);
    const std::size_t per_series = values.size();
    return parallel_map<CsvRow>(spec.series.size() * per_series, [&](std::size_t i) {
        return evaluate_series_point(spec.series[i / per_series], values[i % per_series], quad);
    });
}

CsvRow evaluate_config(const NoiseConfig &config, ChannelKind channel, std::optional<double> theta,
                       std::optional<double> phi, const QuadratureSpec &quad) {
    config.validate();
    const auto match = match_scenario(config, channel);
    double th = kQuarterPi;
    double ph = kQuarterPi;
    if (match) {
        const OptimalSetting best = closed_form(*match).setting;
        th = best.theta;
        ph = best.phi;
    }
    th = theta.value_or(th);
    ph = phi.value_or(ph);
    CsvRow row = base_row(config, th, ph);
    row.scenario = scenario_name(config, match);
    if (match) {
        row.f_closed = closed_form_at(*match, th, ph);
    }
    row.f_numeric = haar_average({th, ph, channel}, config, quad);
    return row;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noisy quantum teleportation: fidelity runs, sweeps, optimization and verification", "noisytele"};
    app.require_subcommand(1);

    std::string out_path;
    NoiseArgs run_noise;
    QuadArgs run_quad;
    CLI::App *run_cmd = app.add_subcommand("run", "Average fidelity of one configuration");
    run_noise.add_to(run_cmd, true);
    run_quad.add_to(run_cmd);
    run_cmd->add_option("--out", out_path, "Output file (default stdout)");

    NoiseArgs sweep_noise;
    QuadArgs sweep_quad;
    std::string figure;
    double step = 0.01;
    double sweep_tol = 1e-9;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Figure data or a custom sweep over one probability ('x')");
    sweep_noise.add_to(sweep_cmd, true);
    sweep_quad.add_to(sweep_cmd);
    sweep_cmd->add_option("--figure", figure, "fig1..fig5, figA1, figA2");
    sweep_cmd->add_option("--step", step, "Probability step");
    sweep_cmd->add_option("--tol", sweep_tol, "Largest accepted |f_closed - f_numeric|");
    sweep_cmd->add_option("--out", out_path, "Output file (default stdout)");

    NoiseArgs opt_noise;
    QuadArgs opt_quad;
    int opt_grid = kDefaultGrid;
    CLI::App *opt_cmd = app.add_subcommand("optimize", "Maximize the average fidelity over both angles");
    opt_noise.add_to(opt_cmd, false);
    opt_quad.add_to(opt_cmd);
    opt_cmd->add_option("--grid", opt_grid, "Coarse grid points per angle");
    opt_cmd->add_option("--out", out_path, "Output file (default stdout)");

    int verify_grid = 21;
    double verify_tol = 1e-9;
    CLI::App *verify_cmd = app.add_subcommand("verify", "Run the invariant and closed-form checks");
    verify_cmd->add_option("--grid", verify_grid, "Points per probability axis");
    verify_cmd->add_option("--tol", verify_tol, "Closed-form tolerance");
    verify_cmd->add_option("--out", out_path, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) {
            return cmd_run(run_noise, run_quad, out_path, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(figure, sweep_noise, sweep_quad, step, sweep_tol, out_path, out, err);
        }
        if (*opt_cmd) {
            return cmd_optimize(opt_noise, opt_quad, opt_grid, out_path, out);
        }
        return cmd_verify(verify_grid, verify_tol, out_path, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}

}  // namespace noisytele
