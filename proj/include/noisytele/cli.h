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

#ifndef NOISYTELE_CLI_H
#define NOISYTELE_CLI_H

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "noisytele/average.h"
#include "noisytele/closed_form.h"
#include "noisytele/noise.h"
#include "noisytele/states.h"

namespace noisytele {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "kind:p" (kinds none, bf, phf, d, ad; "none" takes no
/// probability). Throws UsageError naming the token.
NoiseSpec parse_noise_spec(std::string_view token);

/// Decoherence probability after time t for characteristic time T.
double p_of_time(double t, double T);

struct CsvRow {
    std::string scenario;
    NoiseConfig config;
    /// Probability columns as written; a swept clean qubit keeps the swept
    /// value here so every series shares its x column.
    double p_in = 0.0;
    double p_a = 0.0;
    double p_b = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double concurrence = 0.0;
    std::optional<double> f_closed;
    double f_numeric = 0.0;

    std::optional<double> delta() const;
};

std::string csv_header();
std::string to_csv(const CsvRow &row);

enum class FigureId { kFig1, kFig2, kFig3, kFig4, kFig5, kFigA1, kFigA2 };

std::optional<FigureId> parse_figure(std::string_view name);

/// Which probability a series sweeps.
enum class SweptAxis { kInput, kBob, kShared };

/// One curve of a figure: a printed family with one probability held fixed.
struct SeriesSpec {
    ScenarioFamily family;
    SweptAxis axis = SweptAxis::kInput;
    double fixed = 0.0;
};

struct SweepSpec {
    std::optional<FigureId> figure;  // empty for a custom sweep
    std::vector<SeriesSpec> series;
    double step = 0.01;
};

/// Curves of a figure. Panels with several fixed probabilities contribute
/// one series per panel.
SweepSpec figure_sweep(FigureId figure, double step = 0.01);

/// Sample points 0, step, 2 step, ..., 1 (1 is always included).
std::vector<double> sweep_values(double step);

/// Evaluates one family at its printed optimum.
CsvRow evaluate_series_point(const SeriesSpec &series, double value, const QuadratureSpec &quad = {});

/// All rows of a figure sweep in deterministic order, computed in parallel.
std::vector<CsvRow> figure_rows(const SweepSpec &spec, const QuadratureSpec &quad = {});

/// Evaluates an arbitrary configuration; angles default to the matching
/// family's optimum, else pi/4.
CsvRow evaluate_config(const NoiseConfig &config, ChannelKind channel, std::optional<double> theta,
                       std::optional<double> phi, const QuadratureSpec &quad = {});

/// Entry point: `args` excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace noisytele

#endif
