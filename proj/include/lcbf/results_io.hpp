// SPDX-License-Identifier: Apache-2.0
//
// lcbf: hybrid beamforming simulation with liquid-crystal pattern codebooks
// and closed-form liquid neural precoders
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LCBF_RESULTS_IO_HPP
#define LCBF_RESULTS_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcbf
{

// One (method, antenna, P, CEE, seed) outcome. p_star is 1-based.
struct ResultRow
{
    std::string method;
    std::string antenna;
    double p_dbm = 0.0;
    double cee_db = 0.0;
    std::uint64_t seed = 0;
    int p_star = 1;
    double se_true = 0.0;
    double se_est = 0.0;
    std::vector<double> rates_true;
    std::optional<double> wall_time_ms; // blank unless timing is enabled

    bool operator==(const ResultRow &) const = default;
};

// Results CSV, schema version 1. Per-user rates are joined with ';' inside a
// single field.
inline constexpr const char *kResultsHeader =
    "method,antenna,p_dbm,cee_db,seed,p_star,se_true,se_est,rates_true,wall_time_ms";

void write_results_header(std::ostream &os);
void write_result_row(std::ostream &os, const ResultRow &row);
void write_results(std::ostream &os, const std::vector<ResultRow> &rows);
// Rejects any header other than kResultsHeader.
std::vector<ResultRow> read_results(std::istream &is);
std::vector<ResultRow> read_results_file(const std::string &path);

// Canonical order: antenna, P, CEE, seed, then method name.
bool canonical_less(const ResultRow &a, const ResultRow &b);

double mean_of(const std::vector<double> &v);
// Sample standard deviation (n - 1); 0 for fewer than two values.
double stddev_of(const std::vector<double> &v);
double median_of(std::vector<double> v);

struct AggregateRow
{
    std::string method;
    std::string antenna;
    double p_dbm = 0.0;
    double cee_db = 0.0;
    int n = 0;
    double se_true_mean = 0.0;
    double se_true_std = 0.0;
    double se_true_median = 0.0;
    double se_est_mean = 0.0;
    double se_est_std = 0.0;
};

// One row per (method, antenna, P, CEE) in canonical order.
std::vector<AggregateRow> aggregate(const std::vector<ResultRow> &rows);
void write_aggregate(std::ostream &os, const std::vector<AggregateRow> &rows);

// se(cee_hi) / se(cee_lo) per seed for each (method, antenna, P) with at least
// two finite CEE levels; cee_lo / cee_hi are the smallest and largest finite
// levels present.
struct Degradation
{
    std::string method;
    std::string antenna;
    double p_dbm = 0.0;
    double cee_lo = 0.0;
    double cee_hi = 0.0;
    std::vector<double> ratios; // paired by seed, seed order
    double median_ratio = 0.0;
    double mean_ratio = 0.0;    // mean se(cee_hi) / mean se(cee_lo)
    double reduction_percent = 0.0; // 100 (1 - median_ratio)
};

std::vector<Degradation> degradation_ratios(const std::vector<ResultRow> &rows);

// Published reduction percentages at CEE 0 dB relative to -20 dB, for the
// liquid network and the iterative gradient baseline.
inline constexpr double kReferenceReductionLnn = 31.7;
inline constexpr double kReferenceReductionGd = 55.4;

// Summary JSON text: aggregates, degradation table with the reference
// percentages, and medians at every grid point.
std::string summary_json(const std::vector<ResultRow> &rows);

} // namespace lcbf

#endif
