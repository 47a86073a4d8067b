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

#include "lcbf/results_io.hpp"
#include "lcbf/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lcbf
{

using nlohmann::json;

namespace
{

std::vector<std::string> header_fields() { return {"method", "antenna", "p_dbm", "cee_db", "seed", "p_star", "se_true", "se_est", "rates_true", "wall_time_ms"}; }

std::string join_rates(const std::vector<double> &r)
{
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i)
    {
        if (i)
            out += ';';
        out += csv::format_double(r[i]);
    }
    return out;
}

std::vector<double> split_rates(const std::string &s)
{
    std::vector<double> out;
    if (s.empty())
        return out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ';'))
        out.push_back(csv::parse_double(item));
    return out;
}

std::uint64_t parse_u64(const std::string &s)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try
    {
        v = std::stoull(s, &used);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (s.empty() || used != s.size() || s[0] == '-')
        throw std::invalid_argument("results: bad seed '" + s + "'");
    return v;
}

json number_or_text(double v)
{
    if (std::isfinite(v))
        return v;
    return csv::format_double(v);
}

using GroupKey = std::tuple<std::string, std::string, double, double>;

} // namespace

void write_results_header(std::ostream &os) { csv::write_record(os, header_fields()); }

void write_result_row(std::ostream &os, const ResultRow &r)
{
    csv::write_record(os, {r.method, r.antenna, csv::format_double(r.p_dbm), csv::format_double(r.cee_db),
                           std::to_string(r.seed), std::to_string(r.p_star), csv::format_double(r.se_true),
                           csv::format_double(r.se_est), join_rates(r.rates_true),
                           r.wall_time_ms ? csv::format_double(*r.wall_time_ms) : std::string()});
}

void write_results(std::ostream &os, const std::vector<ResultRow> &rows)
{
    write_results_header(os);
    for (const auto &r : rows)
        write_result_row(os, r);
}

std::vector<ResultRow> read_results(std::istream &is)
{
    auto header = csv::read_record(is);
    if (!header || *header != header_fields())
        throw std::invalid_argument("results: schema mismatch (expected header '" + std::string(kResultsHeader) + "')");
    std::vector<ResultRow> rows;
    std::size_t line = 1;
    while (auto rec = csv::read_record(is))
    {
        ++line;
        if (rec->size() == 1 && rec->front().empty())
            continue;
        if (rec->size() != header->size())
            throw std::invalid_argument("results: record " + std::to_string(line) + " has " +
                                        std::to_string(rec->size()) + " fields");
        const auto &f = *rec;
        ResultRow r;
        r.method = f[0];
        r.antenna = f[1];
        r.p_dbm = csv::parse_double(f[2]);
        r.cee_db = csv::parse_double(f[3]);
        r.seed = parse_u64(f[4]);
        r.p_star = static_cast<int>(parse_u64(f[5]));
        r.se_true = csv::parse_double(f[6]);
        r.se_est = csv::parse_double(f[7]);
        r.rates_true = split_rates(f[8]);
        if (!f[9].empty())
            r.wall_time_ms = csv::parse_double(f[9]);
        if (r.p_star < 1 || !(r.se_true >= 0.0) || !(r.se_est >= 0.0))
            throw std::invalid_argument("results: record " + std::to_string(line) + " violates row invariants");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ResultRow> read_results_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open results file '" + path + "'");
    return read_results(in);
}

bool canonical_less(const ResultRow &a, const ResultRow &b)
{
    return std::tie(a.antenna, a.p_dbm, a.cee_db, a.seed, a.method) <
           std::tie(b.antenna, b.p_dbm, b.cee_db, b.seed, b.method);
}

double mean_of(const std::vector<double> &v)
{
    if (v.empty())
        return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double> &v)
{
    if (v.size() < 2)
        return 0.0;
    const double m = mean_of(v);
    double acc = 0.0;
    for (double x : v)
        acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

double median_of(std::vector<double> v)
{
    if (v.empty())
        return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow> &rows)
{
    std::map<GroupKey, std::pair<std::vector<double>, std::vector<double>>> groups;
    for (const auto &r : rows)
    {
        auto &g = groups[{r.antenna, r.method, r.p_dbm, r.cee_db}];
        g.first.push_back(r.se_true);
        g.second.push_back(r.se_est);
    }
    std::vector<AggregateRow> out;
    for (const auto &[key, g] : groups)
    {
        AggregateRow a;
        a.antenna = std::get<0>(key);
        a.method = std::get<1>(key);
        a.p_dbm = std::get<2>(key);
        a.cee_db = std::get<3>(key);
        a.n = static_cast<int>(g.first.size());
        a.se_true_mean = mean_of(g.first);
        a.se_true_std = stddev_of(g.first);
        a.se_true_median = median_of(g.first);
        a.se_est_mean = mean_of(g.second);
        a.se_est_std = stddev_of(g.second);
        out.push_back(a);
    }
    return out;
}

void write_aggregate(std::ostream &os, const std::vector<AggregateRow> &rows)
{
    csv::write_record(os, {"method", "antenna", "p_dbm", "cee_db", "n", "se_true_mean", "se_true_std",
                           "se_true_median", "se_est_mean", "se_est_std"});
    for (const auto &a : rows)
        csv::write_record(os, {a.method, a.antenna, csv::format_double(a.p_dbm), csv::format_double(a.cee_db),
                               std::to_string(a.n), csv::format_double(a.se_true_mean),
                               csv::format_double(a.se_true_std), csv::format_double(a.se_true_median),
                               csv::format_double(a.se_est_mean), csv::format_double(a.se_est_std)});
}

std::vector<Degradation> degradation_ratios(const std::vector<ResultRow> &rows)
{
    // (antenna, method, P) -> cee -> seed -> se_true
    std::map<std::tuple<std::string, std::string, double>, std::map<double, std::map<std::uint64_t, double>>> table;
    for (const auto &r : rows)
        if (std::isfinite(r.cee_db))
            table[{r.antenna, r.method, r.p_dbm}][r.cee_db][r.seed] = r.se_true;

    std::vector<Degradation> out;
    for (const auto &[key, by_cee] : table)
    {
        if (by_cee.size() < 2)
            continue;
        Degradation d;
        d.antenna = std::get<0>(key);
        d.method = std::get<1>(key);
        d.p_dbm = std::get<2>(key);
        d.cee_lo = by_cee.begin()->first;
        d.cee_hi = by_cee.rbegin()->first;
        const auto &lo = by_cee.begin()->second;
        const auto &hi = by_cee.rbegin()->second;
        std::vector<double> lo_v, hi_v;
        for (const auto &[seed, se_lo] : lo)
        {
            auto it = hi.find(seed);
            if (it == hi.end())
                continue;
            lo_v.push_back(se_lo);
            hi_v.push_back(it->second);
            d.ratios.push_back(se_lo > 0.0 ? it->second / se_lo : 0.0);
        }
        if (d.ratios.empty())
            continue;
        d.median_ratio = median_of(d.ratios);
        const double m_lo = mean_of(lo_v);
        d.mean_ratio = m_lo > 0.0 ? mean_of(hi_v) / m_lo : 0.0;
        d.reduction_percent = 100.0 * (1.0 - d.median_ratio);
        out.push_back(std::move(d));
    }
    return out;
}

std::string summary_json(const std::vector<ResultRow> &rows)
{
    json j;
    j["row_count"] = rows.size();
    json agg = json::array();
    for (const auto &a : aggregate(rows))
        agg.push_back({{"method", a.method},
                       {"antenna", a.antenna},
                       {"p_dbm", a.p_dbm},
                       {"cee_db", number_or_text(a.cee_db)},
                       {"n", a.n},
                       {"se_true_mean", a.se_true_mean},
                       {"se_true_std", a.se_true_std},
                       {"se_true_median", a.se_true_median},
                       {"se_est_mean", a.se_est_mean},
                       {"se_est_std", a.se_est_std}});
    j["aggregate"] = agg;

    json deg = json::array();
    for (const auto &d : degradation_ratios(rows))
    {
        json e = {{"method", d.method},
                  {"antenna", d.antenna},
                  {"p_dbm", d.p_dbm},
                  {"cee_lo_db", d.cee_lo},
                  {"cee_hi_db", d.cee_hi},
                  {"seeds", d.ratios.size()},
                  {"median_ratio", d.median_ratio},
                  {"mean_ratio", d.mean_ratio},
                  {"measured_reduction_percent", d.reduction_percent}};
        if (d.method == "lnn")
            e["reference_reduction_percent"] = kReferenceReductionLnn;
        else if (d.method == "gd")
            e["reference_reduction_percent"] = kReferenceReductionGd;
        deg.push_back(e);
    }
    j["degradation"] = deg;
    j["reference"] = {{"lnn_reduction_percent", kReferenceReductionLnn},
                      {"gd_reduction_percent", kReferenceReductionGd},
                      {"note", "published reductions at CEE 0 dB versus -20 dB on site-specific channels; "
                               "structural template, not a target"}};
    return j.dump(2) + "\n";
}

} // namespace lcbf
