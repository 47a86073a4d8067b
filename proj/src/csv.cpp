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

#include "lcbf/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lcbf::csv
{

std::string escape(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_record(std::ostream &os, const std::vector<std::string> &fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
        if (i)
            os << ',';
        os << escape(fields[i]);
    }
    os << "\r\n";
}

std::optional<std::vector<std::string>> read_record(std::istream &is)
{
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    bool any = false;
    char c;
    while (is.get(c))
    {
        any = true;
        if (in_quotes)
        {
            if (c == '"')
            {
                if (is.peek() == '"')
                {
                    is.get(c);
                    cur += '"';
                }
                else
                    in_quotes = false;
            }
            else
                cur += c;
        }
        else if (c == '"')
            in_quotes = true;
        else if (c == ',')
        {
            fields.push_back(std::move(cur));
            cur.clear();
        }
        else if (c == '\n')
        {
            fields.push_back(std::move(cur));
            return fields;
        }
        else if (c != '\r')
            cur += c;
    }
    if (in_quotes)
        throw std::runtime_error("csv: unterminated quoted field");
    if (!any)
        return std::nullopt;
    fields.push_back(std::move(cur));
    return fields;
}

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &s)
{
    if (s == "inf" || s == "+inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    if (s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("csv: not a number: '" + s + "'");
    return v;
}

} // namespace lcbf::csv
