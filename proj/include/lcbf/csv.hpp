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

#ifndef LCBF_CSV_HPP
#define LCBF_CSV_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcbf::csv
{

// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
// wrapped in quotes with inner quotes doubled.
std::string escape(std::string_view field);

// Writes one record terminated by CRLF.
void write_record(std::ostream &os, const std::vector<std::string> &fields);

// Reads one record, honouring quoted fields that span lines. Returns nullopt
// at end of input.
std::optional<std::vector<std::string>> read_record(std::istream &is);

// Shortest decimal text that parses back to the same double; "inf", "-inf"
// and "nan" for non-finite values.
std::string format_double(double v);
double parse_double(const std::string &s);

} // namespace lcbf::csv

#endif
