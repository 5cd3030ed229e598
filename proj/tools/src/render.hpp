/*
   Copyright 2026 the rdo authors

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

#ifndef RDO_CLI_RENDER_HPP
#define RDO_CLI_RENDER_HPP

#include <string>
#include <string_view>

#include "rdo/classify.hpp"
#include "rdo/dickson.hpp"
#include "rdo/verify.hpp"

namespace rdo::cli {

enum class Format { text, json, csv };

Format format_from_string(std::string_view s);  // "text" / "json" / "csv"

struct GenOutput {
    Kind kind;
    uint64_t p;
    uint64_t n;
    uint64_t d;
    SparsePoly poly;
};

struct CheckOutput {
    Kind kind;
    uint64_t p;
    uint64_t n;
    uint64_t d;
    SparsePoly poly;
    DOVerdict verdict;
};

struct ClassifyOutput {
    Kind kind;
    uint64_t p;
    uint64_t n;
    uint64_t d;
    RuleMatch match;
};

std::string render(const GenOutput& out, Format format);
std::string render(const CheckOutput& out, Format format);
std::string render(const ClassifyOutput& out, Format format);

// with_timing = false zeroes the runtime field so repeated runs are
// byte-identical.
std::string render(const SweepReport& report, Format format, bool with_timing);
std::string render(const IdentityReport& report, Format format, bool with_timing);
std::string render(const SurveyReport& report, Format format, bool with_timing);

// Inverse of the JSON sweep rendering; used to round-trip reports.
SweepReport parse_sweep_json(const std::string& text);

}  // namespace rdo::cli

#endif  // RDO_CLI_RENDER_HPP
