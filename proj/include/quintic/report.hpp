/*
   Copyright 2026 the quintic authors

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

#ifndef QUINTIC_REPORT_HPP
#define QUINTIC_REPORT_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "quintic/census.hpp"

namespace quintic {

using Json = nlohmann::ordered_json;

extern const char* kToolVersion;

// Canonical report envelope {version, command, params, payload, warnings,
// timing_ms}. Exact values are rendered as "p/q" strings; algebraic numbers
// as {minpoly: [...], component: k}. The timing field is excluded from
// canonical comparisons.
struct ReportDocument {
    std::string command;
    Json params = Json::object();
    Json payload = Json::object();
    std::vector<std::string> warnings;
    double timing_ms = 0.0;

    Json to_json() const;
    std::string to_markdown() const;
    std::string to_csv() const;
    std::string render(const std::string& format) const;
};

// value renderers
Json render_value(const FieldElement& v, bool approx = false);
Json render_param(const PencilParam& p, bool approx = false);
std::string algebraic_to_text(const FieldElement& v);  // "root of <poly>, component k"

Json census_payload(const CensusReport& rep, bool approx);
Json verify_payload(const CensusReport& rep, const PencilParam& p, int component, bool approx);
Json table_payload(int which, bool approx);  // reproduces the published tables 1..3

}  // namespace quintic

#endif
