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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "quintic/bounds.hpp"
#include "quintic/pentagon.hpp"
#include "quintic/report.hpp"

namespace {

using namespace quintic;

int thread_count() {
    const char* env = std::getenv("QUINTIC_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t > 0 ? t : 1;
}

// "p", "p/q" or "root:c0,c1,...,cd:k" (minimal polynomial, low degree first)
struct ParamArg {
    FieldElement value;
    int component = 0;
};

ParamArg parse_param_value(const std::string& s) {
    ParamArg out;
    if (s.rfind("root:", 0) != 0) {
        out.value = FieldElement(rat_parse(s));
        return out;
    }
    size_t mid = s.find(':', 5);
    std::string coeffs = (mid == std::string::npos) ? s.substr(5) : s.substr(5, mid - 5);
    if (mid != std::string::npos) out.component = std::atoi(s.c_str() + mid + 1);
    std::vector<Rational> co;
    std::stringstream ss(coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) co.push_back(rat_parse(item));
    RatPoly mp(co);
    FieldPtr field = NumberField::create(mp, "t");
    out.value = field ? FieldElement::generator(field) : FieldElement(-mp.monic()[0]);
    return out;
}

void emit(const ReportDocument& doc, const std::string& format, const std::string& out_path) {
    std::string text = doc.render(format);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << doc.to_json().dump(2) << "\n";  // the cache file is always canonical JSON
    }
    std::cout << text;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact singular-point census of the quintic pencil alpha*S5 + beta*S2*S3 on S1=0"};
    app.require_subcommand(1);

    int n = 8, degree = 5, which = 3;
    std::string format = "json", out_path, alpha_s = "1", beta_s = "0";
    bool approx = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json, md or csv")
            ->check(CLI::IsMember({"json", "md", "csv"}));
        cmd->add_option("--out", out_path, "also write canonical JSON to this path");
        cmd->add_flag("--approx", approx, "add decimal approximations as supplementary fields");
    };

    CLI::App* c_census = app.add_subcommand("census", "run the full singular-point census");
    c_census->add_option("--n", n, "ambient projective dimension")->required();
    add_common(c_census);

    CLI::App* c_verify =
        app.add_subcommand("verify", "node statuses of all orbits at one parameter");
    c_verify->add_option("--n", n, "ambient projective dimension")->required();
    c_verify->add_option("--alpha", alpha_s, "alpha (rational)")->required();
    c_verify->add_option("--beta", beta_s, "beta (rational or root:c0,c1,..:k)")->required();
    add_common(c_verify);

    CLI::App* c_arnold = app.add_subcommand("arnold", "spectral upper bound Ar_n(d)");
    c_arnold->add_option("--n", n, "ambient projective dimension")->required();
    c_arnold->add_option("--degree", degree, "hypersurface degree");
    add_common(c_arnold);

    CLI::App* c_pentagon =
        app.add_subcommand("pentagon", "node count of the pentagon block construction");
    c_pentagon->add_option("--n", n, "ambient projective dimension")->required();
    add_common(c_pentagon);

    CLI::App* c_tables = app.add_subcommand("tables", "reproduce the published tables");
    c_tables->add_option("--which", which, "table number: 1, 2 or 3")->required();
    add_common(c_tables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (c_census->parsed()) {
            if (n < 3) {
                std::cerr << "census supports n >= 3 (tested for 3 <= n <= 10)\n";
                return 1;
            }
            ReportDocument doc;
            doc.command = "census";
            doc.params["n"] = n;
            CensusReport rep = census(n, thread_count());
            if (n > 10)
                doc.warnings.push_back("n > 10 is outside the tested range; expect longer runs");
            for (const auto& w : rep.warnings) doc.warnings.push_back(w);
            if (!rep.errors.empty()) {
                for (const auto& e : rep.errors) std::cerr << "error: " << e << "\n";
                return 2;
            }
            doc.payload = census_payload(rep, approx);
            doc.timing_ms = ms_since(t0);
            emit(doc, format, out_path);
            return 0;
        }
        if (c_verify->parsed()) {
            if (n < 3) {
                std::cerr << "verify supports n >= 3\n";
                return 1;
            }
            ParamArg a = parse_param_value(alpha_s);
            ParamArg b = parse_param_value(beta_s);
            if (!a.value.is_rational()) {
                std::cerr << "alpha must be rational (scale the pair so alpha clears "
                             "denominators)\n";
                return 1;
            }
            if (a.value.is_zero()) {
                std::cerr << "the member (0:1) is S2*S3 = 0, whose singular locus is the "
                             "whole variety S2 = S3 = 0; node verification does not apply\n";
                return 1;
            }
            ReportDocument doc;
            doc.command = "verify";
            doc.params["n"] = n;
            doc.params["alpha"] = alpha_s;
            doc.params["beta"] = beta_s;
            CensusReport rep = census(n, thread_count());
            for (const auto& w : rep.warnings) doc.warnings.push_back(w);
            if (!rep.errors.empty()) {
                for (const auto& e : rep.errors) std::cerr << "error: " << e << "\n";
                return 2;
            }
            PencilParam p = PencilParam::make(a.value, b.value);
            doc.payload = verify_payload(rep, p, b.component, approx);
            doc.timing_ms = ms_since(t0);
            emit(doc, format, out_path);
            return 0;
        }
        if (c_arnold->parsed()) {
            if (n < 1 || degree < 1) {
                std::cerr << "arnold needs n >= 1 and degree >= 1\n";
                return 1;
            }
            ReportDocument doc;
            doc.command = "arnold";
            doc.params["n"] = n;
            doc.params["degree"] = degree;
            doc.payload["value"] = arnold_number(n, degree).get_str();
            doc.timing_ms = ms_since(t0);
            emit(doc, format, out_path);
            return 0;
        }
        if (c_pentagon->parsed()) {
            if (n < 3) {
                std::cerr << "pentagon construction needs n >= 3\n";
                return 1;
            }
            ReportDocument doc;
            doc.command = "pentagon";
            doc.params["n"] = n;
            doc.payload["value"] = pentagon_node_count(n).get_str();
            if (n == 3)
                doc.warnings.push_back(
                    "affine count is 30; a published table lists 31, plausibly counting a "
                    "point at infinity of the projective closure");
            doc.timing_ms = ms_since(t0);
            emit(doc, format, out_path);
            return 0;
        }
        if (c_tables->parsed()) {
            if (which < 1 || which > 3) {
                std::cerr << "tables --which must be 1, 2 or 3\n";
                return 1;
            }
            ReportDocument doc;
            doc.command = "tables";
            doc.params["which"] = which;
            doc.payload = table_payload(which, approx);
            if (which == 3)
                doc.warnings.push_back(
                    "pentagon column for n=3 is the affine count 30; a published table "
                    "lists 31 (+1?)");
            doc.timing_ms = ms_since(t0);
            emit(doc, format, out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
