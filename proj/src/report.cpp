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

#include "quintic/report.hpp"

#include <complex>
#include <sstream>

#include "quintic/bounds.hpp"
#include "quintic/pentagon.hpp"

namespace quintic {

const char* kToolVersion = "1.0.0";

namespace {

std::string status_str(NodeStatus s) {
    switch (s) {
        case NodeStatus::Node: return "node";
        case NodeStatus::NotNode: return "not-node";
        default: return "unverified";
    }
}

std::string kind_str(BranchKind k) {
    switch (k) {
        case BranchKind::Isolated: return "isolated";
        case BranchKind::GenericFixed: return "generic-family";
        case BranchKind::GenericFamily: return "generic-family";
        case BranchKind::LineFamily: return "continuous-family";
        case BranchKind::Dim2Family: return "continuous-family";
    }
    return "?";
}

// all complex roots of a rational polynomial (Durand-Kerner), for --approx
std::vector<std::complex<double>> approx_roots(const RatPoly& p) {
    int d = p.degree();
    std::vector<std::complex<double>> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = p[i].get_d();
    std::vector<std::complex<double>> z(d);
    for (int i = 0; i < d; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int it = 0; it < 200; ++it) {
        for (int i = 0; i < d; ++i) {
            std::complex<double> num = c[d];
            for (int k = d - 1; k >= 0; --k) num = num * z[i] + c[k];
            std::complex<double> den = c[d];
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (z[i] - z[j]);
            z[i] -= num / den;
        }
    }
    return z;
}

std::string fmt_complex(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(10);
    if (std::abs(z.imag()) < 1e-9)
        os << z.real();
    else
        os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

Json render_orbit(const OrbitInstance& oi) {
    Json j = Json::object();
    j["pattern"] = oi.pattern.to_string();
    j["kind"] = kind_str(oi.kind);
    j["orbit_length"] = oi.length.get_str();
    j["orbits_here"] = oi.orbit_count;
    j["representative"] = oi.representative;
    j["status"] = status_str(oi.status);
    if (!oi.note.empty()) j["note"] = oi.note;
    return j;
}

Json render_param_total(const ParamTotal& t, bool approx) {
    Json j = Json::object();
    j["param"] = render_param(t.param, approx);
    j["node_total"] = t.node_total.get_str();
    if (t.exceptional) j["exceptional"] = true;
    Json orbits = Json::array();
    for (const auto& oi : t.orbits) orbits.push_back(render_orbit(oi));
    j["orbits"] = orbits;
    return j;
}

std::string constraint_str(const Branch& b) {
    if (b.kind != BranchKind::GenericFamily) return {};
    return "(" + poly_to_string(b.constr_alpha, "c") + ")*alpha + (" +
           poly_to_string(b.constr_beta, "c") + ")*beta = 0";
}

}  // namespace

Json render_value(const FieldElement& v, bool approx) {
    if (v.is_rational()) {
        if (!approx) return to_string(v.rational_value());
        Json j = Json::object();
        j["exact"] = to_string(v.rational_value());
        j["approx"] = v.rational_value().get_d();
        return j;
    }
    Json j = Json::object();
    auto pf = primitive_form(v.min_poly());
    Json mp = Json::array();
    for (const auto& c : pf.coeffs) mp.push_back(c.get_str());
    j["minpoly"] = mp;
    j["component"] = 0;
    j["str"] = algebraic_to_text(v);
    if (approx) {
        Json roots = Json::array();
        for (const auto& z : approx_roots(v.min_poly())) roots.push_back(fmt_complex(z));
        j["approx_roots"] = roots;
    }
    return j;
}

std::string algebraic_to_text(const FieldElement& v) {
    if (v.is_rational()) return to_string(v.rational_value());
    auto pf = primitive_form(v.min_poly());
    return "root of " + poly_to_string(from_integer_coeffs(pf.coeffs), "x") + ", component 0";
}

Json render_param(const PencilParam& p, bool approx) {
    Json j = Json::object();
    j["alpha"] = render_value(p.alpha, false);
    j["beta"] = render_value(p.beta, approx);
    j["str"] = p.to_string();
    return j;
}

Json census_payload(const CensusReport& rep, bool approx) {
    Json j = Json::object();
    j["n"] = rep.n;
    j["pattern_count"] = static_cast<int>(rep.patterns.size());
    Json pats = Json::array();
    for (const auto& p : rep.patterns) pats.push_back(p.to_string());
    j["patterns"] = pats;

    Json generic = Json::array();
    for (const auto& b : rep.generic) {
        Json g = Json::object();
        g["pattern"] = b.pattern.to_string();
        g["orbit_length"] = b.orbit_length.get_str();
        g["representative"] = b.rep_string();
        if (b.kind == BranchKind::GenericFamily) {
            g["constraint"] = constraint_str(b);
            Json ca = Json::array(), cb = Json::array();
            for (int i = 0; i <= b.constr_alpha.degree(); ++i)
                ca.push_back(to_string(b.constr_alpha[i]));
            for (int i = 0; i <= b.constr_beta.degree(); ++i)
                cb.push_back(to_string(b.constr_beta[i]));
            g["constraint_alpha"] = ca;
            g["constraint_beta"] = cb;
        } else {
            g["valid_for"] = "all parameters";
        }
        if (b.field) {
            Json mp = Json::array();
            for (const auto& c : b.field->primitive_modulus()) mp.push_back(c.get_str());
            g["field"] = mp;
        }
        generic.push_back(g);
    }
    j["generic"] = generic;

    Json lines = Json::array();
    for (const auto& b : rep.lines) {
        Json l = Json::object();
        l["pattern"] = b.pattern.to_string();
        l["param"] = render_param(b.param, approx);
        l["dimension"] = b.dimension;
        l["count"] = b.orbit_length.get_str();
        l["representative"] = b.rep_string();
        lines.push_back(l);
    }
    j["lines"] = lines;

    Json additional = Json::array();
    for (const auto& t : rep.additional) additional.push_back(render_param_total(t, approx));
    j["additional"] = additional;

    Json exc = Json::array();
    for (const auto& p : rep.exceptional) exc.push_back(render_param(p, approx));
    j["exceptional"] = exc;

    Json at_exc = Json::array();
    for (const auto& t : rep.at_exceptional) at_exc.push_back(render_param_total(t, approx));
    j["at_exceptional"] = at_exc;

    if (rep.best) {
        Json b = Json::object();
        b["param"] = render_param(rep.best->param, approx);
        b["node_total"] = rep.best->node_total.get_str();
        Json breakdown = Json::array();
        for (const auto& oi : rep.best->orbits)
            if (oi.status == NodeStatus::Node)
                for (int k = 0; k < oi.orbit_count; ++k) breakdown.push_back(oi.length.get_str());
        b["breakdown"] = breakdown;
        j["best"] = b;
    }
    j["generic_node_total"] = rep.generic_node_total.get_str();
    return j;
}

Json verify_payload(const CensusReport& rep, const PencilParam& p, int component, bool approx) {
    ParamTotal t = evaluate_param(rep, p);
    Json j = render_param_total(t, approx);
    if (component > 0) j["component"] = component;
    if (t.exceptional) {
        Json lines = Json::array();
        for (const auto& b : rep.lines)
            if (param_key(b.param) == param_key(p)) {
                Json l = Json::object();
                l["pattern"] = b.pattern.to_string();
                l["dimension"] = b.dimension;
                l["count"] = b.orbit_length.get_str();
                lines.push_back(l);
            }
        j["lines"] = lines;
    }
    return j;
}

Json table_payload(int which, bool approx) {
    Json j = Json::object();
    if (which == 1 || which == 2) {
        CensusReport rep = census(8);
        if (which == 1) {
            Json rows = Json::array();
            std::vector<const Branch*> gen;
            for (const auto& b : rep.generic) gen.push_back(&b);
            std::sort(gen.begin(), gen.end(), [](const Branch* a, const Branch* b) {
                return a->orbit_length < b->orbit_length;
            });
            for (const Branch* b : gen) {
                Json r = Json::object();
                r["orbit_length"] = b->orbit_length.get_str();
                r["orbit_element"] = b->rep_string();
                if (b->kind == BranchKind::GenericFamily) r["constraint"] = constraint_str(*b);
                r["case"] = b->pattern.to_string();
                rows.push_back(r);
            }
            j["table"] = 1;
            j["rows"] = rows;
        } else {
            Json rows = Json::array();
            for (const auto& t : rep.additional) {
                for (const auto& oi : t.orbits) {
                    if (oi.kind != BranchKind::Isolated) continue;
                    Json r = Json::object();
                    r["param"] = render_param(t.param, approx);
                    r["orbit_length"] = oi.length.get_str();
                    r["orbits_here"] = oi.orbit_count;
                    r["orbit_element"] = oi.representative;
                    r["status"] = status_str(oi.status);
                    rows.push_back(r);
                }
            }
            for (const auto& b : rep.lines) {
                Json r = Json::object();
                r["param"] = render_param(b.param, approx);
                r["orbit_length"] = b.orbit_length.get_str() +
                                    (b.dimension == 1 ? " lines" : " planes");
                r["orbit_element"] = b.rep_string();
                rows.push_back(r);
            }
            for (const auto& t : rep.at_exceptional) {
                for (const auto& oi : t.orbits) {
                    if (oi.kind != BranchKind::Isolated &&
                        !(oi.kind == BranchKind::GenericFixed && oi.status == NodeStatus::NotNode))
                        continue;
                    Json r = Json::object();
                    r["param"] = render_param(t.param, approx);
                    r["orbit_length"] = oi.length.get_str();
                    r["orbit_element"] = oi.representative;
                    r["status"] = status_str(oi.status);
                    rows.push_back(r);
                }
            }
            j["table"] = 2;
            j["rows"] = rows;
            j["exceptional"] = Json::array();
            for (const auto& p : rep.exceptional) j["exceptional"].push_back(p.to_string());
            Json notes = Json::array();
            notes.push_back(
                "published rows for the orbits at (3:-1) and (4:-3) print 11 coordinates for "
                "points of P^8; the computed 10-coordinate representatives are used");
            notes.push_back(
                "the published pair lambda = (2b^3+25b^2+86b+97)/42 and parameter "
                "(21 : 2b^3+25b^2+86b+76) is mutually consistent; the computed values match both");
            j["annotations"] = notes;
        }
        return j;
    }
    if (which == 3) {
        Json rows = Json::array();
        for (int n : {3, 4, 5, 6, 8, 10}) {
            Json r = Json::object();
            r["n"] = n;
            CensusReport rep = census(n);
            r["symmetric"] = rep.best ? rep.best->node_total.get_str() : "0";
            Int pent = pentagon_node_count(n);
            r["pentagon"] = pent.get_str();
            if (n == 3) r["pentagon_note"] = "affine count; a published table lists 31 (+1?)";
            r["arnold"] = arnold_number(n, 5).get_str();
            rows.push_back(r);
        }
        j["table"] = 3;
        j["rows"] = rows;
        return j;
    }
    throw std::invalid_argument("table must be 1, 2 or 3");
}

Json ReportDocument::to_json() const {
    Json j = Json::object();
    j["version"] = kToolVersion;
    j["command"] = command;
    j["params"] = params;
    j["payload"] = payload;
    j["warnings"] = warnings;
    j["timing_ms"] = timing_ms;
    return j;
}

namespace {

void md_value(std::ostringstream& os, const Json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        os << "\n";
        for (const auto& [k, val] : v.items()) {
            os << pad << "- **" << k << "**:";
            md_value(os, val, indent + 2);
        }
    } else if (v.is_array()) {
        os << "\n";
        for (const auto& val : v) {
            os << pad << "-";
            md_value(os, val, indent + 2);
        }
    } else {
        os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

void csv_flatten(const Json& v, const std::string& prefix,
                 std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [k, val] : v.items())
            csv_flatten(val, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array()) {
        int i = 0;
        for (const auto& val : v) csv_flatten(val, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out.push_back({prefix, v.is_string() ? v.get<std::string>() : v.dump()});
    }
}

}  // namespace

std::string ReportDocument::to_markdown() const {
    std::ostringstream os;
    os << "# " << command << "\n\n";
    if (!params.empty()) {
        os << "## parameters\n";
        md_value(os, params, 0);
        os << "\n";
    }
    os << "## result\n";
    md_value(os, payload, 0);
    if (!warnings.empty()) {
        os << "\n## warnings\n";
        for (const auto& w : warnings) os << "- " << w << "\n";
    }
    return os.str();
}

std::string ReportDocument::to_csv() const {
    std::vector<std::pair<std::string, std::string>> rows;
    csv_flatten(payload, "", rows);
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows) {
        std::string esc = v;
        bool quote = esc.find(',') != std::string::npos || esc.find('"') != std::string::npos;
        if (quote) {
            std::string q = "\"";
            for (char c : esc) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
            q += "\"";
            esc = q;
        }
        os << k << "," << esc << "\n";
    }
    return os.str();
}

std::string ReportDocument::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "md") return to_markdown();
    if (format == "csv") return to_csv();
    throw std::invalid_argument("format must be json, md or csv");
}

}  // namespace quintic
