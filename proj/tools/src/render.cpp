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

#include "render.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rdo::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json base_object(Kind kind, uint64_t p, uint64_t n, uint64_t d) {
    ordered_json j;
    j["kind"] = to_string(kind);
    j["p"] = p;
    j["n"] = n;
    j["d"] = d;
    return j;
}

double reported_runtime(double runtime_seconds, bool with_timing) {
    return with_timing ? runtime_seconds : 0.0;
}

}  // namespace

Format format_from_string(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format (expected text, json, or csv)");
}

std::string render(const GenOutput& out, Format format) {
    switch (format) {
        case Format::text:
            return out.poly.to_string() + "\n";
        case Format::json: {
            ordered_json j = base_object(out.kind, out.p, out.n, out.d);
            j["polynomial"] = out.poly.to_string();
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "kind,p,n,d,polynomial\n"
               << to_string(out.kind) << ',' << out.p << ',' << out.n << ',' << out.d << ','
               << csv_field(out.poly.to_string()) << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render(const CheckOutput& out, Format format) {
    const DOVerdict& v = out.verdict;
    switch (format) {
        case Format::text: {
            std::ostringstream os;
            os << "polynomial: " << out.poly.to_string() << '\n';
            if (v.trivially_zero) {
                os << "DO: yes (trivially zero)\n";
            } else if (v.is_do) {
                os << "DO: yes\n";
                os << "witnesses:";
                for (const auto& w : v.witnesses) os << " (" << w.i << ',' << w.j << ')';
                os << '\n';
            } else {
                os << "DO: no\n";
                os << "failing exponent: " << *v.failing_exponent << '\n';
            }
            return os.str();
        }
        case Format::json: {
            ordered_json j = base_object(out.kind, out.p, out.n, out.d);
            j["polynomial"] = out.poly.to_string();
            j["is_do"] = v.is_do;
            j["trivially_zero"] = v.trivially_zero;
            ordered_json ws = ordered_json::array();
            for (const auto& w : v.witnesses) {
                ws.push_back({{"exponent", w.exponent}, {"i", w.i}, {"j", w.j}});
            }
            j["witnesses"] = std::move(ws);
            if (v.failing_exponent) j["failing_exponent"] = *v.failing_exponent;
            else j["failing_exponent"] = nullptr;
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream ws;
            bool first = true;
            for (const auto& w : v.witnesses) {
                if (!first) ws << ';';
                ws << w.i << ':' << w.j;
                first = false;
            }
            std::ostringstream os;
            os << "kind,p,n,d,polynomial,is_do,trivially_zero,failing_exponent,witnesses\n"
               << to_string(out.kind) << ',' << out.p << ',' << out.n << ',' << out.d << ','
               << csv_field(out.poly.to_string()) << ',' << truefalse(v.is_do) << ','
               << truefalse(v.trivially_zero) << ',';
            if (v.failing_exponent) os << *v.failing_exponent;
            os << ',' << ws.str() << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render(const ClassifyOutput& out, Format format) {
    const RuleMatch& m = out.match;
    switch (format) {
        case Format::text: {
            std::ostringstream os;
            os << "matched: " << yesno(m.matched) << '\n';
            if (m.matched) os << "rule: " << m.rule_id << '\n';
            os << "n0: " << m.n0 << '\n'
               << "m: " << m.m << '\n'
               << "d0: " << m.d0 << '\n'
               << "k_or_ell: " << m.k_or_ell << '\n';
            if (m.pattern_exponent) os << "pattern_exponent: " << *m.pattern_exponent << '\n';
            return os.str();
        }
        case Format::json: {
            ordered_json j = base_object(out.kind, out.p, out.n, out.d);
            j["matched"] = m.matched;
            j["rule_id"] = m.rule_id;
            j["n0"] = m.n0;
            j["m"] = m.m;
            j["d0"] = m.d0;
            j["k_or_ell"] = m.k_or_ell;
            if (m.pattern_exponent) j["pattern_exponent"] = *m.pattern_exponent;
            else j["pattern_exponent"] = nullptr;
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "kind,p,n,d,matched,rule_id,n0,m,d0,k_or_ell,pattern_exponent\n"
               << to_string(out.kind) << ',' << out.p << ',' << out.n << ',' << out.d << ','
               << truefalse(m.matched) << ',' << csv_field(m.rule_id) << ',' << m.n0 << ','
               << m.m << ',' << m.d0 << ',' << m.k_or_ell << ',';
            if (m.pattern_exponent) os << *m.pattern_exponent;
            os << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render(const SweepReport& report, Format format, bool with_timing) {
    switch (format) {
        case Format::text: {
            std::ostringstream os;
            os << "sweep kind=" << to_string(report.kind) << " p=" << report.p << " n="
               << report.n_min << ".." << report.n_max << " d=" << report.d_min << ".."
               << report.d_max << '\n';
            os << "total_checked: " << report.total_checked << '\n';
            os << "overflow_cells: " << report.overflow_cells << '\n';
            os << "mismatches: " << report.mismatches.size() << '\n';
            os << "do_instances: " << report.do_instances.size() << '\n';
            os << "errata_diffs: " << report.errata_diffs.size() << '\n';
            os << "runtime_seconds: " << reported_runtime(report.runtime_seconds, with_timing)
               << '\n';
            if (!report.mismatches.empty()) {
                os << "mismatch cells:\n";
                for (const auto& c : report.mismatches) {
                    os << "  n=" << c.n << " d=" << c.d << " oracle="
                       << (c.oracle_matched ? "do" : "not-do") << " detector="
                       << (c.detector_is_do ? "do" : "not-do") << '\n';
                }
            }
            if (!report.do_instances.empty()) {
                os << "instances:\n";
                for (const auto& inst : report.do_instances) {
                    os << "  n=" << inst.n << " d=" << inst.d << " rule=" << inst.rule_id
                       << " poly=" << inst.polynomial << '\n';
                }
            }
            if (!report.errata_diffs.empty()) {
                os << "catalog diffs:\n";
                for (const auto& e : report.errata_diffs) {
                    os << "  " << e.item << " [" << e.params << "] exponent=" << e.exponent
                       << " printed=" << e.printed_coeff << " computed=" << e.computed_coeff
                       << '\n';
                }
            }
            return os.str();
        }
        case Format::json: {
            ordered_json j;
            j["kind"] = to_string(report.kind);
            j["p"] = report.p;
            j["n_min"] = report.n_min;
            j["n_max"] = report.n_max;
            j["d_min"] = report.d_min;
            j["d_max"] = report.d_max;
            j["total_checked"] = report.total_checked;
            j["overflow_cells"] = report.overflow_cells;
            ordered_json mism = ordered_json::array();
            for (const auto& c : report.mismatches) {
                mism.push_back({{"n", c.n},
                                {"d", c.d},
                                {"oracle_matched", c.oracle_matched},
                                {"detector_is_do", c.detector_is_do}});
            }
            j["mismatches"] = std::move(mism);
            ordered_json insts = ordered_json::array();
            for (const auto& inst : report.do_instances) {
                insts.push_back({{"n", inst.n},
                                 {"d", inst.d},
                                 {"rule_id", inst.rule_id},
                                 {"polynomial", inst.polynomial}});
            }
            j["do_instances"] = std::move(insts);
            ordered_json errs = ordered_json::array();
            for (const auto& e : report.errata_diffs) {
                errs.push_back({{"item", e.item},
                                {"params", e.params},
                                {"exponent", e.exponent},
                                {"printed_coeff", e.printed_coeff},
                                {"computed_coeff", e.computed_coeff}});
            }
            j["errata_diffs"] = std::move(errs);
            j["runtime_seconds"] = reported_runtime(report.runtime_seconds, with_timing);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "n,d,rule_id,polynomial\n";
            for (const auto& inst : report.do_instances) {
                os << inst.n << ',' << inst.d << ',' << csv_field(inst.rule_id) << ','
                   << csv_field(inst.polynomial) << '\n';
            }
            return os.str();
        }
    }
    return {};
}

std::string render(const IdentityReport& report, Format format, bool with_timing) {
    switch (format) {
        case Format::text: {
            std::ostringstream os;
            os << "identities p=" << report.p << " n_max=" << report.n_max << " extensions=[";
            for (size_t i = 0; i < report.extension_degrees.size(); ++i) {
                if (i) os << ',';
                os << report.extension_degrees[i];
            }
            os << "]\n";
            for (const auto& c : report.checks) {
                os << c.name << " [" << c.cases_checked << " cases] "
                   << (c.pass ? "PASS" : "FAIL") << '\n';
                if (!c.pass) os << "  counterexample: " << c.counterexample << '\n';
            }
            os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << '\n';
            os << "runtime_seconds: " << reported_runtime(report.runtime_seconds, with_timing)
               << '\n';
            return os.str();
        }
        case Format::json: {
            ordered_json j;
            j["p"] = report.p;
            j["n_max"] = report.n_max;
            j["extension_degrees"] = report.extension_degrees;
            ordered_json checks = ordered_json::array();
            for (const auto& c : report.checks) {
                checks.push_back({{"name", c.name},
                                  {"pass", c.pass},
                                  {"cases_checked", c.cases_checked},
                                  {"counterexample", c.counterexample}});
            }
            j["checks"] = std::move(checks);
            j["all_pass"] = report.all_pass();
            j["runtime_seconds"] = reported_runtime(report.runtime_seconds, with_timing);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "check,pass,cases_checked,counterexample\n";
            for (const auto& c : report.checks) {
                os << csv_field(c.name) << ',' << truefalse(c.pass) << ',' << c.cases_checked
                   << ',' << csv_field(c.counterexample) << '\n';
            }
            return os.str();
        }
    }
    return {};
}

std::string render(const SurveyReport& report, Format format, bool with_timing) {
    switch (format) {
        case Format::text: {
            std::ostringstream os;
            os << "planar kind=" << to_string(report.kind) << " p=" << report.p << " e=[";
            for (size_t i = 0; i < report.e_list.size(); ++i) {
                if (i) os << ',';
                os << report.e_list[i];
            }
            os << "] n=2.." << report.n_max << " d=1.." << report.d_max << '\n';
            for (const auto& r : report.rows) {
                os << "n=" << r.n << " d=" << r.d << " q=" << r.q << " do=" << yesno(r.is_do)
                   << " planar=" << yesno(r.is_planar) << " perm=" << yesno(r.is_permutation)
                   << '\n';
            }
            os << "rows: " << report.rows.size() << '\n';
            os << "runtime_seconds: " << reported_runtime(report.runtime_seconds, with_timing)
               << '\n';
            return os.str();
        }
        case Format::json: {
            ordered_json j;
            j["kind"] = to_string(report.kind);
            j["p"] = report.p;
            j["e_list"] = report.e_list;
            j["n_max"] = report.n_max;
            j["d_max"] = report.d_max;
            ordered_json rows = ordered_json::array();
            for (const auto& r : report.rows) {
                rows.push_back({{"n", r.n},
                                {"d", r.d},
                                {"q", r.q},
                                {"is_do", r.is_do},
                                {"is_planar", r.is_planar},
                                {"is_permutation", r.is_permutation}});
            }
            j["rows"] = std::move(rows);
            j["runtime_seconds"] = reported_runtime(report.runtime_seconds, with_timing);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "n,d,q,is_do,is_planar,is_permutation\n";
            for (const auto& r : report.rows) {
                os << r.n << ',' << r.d << ',' << r.q << ',' << truefalse(r.is_do) << ','
                   << truefalse(r.is_planar) << ',' << truefalse(r.is_permutation) << '\n';
            }
            return os.str();
        }
    }
    return {};
}

SweepReport parse_sweep_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    SweepReport rep;
    rep.kind = kind_from_string(j.at("kind").get<std::string>());
    rep.p = j.at("p").get<uint64_t>();
    rep.n_min = j.at("n_min").get<uint64_t>();
    rep.n_max = j.at("n_max").get<uint64_t>();
    rep.d_min = j.at("d_min").get<uint64_t>();
    rep.d_max = j.at("d_max").get<uint64_t>();
    rep.total_checked = j.at("total_checked").get<uint64_t>();
    rep.overflow_cells = j.at("overflow_cells").get<uint64_t>();
    for (const auto& c : j.at("mismatches")) {
        rep.mismatches.push_back(MismatchCell{c.at("n").get<uint64_t>(),
                                              c.at("d").get<uint64_t>(),
                                              c.at("oracle_matched").get<bool>(),
                                              c.at("detector_is_do").get<bool>()});
    }
    for (const auto& inst : j.at("do_instances")) {
        rep.do_instances.push_back(DoInstance{inst.at("n").get<uint64_t>(),
                                              inst.at("d").get<uint64_t>(),
                                              inst.at("rule_id").get<std::string>(),
                                              inst.at("polynomial").get<std::string>()});
    }
    for (const auto& e : j.at("errata_diffs")) {
        rep.errata_diffs.push_back(ErrataDiff{e.at("item").get<std::string>(),
                                              e.at("params").get<std::string>(),
                                              e.at("exponent").get<uint64_t>(),
                                              e.at("printed_coeff").get<uint64_t>(),
                                              e.at("computed_coeff").get<uint64_t>()});
    }
    rep.runtime_seconds = j.at("runtime_seconds").get<double>();
    return rep;
}

}  // namespace rdo::cli
