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

#include "app.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "render.hpp"
#include "rdo/verify.hpp"

namespace rdo::cli {

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 1;

struct CommonOpts {
    std::string format = "text";
    std::string out;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out, "write the rendered report to this file");
    cmd->add_flag("--no-timing", common.no_timing,
                  "report runtime as 0 so repeated runs are byte-identical");
}

int emit(const std::string& text, const CommonOpts& common) {
    if (common.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(common.out);
    if (!file) {
        std::cerr << "error: cannot open " << common.out << " for writing\n";
        return kExitUsage;
    }
    file << text;
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"reversed Dickson polynomials over odd prime fields: construction, "
                 "Dembowski-Ostrom detection, classification, and verification"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string kind_name = "first";
    uint64_t p = 3;
    uint64_t n = 2;
    uint64_t d = 1;
    uint64_t n_max = 30;
    uint64_t d_max = 10;
    unsigned jobs = 1;
    std::vector<unsigned> e_list;

    const auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind_name, "polynomial family")
            ->required()
            ->check(CLI::IsMember({"first", "second"}));
    };
    const auto add_p = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "odd prime characteristic")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "construct one polynomial (closed form)");
    add_kind(gen);
    add_p(gen);
    gen->add_option("--n", n, "index")->required();
    gen->add_option("--d", d, "substitution exponent")->capture_default_str();
    add_common(gen, common);

    CLI::App* check = app.add_subcommand("check", "construct and test the DO property");
    add_kind(check);
    add_p(check);
    check->add_option("--n", n, "index")->required();
    check->add_option("--d", d, "substitution exponent")->capture_default_str();
    add_common(check, common);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "closed-form classification verdict for (n, d)");
    add_kind(classify_cmd);
    add_p(classify_cmd);
    classify_cmd->add_option("--n", n, "index (at least 2)")->required();
    classify_cmd->add_option("--d", d, "substitution exponent")->capture_default_str();
    add_common(classify_cmd, common);

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "exhaustive oracle-vs-detector agreement scan over an (n, d) grid");
    add_kind(sweep_cmd);
    add_p(sweep_cmd);
    sweep_cmd->add_option("--n-max", n_max, "largest index (default 30)");
    sweep_cmd->add_option("--d-max", d_max, "largest substitution exponent (default 10)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    add_common(sweep_cmd, common);

    CLI::App* ident = app.add_subcommand("identities", "run the algebraic identity suite");
    add_p(ident);
    ident->add_option("--n-max", n_max, "largest index for the dual-path family (default 50)");
    ident->add_option("--e-list", e_list,
                      "extension degrees for the scaling family (default 1,2)")
        ->delimiter(',');
    add_common(ident, common);

    CLI::App* planar = app.add_subcommand(
        "planar", "planarity / permutation survey of classification-matched cells");
    add_kind(planar);
    add_p(planar);
    planar->add_option("--n-max", n_max, "largest index (default 10)");
    planar->add_option("--d-max", d_max, "largest substitution exponent (default 4)");
    planar->add_option("--e-list", e_list, "extension degrees (default 1)")->delimiter(',');
    add_common(planar, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const Format format = format_from_string(common.format);

        if (app.got_subcommand(gen)) {
            validate_odd_prime(p);
            const Kind kind = kind_from_string(kind_name);
            GenOutput out{kind, p, n, d, closed_form(kind, p, n, d)};
            return emit(render(out, format), common);
        }

        if (app.got_subcommand(check)) {
            validate_odd_prime(p);
            const Kind kind = kind_from_string(kind_name);
            SparsePoly poly = closed_form(kind, p, n, d);
            DOVerdict verdict = is_do(poly);
            CheckOutput out{kind, p, n, d, std::move(poly), std::move(verdict)};
            return emit(render(out, format), common);
        }

        if (app.got_subcommand(classify_cmd)) {
            validate_odd_prime(p);
            if (n < 2) throw error(errc::bad_index, "classify needs n >= 2");
            const Kind kind = kind_from_string(kind_name);
            ClassifyOutput out{kind, p, n, d, classify(kind, p, n, d)};
            return emit(render(out, format), common);
        }

        if (app.got_subcommand(sweep_cmd)) {
            const Kind kind = kind_from_string(kind_name);
            if (!sweep_cmd->count("--n-max")) n_max = 30;
            if (!sweep_cmd->count("--d-max")) d_max = 10;
            const SweepReport report = sweep(kind, p, n_max, d_max, jobs);
            const int rc = emit(render(report, format, !common.no_timing), common);
            if (rc != 0) return rc;
            return report.passed() ? 0 : kExitCheckFailed;
        }

        if (app.got_subcommand(ident)) {
            validate_odd_prime(p);
            if (!ident->count("--n-max")) n_max = 50;
            if (!ident->count("--e-list")) e_list = {1, 2};
            std::vector<Field> fields;
            fields.reserve(e_list.size());
            for (unsigned e : e_list) fields.push_back(Field::make(p, e));
            const IdentityReport report = identity_suite(p, n_max, fields);
            const int rc = emit(render(report, format, !common.no_timing), common);
            if (rc != 0) return rc;
            return report.all_pass() ? 0 : kExitCheckFailed;
        }

        if (app.got_subcommand(planar)) {
            const Kind kind = kind_from_string(kind_name);
            if (!planar->count("--n-max")) n_max = 10;
            if (!planar->count("--d-max")) d_max = 4;
            if (!planar->count("--e-list")) e_list = {1};
            const SurveyReport report = planarity_survey(kind, p, e_list, n_max, d_max);
            return emit(render(report, format, !common.no_timing), common);
        }
    } catch (const error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rdo");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace rdo::cli
