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

#include "rdo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>

#include "int_util.hpp"

namespace rdo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Exact C(n, k) for n <= 64 (peak value C(64, 32) fits in 64 bits; the
// running products need 128).
unsigned __int128 exact_binom(uint64_t n, uint64_t k) {
    if (n > 64) throw error(errc::overflow, "exact binomial limited to n <= 64");
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (uint64_t t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;  // exact at every step
    }
    return r;
}

void fail(CheckResult& r, const std::string& counterexample) {
    if (r.pass) {
        r.pass = false;
        r.counterexample = counterexample;
    }
}

CheckResult merge_checks(std::string name, const std::vector<CheckResult>& parts) {
    CheckResult r;
    r.name = std::move(name);
    for (const auto& part : parts) {
        r.cases_checked += part.cases_checked;
        if (!part.pass && r.pass) {
            r.pass = false;
            r.counterexample =
                part.counterexample.empty() ? part.name : part.name + ": " + part.counterexample;
        }
    }
    return r;
}

}  // namespace

uint64_t exact_binom_mod(uint64_t n, uint64_t k, uint64_t p) {
    return static_cast<uint64_t>(exact_binom(n, k) % p);
}

uint64_t exact_first_kind_coeff_mod(uint64_t n, uint64_t i, uint64_t p) {
    if (i < 1 || i > n / 2) {
        throw error(errc::bad_index, "first-kind coefficient index needs 1 <= i <= n/2");
    }
    // n / (n - i) * C(n - i, i), computed as n * C(n - i, i) / (n - i): the
    // full product is integral even though neither factor split is.
    unsigned __int128 numer = exact_binom(n - i, i) * n;
    return static_cast<uint64_t>(numer / (n - i) % p);
}

bool same_results(const SweepReport& a, const SweepReport& b) {
    return a.kind == b.kind && a.p == b.p && a.n_min == b.n_min && a.n_max == b.n_max &&
           a.d_min == b.d_min && a.d_max == b.d_max && a.total_checked == b.total_checked &&
           a.overflow_cells == b.overflow_cells && a.mismatches == b.mismatches &&
           a.do_instances == b.do_instances && a.errata_diffs == b.errata_diffs;
}

std::vector<ErrataDiff> remark_errata(Kind kind, uint64_t p, unsigned param_bound) {
    std::vector<ErrataDiff> out;
    for (int item : remark_items(kind, p)) {
        const std::vector<std::string> names = remark_param_names(kind, item);
        std::vector<unsigned> vals(names.size(), 0);
        while (true) {
            RemarkParams rp;
            for (size_t idx = 0; idx < names.size(); ++idx) {
                if (names[idx] == "i") rp.i = vals[idx];
                else if (names[idx] == "k") rp.k = vals[idx];
                else if (names[idx] == "ell") rp.ell = vals[idx];
                else rp.m = vals[idx];
            }
            const RemarkInstance inst = instantiate_remark(kind, item, p, rp);
            const SparsePoly computed = closed_form(kind, p, inst.n, inst.d);

            std::set<uint64_t> exponents;
            for (const auto& [t, c] : inst.printed.terms()) exponents.insert(t);
            for (const auto& [t, c] : computed.terms()) exponents.insert(t);
            for (uint64_t t : exponents) {
                const uint64_t pc = inst.printed.coeff(t);
                const uint64_t cc = computed.coeff(t);
                if (pc == cc) continue;
                std::ostringstream ps;
                for (size_t idx = 0; idx < names.size(); ++idx) {
                    if (idx) ps << ';';
                    ps << names[idx] << '=' << vals[idx];
                }
                out.push_back(ErrataDiff{remark_label(kind, item), ps.str(), t, pc, cc});
            }

            size_t idx = 0;
            while (idx < vals.size() && ++vals[idx] > param_bound) {
                vals[idx] = 0;
                ++idx;
            }
            if (idx == vals.size()) break;
        }
    }
    return out;
}

SweepReport sweep(Kind kind, uint64_t p, uint64_t n_max, uint64_t d_max, unsigned jobs) {
    validate_odd_prime(p);
    if (n_max < 2 || d_max < 2) {
        throw error(errc::bad_index, "sweep needs n_max >= 2 and d_max >= 2");
    }
    const auto start = Clock::now();

    SweepReport rep;
    rep.kind = kind;
    rep.p = p;
    rep.n_max = n_max;
    rep.d_max = d_max;

    struct Chunk {
        uint64_t total = 0;
        uint64_t overflow = 0;
        std::vector<MismatchCell> mismatches;
        std::vector<DoInstance> instances;
    };

    auto run_range = [kind, p, d_max](uint64_t n_lo, uint64_t n_hi) {
        Chunk c;
        for (uint64_t n = n_lo; n <= n_hi; ++n) {
            if (kind == Kind::first && n % p == 0) continue;
            for (uint64_t d = 1; d <= d_max; ++d) {
                if (d % p == 0) continue;
                bool overflowed = false;
                SparsePoly f(p);
                try {
                    f = closed_form(kind, p, n, d);
                } catch (const error& e) {
                    if (e.code() != errc::exponent_overflow) throw;
                    overflowed = true;
                }
                if (overflowed) {
                    ++c.overflow;
                    continue;
                }
                ++c.total;
                const DOVerdict v = is_do(f);
                const RuleMatch rm = classify(kind, p, n, d);
                if (v.is_do != rm.matched) {
                    c.mismatches.push_back(MismatchCell{n, d, rm.matched, v.is_do});
                } else if (v.is_do) {
                    c.instances.push_back(DoInstance{n, d, rm.rule_id, f.to_string()});
                }
            }
        }
        return c;
    };

    std::vector<Chunk> chunks;
    const uint64_t span = n_max - 1;  // count of n values in [2, n_max]
    const unsigned workers = static_cast<unsigned>(
        std::min<uint64_t>(std::max<unsigned>(jobs, 1), span));
    if (workers <= 1) {
        chunks.push_back(run_range(2, n_max));
    } else {
        const uint64_t per = (span + workers - 1) / workers;
        std::vector<std::future<Chunk>> futures;
        for (unsigned w = 0; w < workers; ++w) {
            const uint64_t lo = 2 + w * per;
            if (lo > n_max) break;
            const uint64_t hi = std::min(n_max, lo + per - 1);
            futures.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        chunks.reserve(futures.size());
        for (auto& fut : futures) chunks.push_back(fut.get());
    }

    for (auto& c : chunks) {
        rep.total_checked += c.total;
        rep.overflow_cells += c.overflow;
        rep.mismatches.insert(rep.mismatches.end(), c.mismatches.begin(), c.mismatches.end());
        rep.do_instances.insert(rep.do_instances.end(), c.instances.begin(), c.instances.end());
    }
    rep.errata_diffs = remark_errata(kind, p, 2);
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

CheckResult check_dual_path(Kind kind, uint64_t p, uint64_t n_max,
                            const std::vector<uint64_t>& ds) {
    CheckResult r;
    r.name = std::string("dual-path-") + to_string(kind);
    for (uint64_t d : ds) {
        const std::vector<SparsePoly> rec = generate_by_recurrence(kind, p, n_max, d);
        for (uint64_t n = 0; n <= n_max; ++n) {
            ++r.cases_checked;
            if (closed_form(kind, p, n, d) == rec[n]) continue;
            std::ostringstream msg;
            msg << "kind=" << to_string(kind) << " p=" << p << " n=" << n << " d=" << d;
            fail(r, msg.str());
            return r;
        }
    }
    return r;
}

CheckResult check_exact_coefficient_oracle(uint64_t p, uint64_t n_max) {
    CheckResult r;
    r.name = "exact-coefficient-oracle";
    if (n_max > 64) n_max = 64;
    for (uint64_t n = 0; n <= n_max; ++n) {
        const SparsePoly first = closed_form(Kind::first, p, n, 1);
        const SparsePoly second = closed_form(Kind::second, p, n, 1);
        for (uint64_t i = 1; i <= n / 2; ++i) {
            const bool negative = i % 2 == 1;
            uint64_t c1 = exact_first_kind_coeff_mod(n, i, p);
            uint64_t c2 = exact_binom_mod(n - i, i, p);
            if (negative) {
                c1 = (p - c1) % p;
                c2 = (p - c2) % p;
            }
            r.cases_checked += 2;
            if (first.coeff(i) != c1) {
                std::ostringstream msg;
                msg << "kind=first p=" << p << " n=" << n << " i=" << i << " lucas="
                    << first.coeff(i) << " exact=" << c1;
                fail(r, msg.str());
                return r;
            }
            if (second.coeff(i) != c2) {
                std::ostringstream msg;
                msg << "kind=second p=" << p << " n=" << n << " i=" << i << " lucas="
                    << second.coeff(i) << " exact=" << c2;
                fail(r, msg.str());
                return r;
            }
        }
    }
    return r;
}

CheckResult check_frobenius_index(uint64_t p, uint64_t n_max) {
    CheckResult r;
    r.name = "frobenius-index-first";
    for (uint64_t n = 0; n <= n_max; ++n) {
        ++r.cases_checked;
        if (closed_form(Kind::first, p, detail::checked_mul(n, p), 1) ==
            closed_form(Kind::first, p, n, 1).frobenius_pow()) {
            continue;
        }
        std::ostringstream msg;
        msg << "p=" << p << " n=" << n;
        fail(r, msg.str());
        return r;
    }
    return r;
}

CheckResult check_frobenius_substitution(Kind kind, uint64_t p, uint64_t n_max,
                                         const std::vector<uint64_t>& ds) {
    CheckResult r;
    r.name = std::string("frobenius-substitution-") + to_string(kind);
    for (uint64_t d : ds) {
        const uint64_t pd = detail::checked_mul(p, d, errc::exponent_overflow);
        for (uint64_t n = 0; n <= n_max; ++n) {
            ++r.cases_checked;
            if (closed_form(kind, p, n, pd) ==
                closed_form(kind, p, n, d).frobenius_pow()) {
                continue;
            }
            std::ostringstream msg;
            msg << "kind=" << to_string(kind) << " p=" << p << " n=" << n << " d=" << d;
            fail(r, msg.str());
            return r;
        }
    }
    return r;
}

CheckResult check_second_kind_index_counterexample(uint64_t p, uint64_t n_limit) {
    CheckResult r;
    r.name = "second-kind-non-identity";
    for (uint64_t n = 1; n <= n_limit; ++n) {
        ++r.cases_checked;
        if (closed_form(Kind::second, p, detail::checked_mul(n, p), 1) !=
            closed_form(Kind::second, p, n, 1).frobenius_pow()) {
            return r;  // witness found: the index identity really does fail
        }
    }
    std::ostringstream msg;
    msg << "index identity unexpectedly held for every n <= " << n_limit << " at p=" << p;
    fail(r, msg.str());
    return r;
}

CheckResult check_scaling(Kind kind, const Field& field, uint64_t n_max) {
    CheckResult r;
    std::ostringstream name;
    name << "scaling-" << to_string(kind) << "-q" << field.q();
    r.name = name.str();

    const FieldElement one = field.one();
    for (uint64_t av = 1; av < field.q(); ++av) {
        const FieldElement a = field.element(av);
        const FieldElement ia = field.inv(a);
        const FieldElement ia2 = field.mul(ia, ia);
        for (uint64_t xv = 0; xv < field.q(); ++xv) {
            const FieldElement x = field.element(xv);
            const FieldElement y = field.mul(x, ia2);
            for (uint64_t n = 0; n <= n_max; ++n) {
                ++r.cases_checked;
                const FieldElement lhs = eval_reversed_dickson(kind, n, a, x, field);
                const FieldElement rhs =
                    field.mul(field.pow(a, n), eval_reversed_dickson(kind, n, one, y, field));
                if (lhs == rhs) continue;
                std::ostringstream msg;
                msg << "kind=" << to_string(kind) << " q=" << field.q() << " a=" << av
                    << " x=" << xv << " n=" << n;
                fail(r, msg.str());
                return r;
            }
        }
    }
    return r;
}

bool IdentityReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

IdentityReport identity_suite(uint64_t p, uint64_t n_max, const std::vector<Field>& fields) {
    validate_odd_prime(p);
    const auto start = Clock::now();

    IdentityReport rep;
    rep.p = p;
    rep.n_max = n_max;
    for (const Field& f : fields) rep.extension_degrees.push_back(f.e());

    const std::vector<uint64_t> dual_ds{1, 2, 3, 4, 5};
    rep.checks.push_back(merge_checks(
        "dual-path", {check_dual_path(Kind::first, p, n_max, dual_ds),
                      check_dual_path(Kind::second, p, n_max, dual_ds)}));

    rep.checks.push_back([&] {
        CheckResult c = check_exact_coefficient_oracle(p, std::min<uint64_t>(n_max, 60));
        c.name = "exact-coefficient-oracle";
        return c;
    }());

    const uint64_t frob_max = std::min<uint64_t>(n_max, 100);
    const std::vector<uint64_t> frob_ds{1, 2};
    rep.checks.push_back(merge_checks(
        "frobenius", {check_frobenius_index(p, frob_max),
                      check_frobenius_substitution(Kind::first, p, frob_max, frob_ds),
                      check_frobenius_substitution(Kind::second, p, frob_max, frob_ds)}));

    rep.checks.push_back([&] {
        CheckResult c = check_second_kind_index_counterexample(p, 10);
        c.name = "second-kind-non-identity";
        return c;
    }());

    std::vector<CheckResult> scaling_parts;
    const uint64_t scale_max = std::min<uint64_t>(n_max, 30);
    for (const Field& f : fields) {
        scaling_parts.push_back(check_scaling(Kind::first, f, scale_max));
        scaling_parts.push_back(check_scaling(Kind::second, f, scale_max));
    }
    rep.checks.push_back(merge_checks("scaling", scaling_parts));

    rep.runtime_seconds = seconds_since(start);
    return rep;
}

bool is_permutation_map(const SparsePoly& f, const Field& field, uint64_t cap) {
    if (field.q() > cap) {
        throw error(errc::field_too_large, "exhaustive permutation scan refused: q > cap");
    }
    std::vector<char> seen(field.q(), 0);
    for (uint64_t v = 0; v < field.q(); ++v) {
        const uint64_t y = field.encode(evaluate(f, field.element(v), field));
        if (seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

bool is_planar_map(const SparsePoly& g, const Field& field, uint64_t cap) {
    if (field.q() > cap) {
        throw error(errc::field_too_large, "exhaustive planarity scan refused: q > cap");
    }
    const uint64_t q = field.q();
    std::vector<FieldElement> values;
    values.reserve(q);
    for (uint64_t v = 0; v < q; ++v) values.push_back(evaluate(g, field.element(v), field));

    std::vector<char> seen(q, 0);
    for (uint64_t av = 1; av < q; ++av) {
        const FieldElement a = field.element(av);
        std::fill(seen.begin(), seen.end(), 0);
        for (uint64_t xv = 0; xv < q; ++xv) {
            const uint64_t shifted = field.encode(field.add(field.element(xv), a));
            const uint64_t y = field.encode(field.sub(values[shifted], values[xv]));
            if (seen[y]) return false;
            seen[y] = 1;
        }
    }
    return true;
}

SurveyReport planarity_survey(Kind kind, uint64_t p, const std::vector<unsigned>& e_list,
                              uint64_t n_max, uint64_t d_max, uint64_t cap) {
    validate_odd_prime(p);
    if (n_max < 2 || d_max < 1) {
        throw error(errc::bad_index, "survey needs n_max >= 2 and d_max >= 1");
    }
    if (e_list.empty()) {
        throw error(errc::bad_index, "survey needs at least one extension degree");
    }
    const auto start = Clock::now();

    SurveyReport rep;
    rep.kind = kind;
    rep.p = p;
    rep.e_list = e_list;
    rep.n_max = n_max;
    rep.d_max = d_max;

    std::vector<Field> fields;
    fields.reserve(e_list.size());
    for (unsigned e : e_list) {
        Field f = Field::make(p, e);
        if (f.q() > cap) {
            throw error(errc::field_too_large, "survey field exceeds the exhaustive-scan cap");
        }
        fields.push_back(std::move(f));
    }

    for (uint64_t n = 2; n <= n_max; ++n) {
        for (uint64_t d = 1; d <= d_max; ++d) {
            if (!classify(kind, p, n, d).matched) continue;
            const SparsePoly f = closed_form(kind, p, n, d);
            const DOVerdict v = is_do(f);
            for (const Field& field : fields) {
                rep.rows.push_back(SurveyRow{n, d, field.q(), v.is_do,
                                             is_planar_map(f, field, cap),
                                             is_permutation_map(f, field, cap)});
            }
        }
    }
    rep.runtime_seconds = seconds_since(start);
    return rep;
}

}  // namespace rdo
