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

#ifndef RDO_VERIFY_HPP
#define RDO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rdo/classify.hpp"
#include "rdo/dickson.hpp"
#include "rdo/field.hpp"

namespace rdo {

// A grid cell where the closed-form classification and the structural
// detector disagreed.
struct MismatchCell {
    uint64_t n = 0;
    uint64_t d = 0;
    bool oracle_matched = false;
    bool detector_is_do = false;

    bool operator==(const MismatchCell&) const = default;
};

// A grid cell both sides agree is Dembowski-Ostrom.
struct DoInstance {
    uint64_t n = 0;
    uint64_t d = 0;
    std::string rule_id;
    std::string polynomial;

    bool operator==(const DoInstance&) const = default;
};

// One coefficient where a catalog item's printed polynomial differs from the
// constructed one. params is "name=value" pairs joined by ';' (e.g.
// "ell=0;m=1"). A coefficient of 0 means the term is absent on that side.
struct ErrataDiff {
    std::string item;  // "R1-4", "R2-9", ...
    std::string params;
    uint64_t exponent = 0;
    uint64_t printed_coeff = 0;
    uint64_t computed_coeff = 0;

    bool operator==(const ErrataDiff&) const = default;
};

struct SweepReport {
    Kind kind = Kind::first;
    uint64_t p = 0;
    uint64_t n_min = 2;
    uint64_t n_max = 0;
    uint64_t d_min = 1;
    uint64_t d_max = 0;
    uint64_t total_checked = 0;
    uint64_t overflow_cells = 0;
    std::vector<MismatchCell> mismatches;
    std::vector<DoInstance> do_instances;
    std::vector<ErrataDiff> errata_diffs;
    double runtime_seconds = 0.0;

    bool passed() const { return mismatches.empty(); }
};

// Equality of everything except the wall-clock field.
bool same_results(const SweepReport& a, const SweepReport& b);

// Exhaustive oracle-vs-detector comparison over n in [2, n_max], d in
// [1, d_max]. Cells are skipped unless gcd(d, p) = 1 (both kinds) and
// gcd(n, p) = 1 (first kind only, where the index identity makes p | n
// redundant). Cells whose construction would overflow 64-bit exponents are
// counted in overflow_cells and otherwise skipped. jobs > 1 splits the n
// range across threads; results are deterministic and order-stable either
// way. Also attaches the catalog diff scan for this characteristic.
SweepReport sweep(Kind kind, uint64_t p, uint64_t n_max, uint64_t d_max, unsigned jobs = 1);

// Compares every catalog item defined at characteristic p against the
// closed-form construction, for all parameter tuples with entries in
// [0, param_bound]. Returns one entry per differing coefficient.
std::vector<ErrataDiff> remark_errata(Kind kind, uint64_t p, unsigned param_bound = 2);

// ---------------------------------------------------------------------------
// Identity checks. Each returns a named pass/fail with a case count and, on
// failure, a human-readable first counterexample.

struct CheckResult {
    std::string name;
    bool pass = true;
    uint64_t cases_checked = 0;
    std::string counterexample;
};

// Closed form == recurrence, for n in [0, n_max] and each d in ds.
CheckResult check_dual_path(Kind kind, uint64_t p, uint64_t n_max,
                            const std::vector<uint64_t>& ds);

// Every coefficient of both closed forms (d = 1, n in [0, n_max], n_max <= 64)
// against exact big-integer binomial arithmetic, an implementation sharing
// nothing with the digit-product path.
CheckResult check_exact_coefficient_oracle(uint64_t p, uint64_t n_max);

// First kind: raising the index by p is the same as the p-th power.
CheckResult check_frobenius_index(uint64_t p, uint64_t n_max);

// Both kinds: substituting x^(p*d) is the p-th power of substituting x^d.
CheckResult check_frobenius_substitution(Kind kind, uint64_t p, uint64_t n_max,
                                         const std::vector<uint64_t>& ds);

// Second kind: the index identity genuinely fails; passes when a witness
// n <= n_limit with E_{np} != (E_n)^p is found.
CheckResult check_second_kind_index_counterexample(uint64_t p, uint64_t n_limit);

// Functional homogeneity over a concrete field: f_n(a, x) == a^n * f_n(1, x/a^2)
// for every a != 0, every x, n in [0, n_max].
CheckResult check_scaling(Kind kind, const Field& field, uint64_t n_max);

struct IdentityReport {
    uint64_t p = 0;
    uint64_t n_max = 0;
    std::vector<unsigned> extension_degrees;
    std::vector<CheckResult> checks;
    double runtime_seconds = 0.0;

    bool all_pass() const;
};

// The five named families above, bundled: dual-path (d in [1,5]),
// exact-coefficient-oracle (n capped at 60), frobenius (index + substitution,
// n capped at 100), second-kind-non-identity (witness within n <= 10), and
// scaling (n capped at 30) over each supplied field.
IdentityReport identity_suite(uint64_t p, uint64_t n_max, const std::vector<Field>& fields);

// ---------------------------------------------------------------------------
// Exhaustive maps over small fields.

inline constexpr uint64_t kExhaustiveFieldCap = 2401;

// f induces a bijection of GF(q). Throws field_too_large past the cap.
bool is_permutation_map(const SparsePoly& f, const Field& field,
                        uint64_t cap = kExhaustiveFieldCap);

// x -> g(x + a) - g(x) is a bijection for every a != 0.
bool is_planar_map(const SparsePoly& g, const Field& field,
                   uint64_t cap = kExhaustiveFieldCap);

struct SurveyRow {
    uint64_t n = 0;
    uint64_t d = 0;
    uint64_t q = 0;
    bool is_do = false;
    bool is_planar = false;
    bool is_permutation = false;

    bool operator==(const SurveyRow&) const = default;
};

struct SurveyReport {
    Kind kind = Kind::first;
    uint64_t p = 0;
    std::vector<unsigned> e_list;
    uint64_t n_max = 0;
    uint64_t d_max = 0;
    std::vector<SurveyRow> rows;
    double runtime_seconds = 0.0;
};

// For every classification-matched cell (n in [2, n_max], d in [1, d_max]),
// tests planarity and permutation behaviour of the constructed polynomial
// over GF(p^e) for each e in e_list. Rows are ordered by (n, d), then by
// e_list position.
SurveyReport planarity_survey(Kind kind, uint64_t p, const std::vector<unsigned>& e_list,
                              uint64_t n_max, uint64_t d_max,
                              uint64_t cap = kExhaustiveFieldCap);

// ---------------------------------------------------------------------------
// Exact big-integer binomial helpers backing check_exact_coefficient_oracle;
// exposed so tests can cross-check the digit-product path directly.

// C(n, k) mod p computed from the exact integer value; requires n <= 64.
uint64_t exact_binom_mod(uint64_t n, uint64_t k, uint64_t p);

// [n / (n - i)] * C(n - i, i) mod p via exact integer division;
// requires 1 <= i <= n / 2 and n <= 64.
uint64_t exact_first_kind_coeff_mod(uint64_t n, uint64_t i, uint64_t p);

}  // namespace rdo

#endif  // RDO_VERIFY_HPP
