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

#ifndef RDO_CLASSIFY_HPP
#define RDO_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdo/dickson.hpp"
#include "rdo/sparse_poly.hpp"

namespace rdo {

// exponent == p^i + p^j with i <= j. For odd p the pair {i, j} is unique,
// and decompose_two_powers returns the one with the smallest i.
struct TwoPowerWitness {
    uint64_t exponent = 0;
    unsigned i = 0;
    unsigned j = 0;

    bool operator==(const TwoPowerWitness&) const = default;
};

// Outcome of the structural Dembowski-Ostrom test. The zero polynomial
// passes vacuously and is flagged trivially_zero; otherwise every exponent
// must decompose as p^i + p^j and the constant term must be absent.
// failing_exponent is the smallest offender when the test fails (0 when a
// constant term is the offender).
struct DOVerdict {
    bool is_do = false;
    bool trivially_zero = false;
    std::vector<TwoPowerWitness> witnesses;  // one per term, ascending exponent
    std::optional<uint64_t> failing_exponent;
};

// v = v0 * p^m with p not dividing v0; returns (v0, m). Requires v >= 1.
std::pair<uint64_t, unsigned> strip_p_powers(uint64_t v, uint64_t p);

std::optional<TwoPowerWitness> decompose_two_powers(uint64_t exponent, uint64_t p);

DOVerdict is_do(const SparsePoly& f);

// Closed-form classification verdict. The rule tables are indexed by the
// p-free parts: n0, m and d0, k_or_ell come from strip_p_powers on n and d
// (first kind strips both; the second kind strips only d, since raising the
// index by p is not a Frobenius power there, and reports n0 = n, m = 0).
// pattern_exponent carries the exponent of a matched "p^t + 1" shape.
struct RuleMatch {
    bool matched = false;
    std::string rule_id;  // e.g. "Thm2.1-i", "T2.3-vi"; empty when unmatched
    uint64_t n0 = 0;
    unsigned m = 0;
    uint64_t d0 = 0;
    unsigned k_or_ell = 0;
    std::optional<unsigned> pattern_exponent;

    bool operator==(const RuleMatch&) const = default;
};

// First kind over F_p, p an odd prime. Matching rules:
//   p == 3 : n0 = 2 with d0 = 3^j + 1        -> Thm2.1-i
//            n0 = 4 / 5 / 7 with d0 = 2      -> Thm2.1-ii / -iii / -iv
//   p  > 3 : n0 = 2 with d0 = p^i + 1        -> Thm2.1-v
//            n0 = 3 with d0 = p^i + 1        -> Thm2.1-vi
RuleMatch classify_first(uint64_t p, uint64_t n, uint64_t d);

// Second kind over F_p. Matching rules (d0 = d stripped of p-powers):
//   p == 3 : n in {2,3,5,6} with d0 = 3^a + 1     -> T2.3-i
//            n = 4 with 2*d0 = 3^a + 1            -> T2.3-ii
//            n = 7 / 10 / 13 with d0 = 2          -> T2.3-iii / -iv / -v
//            n = 15 with d0 = 4                   -> T2.3-vi
//            n = 19 with d0 = 2                   -> T2.3-vii
//   p == 5 : n in {2,3} with d0 = 5^a + 1         -> T2.4-i
//            n = 7 with d0 = 2                    -> T2.4-ii
//   p  > 5 : n in {2,3} with d0 = p^a + 1         -> T2.5-i
RuleMatch classify_second(uint64_t p, uint64_t n, uint64_t d);

RuleMatch classify(Kind kind, uint64_t p, uint64_t n, uint64_t d);

// ---------------------------------------------------------------------------
// Bundled catalog of reference example tables: each item is a (n, d) family
// parameterized by small exponents together with the polynomial the table
// prints for it. Two table entries are known to disagree with the
// construction (first kind item 4 and second kind item 9, each off by one
// coefficient); the catalog reproduces the printed values verbatim so the
// disagreement stays observable.

struct RemarkParams {
    unsigned i = 0;
    unsigned k = 0;
    unsigned ell = 0;
    unsigned m = 0;
};

struct RemarkInstance {
    Kind kind;
    int item = 0;  // 1-based within its kind
    uint64_t p = 0;
    uint64_t n = 0;
    uint64_t d = 0;
    SparsePoly printed;  // the table's polynomial, transcribed as printed
};

int remark_item_count(Kind kind);  // 6 first-kind items, 15 second-kind

// Items defined at characteristic p (e.g. second kind at p = 5 -> {11,12,13}).
std::vector<int> remark_items(Kind kind, uint64_t p);

// Names of the exponent parameters the item actually uses, in canonical
// order (subset of {"i", "k", "ell", "m"}).
std::vector<std::string> remark_param_names(Kind kind, int item);

std::string remark_label(Kind kind, int item);  // "R1-4", "R2-9", ...

// Instantiates the item at concrete parameter values; unknown_item when the
// item does not exist or is not defined at this characteristic.
RemarkInstance instantiate_remark(Kind kind, int item, uint64_t p, const RemarkParams& params);

// Just the printed polynomial of the instance above.
SparsePoly expected_remark_poly(Kind kind, int item, uint64_t p, const RemarkParams& params);

}  // namespace rdo

#endif  // RDO_CLASSIFY_HPP
