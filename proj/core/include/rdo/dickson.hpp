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

#ifndef RDO_DICKSON_HPP
#define RDO_DICKSON_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdo/field.hpp"
#include "rdo/sparse_poly.hpp"

namespace rdo {

// The two Dickson families. "Reversed" means the polynomial is read as a
// function of the usually-fixed second argument: the index stays on the
// first argument a, which is pinned to 1, and the variable x enters through
// the binomial sum's alternating powers.
enum class Kind { first, second };

const char* to_string(Kind kind);
Kind kind_from_string(std::string_view s);  // accepts "first" / "second"

// C(n, k) mod p via the base-p digit product. p must be prime.
uint64_t lucas_binom(uint64_t n, uint64_t k, uint64_t p);

// First kind, closed form. Builds
//   sum_{i=1..n/2} [ C(n-i, i) + C(n-i-1, i-1) ] * (-1)^i * x^(d*i)  (mod p),
// the bracket being the division-free rewrite of n/(n-i) * C(n-i, i); the
// i = 0 term is the constant the reversed polynomial subtracts away.
SparsePoly first_kind_closed(uint64_t p, uint64_t n, uint64_t d);

// Second kind, closed form: sum_{i=1..n/2} C(n-i, i) * (-1)^i * x^(d*i).
SparsePoly second_kind_closed(uint64_t p, uint64_t n, uint64_t d);

SparsePoly closed_form(Kind kind, uint64_t p, uint64_t n, uint64_t d);

// Independent construction path: the formal two-term recurrence
//   f_n = f_{n-1} - x * f_{n-2}
// seeded (2, 1) for the first kind and (1, 1) for the second, each row then
// stripped of its constant term and substituted x -> x^d. Returns indices
// 0..n_max inclusive.
std::vector<SparsePoly> generate_by_recurrence(Kind kind, uint64_t p, uint64_t n_max,
                                               uint64_t d);

// Functional recurrence over a concrete field: f_n = a*f_{n-1} - x*f_{n-2}
// with the same seeds (the first-kind seed f_1 is a). Returns the full value,
// constant term included.
FieldElement eval_reversed_dickson(Kind kind, uint64_t n, const FieldElement& a,
                                   const FieldElement& x, const Field& field);

}  // namespace rdo

#endif  // RDO_DICKSON_HPP
