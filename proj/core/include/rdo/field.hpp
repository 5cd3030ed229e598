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

#ifndef RDO_FIELD_HPP
#define RDO_FIELD_HPP

#include <cstdint>
#include <vector>

#include "rdo/error.hpp"

namespace rdo {

// Returns p unchanged if it is an odd prime; otherwise throws rdo::error with
// code even_prime (p == 2) or composite. Primality is decided exactly for the
// whole 64-bit range (deterministic Miller-Rabin base set).
uint64_t validate_odd_prime(uint64_t p);

// Parameters of GF(p^e). `modulus` is the monic irreducible polynomial of
// degree e over F_p that reduction happens by, stored constant term first
// (length e + 1, leading coefficient 1).
struct FieldParams {
    uint64_t p = 0;
    unsigned e = 0;
    uint64_t q = 0;  // p^e
    std::vector<uint64_t> modulus;

    bool operator==(const FieldParams&) const = default;
};

// Deterministically picks the monic irreducible of degree e over F_p whose
// coefficient vector (c_0, ..., c_{e-1}) has the least base-p value
// c_0 + c_1 p + c_2 p^2 + ... Examples: p=3,e=2 -> x^2 + 1; p=5,e=2 -> x^2 + 2.
// Throws rdo::error(overflow) if p^e does not fit in 64 bits.
FieldParams find_irreducible(uint64_t p, unsigned e);

// An element of GF(p^e): residue coefficients (length e, entries in [0, p)),
// constant term first. Only meaningful together with the Field that made it.
struct FieldElement {
    std::vector<uint64_t> coeffs;

    bool operator==(const FieldElement&) const = default;
};

// Arithmetic in GF(p^e) = F_p[x] / (modulus). Value type; cheap to copy.
class Field {
   public:
    explicit Field(FieldParams params);

    // Convenience: GF(p^e) with the canonical modulus from find_irreducible.
    static Field make(uint64_t p, unsigned e) { return Field(find_irreducible(p, e)); }

    const FieldParams& params() const { return params_; }
    uint64_t p() const { return params_.p; }
    unsigned e() const { return params_.e; }
    uint64_t q() const { return params_.q; }

    FieldElement zero() const;
    FieldElement one() const;

    // Bijection [0, q) <-> GF(p^e): v maps to the element whose i-th residue
    // coefficient is the i-th base-p digit of v. element(0) == zero(),
    // element(1) == one(). Throws bad_index for v >= q.
    FieldElement element(uint64_t v) const;
    uint64_t encode(const FieldElement& x) const;

    bool is_zero(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;

    // Multiplicative inverse by the extended Euclidean algorithm on
    // coefficient polynomials. Throws std::domain_error on zero input.
    FieldElement inv(const FieldElement& a) const;

    // Square-and-multiply; pow(x, 0) == one() for every x including zero.
    FieldElement pow(FieldElement base, uint64_t k) const;

   private:
    FieldParams params_;
};

}  // namespace rdo

#endif  // RDO_FIELD_HPP
