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

#ifndef RDO_SPARSE_POLY_HPP
#define RDO_SPARSE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>

#include "rdo/error.hpp"
#include "rdo/field.hpp"

namespace rdo {

// Univariate polynomial over F_p, stored as exponent -> nonzero coefficient.
// Always normalized: no zero coefficients, every coefficient in [1, p).
// These are formal objects; no reduction mod x^q - x ever happens here, which
// is what lets exponent arithmetic cover extensions of any size.
class SparsePoly {
   public:
    explicit SparsePoly(uint64_t p);

    static SparsePoly monomial(uint64_t p, uint64_t coeff, uint64_t exponent);

    uint64_t characteristic() const { return p_; }
    const std::map<uint64_t, uint64_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const { return terms_.count(0) != 0; }
    std::size_t term_count() const { return terms_.size(); }
    uint64_t coeff(uint64_t exponent) const;
    uint64_t degree() const;  // bad_index on the zero polynomial

    // Accumulates coeff onto the exponent's coefficient mod p; erases the
    // term if the sum vanishes.
    void add_term(uint64_t exponent, uint64_t coeff);

    SparsePoly operator+(const SparsePoly& rhs) const;
    SparsePoly operator-(const SparsePoly& rhs) const;
    SparsePoly operator*(const SparsePoly& rhs) const;

    // f(x)^p via the characteristic-p power rule: exponents multiply by p,
    // coefficients stay fixed (c^p == c in F_p).
    SparsePoly frobenius_pow() const;

    // f(x^d); substitute(1) is the identity. Requires d >= 1.
    SparsePoly substitute(uint64_t d) const;

    // Copy with the exponent-0 term removed (if any).
    SparsePoly without_constant_term() const;

    // Canonical text form: terms in ascending exponent order, each rendered
    // "c*x^t" with c and t always written out, joined by " + "; the zero
    // polynomial renders as "0".
    std::string to_string() const;

    bool operator==(const SparsePoly&) const = default;

   private:
    uint64_t p_;
    std::map<uint64_t, uint64_t> terms_;
};

// f(x) at x over GF(p^e); field.p() must equal f.characteristic().
FieldElement evaluate(const SparsePoly& f, const FieldElement& x, const Field& field);

}  // namespace rdo

#endif  // RDO_SPARSE_POLY_HPP
