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

#ifndef RDO_ERROR_HPP
#define RDO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rdo {

enum class errc {
    even_prime,             // characteristic 2 requested
    composite,              // claimed prime fails the primality test
    overflow,               // a 64-bit quantity (q, binomial, ...) would overflow
    mixed_characteristic,   // operands live over different prime fields
    exponent_overflow,      // a monomial exponent would overflow 64 bits
    constant_term_present,  // operation requires a constant-free polynomial
    bad_index,              // index/degree outside the documented domain
    unknown_item,           // no table entry with that identifier
    field_too_large,        // exhaustive scan refused: q exceeds the cap
};

inline const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::even_prime: return "even_prime";
        case errc::composite: return "composite";
        case errc::overflow: return "overflow";
        case errc::mixed_characteristic: return "mixed_characteristic";
        case errc::exponent_overflow: return "exponent_overflow";
        case errc::constant_term_present: return "constant_term_present";
        case errc::bad_index: return "bad_index";
        case errc::unknown_item: return "unknown_item";
        case errc::field_too_large: return "field_too_large";
    }
    return "unknown";
}

// Single exception type for all domain errors; carries a machine-checkable
// code next to the human-readable message.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

}  // namespace rdo

#endif  // RDO_ERROR_HPP
