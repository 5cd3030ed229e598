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

// Internal modular-arithmetic helpers shared by the library sources.
// Not installed; include only from core/src.

#ifndef RDO_INT_UTIL_HPP
#define RDO_INT_UTIL_HPP

#include <cstdint>

#include "rdo/error.hpp"

namespace rdo::detail {

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    if (s < a || s >= m) s -= m;  // s < a means the addition wrapped
    return s;
}

inline uint64_t subm(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powm(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulm(r, base, m);
        base = mulm(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m for prime m, via Fermat.
inline uint64_t invm(uint64_t a, uint64_t m) { return powm(a % m, m - 2, m); }

// p^k with overflow detection.
inline uint64_t checked_pow(uint64_t p, unsigned k, errc code = errc::overflow) {
    uint64_t r = 1;
    for (unsigned t = 0; t < k; ++t) {
        if (__builtin_mul_overflow(r, p, &r)) {
            throw error(code, "power does not fit in 64 bits");
        }
    }
    return r;
}

inline uint64_t checked_mul(uint64_t a, uint64_t b, errc code = errc::overflow) {
    uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw error(code, "product does not fit in 64 bits");
    }
    return r;
}

inline uint64_t checked_add(uint64_t a, uint64_t b, errc code = errc::overflow) {
    uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw error(code, "sum does not fit in 64 bits");
    }
    return r;
}

}  // namespace rdo::detail

#endif  // RDO_INT_UTIL_HPP
