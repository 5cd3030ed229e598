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

#include "rdo/dickson.hpp"

#include <sstream>

#include "int_util.hpp"

namespace rdo {

using detail::checked_mul;
using detail::invm;
using detail::mulm;
using detail::subm;

namespace {

// C(a, b) mod p for 0 <= a, b < p.
uint64_t digit_binom(uint64_t a, uint64_t b, uint64_t p) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    uint64_t num = 1;
    uint64_t den = 1;
    for (uint64_t t = 1; t <= b; ++t) {
        num = mulm(num, (a - b + t) % p, p);
        den = mulm(den, t % p, p);
    }
    return mulm(num, invm(den, p), p);
}

void require_positive_d(uint64_t d) {
    if (d == 0) {
        throw error(errc::bad_index, "substitution exponent d must be at least 1");
    }
}

}  // namespace

const char* to_string(Kind kind) {
    return kind == Kind::first ? "first" : "second";
}

Kind kind_from_string(std::string_view s) {
    if (s == "first") return Kind::first;
    if (s == "second") return Kind::second;
    std::ostringstream msg;
    msg << "unknown kind '" << s << "' (expected 'first' or 'second')";
    throw std::invalid_argument(msg.str());
}

uint64_t lucas_binom(uint64_t n, uint64_t k, uint64_t p) {
    if (k > n) return 0;
    uint64_t r = 1;
    while (k > 0 || n > 0) {
        const uint64_t nd = n % p;
        const uint64_t kd = k % p;
        if (kd > nd) return 0;
        r = mulm(r, digit_binom(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    return r;
}

SparsePoly first_kind_closed(uint64_t p, uint64_t n, uint64_t d) {
    require_positive_d(d);
    SparsePoly f(p);
    for (uint64_t i = 1; i <= n / 2; ++i) {
        uint64_t c = detail::addm(lucas_binom(n - i, i, p), lucas_binom(n - i - 1, i - 1, p), p);
        if (i % 2 == 1) c = subm(0, c, p);
        f.add_term(checked_mul(d, i, errc::exponent_overflow), c);
    }
    return f;
}

SparsePoly second_kind_closed(uint64_t p, uint64_t n, uint64_t d) {
    require_positive_d(d);
    SparsePoly f(p);
    for (uint64_t i = 1; i <= n / 2; ++i) {
        uint64_t c = lucas_binom(n - i, i, p);
        if (i % 2 == 1) c = subm(0, c, p);
        f.add_term(checked_mul(d, i, errc::exponent_overflow), c);
    }
    return f;
}

SparsePoly closed_form(Kind kind, uint64_t p, uint64_t n, uint64_t d) {
    return kind == Kind::first ? first_kind_closed(p, n, d) : second_kind_closed(p, n, d);
}

std::vector<SparsePoly> generate_by_recurrence(Kind kind, uint64_t p, uint64_t n_max,
                                               uint64_t d) {
    require_positive_d(d);
    std::vector<SparsePoly> out;
    out.reserve(n_max + 1);

    const SparsePoly x = SparsePoly::monomial(p, 1, 1);
    SparsePoly prev2 = SparsePoly::monomial(p, kind == Kind::first ? 2 : 1, 0);
    SparsePoly prev1 = SparsePoly::monomial(p, 1, 0);

    out.push_back(prev2.without_constant_term().substitute(d));
    if (n_max == 0) return out;
    out.push_back(prev1.without_constant_term().substitute(d));

    for (uint64_t n = 2; n <= n_max; ++n) {
        SparsePoly next = prev1 - x * prev2;
        out.push_back(next.without_constant_term().substitute(d));
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return out;
}

FieldElement eval_reversed_dickson(Kind kind, uint64_t n, const FieldElement& a,
                                   const FieldElement& x, const Field& field) {
    FieldElement f0 = kind == Kind::first ? field.add(field.one(), field.one()) : field.one();
    if (n == 0) return f0;
    FieldElement f1 = a;
    for (uint64_t i = 2; i <= n; ++i) {
        FieldElement f2 = field.sub(field.mul(a, f1), field.mul(x, f0));
        f0 = std::move(f1);
        f1 = std::move(f2);
    }
    return f1;
}

}  // namespace rdo
