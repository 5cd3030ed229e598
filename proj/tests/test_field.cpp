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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rdo/error.hpp"
#include "rdo/field.hpp"

using rdo::errc;
using rdo::Field;
using rdo::FieldElement;
using rdo::FieldParams;
using rdo::find_irreducible;
using rdo::validate_odd_prime;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const rdo::error& e) {
        return e.code();
    }
    FAIL("expected rdo::error");
    return errc::overflow;  // unreachable
}

}  // namespace

TEST_CASE("validate_odd_prime accepts odd primes across the 64-bit range") {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 97ull, 7919ull}) {
        CHECK(validate_odd_prime(p) == p);
    }
    // 2^61 - 1, a Mersenne prime; exercises the wide Miller-Rabin path.
    CHECK(validate_odd_prime(2305843009213693951ull) == 2305843009213693951ull);
}

TEST_CASE("validate_odd_prime rejects 2, composites, and pseudoprimes") {
    CHECK(code_of([] { validate_odd_prime(2); }) == errc::even_prime);
    for (uint64_t v : {0ull, 1ull, 9ull, 15ull, 91ull,
                       561ull,           // Carmichael
                       3215031751ull,    // strong pseudoprime to bases 2,3,5,7
                       4611686018427387904ull}) {
        CHECK(code_of([v] { validate_odd_prime(v); }) == errc::composite);
    }
}

TEST_CASE("find_irreducible reproduces the pinned canonical moduli") {
    CHECK(find_irreducible(3, 2).modulus == std::vector<uint64_t>{1, 0, 1});   // x^2 + 1
    CHECK(find_irreducible(5, 2).modulus == std::vector<uint64_t>{2, 0, 1});   // x^2 + 2
    CHECK(find_irreducible(7, 2).modulus == std::vector<uint64_t>{1, 0, 1});   // x^2 + 1
    CHECK(find_irreducible(3, 3).modulus == std::vector<uint64_t>{1, 2, 0, 1});  // x^3 + 2x + 1
    CHECK(find_irreducible(7, 1).modulus == std::vector<uint64_t>{0, 1});      // x
}

TEST_CASE("find_irreducible fills in p, e, q") {
    auto fp = find_irreducible(3, 4);
    CHECK(fp.p == 3);
    CHECK(fp.e == 4);
    CHECK(fp.q == 81);
    CHECK(fp.modulus.size() == 5);
    CHECK(fp.modulus.back() == 1);
}

TEST_CASE("find_irreducible rejects bad degrees and overflowing sizes") {
    CHECK(code_of([] { find_irreducible(3, 0); }) == errc::bad_index);
    CHECK(code_of([] { find_irreducible(3, 41); }) == errc::overflow);  // 3^41 > 2^64
    CHECK(code_of([] { find_irreducible(9, 2); }) == errc::composite);
}

TEST_CASE("element/encode is a bijection on [0, q)") {
    for (auto [p, e] : std::vector<std::pair<uint64_t, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
        Field F = Field::make(p, e);
        for (uint64_t v = 0; v < F.q(); ++v) {
            CHECK(F.encode(F.element(v)) == v);
        }
        CHECK(F.element(0) == F.zero());
        CHECK(F.element(1) == F.one());
        CHECK(code_of([&] { F.element(F.q()); }) == errc::bad_index);
    }
}

TEST_CASE("prime-field arithmetic matches integer arithmetic mod p") {
    Field F = Field::make(7, 1);
    for (uint64_t a = 0; a < 7; ++a) {
        for (uint64_t b = 0; b < 7; ++b) {
            CHECK(F.encode(F.add(F.element(a), F.element(b))) == (a + b) % 7);
            CHECK(F.encode(F.sub(F.element(a), F.element(b))) == (a + 7 - b) % 7);
            CHECK(F.encode(F.mul(F.element(a), F.element(b))) == a * b % 7);
        }
    }
}

TEST_CASE("GF(9) satisfies the field axioms exhaustively") {
    Field F = Field::make(3, 2);
    for (uint64_t va = 0; va < 9; ++va) {
        FieldElement a = F.element(va);
        CHECK(F.add(a, F.zero()) == a);
        CHECK(F.mul(a, F.one()) == a);
        CHECK(F.is_zero(F.add(a, F.neg(a))));
        CHECK(F.is_zero(F.sub(a, a)));
        for (uint64_t vb = 0; vb < 9; ++vb) {
            FieldElement b = F.element(vb);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (uint64_t vc = 0; vc < 9; ++vc) {
                FieldElement c = F.element(vc);
                CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
}

TEST_CASE("inverses multiply to one; inv(0) is a domain error") {
    for (auto [p, e] : std::vector<std::pair<uint64_t, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        Field F = Field::make(p, e);
        for (uint64_t v = 1; v < F.q(); ++v) {
            FieldElement a = F.element(v);
            CHECK(F.mul(a, F.inv(a)) == F.one());
        }
        CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
    }
}

TEST_CASE("pow matches repeated multiplication and the field equations") {
    Field F = Field::make(3, 3);  // GF(27)
    for (uint64_t v = 0; v < 27; ++v) {
        FieldElement a = F.element(v);
        CHECK(F.pow(a, 0) == F.one());
        CHECK(F.pow(a, 1) == a);
        CHECK(F.pow(a, 2) == F.mul(a, a));
        CHECK(F.pow(a, F.q()) == a);  // x^q == x
        if (v != 0) CHECK(F.pow(a, F.q() - 1) == F.one());
    }
}

TEST_CASE("the Frobenius map x -> x^p is additive") {
    for (auto [p, e] : std::vector<std::pair<uint64_t, unsigned>>{{3, 3}, {5, 2}, {7, 2}}) {
        Field F = Field::make(p, e);
        for (uint64_t va = 0; va < F.q(); ++va) {
            for (uint64_t vb = 0; vb < F.q(); ++vb) {
                FieldElement a = F.element(va);
                FieldElement b = F.element(vb);
                CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
            }
        }
    }
}

TEST_CASE("a non-irreducible modulus is rejected at inversion") {
    FieldParams bad;
    bad.p = 3;
    bad.e = 2;
    bad.q = 9;
    bad.modulus = {0, 0, 1};  // x^2, reducible
    Field F(bad);
    CHECK_THROWS_AS(F.inv(F.element(3)), std::domain_error);  // x has no inverse mod x^2
}
