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

#include "rdo/field.hpp"

#include <initializer_list>
#include <sstream>
#include <utility>

#include "int_util.hpp"

namespace rdo {

using detail::addm;
using detail::checked_mul;
using detail::invm;
using detail::mulm;
using detail::powm;
using detail::subm;

namespace {

constexpr std::initializer_list<uint64_t> kMillerRabinBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Deterministic for every 64-bit n with the base set above.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t b : kMillerRabinBases) {
        if (n % b == 0) return n == b;
    }
    uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint64_t b : kMillerRabinBases) {
        uint64_t x = powm(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Dense polynomials over F_p, constant term first, normalized (no leading zeros).
using Fpx = std::vector<uint64_t>;

void trim(Fpx& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fpx poly_sub(const Fpx& a, const Fpx& b, uint64_t p) {
    Fpx r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t ai = i < a.size() ? a[i] : 0;
        uint64_t bi = i < b.size() ? b[i] : 0;
        r[i] = subm(ai, bi, p);
    }
    trim(r);
    return r;
}

Fpx poly_mul(const Fpx& a, const Fpx& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Fpx r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
        }
    }
    trim(r);
    return r;
}

// a mod f for monic f (deg f >= 0); result has degree < deg f.
Fpx poly_mod(Fpx a, const Fpx& f, uint64_t p) {
    trim(a);
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        const uint64_t c = a.back();
        const size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (size_t i = 0; i < df; ++i) {
                a[shift + i] = subm(a[shift + i], mulm(c, f[i], p), p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Fpx poly_powmod(Fpx base, uint64_t exp, const Fpx& f, uint64_t p) {
    Fpx r{1};
    base = poly_mod(std::move(base), f, p);
    while (exp) {
        if (exp & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        exp >>= 1;
    }
    return r;
}

void make_monic(Fpx& a, uint64_t p) {
    if (a.empty() || a.back() == 1) return;
    const uint64_t il = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, il, p);
}

Fpx poly_gcd(Fpx a, Fpx b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b, p);
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    make_monic(a, p);
    return a;
}

// Quotient and remainder for nonzero b (not necessarily monic).
std::pair<Fpx, Fpx> poly_divmod(Fpx a, const Fpx& b, uint64_t p) {
    trim(a);
    const size_t db = b.size() - 1;
    if (a.size() <= db) return {{}, std::move(a)};
    const uint64_t ilc = invm(b.back(), p);
    Fpx q(a.size() - db, 0);
    while (a.size() > db) {
        const uint64_t c = mulm(a.back(), ilc, p);
        const size_t shift = a.size() - 1 - db;
        q[shift] = c;
        for (size_t i = 0; i <= db; ++i) {
            a[shift + i] = subm(a[shift + i], mulm(c, b[i], p), p);
        }
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

// f reducible over F_p iff it shares a factor with x^(p^k) - x for some
// k <= deg(f)/2; x^(p^k) mod f is built by iterating the Frobenius power.
bool is_irreducible(const Fpx& f, uint64_t p, unsigned e) {
    Fpx x{0, 1};
    Fpx r = x;
    for (unsigned k = 1; k <= e / 2; ++k) {
        r = poly_powmod(std::move(r), p, f, p);
        Fpx g = poly_gcd(f, poly_sub(r, x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

uint64_t validate_odd_prime(uint64_t p) {
    if (p == 2) {
        throw error(errc::even_prime, "characteristic 2 is not supported");
    }
    if (!is_prime_u64(p)) {
        std::ostringstream msg;
        msg << p << " is not prime";
        throw error(errc::composite, msg.str());
    }
    return p;
}

FieldParams find_irreducible(uint64_t p, unsigned e) {
    validate_odd_prime(p);
    if (e == 0) {
        throw error(errc::bad_index, "extension degree must be at least 1");
    }
    FieldParams params;
    params.p = p;
    params.e = e;
    params.q = 1;
    for (unsigned i = 0; i < e; ++i) params.q = checked_mul(params.q, p);
    if (e == 1) {
        params.modulus = {0, 1};  // reduction by x: GF(p) itself
        return params;
    }
    for (uint64_t t = 0; t < params.q; ++t) {
        Fpx f(e + 1, 0);
        uint64_t v = t;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[e] = 1;
        if (is_irreducible(f, p, e)) {
            params.modulus = std::move(f);
            return params;
        }
    }
    // Irreducibles of every degree exist over every finite field.
    throw std::logic_error("no irreducible polynomial found");
}

Field::Field(FieldParams params) : params_(std::move(params)) {
    validate_odd_prime(params_.p);
    if (params_.e == 0) {
        throw std::invalid_argument("field extension degree must be at least 1");
    }
    uint64_t q = 1;
    for (unsigned i = 0; i < params_.e; ++i) q = checked_mul(q, params_.p);
    if (q != params_.q) {
        throw std::invalid_argument("field order does not equal p^e");
    }
    if (params_.modulus.size() != params_.e + 1 || params_.modulus.back() != 1) {
        throw std::invalid_argument("modulus must be monic of degree e");
    }
    for (uint64_t c : params_.modulus) {
        if (c >= params_.p) throw std::invalid_argument("modulus coefficient out of range");
    }
}

FieldElement Field::zero() const { return FieldElement{std::vector<uint64_t>(params_.e, 0)}; }

FieldElement Field::one() const {
    FieldElement x = zero();
    x.coeffs[0] = 1;
    return x;
}

FieldElement Field::element(uint64_t v) const {
    if (v >= params_.q) {
        throw error(errc::bad_index, "element index must be below the field order");
    }
    FieldElement x = zero();
    for (unsigned i = 0; i < params_.e; ++i) {
        x.coeffs[i] = v % params_.p;
        v /= params_.p;
    }
    return x;
}

uint64_t Field::encode(const FieldElement& x) const {
    uint64_t v = 0;
    for (unsigned i = params_.e; i-- > 0;) v = v * params_.p + x.coeffs[i];
    return v;
}

bool Field::is_zero(const FieldElement& x) const {
    for (uint64_t c : x.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < params_.e; ++i) r.coeffs[i] = addm(a.coeffs[i], b.coeffs[i], params_.p);
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < params_.e; ++i) r.coeffs[i] = subm(a.coeffs[i], b.coeffs[i], params_.p);
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < params_.e; ++i) r.coeffs[i] = subm(0, a.coeffs[i], params_.p);
    return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    if (params_.e == 1) {
        return FieldElement{{mulm(a.coeffs[0], b.coeffs[0], params_.p)}};
    }
    Fpx prod = poly_mul(a.coeffs, b.coeffs, params_.p);
    prod = poly_mod(std::move(prod), params_.modulus, params_.p);
    prod.resize(params_.e, 0);
    return FieldElement{std::move(prod)};
}

FieldElement Field::inv(const FieldElement& a) const {
    if (is_zero(a)) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    const uint64_t p = params_.p;
    if (params_.e == 1) {
        return FieldElement{{invm(a.coeffs[0], p)}};
    }
    // Extended Euclid; invariant s_i * a == r_i (mod modulus).
    Fpx r0 = params_.modulus;
    Fpx r1 = a.coeffs;
    trim(r1);
    Fpx s0{};
    Fpx s1{1};
    while (r1.size() > 1) {
        auto [quot, r2] = poly_divmod(std::move(r0), r1, p);
        Fpx s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) {
            throw std::domain_error("modulus is not irreducible");
        }
    }
    const uint64_t scale = invm(r1[0], p);
    for (auto& c : s1) c = mulm(c, scale, p);
    Fpx u = poly_mod(std::move(s1), params_.modulus, p);
    u.resize(params_.e, 0);
    return FieldElement{std::move(u)};
}

FieldElement Field::pow(FieldElement base, uint64_t k) const {
    FieldElement r = one();
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

}  // namespace rdo
