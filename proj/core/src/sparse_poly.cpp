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

#include "rdo/sparse_poly.hpp"

#include <sstream>

#include "int_util.hpp"

namespace rdo {

using detail::addm;
using detail::checked_add;
using detail::checked_mul;
using detail::mulm;
using detail::subm;

namespace {

void require_same_characteristic(const SparsePoly& a, const SparsePoly& b) {
    if (a.characteristic() != b.characteristic()) {
        throw error(errc::mixed_characteristic,
                    "operands live over different prime fields");
    }
}

}  // namespace

SparsePoly::SparsePoly(uint64_t p) : p_(p) {
    if (p < 3) throw error(errc::bad_index, "characteristic must be an odd prime");
}

SparsePoly SparsePoly::monomial(uint64_t p, uint64_t coeff, uint64_t exponent) {
    SparsePoly f(p);
    f.add_term(exponent, coeff);
    return f;
}

uint64_t SparsePoly::coeff(uint64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

uint64_t SparsePoly::degree() const {
    if (terms_.empty()) {
        throw error(errc::bad_index, "the zero polynomial has no degree");
    }
    return terms_.rbegin()->first;
}

void SparsePoly::add_term(uint64_t exponent, uint64_t coeff) {
    coeff %= p_;
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second = addm(it->second, coeff, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
    require_same_characteristic(*this, rhs);
    SparsePoly r = *this;
    for (const auto& [t, c] : rhs.terms_) r.add_term(t, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
    require_same_characteristic(*this, rhs);
    SparsePoly r = *this;
    for (const auto& [t, c] : rhs.terms_) r.add_term(t, p_ - c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
    require_same_characteristic(*this, rhs);
    SparsePoly r(p_);
    for (const auto& [ta, ca] : terms_) {
        for (const auto& [tb, cb] : rhs.terms_) {
            uint64_t t = checked_add(ta, tb, errc::exponent_overflow);
            r.add_term(t, mulm(ca, cb, p_));
        }
    }
    return r;
}

SparsePoly SparsePoly::frobenius_pow() const {
    SparsePoly r(p_);
    for (const auto& [t, c] : terms_) {
        r.terms_.emplace(checked_mul(t, p_, errc::exponent_overflow), c);
    }
    return r;
}

SparsePoly SparsePoly::substitute(uint64_t d) const {
    if (d == 0) throw error(errc::bad_index, "substitution exponent must be at least 1");
    SparsePoly r(p_);
    for (const auto& [t, c] : terms_) {
        r.terms_.emplace(checked_mul(t, d, errc::exponent_overflow), c);
    }
    return r;
}

SparsePoly SparsePoly::without_constant_term() const {
    SparsePoly r = *this;
    r.terms_.erase(0);
    return r;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) out << " + ";
        out << c << "*x^" << t;
        first = false;
    }
    return out.str();
}

FieldElement evaluate(const SparsePoly& f, const FieldElement& x, const Field& field) {
    if (f.characteristic() != field.p()) {
        throw error(errc::mixed_characteristic,
                    "polynomial characteristic differs from the field's");
    }
    FieldElement acc = field.zero();
    for (const auto& [t, c] : f.terms()) {
        FieldElement term = field.pow(x, t);
        term = field.mul(term, field.element(c));
        acc = field.add(acc, term);
    }
    return acc;
}

}  // namespace rdo
