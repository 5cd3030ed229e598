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

#include "rdo/classify.hpp"

#include <sstream>

#include "int_util.hpp"
#include "rdo/field.hpp"

namespace rdo {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_pow;

namespace {

// alpha with v == p^alpha + 1, if any (alpha = 0 means v == 2).
std::optional<unsigned> power_plus_one_exponent(uint64_t v, uint64_t p) {
    if (v < 2) return std::nullopt;
    uint64_t w = v - 1;
    unsigned alpha = 0;
    while (w % p == 0) {
        w /= p;
        ++alpha;
    }
    if (w != 1) return std::nullopt;
    return alpha;
}

void require_positive(uint64_t v, const char* what) {
    if (v == 0) {
        std::ostringstream msg;
        msg << what << " must be at least 1";
        throw error(errc::bad_index, msg.str());
    }
}

}  // namespace

std::pair<uint64_t, unsigned> strip_p_powers(uint64_t v, uint64_t p) {
    require_positive(v, "value to strip");
    unsigned m = 0;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    return {v, m};
}

std::optional<TwoPowerWitness> decompose_two_powers(uint64_t exponent, uint64_t p) {
    if (exponent < 2) return std::nullopt;
    uint64_t pi = 1;
    for (unsigned i = 0; pi <= exponent / 2; ++i) {
        uint64_t rest = exponent - pi;
        unsigned j = 0;
        while (rest % p == 0) {
            rest /= p;
            ++j;
        }
        if (rest == 1) return TwoPowerWitness{exponent, i, j};
        if (pi > UINT64_MAX / p) break;
        pi *= p;
    }
    return std::nullopt;
}

DOVerdict is_do(const SparsePoly& f) {
    DOVerdict v;
    if (f.is_zero()) {
        v.is_do = true;
        v.trivially_zero = true;
        return v;
    }
    if (f.has_constant_term()) {
        v.failing_exponent = 0;
        return v;
    }
    const uint64_t p = f.characteristic();
    for (const auto& [t, c] : f.terms()) {
        auto w = decompose_two_powers(t, p);
        if (!w) {
            v.witnesses.clear();
            v.failing_exponent = t;
            return v;
        }
        v.witnesses.push_back(*w);
    }
    v.is_do = true;
    return v;
}

RuleMatch classify_first(uint64_t p, uint64_t n, uint64_t d) {
    validate_odd_prime(p);
    require_positive(n, "index n");
    require_positive(d, "substitution exponent d");
    auto [n0, m] = strip_p_powers(n, p);
    auto [d0, ell] = strip_p_powers(d, p);

    RuleMatch r;
    r.n0 = n0;
    r.m = m;
    r.d0 = d0;
    r.k_or_ell = ell;

    auto match = [&](const char* id, std::optional<unsigned> pattern = std::nullopt) {
        r.matched = true;
        r.rule_id = id;
        r.pattern_exponent = pattern;
    };

    if (p == 3) {
        if (n0 == 2) {
            if (auto j = power_plus_one_exponent(d0, 3)) match("Thm2.1-i", j);
        } else if (n0 == 4 && d0 == 2) {
            match("Thm2.1-ii");
        } else if (n0 == 5 && d0 == 2) {
            match("Thm2.1-iii");
        } else if (n0 == 7 && d0 == 2) {
            match("Thm2.1-iv");
        }
    } else {
        if (n0 == 2) {
            if (auto i = power_plus_one_exponent(d0, p)) match("Thm2.1-v", i);
        } else if (n0 == 3) {
            if (auto i = power_plus_one_exponent(d0, p)) match("Thm2.1-vi", i);
        }
    }
    return r;
}

RuleMatch classify_second(uint64_t p, uint64_t n, uint64_t d) {
    validate_odd_prime(p);
    require_positive(n, "index n");
    require_positive(d, "substitution exponent d");
    auto [d0, k] = strip_p_powers(d, p);

    RuleMatch r;
    r.n0 = n;  // the second-kind family has no index-level Frobenius identity
    r.m = 0;
    r.d0 = d0;
    r.k_or_ell = k;

    auto match = [&](const char* id, std::optional<unsigned> pattern = std::nullopt) {
        r.matched = true;
        r.rule_id = id;
        r.pattern_exponent = pattern;
    };

    if (p == 3) {
        if (n == 2 || n == 3 || n == 5 || n == 6) {
            if (auto a = power_plus_one_exponent(d0, 3)) match("T2.3-i", a);
        } else if (n == 4) {
            if (d0 <= UINT64_MAX / 2) {
                if (auto a = power_plus_one_exponent(2 * d0, 3)) match("T2.3-ii", a);
            }
        } else if (n == 7 && d0 == 2) {
            match("T2.3-iii");
        } else if (n == 10 && d0 == 2) {
            match("T2.3-iv");
        } else if (n == 13 && d0 == 2) {
            match("T2.3-v");
        } else if (n == 15 && d0 == 4) {
            match("T2.3-vi");
        } else if (n == 19 && d0 == 2) {
            match("T2.3-vii");
        }
    } else if (p == 5) {
        if (n == 2 || n == 3) {
            if (auto a = power_plus_one_exponent(d0, 5)) match("T2.4-i", a);
        } else if (n == 7 && d0 == 2) {
            match("T2.4-ii");
        }
    } else {
        if (n == 2 || n == 3) {
            if (auto a = power_plus_one_exponent(d0, p)) match("T2.5-i", a);
        }
    }
    return r;
}

RuleMatch classify(Kind kind, uint64_t p, uint64_t n, uint64_t d) {
    return kind == Kind::first ? classify_first(p, n, d) : classify_second(p, n, d);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct ItemSpec {
    bool needs_i = false;
    bool needs_k = false;
    bool needs_ell = false;
    bool needs_m = false;
};

ItemSpec item_spec(Kind kind, int item) {
    if (kind == Kind::first) {
        switch (item) {
            case 1: return {.needs_i = true, .needs_ell = true, .needs_m = true};
            case 2:
            case 3:
            case 4: return {.needs_ell = true, .needs_m = true};
            case 5:
            case 6: return {.needs_i = true, .needs_ell = true, .needs_m = true};
            default: break;
        }
    } else {
        switch (item) {
            case 1:
            case 2:
            case 3:
            case 4:
            case 5: return {.needs_k = true, .needs_ell = true};
            case 6:
            case 7:
            case 8:
            case 9:
            case 10: return {.needs_k = true};
            case 11:
            case 12: return {.needs_k = true, .needs_ell = true};
            case 13: return {.needs_k = true};
            case 14:
            case 15: return {.needs_k = true, .needs_ell = true};
            default: break;
        }
    }
    throw error(errc::unknown_item, "no such catalog item: " + remark_label(kind, item));
}

void require_item_characteristic(Kind kind, int item, uint64_t p) {
    bool ok = false;
    if (kind == Kind::first) {
        ok = (item >= 1 && item <= 4) ? p == 3 : p > 3;
    } else {
        if (item >= 1 && item <= 10) ok = p == 3;
        else if (item >= 11 && item <= 13) ok = p == 5;
        else ok = p > 5;
    }
    if (!ok) {
        std::ostringstream msg;
        msg << remark_label(kind, item) << " is not defined at characteristic " << p;
        throw error(errc::unknown_item, msg.str());
    }
}

}  // namespace

int remark_item_count(Kind kind) { return kind == Kind::first ? 6 : 15; }

std::vector<int> remark_items(Kind kind, uint64_t p) {
    if (kind == Kind::first) {
        if (p == 3) return {1, 2, 3, 4};
        return {5, 6};
    }
    if (p == 3) return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    if (p == 5) return {11, 12, 13};
    return {14, 15};
}

std::vector<std::string> remark_param_names(Kind kind, int item) {
    const ItemSpec spec = item_spec(kind, item);
    std::vector<std::string> names;
    if (spec.needs_i) names.push_back("i");
    if (spec.needs_k) names.push_back("k");
    if (spec.needs_ell) names.push_back("ell");
    if (spec.needs_m) names.push_back("m");
    return names;
}

std::string remark_label(Kind kind, int item) {
    std::ostringstream out;
    out << (kind == Kind::first ? "R1-" : "R2-") << item;
    return out.str();
}

RemarkInstance instantiate_remark(Kind kind, int item, uint64_t p, const RemarkParams& params) {
    if (item < 1 || item > remark_item_count(kind)) {
        throw error(errc::unknown_item, "no such catalog item: " + remark_label(kind, item));
    }
    require_item_characteristic(kind, item, p);

    const auto pw = [&](uint64_t base, unsigned k) { return checked_pow(base, k); };
    const auto mul = [](uint64_t a, uint64_t b) { return checked_mul(a, b); };

    RemarkInstance inst{kind, item, p, 0, 0, SparsePoly(p)};
    SparsePoly& f = inst.printed;

    if (kind == Kind::first) {
        switch (item) {
            case 1: {
                inst.n = mul(2, pw(3, params.m));
                inst.d = mul(pw(3, params.i) + 1, pw(3, params.ell));
                f.add_term(checked_add(pw(3, params.ell + params.m + params.i),
                                       pw(3, params.ell + params.m)),
                           1);
                break;
            }
            case 2:
            case 3:
            case 4: {
                const uint64_t base = item == 2 ? 4 : item == 3 ? 5 : 7;
                inst.n = mul(base, pw(3, params.m));
                inst.d = mul(2, pw(3, params.ell));
                const uint64_t E = pw(3, params.ell + params.m);
                if (item == 2) {
                    f.add_term(mul(2, E), 2);
                    f.add_term(mul(4, E), 2);
                } else if (item == 3) {
                    f.add_term(mul(2, E), 1);
                    f.add_term(mul(4, E), 2);
                } else {
                    f.add_term(mul(2, E), 2);
                    f.add_term(mul(4, E), 2);
                    f.add_term(mul(6, E), 1);  // the table prints 1 here
                }
                break;
            }
            case 5:
            case 6: {
                const uint64_t base = item == 5 ? 2 : 3;
                inst.n = mul(base, pw(p, params.m));
                inst.d = mul(pw(p, params.i) + 1, pw(p, params.ell));
                f.add_term(mul(inst.d, pw(p, params.m)), p - base);
                break;
            }
            default: break;
        }
        return inst;
    }

    switch (item) {
        case 1:
        case 2:
        case 4: {
            inst.n = item == 1 ? 2 : item == 2 ? 3 : 5;
            inst.d = mul(pw(3, params.k), pw(3, params.ell) + 1);
            f.add_term(inst.d, item == 2 ? 1 : 2);
            break;
        }
        case 3: {
            inst.n = 4;
            inst.d = mul(pw(3, params.k), pw(3, params.ell) + 1) / 2;
            f.add_term(mul(2, inst.d), 1);
            break;
        }
        case 5: {
            inst.n = 6;
            inst.d = mul(pw(3, params.k), pw(3, params.ell) + 1);
            f.add_term(inst.d, 1);
            f.add_term(mul(3, inst.d), 2);
            break;
        }
        case 6: {
            inst.n = 7;
            inst.d = mul(2, pw(3, params.k));
            f.add_term(mul(2, inst.d), 1);
            f.add_term(mul(3, inst.d), 2);
            break;
        }
        case 7: {
            inst.n = 10;
            inst.d = mul(2, pw(3, params.k));
            f.add_term(mul(2, inst.d), 1);
            f.add_term(mul(3, inst.d), 1);
            f.add_term(mul(5, inst.d), 2);
            break;
        }
        case 8: {
            inst.n = 13;
            inst.d = mul(2, pw(3, params.k));
            f.add_term(mul(2, inst.d), 1);
            f.add_term(mul(5, inst.d), 1);
            f.add_term(mul(6, inst.d), 1);
            break;
        }
        case 9: {
            inst.n = 15;
            inst.d = mul(4, pw(3, params.k));
            f.add_term(inst.d, 1);
            f.add_term(mul(3, inst.d), 1);  // the table prints 1 here
            f.add_term(mul(7, inst.d), 1);
            break;
        }
        case 10: {
            inst.n = 19;
            inst.d = mul(2, pw(3, params.k));
            f.add_term(mul(2, inst.d), 1);
            f.add_term(mul(3, inst.d), 1);
            f.add_term(mul(5, inst.d), 2);
            f.add_term(mul(9, inst.d), 2);
            break;
        }
        case 11:
        case 12: {
            inst.n = item == 11 ? 2 : 3;
            inst.d = mul(pw(5, params.k), pw(5, params.ell) + 1);
            f.add_term(inst.d, item == 11 ? 4 : 3);
            break;
        }
        case 13: {
            inst.n = 7;
            inst.d = mul(2, pw(5, params.k));
            f.add_term(inst.d, 4);
            f.add_term(mul(3, inst.d), 1);
            break;
        }
        case 14:
        case 15: {
            inst.n = item == 14 ? 2 : 3;
            inst.d = mul(pw(p, params.k), pw(p, params.ell) + 1);
            f.add_term(inst.d, item == 14 ? p - 1 : p - 2);
            break;
        }
        default: break;
    }
    return inst;
}

SparsePoly expected_remark_poly(Kind kind, int item, uint64_t p, const RemarkParams& params) {
    return instantiate_remark(kind, item, p, params).printed;
}

}  // namespace rdo
