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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdo/classify.hpp"
#include "rdo/dickson.hpp"

using rdo::classify;
using rdo::classify_first;
using rdo::classify_second;
using rdo::closed_form;
using rdo::decompose_two_powers;
using rdo::errc;
using rdo::instantiate_remark;
using rdo::is_do;
using rdo::Kind;
using rdo::RemarkParams;
using rdo::strip_p_powers;
using rdo::TwoPowerWitness;

TEST_CASE("strip_p_powers") {
    CHECK(strip_p_powers(12, 3) == std::pair<uint64_t, unsigned>{4, 1});
    CHECK(strip_p_powers(1, 3) == std::pair<uint64_t, unsigned>{1, 0});
    CHECK(strip_p_powers(27, 3) == std::pair<uint64_t, unsigned>{1, 3});
    CHECK(strip_p_powers(50, 5) == std::pair<uint64_t, unsigned>{2, 2});
    CHECK_THROWS_AS(strip_p_powers(0, 3), rdo::error);
}

TEST_CASE("decompose_two_powers: pinned cases") {
    CHECK(decompose_two_powers(2, 3) == TwoPowerWitness{2, 0, 0});
    CHECK(decompose_two_powers(4, 3) == TwoPowerWitness{4, 0, 1});
    CHECK(decompose_two_powers(6, 3) == TwoPowerWitness{6, 1, 1});
    CHECK(decompose_two_powers(10, 3) == TwoPowerWitness{10, 0, 2});
    CHECK_FALSE(decompose_two_powers(1, 3).has_value());
    CHECK_FALSE(decompose_two_powers(5, 3).has_value());
    CHECK_FALSE(decompose_two_powers(8, 3).has_value());
    // A decomposition far beyond the exhaustive range.
    uint64_t p30 = 1;
    for (int t = 0; t < 30; ++t) p30 *= 3;
    uint64_t p12 = 1;
    for (int t = 0; t < 12; ++t) p12 *= 3;
    CHECK(decompose_two_powers(p30 + p12, 3) == TwoPowerWitness{p30 + p12, 12, 30});
}

TEST_CASE("decompose_two_powers agrees with brute force up to 2000") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        std::map<uint64_t, TwoPowerWitness> brute;
        for (unsigned i = 0;; ++i) {
            uint64_t pi = 1;
            for (unsigned t = 0; t < i; ++t) pi *= p;
            if (pi > 2000) break;
            for (unsigned j = i;; ++j) {
                uint64_t pj = 1;
                for (unsigned t = 0; t < j; ++t) pj *= p;
                if (pi + pj > 2000) break;
                brute.emplace(pi + pj, TwoPowerWitness{pi + pj, i, j});
            }
        }
        for (uint64_t e = 1; e <= 2000; ++e) {
            auto got = decompose_two_powers(e, p);
            auto it = brute.find(e);
            CAPTURE(p);
            CAPTURE(e);
            if (it == brute.end()) {
                CHECK_FALSE(got.has_value());
            } else {
                REQUIRE(got.has_value());
                CHECK(*got == it->second);
            }
        }
    }
}

TEST_CASE("is_do: verdicts and witnesses") {
    // D_4 with d = 2 over F_3: x^2 + ... exponents 2 and 4.
    auto v = is_do(closed_form(Kind::first, 3, 4, 2));
    CHECK(v.is_do);
    CHECK_FALSE(v.trivially_zero);
    REQUIRE(v.witnesses.size() == 2);
    CHECK(v.witnesses[0] == TwoPowerWitness{2, 0, 0});
    CHECK(v.witnesses[1] == TwoPowerWitness{4, 0, 1});

    // E_16 over F_3 contains x^3, which is not a sum of two 3-powers.
    auto w = is_do(closed_form(Kind::second, 3, 16, 1));
    CHECK_FALSE(w.is_do);
    REQUIRE(w.failing_exponent.has_value());
    CHECK(*w.failing_exponent == 3);
    CHECK(w.witnesses.empty());

    // The zero polynomial passes vacuously.
    auto z = is_do(closed_form(Kind::first, 3, 3, 1));
    CHECK(z.is_do);
    CHECK(z.trivially_zero);

    // A constant term disqualifies immediately, reported as exponent 0.
    rdo::SparsePoly c(3);
    c.add_term(0, 1);
    c.add_term(2, 1);
    auto u = is_do(c);
    CHECK_FALSE(u.is_do);
    REQUIRE(u.failing_exponent.has_value());
    CHECK(*u.failing_exponent == 0);
}

namespace {

void expect_match(const rdo::RuleMatch& m, const std::string& rule, uint64_t n0, unsigned mm,
                  uint64_t d0, unsigned k_or_ell, std::optional<unsigned> pattern) {
    CHECK(m.matched);
    CHECK(m.rule_id == rule);
    CHECK(m.n0 == n0);
    CHECK(m.m == mm);
    CHECK(m.d0 == d0);
    CHECK(m.k_or_ell == k_or_ell);
    CHECK(m.pattern_exponent == pattern);
}

}  // namespace

TEST_CASE("first-kind classification: the rule table") {
    expect_match(classify_first(3, 2, 2), "Thm2.1-i", 2, 0, 2, 0, 0u);
    expect_match(classify_first(3, 6, 4), "Thm2.1-i", 2, 1, 4, 0, 1u);
    expect_match(classify_first(3, 18, 4), "Thm2.1-i", 2, 2, 4, 0, 1u);
    expect_match(classify_first(3, 4, 6), "Thm2.1-ii", 4, 0, 2, 1, std::nullopt);
    expect_match(classify_first(3, 5, 2), "Thm2.1-iii", 5, 0, 2, 0, std::nullopt);
    expect_match(classify_first(3, 7, 2), "Thm2.1-iv", 7, 0, 2, 0, std::nullopt);
    expect_match(classify_first(7, 2, 8), "Thm2.1-v", 2, 0, 8, 0, 1u);
    expect_match(classify_first(7, 2, 50), "Thm2.1-v", 2, 0, 50, 0, 2u);
    expect_match(classify_first(7, 3, 2), "Thm2.1-vi", 3, 0, 2, 0, 0u);
    expect_match(classify_first(5, 3, 6), "Thm2.1-vi", 3, 0, 6, 0, 1u);

    CHECK_FALSE(classify_first(3, 8, 2).matched);
    CHECK_FALSE(classify_first(5, 2, 3).matched);
    CHECK_FALSE(classify_first(3, 2, 3).matched);  // d0 = 1
    CHECK_FALSE(classify_first(5, 4, 2).matched);  // n0 = 4 only matches at p = 3
}

TEST_CASE("second-kind classification: the rule table") {
    expect_match(classify_second(3, 2, 2), "T2.3-i", 2, 0, 2, 0, 0u);
    expect_match(classify_second(3, 6, 10), "T2.3-i", 6, 0, 10, 0, 2u);
    expect_match(classify_second(3, 4, 14), "T2.3-ii", 4, 0, 14, 0, 3u);
    expect_match(classify_second(3, 7, 2), "T2.3-iii", 7, 0, 2, 0, std::nullopt);
    expect_match(classify_second(3, 10, 2), "T2.3-iv", 10, 0, 2, 0, std::nullopt);
    expect_match(classify_second(3, 13, 2), "T2.3-v", 13, 0, 2, 0, std::nullopt);
    expect_match(classify_second(3, 15, 4), "T2.3-vi", 15, 0, 4, 0, std::nullopt);
    expect_match(classify_second(3, 19, 6), "T2.3-vii", 19, 0, 2, 1, std::nullopt);
    expect_match(classify_second(5, 3, 26), "T2.4-i", 3, 0, 26, 0, 2u);
    expect_match(classify_second(5, 7, 2), "T2.4-ii", 7, 0, 2, 0, std::nullopt);
    expect_match(classify_second(11, 2, 122), "T2.5-i", 2, 0, 122, 0, 2u);

    CHECK_FALSE(classify_second(3, 15, 2).matched);
    CHECK_FALSE(classify_second(7, 5, 2).matched);
    CHECK_FALSE(classify_second(3, 16, 2).matched);
    CHECK_FALSE(classify_second(5, 7, 4).matched);  // d0 must be exactly 2
}

TEST_CASE("second kind strips p-powers from d but never from n") {
    auto m = classify_second(3, 19, 6);  // d = 2 * 3
    CHECK(m.n0 == 19);
    CHECK(m.m == 0);
    CHECK(m.d0 == 2);
    CHECK(m.k_or_ell == 1);
    // n = 21 = 7 * 3 is NOT reduced to 7; no rule matches.
    CHECK_FALSE(classify_second(3, 21, 2).matched);
}

TEST_CASE("classify dispatches on kind and validates inputs") {
    CHECK(classify(Kind::first, 3, 6, 4) == classify_first(3, 6, 4));
    CHECK(classify(Kind::second, 5, 7, 2) == classify_second(5, 7, 2));
    CHECK_THROWS_AS(classify(Kind::first, 3, 0, 1), rdo::error);
    CHECK_THROWS_AS(classify(Kind::first, 3, 2, 0), rdo::error);
    CHECK_THROWS_AS(classify(Kind::first, 9, 2, 2), rdo::error);
}

TEST_CASE("every matched rule really is Dembowski-Ostrom") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (uint64_t n = 2; n <= 60; ++n) {
            for (uint64_t d = 1; d <= 20; ++d) {
                if (d % p == 0) continue;
                if (n % p == 0) continue;
                auto m = classify_first(p, n, d);
                if (m.matched) {
                    CAPTURE(p);
                    CAPTURE(n);
                    CAPTURE(d);
                    CHECK(is_do(closed_form(Kind::first, p, n, d)).is_do);
                }
            }
        }
    }
}

TEST_CASE("remark catalog: shape") {
    CHECK(rdo::remark_item_count(Kind::first) == 6);
    CHECK(rdo::remark_item_count(Kind::second) == 15);
    CHECK(rdo::remark_items(Kind::first, 3) == std::vector<int>{1, 2, 3, 4});
    CHECK(rdo::remark_items(Kind::first, 5) == std::vector<int>{5, 6});
    CHECK(rdo::remark_items(Kind::first, 7) == std::vector<int>{5, 6});
    CHECK(rdo::remark_items(Kind::second, 3) ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(rdo::remark_items(Kind::second, 5) == std::vector<int>{11, 12, 13});
    CHECK(rdo::remark_items(Kind::second, 7) == std::vector<int>{14, 15});
    CHECK(rdo::remark_param_names(Kind::first, 1) ==
          std::vector<std::string>{"i", "ell", "m"});
    CHECK(rdo::remark_param_names(Kind::first, 4) == std::vector<std::string>{"ell", "m"});
    CHECK(rdo::remark_param_names(Kind::second, 1) == std::vector<std::string>{"k", "ell"});
    CHECK(rdo::remark_param_names(Kind::second, 9) == std::vector<std::string>{"k"});
    CHECK(rdo::remark_label(Kind::first, 4) == "R1-4");
    CHECK(rdo::remark_label(Kind::second, 9) == "R2-9");
}

TEST_CASE("remark catalog: pinned instantiations") {
    RemarkParams q;

    q = {};
    q.i = 1;
    q.ell = 0;
    q.m = 1;
    auto r11 = instantiate_remark(Kind::first, 1, 3, q);
    CHECK(r11.n == 6);
    CHECK(r11.d == 4);
    CHECK(r11.printed.to_string() == "1*x^12");
    CHECK(r11.printed == closed_form(Kind::first, 3, 6, 4));

    // R1-4 prints 1 for the top coefficient; the construction yields 2.
    q = {};
    auto r14 = instantiate_remark(Kind::first, 4, 3, q);
    CHECK(r14.n == 7);
    CHECK(r14.d == 2);
    CHECK(r14.printed.to_string() == "2*x^2 + 2*x^4 + 1*x^6");
    auto built14 = closed_form(Kind::first, 3, 7, 2);
    CHECK(built14.to_string() == "2*x^2 + 2*x^4 + 2*x^6");
    CHECK(r14.printed != built14);

    // R2-9 prints 1 for the middle coefficient; the construction yields 2.
    q = {};
    auto r29 = instantiate_remark(Kind::second, 9, 3, q);
    CHECK(r29.n == 15);
    CHECK(r29.d == 4);
    CHECK(r29.printed.to_string() == "1*x^4 + 1*x^12 + 1*x^28");
    auto built29 = closed_form(Kind::second, 3, 15, 4);
    CHECK(built29.to_string() == "1*x^4 + 2*x^12 + 1*x^28");
    CHECK(r29.printed != built29);

    // A second-kind item at p = 5.
    q = {};
    q.k = 1;
    auto r213 = instantiate_remark(Kind::second, 13, 5, q);
    CHECK(r213.n == 7);
    CHECK(r213.d == 10);
    CHECK(r213.printed == closed_form(Kind::second, 5, 7, 10));

    // A generic-p item.
    q = {};
    auto r215 = instantiate_remark(Kind::second, 15, 7, q);
    CHECK(r215.n == 3);
    CHECK(r215.printed == closed_form(Kind::second, 7, 3, r215.d));

    CHECK(rdo::expected_remark_poly(Kind::first, 4, 3, RemarkParams{}) == r14.printed);
}

TEST_CASE("remark catalog: unknown items and wrong characteristics") {
    auto code = [](auto f) {
        try {
            f();
        } catch (const rdo::error& e) {
            return e.code();
        }
        return errc::overflow;
    };
    CHECK(code([] { instantiate_remark(Kind::first, 7, 3, RemarkParams{}); }) ==
          errc::unknown_item);
    CHECK(code([] { instantiate_remark(Kind::first, 0, 3, RemarkParams{}); }) ==
          errc::unknown_item);
    CHECK(code([] { instantiate_remark(Kind::first, 1, 5, RemarkParams{}); }) ==
          errc::unknown_item);
    CHECK(code([] { instantiate_remark(Kind::second, 11, 3, RemarkParams{}); }) ==
          errc::unknown_item);
    CHECK(code([] { instantiate_remark(Kind::second, 16, 3, RemarkParams{}); }) ==
          errc::unknown_item);
}
