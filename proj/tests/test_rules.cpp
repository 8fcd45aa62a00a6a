#include <algorithm>

#include "feather/verify.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace feather;

namespace {

Claim claim(unsigned long long l, unsigned long long r, RuleId id, RuleParams p = {}) {
    return {odd(l), odd(r), id, p};
}

bool holds(const Claim& c) {
    return oracle::share_element(static_cast<std::uint64_t>(c.lhs.value()),
                                 static_cast<std::uint64_t>(c.rhs.value()));
}

} // namespace

TEST_SUITE("rules") {

TEST_CASE("rule one") {
    CHECK(rule_one(odd(1)) == claim(1, 5, RuleId::R1));
    CHECK(rule_one(odd(3)) == claim(3, 13, RuleId::R1));
    CHECK(rule_one(odd(7)) == claim(7, 29, RuleId::R1));
    for (unsigned v = 1; v <= 65535; v += 2) {
        REQUIRE(holds(rule_one(odd(v))));
    }
}

TEST_CASE("rule two in its verticality-conditioned form") {
    CHECK(rule_two(odd(9)) == std::vector<Claim>{claim(9, 19, RuleId::R2, {.k = 0})});
    CHECK(rule_two(odd(5)) == std::vector<Claim>{claim(11, 23, RuleId::R2, {.k = 1})});
    CHECK(rule_two(odd(3)).empty());
    CHECK(rule_two(odd(1)).empty());
}

TEST_CASE("rule two generalized family") {
    // S^k(base) == S^(k+1)(base) for base vertical even and k even, or base
    // vertical odd and k odd.
    for (std::uint64_t base = 5; base < 2000; base += 4) {
        const Verticality vb = verticality(Odd(base));
        std::uint64_t y = base;
        for (int k = 0; k < 8; ++k, y = 2 * y + 1) {
            const bool want = (vb == Verticality::VerticalEven && k % 2 == 0) ||
                              (vb == Verticality::VerticalOdd && k % 2 == 1);
            CHECK(rule_two_links_up(Odd(y)) == want);
            if (want) {
                CHECK(holds(*rule_two_up(Odd(y))));
            }
        }
    }
    CHECK_FALSE(rule_two_links_up(odd(1)));
    CHECK_FALSE(rule_two_up(odd(3)).has_value());
}

TEST_CASE("simplified actions") {
    CHECK(r_a(odd(41)) == odd(27));
    CHECK(r_a(odd(5)) == odd(3));
    CHECK(r_a(odd(1025)) == odd(683));
    CHECK(r_b(odd(15)) == odd(81));
    CHECK(r_b(odd(51)) == odd(273));
    CHECK(r_b(odd(3)) == odd(17));
    CHECK(r_c(odd(7)) == odd(9));
    CHECK(r_c(odd(31)) == odd(41));
    CHECK(r_c(odd(1)) == odd(1));
    CHECK_THROWS_AS(r_a(odd(3)), TypeMismatch);
    CHECK_THROWS_AS(r_b(odd(5)), TypeMismatch);
    CHECK_THROWS_AS(r_c(odd(3)), TypeMismatch);
    CHECK(claim_r_b(odd(15)) == claim(15, 81, RuleId::Rb));
}

TEST_CASE("monotonicity of the simplified actions") {
    for (unsigned v = 1; v < 20000; v += 2) {
        const Odd x = odd(v);
        switch (classify_type(x)) {
        case NumberType::A: CHECK(r_a(x) < x); break;
        case NumberType::B: CHECK(r_b(x) > x); break;
        case NumberType::C:
            if (v == 1) {
                CHECK(r_c(x) == x);
            } else {
                CHECK(r_c(x) > x);
            }
            break;
        }
    }
}

TEST_CASE("rule three") {
    CHECK(rule_three_full(odd(1), 1) ==
          std::vector<Claim>{claim(17, 3, RuleId::R3, {.n = 1, .i = 1}),
                             claim(35, 3, RuleId::R3, {.n = 1, .i = 1})});
    CHECK(rule_three_full(odd(5), 1) ==
          std::vector<Claim>{claim(81, 15, RuleId::R3, {.n = 1, .i = 1}),
                             claim(163, 15, RuleId::R3, {.n = 1, .i = 1})});
    CHECK(rule_three_full(odd(1), 2).size() == 4);
    CHECK_THROWS_AS(rule_three_full(odd(3), 1), TypeMismatch);
}

TEST_CASE("rule four") {
    CHECK(rule_four_full(odd(1), 1) ==
          std::vector<Claim>{claim(9, 7, RuleId::R4, {.n = 1, .i = 1}),
                             claim(19, 7, RuleId::R4, {.n = 1, .i = 1})});
    CHECK(rule_four_full(odd(5), 1) ==
          std::vector<Claim>{claim(41, 31, RuleId::R4, {.n = 1, .i = 1}),
                             claim(83, 31, RuleId::R4, {.n = 1, .i = 1})});
    CHECK(rule_four_full(odd(1), 2).size() == 4);
    CHECK_THROWS_AS(rule_four_full(odd(9), 2), TypeMismatch);
}

TEST_CASE("rule five") {
    const auto c = rule_five_full(odd(19), 3);
    CHECK(c.size() == 7);
    CHECK(c.front() == claim(2051, 1025, RuleId::R5, {.n = 3, .i = 0}));
    CHECK(std::count(c.begin(), c.end(), claim(303, 1025, RuleId::R5, {.n = 3, .i = 3})) == 1);
    CHECK(rule_five_full(odd(1), 0) == std::vector<Claim>{claim(3, 1, RuleId::R5, {.n = 0, .i = 0})});
    CHECK_THROWS_AS(rule_five_full(odd(1), 1), RankViolation);  // 3 has rank 2
    CHECK_THROWS_AS(rule_five_full(odd(3), 0), TypeMismatch);
    for (const Claim& x : c) {
        CHECK(holds(x));
    }
}

TEST_CASE("rule five params") {
    const auto p = rule_five_params(odd(1025));
    REQUIRE(p.has_value());
    CHECK(p->x == odd(19));
    CHECK(p->n == 3);
    CHECK_FALSE(rule_five_params(odd(1027)).has_value());
    for (unsigned a = 1; a < 20000; a += 8) {
        const auto q = rule_five_params(odd(a));
        REQUIRE(q.has_value());
        CHECK(act_g(Odd(checked_pow(3, q->n) * q->x.value())) == odd(a));
        CHECK(classify_type(q->x) != NumberType::B);
    }
}

TEST_CASE("rule five against iterated R_a") {
    // r_a applied i times to G(3^n x) gives S^i(G(3^(n-i) x)).
    const auto expect_iterated = [](std::uint64_t x, unsigned n) {
        std::vector<std::uint64_t> out;
        for (unsigned i = 1; i <= n; ++i) {
            std::uint64_t y = 2 * oracle::pow3(n - i) * x - 1;
            for (unsigned s = 0; s < i; ++s) {
                y = 2 * y + 1;
            }
            out.push_back(y);
        }
        return out;
    };
    int admissible = 0;
    for (std::uint64_t x : {1, 5, 7, 19}) {
        for (unsigned n = 0; n <= 5; ++n) {
            if ((oracle::pow3(n) * x) % 4 != 1) {
                CHECK_THROWS_AS(rule_five_full(Odd(x), n), RankViolation);
                continue;
            }
            ++admissible;
            Odd a(2 * oracle::pow3(n) * x - 1);
            std::vector<std::uint64_t> iterated;
            for (unsigned i = 0; i < n; ++i) {
                a = r_a(a);
                iterated.push_back(static_cast<std::uint64_t>(a.value()));
            }
            CHECK(iterated == expect_iterated(x, n));
        }
    }
    CHECK(admissible >= 8);
    // the worked example: 1025 -> 683 -> 455 -> 303
    CHECK(expect_iterated(19, 3) == std::vector<std::uint64_t>{683, 455, 303});
}

TEST_CASE("variety decomposition") {
    CHECK(variety_classify(odd(49)) == Variety{VarietyKind::V, 3, 1});
    CHECK(variety_classify(odd(97)) == Variety{VarietyKind::S, 3, 2});
    CHECK(variety_classify(odd(13)) == Variety{VarietyKind::V, 3, 0});
    CHECK(variety_classify(odd(1)).kind == VarietyKind::None);
    CHECK(variety_reduce(odd(49)) == claim(49, 37, RuleId::VarietyReduce, {.k = 1}));
    CHECK(variety_reduce(odd(97)) == claim(97, 55, RuleId::VarietyReduce, {.k = 2}));
    CHECK_THROWS_AS(variety_reduce(odd(13)), NotReducible);
    for (std::uint64_t g = 3; g < 50000; g += 2) {
        const Variety v = variety_classify(Odd(g));
        REQUIRE(v.kind != VarietyKind::None);
        CHECK(v.b % 2 == 1);
        const std::uint64_t b = static_cast<std::uint64_t>(v.b);
        const std::uint64_t rebuilt =
            v.kind == VarietyKind::S ? (b << (2 * v.k + 1)) + 1 : (b << (2 * v.k + 2)) + 1;
        CHECK(rebuilt == g);
        if (v.k > 0) {
            CHECK(holds(variety_reduce(Odd(g))));
        }
    }
}

TEST_CASE("variety contraction, both readings") {
    auto g_pow = [](std::uint64_t y, unsigned times) {
        while (times-- > 0) {
            y = 2 * y - 1;
        }
        return y;
    };
    for (std::uint64_t b = 1; b <= 1024; b += 2) {
        for (unsigned n = 1; n <= 5; n += 2) {
            const std::uint64_t a = g_pow(2 * b + 1, n + 2);
            CHECK(oracle::share_element(a, oracle::pow3((n + 1) / 2) * b));
        }
        for (unsigned m = 2; m <= 4; m += 2) {
            const std::uint64_t a = g_pow(2 * b + 1, m + 2);
            CHECK(oracle::share_element(a, 2 * oracle::pow3(m / 2) * b + 1));
            CHECK(oracle::share_element(a, 2 * oracle::pow3((m + 2) / 2) * b + 1));
            // the contraction itself lands on the second form
            CHECK(variety_reduce(Odd(a)).rhs.value() == 2 * oracle::pow3((m + 2) / 2) * b + 1);
        }
    }
}

TEST_CASE("every generated claim holds under the independent oracle") {
    std::size_t claims = 0;
    std::size_t failed = 0;
    std::size_t misshapen = 0;
    for_each_claim(65535, [&](const Claim& c) {
        ++claims;
        failed += holds(c) ? 0 : 1;
        misshapen += rederive(c) ? 0 : 1;
    });
    CHECK(claims > 150000);
    CHECK(failed == 0);
    CHECK(misshapen == 0);
}

TEST_CASE("rederive rejects altered claims") {
    std::size_t altered = 0;
    std::size_t accepted = 0;
    for_each_claim(2047, [&](const Claim& c) {
        Claim bad = c;
        bad.rhs = Odd(c.rhs.value() + 2);
        ++altered;
        accepted += rederive(bad) ? 1 : 0;
    });
    CHECK(altered > 0);
    CHECK(accepted == 0);
}

TEST_CASE("verify_claims reports the first failures") {
    const VerifyReport clean = verify_claims(255);
    CHECK(clean.ok());
    CHECK(clean.bound_hits == 0);
    const VerifyReport dirty = verify_claims(255, {claim(17, 13, RuleId::Ra)});
    CHECK_FALSE(dirty.ok());
    CHECK(dirty.structural_failures == 1);
    REQUIRE(dirty.first_failures.size() == 1);
    CHECK(dirty.first_failures.front() == claim(17, 13, RuleId::Ra));
}

}
