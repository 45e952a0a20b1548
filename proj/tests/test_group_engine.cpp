#include <doctest.h>

#include <random>

#include "norm0/errors.hpp"
#include "norm0/group_engine.hpp"

using namespace norm0;

namespace {

std::size_t el(const QuotientGroup& g, const char* word) { return eval_word(g, parse_word(word)); }

} // namespace

TEST_CASE("closure orders") {
    CHECK(full_quotient(1).order() == 1);
    CHECK(full_quotient(2).order() == 2);
    CHECK(full_quotient(4).order() == 6);
    CHECK(full_quotient(8).order() == 8);
    CHECK(full_quotient(9).order() == 12);
    CHECK(full_quotient(16).order() == 24);
    CHECK(full_quotient(27).order() == 18);
    CHECK(full_quotient(32).order() == 32);
    CHECK(full_quotient(64).order() == 96);
}

TEST_CASE("budget") {
    try {
        full_quotient(64, 50);
        FAIL("expected budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK(full_quotient(64, 96).order() == 96);
}

TEST_CASE("group axioms") {
    std::mt19937_64 rng(11);
    for (Level n : {4u, 9u, 12u, 48u, 64u, 144u, 256u}) {
        CAPTURE(n);
        const auto g = full_quotient(n);
        const std::size_t k = g.order();
        for (std::size_t j = 0; j < k; ++j) {
            CHECK(g.op(0, j) == j);
            CHECK(g.op(j, 0) == j);
            CHECK(g.op(j, g.inverse(j)) == 0);
            CHECK(g.op(g.inverse(j), j) == 0);
            CHECK(eval_word(g, g.word(j)) == j);
            CHECK(g.find(g.element(j).rep) == j);
        }
        if (k <= 200) {
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    for (std::size_t c = 0; c < k; ++c) REQUIRE(g.op(g.op(a, b), c) == g.op(a, g.op(b, c)));
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            for (int iter = 0; iter < 20000; ++iter) {
                const auto a = pick(rng), b = pick(rng), c = pick(rng);
                REQUIRE(g.op(g.op(a, b), c) == g.op(a, g.op(b, c)));
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) REQUIRE_FALSE(coset_equal(g.element(i).rep, g.element(j).rep, n));
    }
}

TEST_CASE("closure is deterministic") {
    for (Level n : {48u, 144u, 1800u}) {
        const auto a = full_quotient(n);
        const auto b = full_quotient(n);
        REQUIRE(a.order() == b.order());
        for (std::size_t i = 0; i < a.order(); ++i) CHECK(a.element(i).rep == b.element(i).rep);
    }
}

TEST_CASE("element orders and words") {
    const auto g9 = full_quotient(9);
    CHECK(element_order(g9, 0) == 1);
    CHECK(element_order(g9, el(g9, "w9")) == 2);
    CHECK(element_order(g9, el(g9, "S3")) == 3);
    CHECK(g9.op(el(g9, "w9"), el(g9, "w9")) == 0);
    CHECK(eval_word(g9, {}) == 0);
    CHECK(power(g9, el(g9, "S3"), -1) == el(g9, "S3^2"));

    const auto g16 = full_quotient(16);
    CHECK(is_relation(g16, parse_word("w16 S4 w16 S4 w16 S4")));
    const auto g32 = full_quotient(32);
    CHECK(is_relation(g32, parse_word("(w32 S4)^4")));
    CHECK(is_relation(full_quotient(64), parse_word("S8^8")));
    CHECK(is_relation(full_quotient(256), parse_word("w256 S8 w256 S8 w256 S8^3 w256 S8^3")));
    CHECK_FALSE(is_relation(full_quotient(128), parse_word("(w128 S8)^3")));
    CHECK_THROWS_AS(eval_word(g9, parse_word("w5")), Error);
    CHECK_THROWS_AS(eval_word(g9, parse_word("x")), Error);
    CHECK(el(full_quotient(48), "S2") == el(full_quotient(48), "S4^2"));
}

TEST_CASE("commutation") {
    const auto g12 = full_quotient(12);
    CHECK(commutes(g12, el(g12, "S2"), el(g12, "w3")));
    const auto g48 = full_quotient(48);
    CHECK_FALSE(commutes(g48, el(g48, "S4"), el(g48, "w3")));
    const auto g63 = full_quotient(63);
    CHECK(commutes(g63, el(g63, "S3"), el(g63, "w7")));
}

TEST_CASE("center") {
    const auto g30 = full_quotient(30);
    CHECK(center(g30).size() == g30.order());
    CHECK(is_abelian(g30));
    const auto g9 = full_quotient(9);
    CHECK(center(g9) == std::vector<std::size_t>{0});
    CHECK_FALSE(is_abelian(g9));
    for (Level n : {16u, 48u, 144u}) {
        const auto g = full_quotient(n);
        const auto z = center(g);
        for (auto i : z)
            for (std::size_t j = 0; j < g.order(); ++j) CHECK(commutes(g, i, j));
    }
}

TEST_CASE("subgroups") {
    const auto g63 = full_quotient(63);
    CHECK(subgroup(g63, {}) == std::vector<std::size_t>{0});
    CHECK(subgroup(g63, {el(g63, "w9"), el(g63, "S3")}).size() == 12);
    const auto g45 = full_quotient(45);
    CHECK(subgroup(g45, {el(g45, "w5")}).size() == 2);
    std::mt19937_64 rng(3);
    for (Level n : {48u, 144u, 288u}) {
        const auto g = full_quotient(n);
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        for (int iter = 0; iter < 30; ++iter) {
            const auto s = subgroup(g, {pick(rng), pick(rng)});
            CHECK(g.order() % s.size() == 0);
        }
    }
    const auto ns = named_subgroup(g63, {"w9", "S3"});
    CHECK(ns.elements.size() == 12);
    for (auto i : ns.elements) CHECK(eval_word(g63, ns.words.at(i)) == i);
}

TEST_CASE("internal direct products") {
    const auto g12 = full_quotient(12);
    const auto a = subgroup(g12, {el(g12, "S2"), el(g12, "w4")});
    const auto b = subgroup(g12, {el(g12, "w3")});
    CHECK(internal_direct_product(g12, {a, b}).holds);

    const auto g48 = full_quotient(48);
    const auto s4 = el(g48, "S4"), w3 = el(g48, "w3");
    const auto v = internal_direct_product(g48, {subgroup(g48, {s4, el(g48, "w16")}), subgroup(g48, {w3})});
    CHECK_FALSE(v.holds);
    CHECK(v.failure == DirectProductVerdict::Failure::NonCommuting);
    CHECK(v.element_a == s4);
    CHECK(v.element_b == w3);

    const auto g5 = full_quotient(5);
    CHECK(internal_direct_product(g5, {subgroup(g5, {el(g5, "w5")})}).holds);
    const auto g30 = full_quotient(30);
    const auto w2 = subgroup(g30, {el(g30, "w2")});
    const auto ov = internal_direct_product(g30, {w2, w2});
    CHECK_FALSE(ov.holds);
    CHECK(ov.failure == DirectProductVerdict::Failure::OrderMismatch);
    std::size_t x = 0;
    while (element_order(g12, x) <= 2) ++x;
    CHECK_THROWS_AS(internal_direct_product(g12, {{0, x}}), Error);
}

TEST_CASE("regular representation") {
    const auto g2 = full_quotient(2);
    const auto r2 = regular_representation(g2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == std::vector<std::size_t>{2, 1});
    const auto g9 = full_quotient(9);
    const auto r9 = regular_representation(g9);
    CHECK(r9.size() == 2);
    for (const auto& perm : r9) {
        CHECK(perm.size() == 12);
        std::vector<bool> seen(13, false);
        for (auto x : perm) seen.at(x) = true;
        for (std::size_t x = 1; x <= 12; ++x) CHECK(seen[x]);
    }
    CHECK(exponent(g9) == 6);
}

TEST_CASE("degenerate identity generator") {
    GeneratorSet gens{5, {{"e", ProjectiveMatrix()}, {"w5", atkin_lehner(5, 5)}}};
    const auto g = close(gens);
    CHECK(g.order() == 2);
    const auto r = regular_representation(g);
    CHECK(r[0] == std::vector<std::size_t>{1, 2});
    CHECK(r[1] == std::vector<std::size_t>{2, 1});
}
