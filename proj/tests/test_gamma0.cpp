#include <doctest.h>

#include <random>

#include "norm0/errors.hpp"
#include "norm0/gamma0.hpp"
#include "norm0/normalizer.hpp"
#include "oracles.hpp"

using namespace norm0;
using oracle::mat;

TEST_CASE("gamma0 membership") {
    CHECK(is_gamma0(canonicalize(mat(1, 1, 0, 1)), 48));
    CHECK(is_gamma0(canonicalize(mat(1, 0, 48, 1)), 48));
    CHECK_FALSE(is_gamma0(canonicalize(mat(3, 2, 48, 33)), 48));
    CHECK_FALSE(is_gamma0(canonicalize(mat(1, 0, 24, 1)), 48));
    CHECK(is_gamma0(canonicalize(mat(-1, 0, 48, -1)), 48));
}

TEST_CASE("coset equality") {
    const auto id = ProjectiveMatrix();
    const auto s2 = canonicalize(mat(2, 1, 0, 2));
    CHECK(coset_equal(product(s2, s2), id, 4));
    CHECK_FALSE(coset_equal(canonicalize(mat(4, 1, 0, 4)), id, 4));
    const auto w3 = atkin_lehner(48, 3);
    CHECK(coset_equal(w3, canonicalize(mul(w3.mat(), mat(1, 1, 0, 1))), 48));
    CHECK(coset_equal(atkin_lehner(15, 3), canonicalize(mul(atkin_lehner(15, 3).mat(), mat(1, 1, 0, 1))), 15));
}

TEST_CASE("coset equality is an equivalence on sampled elements") {
    std::mt19937_64 rng(7);
    for (Level n : {12u, 16u, 45u, 48u}) {
        const auto gens = canonical_generators(n);
        const auto pool = oracle::generator_products(gens, 3);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int iter = 0; iter < 200; ++iter) {
            const auto& x = pool[pick(rng)];
            const auto& y = pool[pick(rng)];
            const auto& z = pool[pick(rng)];
            CHECK(coset_equal(x, x, n));
            CHECK(coset_equal(x, y, n) == coset_equal(y, x, n));
            if (coset_equal(x, y, n) && coset_equal(y, z, n)) CHECK(coset_equal(x, z, n));
        }
    }
}

TEST_CASE("fingerprints") {
    const Fingerprint id6 = fingerprint(ProjectiveMatrix(), 6);
    CHECK(id6.det == 1);
    CHECK(id6.a == 1);
    CHECK(id6.c == 0);
    const Fingerprint s4 = fingerprint(canonicalize(mat(4, 1, 0, 4)), 48);
    CHECK(s4.det == 16);
    CHECK(s4.a == 4);
    CHECK(s4.c == 0);

    std::mt19937_64 rng(99);
    for (Level n : {4u, 9u, 16u, 48u, 63u}) {
        const FingerprintContext ctx(n);
        const auto pool = oracle::generator_products(canonical_generators(n), 3);
        for (const auto& p : pool) {
            for (int k = 0; k < 5; ++k) {
                const auto q = canonicalize(mul(p.mat(), oracle::random_gamma0(rng, n, 8)));
                REQUIRE(coset_equal(p, q, n));
                CHECK(ctx(p) == ctx(q));
                CHECK(fingerprint(q, n) == ctx(q));
            }
        }
    }
}

TEST_CASE("epsilon and v") {
    CHECK(epsilon(9) == 3);
    CHECK(epsilon(48) == 24);
    CHECK(epsilon(1) == 1);
    CHECK(v_params(48).v == 4);
    CHECK(v_params(48).mu == 2);
    CHECK(v_params(48).w == 0);
    CHECK(v_params(9).v == 3);
    CHECK(v_params(9).mu == 0);
    CHECK(v_params(9).w == 1);
    CHECK(v_params(5).v == 1);
    CHECK(v_params(1 << 10).v == 8);
    for (Level n = 1; n <= 1000; ++n) {
        CHECK(gcd_u64(squarefree_decompose(n).sigma, epsilon(n)) == v_params(n).v);
        CHECK(squarefree_decompose(n).sigma % v_params(n).v == 0);
    }
    for (Level n = 1; n <= 10000; ++n) CHECK(24 % epsilon(n) == 0);
}

TEST_CASE("epsilon agrees with matrix sampling") {
    for (Level n = 1; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(oracle::epsilon_stable(n) == epsilon(n));
    }
}

TEST_CASE("coset graph") {
    CHECK(coset_graph(1).index == 1);
    CHECK(coset_graph(2).index == 3);
    CHECK(coset_graph(6).index == 12);
    for (Level n = 1; n <= 500; ++n) {
        CAPTURE(n);
        const auto g = coset_graph(n);
        CHECK(g.index == gamma0_index(n));
        for (const auto& s : g.generators) CHECK(is_gamma0(s, n));
    }
    for (Level n = 1; n <= 60; ++n) CHECK(oracle::index_by_points(n) == gamma0_index(n));
    CHECK_THROWS_AS(coset_graph(20000), Error);
}

TEST_CASE("conjugation oracle") {
    CHECK(conjugation_normalizes(ProjectiveMatrix(), 48));
    CHECK(conjugation_normalizes(canonicalize(mat(4, 1, 0, 4)), 48));
    CHECK_FALSE(conjugation_normalizes(canonicalize(mat(5, 1, 0, 5)), 48));
    CHECK(conjugation_normalizes(atkin_lehner(48, 3), 48));
    CHECK_FALSE(conjugation_normalizes(canonicalize(mat(1, 0, 1, 1)), 48));
}

TEST_CASE("conjugation oracle agrees with the divisor test") {
    std::mt19937_64 rng(2024);
    for (Level n = 1; n <= 60; ++n) {
        CAPTURE(n);
        const auto graph = coset_graph(n);
        const auto gens = canonical_generators(n);
        for (const auto& p : oracle::generator_products(gens, 2))
            CHECK(conjugation_normalizes(p, graph) == theorem1_member(p, n).has_value());
        for (int k = 0; k < 40; ++k) {
            const auto p = oracle::random_candidate(rng, gens, n);
            CAPTURE(p.to_string());
            CHECK(conjugation_normalizes(p, graph) == theorem1_member(p, n).has_value());
        }
    }
}
