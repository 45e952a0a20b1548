#pragma once

// Brute-force reference computations used only by the tests. Each one is
// deliberately naive and independent of the library code paths it checks.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "norm0/exact_core.hpp"
#include "norm0/normalizer.hpp"

namespace oracle {

/// gcd of a - d over [[a, b], [N c, d]] in Gamma_0(N) with |a|, |d| <= bound.
/// For any a, d with a d = 1 mod N the matrix [[a, (ad-1)/N], [N, d]] is such
/// an element, so scanning the pairs enumerates every realizable a - d.
inline std::uint64_t epsilon_sampling(std::uint64_t n, std::int64_t bound) {
    if (n == 1) return 1;
    const auto nn = static_cast<std::int64_t>(n);
    std::uint64_t g = 0;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        const std::int64_t ar = ((a % nn) + nn) % nn;
        std::int64_t d0 = 0;
        while (d0 < nn && (ar * d0) % nn != 1) ++d0;
        if (d0 == nn) continue;  // a is not a unit
        std::int64_t d = d0 - ((d0 + bound) / nn) * nn;
        for (; d <= bound; d += nn) {
            if (d < -bound) continue;
            const std::int64_t diff = a - d;
            g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
        }
    }
    return g;
}

/// Stabilized sampling value: doubles the bound until two successive values agree.
inline std::uint64_t epsilon_stable(std::uint64_t n) {
    std::int64_t bound = static_cast<std::int64_t>(n) + 2;
    std::uint64_t prev = epsilon_sampling(n, bound);
    for (;;) {
        bound *= 2;
        const std::uint64_t cur = epsilon_sampling(n, bound);
        if (cur == prev) return cur;
        prev = cur;
    }
}

/// |P^1(Z/N)| by counting pairs (c, d) with gcd(c, d, N) = 1 modulo units.
inline std::uint64_t index_by_points(std::uint64_t n) {
    std::uint64_t pairs = 0, units = 0;
    for (std::uint64_t c = 0; c < n; ++c) {
        if (std::gcd(c, n) == 1 || n == 1) ++units;
        for (std::uint64_t d = 0; d < n; ++d)
            if (std::gcd(std::gcd(c, d), n) == 1 || n == 1) ++pairs;
    }
    return pairs / units;
}

inline norm0::Mat2 mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return norm0::Mat2{norm0::Int(static_cast<long>(a)), norm0::Int(static_cast<long>(b)),
                       norm0::Int(static_cast<long>(c)), norm0::Int(static_cast<long>(d))};
}

/// Random integer matrix of positive determinant with entries in [-bound, bound].
inline norm0::ProjectiveMatrix random_matrix(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    for (;;) {
        const auto m = mat(dist(rng), dist(rng), dist(rng), dist(rng));
        if (norm0::det(m) > 0) return norm0::canonicalize(m);
    }
}

/// Random element of SL_2(Z) as a word in S and T.
inline norm0::Mat2 random_sl2(std::mt19937_64& rng, int length) {
    norm0::Mat2 m = norm0::Mat2::identity();
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < length; ++i) {
        switch (pick(rng)) {
        case 0: m = norm0::mul(m, mat(0, -1, 1, 0)); break;
        case 1: m = norm0::mul(m, mat(1, 1, 0, 1)); break;
        default: m = norm0::mul(m, mat(1, -1, 0, 1)); break;
        }
    }
    return m;
}

/// Random element of Gamma_0(N): products of T^{+-1} and [[1,0],[N,1]]^{+-1}.
inline norm0::Mat2 random_gamma0(std::mt19937_64& rng, std::uint64_t n, int length) {
    const auto nn = static_cast<std::int64_t>(n);
    norm0::Mat2 m = norm0::Mat2::identity();
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < length; ++i) {
        switch (pick(rng)) {
        case 0: m = norm0::mul(m, mat(1, 1, 0, 1)); break;
        case 1: m = norm0::mul(m, mat(1, -1, 0, 1)); break;
        case 2: m = norm0::mul(m, mat(1, 0, nn, 1)); break;
        default: m = norm0::mul(m, mat(1, 0, -nn, 1)); break;
        }
    }
    return m;
}

/// Products of at most `max_len` canonical generators (identity included).
inline std::vector<norm0::ProjectiveMatrix> generator_products(const norm0::GeneratorSet& gens, int max_len) {
    std::vector<norm0::ProjectiveMatrix> out{norm0::ProjectiveMatrix()};
    std::vector<norm0::ProjectiveMatrix> layer{norm0::ProjectiveMatrix()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<norm0::ProjectiveMatrix> next;
        for (const auto& p : layer)
            for (const auto& g : gens.generators) next.push_back(norm0::product(p, g.matrix));
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

/// Candidate matrices that the two membership tests must classify alike:
/// random small matrices and normalizer elements spoiled by an SL_2(Z) factor.
inline norm0::ProjectiveMatrix random_candidate(std::mt19937_64& rng, const norm0::GeneratorSet& gens,
                                                std::uint64_t n) {
    std::uniform_int_distribution<int> coin(0, 2);
    const int kind = coin(rng);
    if (kind == 0 || gens.size() == 0)
        return random_matrix(rng, static_cast<std::int64_t>(2 * n + 4));
    std::uniform_int_distribution<std::size_t> which(0, gens.size() - 1);
    norm0::Mat2 m = gens.generators[which(rng)].matrix.mat();
    m = norm0::mul(m, gens.generators[which(rng)].matrix.mat());
    if (kind == 1) m = norm0::mul(m, random_sl2(rng, 6));
    else m = norm0::mul(m, mat(1, 1, 0, static_cast<std::int64_t>(1 + rng() % 3)));
    return norm0::canonicalize(m);
}

} // namespace oracle
