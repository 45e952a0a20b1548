#pragma once

// The named elements of Norm(Gamma_0(N)): Atkin-Lehner involutions w_m and
// shifts S_k = [[1, 1/k], [0, 1]], plus Newman's membership pattern.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "norm0/exact_core.hpp"

namespace norm0 {

/// (delta, Delta, lambda) such that lambda * p has the shape
/// [[r v delta Delta^2, u], [s N, l v delta Delta^2]].
struct Theorem1Witness {
    std::uint64_t delta;
    std::uint64_t Delta;
    Int lambda;
};

struct NamedGenerator {
    std::string name;
    ProjectiveMatrix matrix;
};

/// w_{p^{v_p(N)}} for each prime p | N in increasing order, then S_{v(N)} when v(N) > 1.
struct GeneratorSet {
    Level level = 1;
    std::vector<NamedGenerator> generators;

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t size() const { return generators.size(); }
};

bool is_exact_divisor(std::uint64_t m, Level n);

/// Canonical representative of [[m a, b], [N c, m d]] with det m, taking c = 1
/// and the least nonnegative b. Throws Error{NotExactDivisor}.
ProjectiveMatrix atkin_lehner(Level n, std::uint64_t m);

/// [[k, 1], [0, k]]. Throws Error{NotInNormalizer} unless k | v(N).
ProjectiveMatrix shift(Level n, std::uint64_t k);

std::optional<Theorem1Witness> theorem1_member(const ProjectiveMatrix& p, Level n,
                                               std::uint64_t factor_cap = kDefaultFactorCap);

GeneratorSet canonical_generators(Level n, std::uint64_t factor_cap = kDefaultFactorCap);

/// "w<m>" for an exact divisor m, "S<k>" for k | v(N); nullopt otherwise.
std::optional<ProjectiveMatrix> named_element(Level n, std::string_view name);

std::string atkin_lehner_name(std::uint64_t m);
std::string shift_name(std::uint64_t k);

} // namespace norm0
