#pragma once

// Gamma_0(N): membership, coset equality in the normalizer quotient, coset
// fingerprints, the invariants epsilon(N) and v(N), and a conjugation-based
// normalizer oracle driven by Schreier generators.
//
// Everything here is projective: -I lies in Gamma_0(N), so a matrix and its
// negative name the same coset and signs never need tracking.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "norm0/exact_core.hpp"

namespace norm0 {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000;

/// v(N) = 2^mu * 3^w with mu = min(3, floor(v2(N)/2)), w = min(1, floor(v3(N)/2)).
struct VParams {
    Level level;
    unsigned mu;
    unsigned w;
    std::uint64_t v;
};

VParams v_params(Level n);

/// gcd of a - d over all [[a, b], [Nc, d]] in Gamma_0(N).
///
/// Realisable differences are a - (a^{-1} mod N) - tN for units a, and since a
/// is a unit gcd(a - a^{-1}, N) = gcd(a^2 - 1, N). Hence
/// epsilon(N) = gcd over units a of gcd(a^2 - 1, N), with epsilon(1) = 1.
std::uint64_t epsilon(Level n);

/// det = 1 and c = 0 mod N.
bool is_gamma0(const ProjectiveMatrix& p, Level n);

/// True iff the real matrix (1/sqrt(det)) q lies in +-Gamma_0(N).
bool scaled_in_gamma0(const Mat2& q, Level n);

/// p1 * p2^{-1} in +-Gamma_0(N).
bool coset_equal(const ProjectiveMatrix& p1, const ProjectiveMatrix& p2, Level n);

/// Invariant of the right coset p * Gamma_0(N): the determinant of the
/// primitive representative plus the first column mod N minimised over
/// multiplication by units. Equal cosets give equal fingerprints.
struct Fingerprint {
    Int det;
    std::uint64_t a;
    std::uint64_t c;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const noexcept;
};

/// Precomputed unit group of Z/NZ for repeated fingerprinting.
class FingerprintContext {
public:
    explicit FingerprintContext(Level n);
    Level level() const { return level_; }
    Fingerprint operator()(const ProjectiveMatrix& p) const;

private:
    Level level_;
    std::vector<std::uint64_t> units_;
};

Fingerprint fingerprint(const ProjectiveMatrix& p, Level n);

/// An element of Norm(Gamma_0(N)) / Gamma_0(N).
struct CosetElement {
    Level level;
    ProjectiveMatrix rep;
    Fingerprint fp;
};

/// Right-coset graph of Gamma_0(N) in SL_2(Z), realised on P^1(Z/N) under
/// S = [[0,-1],[1,0]] and T = [[1,1],[0,1]], together with the Schreier
/// generators read off a BFS spanning tree.
struct CosetGraph {
    Level level;
    std::size_t index;  // number of cosets
    std::vector<ProjectiveMatrix> generators;
};

CosetGraph coset_graph(Level n, std::uint64_t cap = kDefaultOracleCap);
std::vector<ProjectiveMatrix> schreier_generators(Level n, std::uint64_t cap = kDefaultOracleCap);

/// N * prod_{p | N} (1 + 1/p).
std::uint64_t gamma0_index(Level n);

/// p g p^{-1} and p^{-1} g p lie in +-Gamma_0(N) for every Schreier generator g.
bool conjugation_normalizes(const ProjectiveMatrix& p, Level n, std::uint64_t cap = kDefaultOracleCap);
bool conjugation_normalizes(const ProjectiveMatrix& p, const CosetGraph& graph);

} // namespace norm0
