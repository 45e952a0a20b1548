#pragma once

// Exact 2x2 integer matrices and the number-theoretic helpers the rest of
// the library is built on. Entries are GMP integers throughout.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace norm0 {

using Int = mpz_class;
using Level = std::uint64_t;

inline constexpr std::uint64_t kDefaultFactorCap = 1'000'000'000ULL;

/// Raw integer matrix [[a, b], [c, d]]. No invariants.
struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mul(const Mat2& x, const Mat2& y);
Mat2 adjugate(const Mat2& x);
Int det(const Mat2& x);
/// gcd of the four entries (0 only for the zero matrix).
Int content(const Mat2& x);

/// A primitive integer matrix with positive determinant, normalised so the
/// first nonzero entry in scan order (a, b, c, d) is positive. Stands for the
/// real matrix M / sqrt(det M) up to sign.
class ProjectiveMatrix {
public:
    /// The identity class.
    ProjectiveMatrix();

    const Int& a() const { return m_.a; }
    const Int& b() const { return m_.b; }
    const Int& c() const { return m_.c; }
    const Int& d() const { return m_.d; }
    const Int& det() const { return det_; }
    const Mat2& mat() const { return m_; }

    bool is_identity() const;
    std::string to_string() const;  // "[[a,b],[c,d]]"
    std::string to_quad() const;    // "a,b,c,d"

    friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
        return x.m_ == y.m_;
    }

private:
    friend ProjectiveMatrix canonicalize(const Mat2& x);
    ProjectiveMatrix(Mat2 m, Int det) : m_(std::move(m)), det_(std::move(det)) {}

    Mat2 m_;
    Int det_;
};

/// Divide out the content and fix the global sign.
/// Throws Error{SingularMatrix} for det = 0, Error{OrientationReversing} for det < 0.
ProjectiveMatrix canonicalize(const Mat2& x);

/// canonicalize(mul(x.mat(), y.mat())).
ProjectiveMatrix product(const ProjectiveMatrix& x, const ProjectiveMatrix& y);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::vector<PrimePower> factors; // primes strictly increasing

    std::uint64_t value() const;
    unsigned valuation(std::uint64_t p) const;
    /// p^{v_p(n)} for each prime p | n, in increasing prime order.
    std::vector<std::uint64_t> prime_power_parts() const;
};

/// Trial division. Throws Error{CapExceeded} if n > cap,
/// Error{InvalidArgument} if n == 0.
Factorization factorize(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap);

/// n = sigma^2 * q with q squarefree.
struct SqfDecomp {
    std::uint64_t sigma;
    std::uint64_t q;
};

SqfDecomp squarefree_decompose(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap);

struct ExtGcd {
    Int g, x, y;
};

/// g = gcd(a, b) > 0 and a*x + b*y = g. Requires (a, b) != (0, 0).
ExtGcd ext_gcd(const Int& a, const Int& b);

std::optional<Int> is_perfect_square(const Int& n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
unsigned valuation(std::uint64_t n, std::uint64_t p);
/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap);
/// Units of Z/nZ as residues in [0, n); {0} for n = 1.
std::vector<std::uint64_t> units_mod(std::uint64_t n);
/// x mod n in [0, n).
std::uint64_t mod_u64(const Int& x, std::uint64_t n);

} // namespace norm0
