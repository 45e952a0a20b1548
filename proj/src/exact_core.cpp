#include "norm0/exact_core.hpp"

#include <algorithm>
#include <numeric>

#include "norm0/errors.hpp"

namespace norm0 {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::OrientationReversing: return "OrientationReversing";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotExactDivisor: return "NotExactDivisor";
    case ErrorCode::NotInNormalizer: return "NotInNormalizer";
    case ErrorCode::ShiftNotInNormalizer: return "ShiftNotInNormalizer";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 adjugate(const Mat2& x) { return {x.d, -x.b, -x.c, x.a}; }

Int det(const Mat2& x) { return x.a * x.d - x.b * x.c; }

Int content(const Mat2& x) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.a.get_mpz_t(), x.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.d.get_mpz_t());
    return g;
}

ProjectiveMatrix::ProjectiveMatrix() : m_(Mat2::identity()), det_(1) {}

bool ProjectiveMatrix::is_identity() const { return m_ == Mat2::identity(); }

std::string ProjectiveMatrix::to_string() const {
    return "[[" + m_.a.get_str() + "," + m_.b.get_str() + "],[" + m_.c.get_str() + "," +
           m_.d.get_str() + "]]";
}

std::string ProjectiveMatrix::to_quad() const {
    return m_.a.get_str() + "," + m_.b.get_str() + "," + m_.c.get_str() + "," + m_.d.get_str();
}

ProjectiveMatrix canonicalize(const Mat2& x) {
    Int dt = det(x);
    if (dt == 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (dt < 0) throw Error(ErrorCode::OrientationReversing, "matrix has negative determinant");
    Int g = content(x);
    Mat2 m = x;
    if (g != 1) {
        mpz_divexact(m.a.get_mpz_t(), m.a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(m.b.get_mpz_t(), m.b.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(m.c.get_mpz_t(), m.c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(m.d.get_mpz_t(), m.d.get_mpz_t(), g.get_mpz_t());
        Int g2 = g * g;
        mpz_divexact(dt.get_mpz_t(), dt.get_mpz_t(), g2.get_mpz_t());
    }
    const Int& lead = m.a != 0 ? m.a : m.b != 0 ? m.b : m.c != 0 ? m.c : m.d;
    if (lead < 0) {
        m.a = -m.a;
        m.b = -m.b;
        m.c = -m.c;
        m.d = -m.d;
    }
    return ProjectiveMatrix(std::move(m), std::move(dt));
}

ProjectiveMatrix product(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return canonicalize(mul(x.mat(), y.mat()));
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.exponent; ++i) v *= f.prime;
    return v;
}

unsigned Factorization::valuation(std::uint64_t p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

std::vector<std::uint64_t> Factorization::prime_power_parts() const {
    std::vector<std::uint64_t> out;
    for (const auto& f : factors) {
        std::uint64_t pp = 1;
        for (unsigned i = 0; i < f.exponent; ++i) pp *= f.prime;
        out.push_back(pp);
    }
    return out;
}

Factorization factorize(std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
    if (n > cap)
        throw Error(ErrorCode::CapExceeded,
                    "n=" + std::to_string(n) + " exceeds factorization cap " + std::to_string(cap));
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.factors.push_back({p, e});
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

SqfDecomp squarefree_decompose(std::uint64_t n, std::uint64_t cap) {
    SqfDecomp out{1, 1};
    for (const auto& [p, e] : factorize(n, cap).factors) {
        for (unsigned i = 0; i < e / 2; ++i) out.sigma *= p;
        if (e % 2) out.q *= p;
    }
    return out;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "ext_gcd(0, 0)");
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

unsigned valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return 0;
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::vector<std::uint64_t> divisors(std::uint64_t n, std::uint64_t cap) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n, cap).factors) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> units_mod(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n == 1) return {0};
    for (std::uint64_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) out.push_back(u);
    return out;
}

std::uint64_t mod_u64(const Int& x, std::uint64_t n) {
    Int r;
    Int nn;
    mpz_set_ui(nn.get_mpz_t(), n);
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), nn.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

} // namespace norm0
