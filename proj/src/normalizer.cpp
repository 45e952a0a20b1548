#include "norm0/normalizer.hpp"

#include <charconv>

#include "norm0/errors.hpp"
#include "norm0/gamma0.hpp"

namespace norm0 {

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return i;
    return std::nullopt;
}

bool is_exact_divisor(std::uint64_t m, Level n) {
    return m != 0 && n % m == 0 && gcd_u64(m, n / m) == 1;
}

std::string atkin_lehner_name(std::uint64_t m) { return "w" + std::to_string(m); }
std::string shift_name(std::uint64_t k) { return "S" + std::to_string(k); }

ProjectiveMatrix atkin_lehner(Level n, std::uint64_t m) {
    if (!is_exact_divisor(m, n))
        throw Error(ErrorCode::NotExactDivisor,
                    std::to_string(m) + " is not an exact divisor of " + std::to_string(n));
    // m^2 a d - N b c = m with a = c = 1:  m d - (N/m) b = 1.
    const Int mm(static_cast<unsigned long>(m));
    const Int cof(static_cast<unsigned long>(n / m));
    const ExtGcd e = ext_gcd(mm, cof);  // m x + cof y = 1
    Int b = -e.y;
    mpz_fdiv_r(b.get_mpz_t(), b.get_mpz_t(), mm.get_mpz_t());
    Int d = 1 + cof * b;
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
    const Int nn(static_cast<unsigned long>(n));
    return canonicalize(Mat2{mm, b, nn, mm * d});
}

ProjectiveMatrix shift(Level n, std::uint64_t k) {
    const VParams vp = v_params(n);
    if (k == 0 || vp.v % k != 0)
        throw Error(ErrorCode::NotInNormalizer, "S" + std::to_string(k) + " needs " + std::to_string(k) +
                                                    " | v(" + std::to_string(n) +
                                                    ") = " + std::to_string(vp.v));
    const Int kk(static_cast<unsigned long>(k));
    return canonicalize(Mat2{kk, 1, 0, kk});
}

std::optional<Theorem1Witness> theorem1_member(const ProjectiveMatrix& p, Level n,
                                               std::uint64_t factor_cap) {
    const SqfDecomp sq = squarefree_decompose(n, factor_cap);
    const std::uint64_t v = v_params(n).v;
    const Int nn(static_cast<unsigned long>(n));
    for (std::uint64_t delta : divisors(sq.q, factor_cap)) {
        for (std::uint64_t big : divisors(sq.sigma / v, factor_cap)) {
            const Int scale = Int(static_cast<unsigned long>(v)) * delta * big * big;
            const Int num = scale * v;  // v^2 delta Delta^2
            if (!mpz_divisible_p(num.get_mpz_t(), p.det().get_mpz_t())) continue;
            Int ratio;
            mpz_divexact(ratio.get_mpz_t(), num.get_mpz_t(), p.det().get_mpz_t());
            const auto lambda = is_perfect_square(ratio);
            if (!lambda) continue;
            const Int la = *lambda * p.a();
            const Int ld = *lambda * p.d();
            const Int lc = *lambda * p.c();
            if (mpz_divisible_p(la.get_mpz_t(), scale.get_mpz_t()) &&
                mpz_divisible_p(ld.get_mpz_t(), scale.get_mpz_t()) &&
                mpz_divisible_p(lc.get_mpz_t(), nn.get_mpz_t()))
                return Theorem1Witness{delta, big, *lambda};
        }
    }
    return std::nullopt;
}

GeneratorSet canonical_generators(Level n, std::uint64_t factor_cap) {
    GeneratorSet out;
    out.level = n;
    for (std::uint64_t pp : factorize(n, factor_cap).prime_power_parts())
        out.generators.push_back({atkin_lehner_name(pp), atkin_lehner(n, pp)});
    const std::uint64_t v = v_params(n).v;
    if (v > 1) out.generators.push_back({shift_name(v), shift(n, v)});
    for (const auto& g : out.generators)
        if (!theorem1_member(g.matrix, n, factor_cap))
            throw Error(ErrorCode::NotInNormalizer, g.name + " failed the membership pattern");
    return out;
}

std::optional<ProjectiveMatrix> named_element(Level n, std::string_view name) {
    if (name.size() < 2 || (name[0] != 'w' && name[0] != 'S')) return std::nullopt;
    std::uint64_t k = 0;
    const char* first = name.data() + 1;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc{} || ptr != last || k == 0) return std::nullopt;
    if (name[0] == 'w') {
        if (!is_exact_divisor(k, n)) return std::nullopt;
        return atkin_lehner(n, k);
    }
    if (v_params(n).v % k != 0) return std::nullopt;
    return shift(n, k);
}

} // namespace norm0
