#include "norm0/gamma0.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "norm0/errors.hpp"

namespace norm0 {

VParams v_params(Level n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level must be positive");
    VParams out{n, std::min(3u, valuation(n, 2) / 2), std::min(1u, valuation(n, 3) / 2), 1};
    out.v = (std::uint64_t{1} << out.mu) * (out.w ? 3 : 1);
    return out;
}

std::uint64_t epsilon(Level n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level must be positive");
    if (n == 1) return 1;
    std::uint64_t g = n;
    for (std::uint64_t a = 1; a < n && g > 1; ++a) {
        if (std::gcd(a, n) != 1) continue;
        const unsigned __int128 sq = static_cast<unsigned __int128>(a) * a;
        g = std::gcd(g, static_cast<std::uint64_t>((sq - 1) % n));
    }
    return g;
}

bool is_gamma0(const ProjectiveMatrix& p, Level n) {
    return p.det() == 1 && mod_u64(p.c(), n) == 0;
}

bool scaled_in_gamma0(const Mat2& q, Level n) {
    const Int dt = det(q);
    if (dt <= 0) return false;
    return is_gamma0(canonicalize(q), n);
}

bool coset_equal(const ProjectiveMatrix& p1, const ProjectiveMatrix& p2, Level n) {
    return scaled_in_gamma0(mul(p1.mat(), adjugate(p2.mat())), n);
}

std::size_t FingerprintHash::operator()(const Fingerprint& f) const noexcept {
    std::size_t h = mpz_get_ui(f.det.get_mpz_t());
    h ^= std::hash<std::uint64_t>{}(f.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(f.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

FingerprintContext::FingerprintContext(Level n) : level_(n), units_(units_mod(n)) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level must be positive");
}

Fingerprint FingerprintContext::operator()(const ProjectiveMatrix& p) const {
    const std::uint64_t a = mod_u64(p.a(), level_);
    const std::uint64_t c = mod_u64(p.c(), level_);
    std::pair<std::uint64_t, std::uint64_t> best{level_, level_};
    for (std::uint64_t u : units_) {
        const auto ua = static_cast<std::uint64_t>(static_cast<unsigned __int128>(u) * a % level_);
        const auto uc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(u) * c % level_);
        best = std::min(best, {ua, uc});
    }
    return {p.det(), best.first, best.second};
}

Fingerprint fingerprint(const ProjectiveMatrix& p, Level n) { return FingerprintContext(n)(p); }

std::uint64_t gamma0_index(Level n) {
    std::uint64_t idx = n;
    for (const auto& f : factorize(n).factors) idx = idx / f.prime * (f.prime + 1);
    return idx;
}

namespace {

// Points of P^1(Z/N) are represented by the unit-orbit minimum of (c, d).
struct ProjectiveLine {
    Level n;
    std::vector<std::uint64_t> units;

    std::pair<std::uint64_t, std::uint64_t> normalize(std::uint64_t c, std::uint64_t d) const {
        std::pair<std::uint64_t, std::uint64_t> best{n, n};
        for (std::uint64_t u : units) best = std::min(best, {u * c % n, u * d % n});
        return best;
    }
};

} // namespace

CosetGraph coset_graph(Level n, std::uint64_t cap) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level must be positive");
    if (n > cap)
        throw Error(ErrorCode::CapExceeded,
                    "N=" + std::to_string(n) + " exceeds oracle cap " + std::to_string(cap));

    const Mat2 gen_s{0, -1, 1, 0};
    const Mat2 gen_t{1, 1, 0, 1};
    const Mat2 gens[2] = {gen_s, gen_t};

    ProjectiveLine line{n, units_mod(n)};
    using Point = std::pair<std::uint64_t, std::uint64_t>;
    struct PointHash {
        std::size_t operator()(const Point& p) const noexcept { return p.first * 1000003ULL ^ p.second; }
    };

    // Representatives r_x with bottom row ~ x; the identity coset is (0:1).
    std::unordered_map<Point, std::size_t, PointHash> ids;
    std::vector<Point> points;
    std::vector<Mat2> reps;
    const Point start = line.normalize(0, 1 % n);
    ids.emplace(start, 0);
    points.push_back(start);
    reps.push_back(Mat2::identity());

    CosetGraph out{n, 0, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [c, d] = points[i];
        for (const Mat2& g : gens) {
            // (c, d) * g, entries of g are in {-1, 0, 1}
            const std::int64_t gc = mpz_get_si(g.a.get_mpz_t()) * static_cast<std::int64_t>(c) +
                                    mpz_get_si(g.c.get_mpz_t()) * static_cast<std::int64_t>(d);
            const std::int64_t gd = mpz_get_si(g.b.get_mpz_t()) * static_cast<std::int64_t>(c) +
                                    mpz_get_si(g.d.get_mpz_t()) * static_cast<std::int64_t>(d);
            const auto sn = static_cast<std::int64_t>(n);
            const Point next = line.normalize(static_cast<std::uint64_t>(((gc % sn) + sn) % sn),
                                              static_cast<std::uint64_t>(((gd % sn) + sn) % sn));
            const Mat2 moved = mul(reps[i], g);
            auto it = ids.find(next);
            if (it == ids.end()) {
                ids.emplace(next, points.size());
                points.push_back(next);
                reps.push_back(moved);
                continue;
            }
            // r_x g r_y^{-1}; r_y has det 1 so the adjugate is the inverse.
            ProjectiveMatrix sg = canonicalize(mul(moved, adjugate(reps[it->second])));
            if (!is_gamma0(sg, n))
                throw Error(ErrorCode::InvalidArgument, "coset graph produced a non-member");
            if (!sg.is_identity()) out.generators.push_back(std::move(sg));
        }
    }
    out.index = points.size();
    if (out.generators.empty()) out.generators.push_back(ProjectiveMatrix{});
    return out;
}

std::vector<ProjectiveMatrix> schreier_generators(Level n, std::uint64_t cap) {
    return coset_graph(n, cap).generators;
}

bool conjugation_normalizes(const ProjectiveMatrix& p, const CosetGraph& graph) {
    const Mat2 inv = adjugate(p.mat());
    for (const auto& g : graph.generators) {
        if (!scaled_in_gamma0(mul(mul(p.mat(), g.mat()), inv), graph.level)) return false;
        if (!scaled_in_gamma0(mul(mul(inv, g.mat()), p.mat()), graph.level)) return false;
    }
    return true;
}

bool conjugation_normalizes(const ProjectiveMatrix& p, Level n, std::uint64_t cap) {
    return conjugation_normalizes(p, coset_graph(n, cap));
}

} // namespace norm0
