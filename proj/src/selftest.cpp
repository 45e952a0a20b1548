#include "norm0/selftest.hpp"

#include <functional>
#include <map>
#include <memory>

#include "norm0/errors.hpp"
#include "norm0/structure_report.hpp"

namespace norm0 {

namespace {

class Runner {
public:
    Runner(std::size_t budget, std::uint64_t cap, const GroupCache* cache)
        : budget_(budget), cap_(cap), cache_(cache) {}

    const QuotientGroup& group(Level n) {
        auto it = groups_.find(n);
        if (it == groups_.end())
            it = groups_.emplace(n, std::make_unique<QuotientGroup>(obtain_group(n, budget_, cap_, cache_))).first;
        return *it->second;
    }

    void check(std::string name, const std::function<std::string(Runner&)>& body) {
        // body returns an empty string on success, otherwise the failure detail
        try {
            std::string detail = body(*this);
            results_.push_back({std::move(name), detail.empty(), std::move(detail)});
        } catch (const Error& e) {
            results_.push_back({std::move(name), false, std::string(error_code_name(e.code())) + ": " + e.what()});
        }
    }

    std::vector<SelfTestCheck> take() { return std::move(results_); }

private:
    std::size_t budget_;
    std::uint64_t cap_;
    const GroupCache* cache_;
    std::map<Level, std::unique_ptr<QuotientGroup>> groups_;
    std::vector<SelfTestCheck> results_;
};

std::string expect_order(Runner& r, Level n, std::uint64_t want) {
    const auto got = r.group(n).order();
    return got == want ? "" : "|G(" + std::to_string(n) + ")| = " + std::to_string(got) + ", want " + std::to_string(want);
}

std::string expect_relation(Runner& r, Level n, const std::string& word, bool want) {
    const bool got = is_relation(r.group(n), parse_word(word));
    return got == want ? "" : "N=" + std::to_string(n) + ": " + word + (got ? " = 1" : " != 1");
}

} // namespace

std::vector<SelfTestCheck> run_selftest(std::size_t budget, std::uint64_t factor_cap, const GroupCache* cache) {
    Runner run(budget, factor_cap, cache);

    const std::pair<Level, std::uint64_t> orders[] = {{4, 6}, {8, 8}, {9, 12}, {27, 18}, {16, 24}, {64, 96}, {32, 32}};
    for (const auto& [n, want] : orders)
        run.check("order G(" + std::to_string(n) + ") = " + std::to_string(want),
                  [n = n, want = want](Runner& r) { return expect_order(r, n, want); });

    const std::tuple<Level, const char*, bool> relations[] = {
        {16, "(w16 S4)^3", true},
        {32, "S4^4", true},
        {32, "w32^2", true},
        {32, "(w32 S4)^4", true},
        {64, "(w64 S8)^3", true},
        {128, "(w128 S8)^4", true},
        {256, "w256 S8 w256 S8 w256 S8^3 w256 S8^3", true},
        {256, "(w256 S8)^3", false},
        {128, "S8 (w128 S8 w128) S8^-1 (w128 S8 w128)^-1", false},
        {64, "S8 (w64 S8 w64) S8^-1 (w64 S8 w64)^-1", false},
        {256, "S8 (w256 S8 w256) S8^-1 (w256 S8 w256)^-1", false},
        {1024, "S8 (w1024 S8 w1024) S8^-1 (w1024 S8 w1024)^-1", true},
    };
    for (const auto& [n, word, want] : relations)
        run.check(std::string("N=") + std::to_string(n) + ": " + word + (want ? " = 1" : " != 1"),
                  [n = n, word = std::string(word), want = want](Runner& r) { return expect_relation(r, n, word, want); });

    const std::tuple<Level, bool, const char*, const char*> claims[] = {
        {48, false, "S4", "w3"}, {45, false, "S3", "w5"}, {63, true, "", ""}, {30, true, "", ""}};
    for (const auto& [n, want, a, b] : claims)
        run.check("claim_AL(" + std::to_string(n) + ") = " + (want ? "true" : "false"),
                  [n = n, want = want, a = std::string(a), b = std::string(b)](Runner& r) -> std::string {
                      const ClaimVerdict v = check_claim_al(r.group(n));
                      if (v.holds != want) return "verdict " + std::string(v.holds ? "true" : "false") + ": " + v.message;
                      if (!want && (v.witness_a != a || v.witness_b != b))
                          return "witness (" + v.witness_a + ", " + v.witness_b + ")";
                      return "";
                  });

    for (std::uint64_t pn : {5u, 7u, 11u, 13u, 25u, 49u})
        run.check("S3 commutes with w" + std::to_string(pn) + " at N=" + std::to_string(9 * pn) + " iff " +
                      std::to_string(pn) + " = 1 mod 3",
                  [pn](Runner& r) -> std::string {
                      const auto& g = r.group(9 * pn);
                      const bool c = commutes(g, resolve_name(g, "S3"), resolve_name(g, "w" + std::to_string(pn)));
                      return c == (pn % 3 == 1) ? "" : "commutation disagrees with the mod-3 criterion";
                  });

    const std::tuple<Level, std::uint64_t, std::uint64_t> rules[] = {
        {45, 5, 3}, {63, 7, 3}, {112, 7, 4}, {144, 16, 3}, {144, 9, 4}, {1800, 8, 3}, {1800, 25, 3}, {320, 5, 8}, {448, 7, 8}};
    for (const auto& [n, pn, s] : rules)
        run.check("N=" + std::to_string(n) + ": w" + std::to_string(pn) + " S" + std::to_string(s) + " = S" +
                      std::to_string(s) + "^" + std::to_string(pn % s) + " w" + std::to_string(pn),
                  [n = n, pn = pn, s = s](Runner& r) -> std::string {
                      return check_commutation_rule(r.group(n), pn, s).holds ? "" : "rule fails";
                  });

    run.check("claim_AL holds for N <= 500 with v2(N) <= 3, v3(N) <= 1", [budget, factor_cap](Runner&) -> std::string {
        for (Level n = 1; n <= 500; ++n) {
            if (valuation(n, 2) > 3 || valuation(n, 3) > 1) continue;
            if (!check_claim_al(close(canonical_generators(n, factor_cap), budget)).holds)
                return "fails at N=" + std::to_string(n);
        }
        return "";
    });

    return run.take();
}

} // namespace norm0
