#include "norm0/structure_report.hpp"

#include <algorithm>
#include <cctype>

#include "norm0/errors.hpp"

namespace norm0 {

const char* source_name(ClaimSource s) { return s == ClaimSource::Claim8 ? "claim8" : "barsfi"; }

namespace {

// Relation templates use the placeholder generators W (the Atkin-Lehner
// involution at the prime) and S (the shift of the factor).
constexpr const char* kCommuteWithConjugate = "S (W S W) S^-1 (W S W)^-1";

struct RelationRow {
    const char* text;
    bool expected;
};

struct CaseRow {
    ClaimSource source;
    std::uint64_t prime;     // 2, 3, or 0 for any prime >= 5
    unsigned min_exp;        // inclusive
    unsigned max_exp;        // inclusive, 0 = unbounded
    int parity;              // -1 any, 0 even, 1 odd
    const char* label;
    std::uint64_t shift;     // 0 = no shift generator
    std::uint64_t order;     // 0 = no order stated
    std::vector<RelationRow> relations;
};

const std::vector<CaseRow>& case_table() {
    static const std::vector<CaseRow> rows = [] {
        std::vector<CaseRow> r;
        for (ClaimSource src : {ClaimSource::Claim8, ClaimSource::Barsfi}) {
            r.push_back({src, 0, 1, 0, -1, "(1)", 0, 2, {{"W^2", true}}});
            r.push_back({src, 3, 1, 1, -1, "(2)(b)", 0, 2, {{"W^2", true}}});
            r.push_back({src, 3, 2, 2, -1, "(2)(c)", 3, 12, {{"W^2", true}, {"S^3", true}, {"(W S)^3", true}}});
            r.push_back({src, 3, 3, 0, -1, "(2)(d)", 3, 18,
                         {{"W^2", true}, {"S^3", true}, {kCommuteWithConjugate, true}}});
            r.push_back({src, 2, 1, 1, -1, "(3)(b)", 0, 2, {{"W^2", true}}});
        }
        using C = ClaimSource;
        // Original statement, keyed on lambda = v2(N).
        r.push_back({C::Claim8, 2, 2, 2, -1, "(3)(c)", 2, 6, {{"W^2", true}, {"S^2", true}, {"(W S)^3", true}}});
        r.push_back({C::Claim8, 2, 4, 4, -1, "(3)(c)", 4, 24, {{"W^2", true}, {"S^4", true}, {"(W S)^3", true}}});
        r.push_back({C::Claim8, 2, 6, 6, -1, "(3)(c)", 8, 96, {{"W^2", true}, {"S^8", true}, {"(W S)^3", true}}});
        r.push_back({C::Claim8, 2, 3, 3, -1, "(3)(d)", 2, 8,
                     {{"W^2", true}, {"S^2", true}, {kCommuteWithConjugate, true}}});
        r.push_back({C::Claim8, 2, 5, 5, -1, "(3)(d)", 4, 32,
                     {{"W^2", true}, {"S^4", true}, {kCommuteWithConjugate, true}}});
        r.push_back({C::Claim8, 2, 7, 0, -1, "(3)(d)", 8, 128,
                     {{"W^2", true}, {"S^8", true}, {kCommuteWithConjugate, true}}});
        // Corrected statement together with the stated non-relations.
        r.push_back({C::Barsfi, 2, 2, 2, -1, "(3)(c)", 2, 6, {{"W^2", true}, {"S^2", true}, {"(W S)^3", true}}});
        r.push_back({C::Barsfi, 2, 4, 4, -1, "(3)(c)", 4, 24, {{"W^2", true}, {"S^4", true}, {"(W S)^3", true}}});
        r.push_back({C::Barsfi, 2, 6, 6, -1, "(3)(c)", 8, 96,
                     {{"W^2", true}, {"S^8", true}, {"(W S)^3", true}, {kCommuteWithConjugate, false}}});
        r.push_back({C::Barsfi, 2, 3, 3, -1, "(3)(d)", 2, 0, {{"W^2", true}, {"S^2", true}, {"(W S)^4", true}}});
        r.push_back({C::Barsfi, 2, 5, 5, -1, "(3)(d)", 4, 0,
                     {{"W^2", true}, {"S^4", true}, {"(W S)^4", true}, {kCommuteWithConjugate, false}}});
        r.push_back({C::Barsfi, 2, 7, 7, -1, "(3)(d)", 8, 0,
                     {{"W^2", true}, {"S^8", true}, {"(W S)^4", true}, {kCommuteWithConjugate, false}}});
        r.push_back({C::Barsfi, 2, 8, 8, -1, "(3)(c^)", 8, 0,
                     {{"W^2", true},
                      {"S^8", true},
                      {"W S W S W S^3 W S^3", true},
                      {"(W S)^3", false},
                      {kCommuteWithConjugate, false}}});
        r.push_back({C::Barsfi, 2, 9, 0, 1, "(3)(d~)", 8, 0,
                     {{"W^2", true}, {"S^8", true}, {kCommuteWithConjugate, true}, {"(W S)^4", false}}});
        r.push_back({C::Barsfi, 2, 10, 0, 0, "(3)(c~)", 8, 0,
                     {{"W^2", true}, {"S^8", true}, {kCommuteWithConjugate, true}, {"(W S)^3", false}}});
        return r;
    }();
    return rows;
}

std::string substitute(const std::string& tmpl, const std::string& w, const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size();) {
        if (std::isalpha(static_cast<unsigned char>(tmpl[i]))) {
            std::size_t j = i;
            while (j < tmpl.size() && std::isalnum(static_cast<unsigned char>(tmpl[j]))) ++j;
            const std::string tok = tmpl.substr(i, j - i);
            out += tok == "W" ? w : tok == "S" ? s : tok;
            i = j;
        } else {
            out += tmpl[i++];
        }
    }
    return out;
}

bool matches(const CaseRow& row, ClaimSource src, std::uint64_t prime, unsigned e) {
    if (row.source != src) return false;
    if (row.prime == 0 ? prime < 5 : row.prime != prime) return false;
    if (e < row.min_exp || (row.max_exp != 0 && e > row.max_exp)) return false;
    return row.parity < 0 || static_cast<int>(e % 2) == row.parity;
}

} // namespace

StructureDescriptor predicted_structure(Level n, ClaimSource source, std::uint64_t factor_cap) {
    StructureDescriptor out{n, source, source == ClaimSource::Claim8, {}};
    for (const auto& [p, e] : factorize(n, factor_cap).factors) {
        const CaseRow* row = nullptr;
        for (const auto& r : case_table())
            if (matches(r, source, p, e)) {
                row = &r;
                break;
            }
        if (!row) throw Error(ErrorCode::InvalidArgument, "no structure case for prime " + std::to_string(p));
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        const std::string w = atkin_lehner_name(pe);
        const std::string s = row->shift ? shift_name(row->shift) : std::string{};

        FactorDescriptor f;
        f.prime = p;
        f.case_label = row->label;
        f.generators.push_back(w);
        if (row->shift) f.generators.push_back(s);
        for (const auto& rel : row->relations) {
            const std::string text = substitute(rel.text, w, s);
            f.relations.push_back({text, parse_word(text), rel.expected});
        }
        if (row->order) f.claimed_order = row->order;
        out.factors.push_back(std::move(f));
    }
    return out;
}

bool FactorCheck::ok() const {
    return order_ok && std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.ok(); });
}

bool StructureVerification::ok() const {
    return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.ok(); });
}

StructureVerification verify_structure(const QuotientGroup& g, ClaimSource source) {
    StructureVerification out{g.level(), source, g.order(), {}};
    for (auto& f : predicted_structure(g.level(), source).factors) {
        FactorCheck fc;
        fc.subgroup_order = named_subgroup(g, f.generators).elements.size();
        fc.order_ok = !f.claimed_order || *f.claimed_order == fc.subgroup_order;
        for (const auto& rel : f.relations) fc.relations.push_back({rel.text, rel.expected, is_relation(g, rel.word)});
        fc.descriptor = std::move(f);
        out.factors.push_back(std::move(fc));
    }
    return out;
}

ClaimVerdict check_claim_al(const QuotientGroup& g) {
    const StructureDescriptor desc = predicted_structure(g.level(), ClaimSource::Claim8);
    ClaimVerdict v;
    auto fail = [&v](std::string stage, std::string a, std::string b, std::string msg) {
        v.holds = false;
        v.stage = std::move(stage);
        v.witness_a = std::move(a);
        v.witness_b = std::move(b);
        v.message = std::move(msg);
        return v;
    };

    for (const auto& f : desc.factors)
        for (const auto& rel : f.relations)
            if (is_relation(g, rel.word) != rel.expected)
                return fail("relations", rel.text, "", "relation " + rel.text + " = 1 fails");

    std::vector<NamedSubgroup> subgroups;
    for (const auto& f : desc.factors) {
        subgroups.push_back(named_subgroup(g, f.generators));
        const auto got = subgroups.back().elements.size();
        if (f.claimed_order && *f.claimed_order != got)
            return fail("orders", f.generators.front(), "",
                        "factor at p=" + std::to_string(f.prime) + " has order " + std::to_string(got) +
                            ", expected " + std::to_string(*f.claimed_order));
    }

    for (std::size_t a = 0; a < desc.factors.size(); ++a)
        for (std::size_t b = a + 1; b < desc.factors.size(); ++b)
            for (const auto& x : desc.factors[a].generators)
                for (const auto& y : desc.factors[b].generators)
                    if (!commutes(g, resolve_name(g, x), resolve_name(g, y)))
                        return fail("commuting", x, y, x + " and " + y + " do not commute");

    std::vector<std::vector<std::size_t>> factors;
    for (const auto& s : subgroups) {
        auto elems = s.elements;
        std::sort(elems.begin(), elems.end());
        factors.push_back(std::move(elems));
    }
    const DirectProductVerdict dp = internal_direct_product(g, factors);
    if (dp.failure == DirectProductVerdict::Failure::OrderMismatch)
        return fail("order_product", "", "", dp.message);
    if (dp.failure == DirectProductVerdict::Failure::NontrivialIntersection)
        return fail("intersection", format_word(g.word(dp.element_a)), "", dp.message);
    if (dp.failure == DirectProductVerdict::Failure::NonCommuting)
        return fail("commuting", format_word(g.word(dp.element_a)), format_word(g.word(dp.element_b)), dp.message);
    return v;
}

BarsDecomposer::BarsDecomposer(const QuotientGroup& g) : g_(g) {
    const Level n = g.level();
    const Factorization f = factorize(n);
    std::vector<std::string> names;
    const std::uint64_t v = v_params(n).v;
    if (v > 1) names.push_back(shift_name(v));
    std::vector<std::uint64_t> coprime_parts;
    for (std::uint64_t pp : f.prime_power_parts()) {
        if (pp % 2 == 0 || pp % 3 == 0)
            names.push_back(atkin_lehner_name(pp));
        else
            coprime_parts.push_back(pp);
    }
    omega_ = named_subgroup(g, names);
    candidates_.push_back(1);
    for (std::uint64_t pp : coprime_parts) {
        const std::size_t base = candidates_.size();
        for (std::size_t i = 0; i < base; ++i) candidates_.push_back(candidates_[i] * pp);
    }
    std::sort(candidates_.begin(), candidates_.end());
}

BarsDecomposition BarsDecomposer::decompose(std::size_t element) const {
    for (std::uint64_t m : candidates_) {
        const std::size_t wm = m == 1 ? g_.identity() : resolve_name(g_, atkin_lehner_name(m));
        const std::size_t rest = g_.op(g_.inverse(wm), element);
        if (auto it = omega_.words.find(rest); it != omega_.words.end()) return {m, it->second, rest};
    }
    throw Error(ErrorCode::DecompositionFailed,
                "no w_m * Omega decomposition for element " + std::to_string(element) + " at N=" +
                    std::to_string(g_.level()));
}

BarsDecomposition BarsDecomposer::decompose(const ProjectiveMatrix& p) const {
    if (!theorem1_member(p, g_.level()))
        throw Error(ErrorCode::NotInNormalizer, p.to_string() + " is not in the normalizer");
    const auto idx = g_.find(p);
    if (!idx) throw Error(ErrorCode::DecompositionFailed, p.to_string() + " is missing from the enumerated group");
    return decompose(*idx);
}

std::uint64_t commutation_rule(Level n, std::uint64_t pn, std::uint64_t shift_order) {
    if (shift_order != 3 && shift_order != 4 && shift_order != 8)
        throw Error(ErrorCode::InvalidArgument, "shift order must be 3, 4 or 8");
    if (v_params(n).v % shift_order != 0)
        throw Error(ErrorCode::ShiftNotInNormalizer,
                    "S" + std::to_string(shift_order) + " is not in the normalizer for N=" + std::to_string(n));
    if (!is_exact_divisor(pn, n) || pn == 1 || factorize(pn).factors.size() != 1 || gcd_u64(pn, shift_order) != 1)
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(pn) + " is not an exact prime-power divisor of " + std::to_string(n) +
                        " coprime to " + std::to_string(shift_order));
    return pn % shift_order;
}

CommutationCheck check_commutation_rule(const QuotientGroup& g, std::uint64_t pn, std::uint64_t shift_order) {
    const std::uint64_t k = commutation_rule(g.level(), pn, shift_order);
    const std::string w = atkin_lehner_name(pn);
    const std::string s = shift_name(shift_order);
    const std::size_t lhs = eval_word(g, parse_word(w + " " + s));
    const std::size_t rhs = eval_word(g, parse_word(s + "^" + std::to_string(k) + " " + w));
    return {pn, shift_order, k, lhs == rhs};
}

} // namespace norm0
