#include "norm0/group_engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "norm0/errors.hpp"

namespace norm0 {

namespace {

[[noreturn]] void bad_parts(const std::string& msg) {
    throw Error(ErrorCode::InvalidArgument, "inconsistent group data: " + msg);
}

} // namespace

QuotientGroup::QuotientGroup(Parts parts) : parts_(std::move(parts)), fp_ctx_(parts_.gens.level) {
    const std::size_t n = parts_.reps.size();
    const std::size_t ng = parts_.gens.size();
    if (n == 0) bad_parts("no elements");
    if (parts_.parent.size() != n || parts_.last_gen.size() != n || parts_.right_mul.size() != n * ng)
        bad_parts("table sizes");
    if (!parts_.reps[0].is_identity() && !coset_equal(parts_.reps[0], ProjectiveMatrix{}, level()))
        bad_parts("element 0 is not the identity");
    for (std::size_t x : parts_.right_mul)
        if (x >= n) bad_parts("right multiplication index out of range");

    elements_.reserve(n);
    letters_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const std::size_t p = parts_.parent[i];
            const std::size_t g = parts_.last_gen[i];
            if (p >= i || g >= ng || right_mul(p, g) != i) bad_parts("BFS tree");
            letters_[i] = letters_[p];
            letters_[i].push_back(g);
        }
        Fingerprint fp = fp_ctx_(parts_.reps[i]);
        auto& bucket = buckets_[fp];
        for (std::size_t j : bucket)
            if (coset_equal(parts_.reps[j], parts_.reps[i], level())) bad_parts("duplicate coset");
        bucket.push_back(i);
        elements_.push_back({level(), parts_.reps[i], std::move(fp)});
    }
    for (std::size_t g = 0; g < ng; ++g) gen_elements_.push_back(right_mul(0, g));

    if (n <= kCayleyTableLimit) {
        cayley_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cayley_[i * n + j] = walk(i, j);
    }
    inverse_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (inverse_[i] != n) continue;
        if (has_cayley_table()) {
            for (std::size_t j = 0; j < n; ++j)
                if (cayley_[i * n + j] == 0) {
                    inverse_[i] = j;
                    break;
                }
        } else {
            std::size_t x = i, prev = 0;
            while (x != 0) {
                prev = x;
                x = walk(x, i);
            }
            inverse_[i] = prev;  // i^(ord-1)
        }
        if (inverse_[i] == n) bad_parts("missing inverse");
        inverse_[inverse_[i]] = i;
    }
}

std::size_t QuotientGroup::walk(std::size_t i, std::size_t j) const {
    for (std::size_t g : letters_[j]) i = right_mul(i, g);
    return i;
}

std::size_t QuotientGroup::op(std::size_t i, std::size_t j) const {
    if (i >= order() || j >= order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    if (has_cayley_table()) return cayley_[i * order() + j];
    return walk(i, j);
}

Word QuotientGroup::word(std::size_t i) const {
    Word w;
    for (std::size_t g : letters_.at(i)) w.push_back({parts_.gens.generators[g].name, 1});
    return simplify(std::move(w));
}

std::optional<std::size_t> QuotientGroup::find(const ProjectiveMatrix& p) const {
    auto it = buckets_.find(fp_ctx_(p));
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t j : it->second)
        if (coset_equal(elements_[j].rep, p, level())) return j;
    return std::nullopt;
}

QuotientGroup close(const GeneratorSet& gens, std::size_t budget) {
    QuotientGroup::Parts parts;
    parts.gens = gens;
    parts.reps.push_back(ProjectiveMatrix{});
    parts.parent.push_back(0);
    parts.last_gen.push_back(0);

    const Level n = gens.level;
    const FingerprintContext fp(n);
    std::unordered_map<Fingerprint, std::vector<std::size_t>, FingerprintHash> buckets;
    buckets[fp(parts.reps[0])].push_back(0);

    for (std::size_t i = 0; i < parts.reps.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            ProjectiveMatrix prod = product(parts.reps[i], gens.generators[g].matrix);
            auto& bucket = buckets[fp(prod)];
            std::optional<std::size_t> hit;
            for (std::size_t j : bucket)
                if (coset_equal(parts.reps[j], prod, n)) {
                    hit = j;
                    break;
                }
            if (!hit) {
                if (parts.reps.size() >= budget)
                    throw Error(ErrorCode::BudgetExceeded,
                                "closure for N=" + std::to_string(n) + " exceeded budget of " +
                                    std::to_string(budget) + " elements");
                hit = parts.reps.size();
                bucket.push_back(*hit);
                parts.reps.push_back(std::move(prod));
                parts.parent.push_back(i);
                parts.last_gen.push_back(g);
            }
            parts.right_mul.push_back(*hit);
        }
    }
    return QuotientGroup(std::move(parts));
}

QuotientGroup full_quotient(Level n, std::size_t budget, std::uint64_t factor_cap) {
    return close(canonical_generators(n, factor_cap), budget);
}

std::size_t element_order(const QuotientGroup& g, std::size_t i) {
    std::size_t k = 1;
    for (std::size_t x = i; x != g.identity(); x = g.op(x, i)) ++k;
    return k;
}

bool commutes(const QuotientGroup& g, std::size_t i, std::size_t j) { return g.op(i, j) == g.op(j, i); }

std::size_t power(const QuotientGroup& g, std::size_t i, std::int64_t k) {
    const auto ord = static_cast<std::int64_t>(element_order(g, i));
    std::int64_t e = ((k % ord) + ord) % ord;
    std::size_t acc = g.identity();
    for (std::int64_t t = 0; t < e; ++t) acc = g.op(acc, i);
    return acc;
}

std::size_t resolve_name(const QuotientGroup& g, const std::string& name) {
    if (auto idx = g.generators().find(name)) return g.generator_element(*idx);
    if (auto m = named_element(g.level(), name)) {
        if (auto hit = g.find(*m)) return *hit;
        throw Error(ErrorCode::UnknownGenerator,
                    name + " is not in the enumerated group for N=" + std::to_string(g.level()));
    }
    throw Error(ErrorCode::UnknownGenerator,
                "unknown generator '" + name + "' for N=" + std::to_string(g.level()));
}

std::size_t eval_word(const QuotientGroup& g, const Word& w) {
    std::size_t acc = g.identity();
    for (const auto& l : w) acc = g.op(acc, power(g, resolve_name(g, l.name), l.exponent));
    return acc;
}

bool is_relation(const QuotientGroup& g, const Word& w) { return eval_word(g, w) == g.identity(); }

std::vector<std::size_t> center(const QuotientGroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        bool central = true;
        for (std::size_t k = 0; k < g.generators().size() && central; ++k)
            central = commutes(g, i, g.generator_element(k));
        if (central) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> subgroup(const QuotientGroup& g, const std::vector<std::size_t>& seeds) {
    std::vector<std::size_t> elems{g.identity()};
    std::vector<char> seen(g.order(), 0);
    seen[g.identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t s : seeds) {
            const std::size_t x = g.op(elems[i], s);
            if (!seen[x]) {
                seen[x] = 1;
                elems.push_back(x);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

NamedSubgroup named_subgroup(const QuotientGroup& g, const std::vector<std::string>& names) {
    NamedSubgroup out;
    out.names = names;
    std::vector<std::size_t> seeds;
    for (const auto& nm : names) seeds.push_back(resolve_name(g, nm));
    out.elements.push_back(g.identity());
    out.words.emplace(g.identity(), Word{});
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        const std::size_t x = out.elements[i];
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            const std::size_t y = g.op(x, seeds[s]);
            if (out.words.count(y)) continue;
            out.words.emplace(y, concat(out.words.at(x), Word{{names[s], 1}}));
            out.elements.push_back(y);
        }
    }
    return out;
}

const char* failure_name(DirectProductVerdict::Failure f) {
    switch (f) {
    case DirectProductVerdict::Failure::None: return "none";
    case DirectProductVerdict::Failure::NonCommuting: return "non_commuting";
    case DirectProductVerdict::Failure::OrderMismatch: return "order_mismatch";
    case DirectProductVerdict::Failure::NontrivialIntersection: return "nontrivial_intersection";
    }
    return "unknown";
}

DirectProductVerdict internal_direct_product(const QuotientGroup& g,
                                             const std::vector<std::vector<std::size_t>>& factors) {
    std::vector<std::vector<char>> member(factors.size(), std::vector<char>(g.order(), 0));
    for (std::size_t f = 0; f < factors.size(); ++f) {
        for (std::size_t x : factors[f]) {
            if (x >= g.order()) throw Error(ErrorCode::NotASubgroup, "factor index out of range");
            member[f][x] = 1;
        }
        if (!member[f][g.identity()])
            throw Error(ErrorCode::NotASubgroup, "factor " + std::to_string(f) + " lacks the identity");
        for (std::size_t x : factors[f])
            for (std::size_t y : factors[f])
                if (!member[f][g.op(x, y)])
                    throw Error(ErrorCode::NotASubgroup, "factor " + std::to_string(f) + " is not closed");
    }

    DirectProductVerdict v;
    for (std::size_t a = 0; a < factors.size(); ++a)
        for (std::size_t b = a + 1; b < factors.size(); ++b)
            for (std::size_t x : factors[a])
                for (std::size_t y : factors[b])
                    if (!commutes(g, x, y)) {
                        v.holds = false;
                        v.failure = DirectProductVerdict::Failure::NonCommuting;
                        v.factor_a = a;
                        v.factor_b = b;
                        v.element_a = x;
                        v.element_b = y;
                        v.message = "elements " + std::to_string(x) + " and " + std::to_string(y) +
                                    " of factors " + std::to_string(a) + " and " + std::to_string(b) +
                                    " do not commute";
                        return v;
                    }

    for (const auto& f : factors) v.product_of_orders *= f.size();
    if (v.product_of_orders != g.order()) {
        v.holds = false;
        v.failure = DirectProductVerdict::Failure::OrderMismatch;
        v.message = "product of factor orders " + std::to_string(v.product_of_orders) +
                    " differs from |G| = " + std::to_string(g.order());
        return v;
    }

    for (std::size_t a = 0; a < factors.size(); ++a) {
        std::vector<std::size_t> seeds;
        for (std::size_t b = 0; b < factors.size(); ++b)
            if (b != a) seeds.insert(seeds.end(), factors[b].begin(), factors[b].end());
        for (std::size_t x : subgroup(g, seeds))
            if (x != g.identity() && member[a][x]) {
                v.holds = false;
                v.failure = DirectProductVerdict::Failure::NontrivialIntersection;
                v.factor_a = a;
                v.element_a = x;
                v.message = "element " + std::to_string(x) + " of factor " + std::to_string(a) +
                            " lies in the span of the other factors";
                return v;
            }
    }
    return v;
}

std::vector<std::vector<std::size_t>> regular_representation(const QuotientGroup& g) {
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        const std::size_t s = g.generator_element(k);
        std::vector<std::size_t> perm(g.order());
        for (std::size_t i = 0; i < g.order(); ++i) perm[i] = g.op(s, i) + 1;
        perms.push_back(std::move(perm));
    }
    return perms;
}

std::uint64_t exponent(const QuotientGroup& g) {
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < g.order(); ++i) e = std::lcm(e, static_cast<std::uint64_t>(element_order(g, i)));
    return e;
}

bool is_abelian(const QuotientGroup& g) {
    for (std::size_t a = 0; a < g.generators().size(); ++a)
        for (std::size_t b = a + 1; b < g.generators().size(); ++b)
            if (!commutes(g, g.generator_element(a), g.generator_element(b))) return false;
    return true;
}

} // namespace norm0
