#pragma once

// Finite quotient groups Norm(Gamma_0(N)) / Gamma_0(N) enumerated from
// generators, plus the group-theoretic queries used by the structure checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "norm0/gamma0.hpp"
#include "norm0/normalizer.hpp"
#include "norm0/word.hpp"

namespace norm0 {

inline constexpr std::size_t kDefaultBudget = 100'000;
/// Groups up to this order get a precomputed Cayley table.
inline constexpr std::size_t kCayleyTableLimit = 4096;

class QuotientGroup {
public:
    /// Raw parts of an enumerated group; `parent`/`last_gen` encode the BFS
    /// tree (element i = parent[i] * generator last_gen[i]), and `right_mul`
    /// is the n x |gens| table of i * g.
    struct Parts {
        GeneratorSet gens;
        std::vector<ProjectiveMatrix> reps;
        std::vector<std::size_t> parent;
        std::vector<std::size_t> last_gen;
        std::vector<std::size_t> right_mul;
    };

    /// Rebuilds fingerprints, words and tables. Throws Error{InvalidArgument}
    /// when the parts are inconsistent.
    explicit QuotientGroup(Parts parts);

    Level level() const { return parts_.gens.level; }
    std::size_t order() const { return elements_.size(); }
    const GeneratorSet& generators() const { return parts_.gens; }
    const Parts& parts() const { return parts_; }
    const CosetElement& element(std::size_t i) const { return elements_.at(i); }
    std::size_t identity() const { return 0; }
    /// Element index of generator g.
    std::size_t generator_element(std::size_t g) const { return gen_elements_.at(g); }

    std::size_t op(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const { return inverse_.at(i); }
    std::size_t right_mul(std::size_t i, std::size_t g) const {
        return parts_.right_mul[i * parts_.gens.size() + g];
    }

    /// Shortest witness word found by the BFS (generator letters only).
    Word word(std::size_t i) const;
    /// Generator indices of the witness word, left to right.
    const std::vector<std::size_t>& letters(std::size_t i) const { return letters_.at(i); }

    std::optional<std::size_t> find(const ProjectiveMatrix& p) const;
    bool has_cayley_table() const { return !cayley_.empty(); }

private:
    std::size_t walk(std::size_t i, std::size_t j) const;

    Parts parts_;
    FingerprintContext fp_ctx_;
    std::vector<CosetElement> elements_;
    std::vector<std::vector<std::size_t>> letters_;
    std::vector<std::size_t> gen_elements_;
    std::vector<std::size_t> cayley_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<Fingerprint, std::vector<std::size_t>, FingerprintHash> buckets_;
};

/// BFS closure from the identity, multiplying on the right by each generator
/// in order. Throws Error{BudgetExceeded} past `budget` elements.
QuotientGroup close(const GeneratorSet& gens, std::size_t budget = kDefaultBudget);

/// Full quotient from canonical_generators(N).
QuotientGroup full_quotient(Level n, std::size_t budget = kDefaultBudget,
                            std::uint64_t factor_cap = kDefaultFactorCap);

std::size_t element_order(const QuotientGroup& g, std::size_t i);
bool commutes(const QuotientGroup& g, std::size_t i, std::size_t j);
std::size_t power(const QuotientGroup& g, std::size_t i, std::int64_t k);

/// Generator names first; otherwise "w<m>" / "S<k>" elements of the normalizer
/// located in the group. Throws Error{UnknownGenerator}.
std::size_t resolve_name(const QuotientGroup& g, const std::string& name);

std::size_t eval_word(const QuotientGroup& g, const Word& w);
bool is_relation(const QuotientGroup& g, const Word& w);

/// Sorted indices of central elements.
std::vector<std::size_t> center(const QuotientGroup& g);

/// Closure of the seeds, sorted ascending.
std::vector<std::size_t> subgroup(const QuotientGroup& g, const std::vector<std::size_t>& seeds);

/// Subgroup generated by named elements with a shortest word (in those names)
/// for each member.
struct NamedSubgroup {
    std::vector<std::string> names;
    std::vector<std::size_t> elements;  // BFS order, identity first
    std::unordered_map<std::size_t, Word> words;

    bool contains(std::size_t i) const { return words.count(i) != 0; }
};

NamedSubgroup named_subgroup(const QuotientGroup& g, const std::vector<std::string>& names);

struct DirectProductVerdict {
    enum class Failure { None, NonCommuting, OrderMismatch, NontrivialIntersection };

    bool holds = true;
    Failure failure = Failure::None;
    std::size_t factor_a = 0;
    std::size_t factor_b = 0;
    std::size_t element_a = 0;
    std::size_t element_b = 0;
    std::uint64_t product_of_orders = 1;
    std::string message;
};

const char* failure_name(DirectProductVerdict::Failure f);

/// Checks pairwise commuting, |G| = prod |F_i|, then F_i meeting the
/// subgroup generated by the other factors trivially, in that order.
/// Throws Error{NotASubgroup} if a factor is not closed.
DirectProductVerdict internal_direct_product(const QuotientGroup& g,
                                             const std::vector<std::vector<std::size_t>>& factors);

/// One permutation per generator on points 1..|G|: entry i-1 is 1 + op(gen, i-1).
std::vector<std::vector<std::size_t>> regular_representation(const QuotientGroup& g);

/// Exponent (lcm of element orders).
std::uint64_t exponent(const QuotientGroup& g);
bool is_abelian(const QuotientGroup& g);

} // namespace norm0
