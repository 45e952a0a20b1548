#pragma once

// Predicted per-prime structures of the normalizer quotient, as relation
// tables, and their verification against enumerated groups.
//
// Two tables are kept: the original Atkin-Lehner direct-product statement
// (ClaimSource::Claim8) and the corrected product structure
// (ClaimSource::Barsfi). Relations whose failure is part of the corrected
// statement are stored with expected = false.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "norm0/group_engine.hpp"

namespace norm0 {

enum class ClaimSource { Claim8, Barsfi };

const char* source_name(ClaimSource s);

struct RelationSpec {
    std::string text;
    Word word;
    bool expected;  // false: the relation is stated NOT to hold
};

struct FactorDescriptor {
    std::uint64_t prime;
    std::string case_label;
    std::vector<std::string> generators;
    std::vector<RelationSpec> relations;
    std::optional<std::uint64_t> claimed_order;
};

struct StructureDescriptor {
    Level level;
    ClaimSource source;
    bool direct_product;
    std::vector<FactorDescriptor> factors;  // increasing prime
};

StructureDescriptor predicted_structure(Level n, ClaimSource source,
                                        std::uint64_t factor_cap = kDefaultFactorCap);

struct RelationCheck {
    std::string text;
    bool expected;
    bool holds;
    bool ok() const { return expected == holds; }
};

struct FactorCheck {
    FactorDescriptor descriptor;
    std::uint64_t subgroup_order;
    bool order_ok;
    std::vector<RelationCheck> relations;
    bool ok() const;
};

struct StructureVerification {
    Level level;
    ClaimSource source;
    std::uint64_t group_order;
    std::vector<FactorCheck> factors;
    bool ok() const;
};

StructureVerification verify_structure(const QuotientGroup& g, ClaimSource source);

struct ClaimVerdict {
    bool holds = true;
    /// none, relations, orders, commuting, order_product, intersection
    std::string stage = "none";
    std::string witness_a;
    std::string witness_b;
    std::string message;
};

/// Decides the direct-product statement for the group's level. Checks run in
/// the fixed order relations, orders, commuting, order product, intersection
/// and the first failure is reported.
ClaimVerdict check_claim_al(const QuotientGroup& g);

/// Constructive decomposition x = w_m * Omega with gcd(m, 6) = 1 and Omega in
/// <S_{v(N)}, w_{2^{v2(N)}}, w_{3^{v3(N)}}>.
struct BarsDecomposition {
    std::uint64_t m;
    Word omega;
    std::size_t omega_element;
};

class BarsDecomposer {
public:
    explicit BarsDecomposer(const QuotientGroup& g);

    /// Throws Error{DecompositionFailed}.
    BarsDecomposition decompose(std::size_t element) const;
    /// Requires membership in the normalizer; throws Error{NotInNormalizer}
    /// or Error{DecompositionFailed}.
    BarsDecomposition decompose(const ProjectiveMatrix& p) const;

    const std::vector<std::string>& omega_generators() const { return omega_.names; }
    const std::vector<std::uint64_t>& candidates() const { return candidates_; }

private:
    const QuotientGroup& g_;
    NamedSubgroup omega_;
    std::vector<std::uint64_t> candidates_;
};

/// k = p^n mod shift_order. shift_order must be 3, 4 or 8 and divide v(N)
/// (Error{ShiftNotInNormalizer}); pn must be an exact prime-power divisor of N
/// coprime to shift_order (Error{InvalidArgument}).
std::uint64_t commutation_rule(Level n, std::uint64_t pn, std::uint64_t shift_order);

struct CommutationCheck {
    std::uint64_t pn;
    std::uint64_t shift_order;
    std::uint64_t k;
    bool holds;  // w_{pn} S = S^k w_{pn} in the group
};

CommutationCheck check_commutation_rule(const QuotientGroup& g, std::uint64_t pn, std::uint64_t shift_order);

} // namespace norm0
