#pragma once

// Per-level report ("norm0-report/1") and its JSON form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "norm0/structure_report.hpp"

namespace norm0 {

inline constexpr const char* kReportSchema = "norm0-report/1";

struct RelationEntry {
    std::string word;
    bool expected;
    bool holds;
    friend bool operator==(const RelationEntry&, const RelationEntry&) = default;
};

struct FactorEntry {
    std::uint64_t prime;
    std::string case_label;
    std::vector<std::string> generators;
    std::optional<std::uint64_t> claimed_order;
    std::uint64_t subgroup_order;
    std::vector<RelationEntry> relations;
    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct ClaimEntry {
    bool holds;
    std::string stage;
    std::vector<std::string> witness;
    std::string message;
    friend bool operator==(const ClaimEntry&, const ClaimEntry&) = default;
};

struct BarsSample {
    std::uint64_t element;
    std::string word;
    std::uint64_t m;
    std::string omega;
    friend bool operator==(const BarsSample&, const BarsSample&) = default;
};

struct CommutationEntry {
    std::string a;
    std::string b;
    bool commute;
    friend bool operator==(const CommutationEntry&, const CommutationEntry&) = default;
};

struct Report {
    std::string schema = kReportSchema;
    std::uint64_t n = 1;
    std::uint64_t sigma = 1;
    std::uint64_t q = 1;
    std::uint64_t v = 1;
    std::uint64_t epsilon = 1;
    std::uint64_t order = 1;
    std::vector<std::string> generators;
    bool structure_ok = true;
    std::vector<FactorEntry> factors;
    ClaimEntry claim_al;
    std::vector<BarsSample> bars_samples;
    std::vector<CommutationEntry> commutation;
    std::optional<double> timing_ms;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Number of elements (in index order) given a sample decomposition.
inline constexpr std::size_t kBarsSamples = 8;

Report build_report(const QuotientGroup& g);

std::string report_to_json(const Report& r, int indent = 2);
/// Throws Error{ParseError} on malformed input or a schema mismatch.
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

} // namespace norm0
