#pragma once

// On-disk cache of enumerated groups, one "norm0-cache/1" JSON file per level.
// The cache is advisory: anything unreadable or inconsistent is a miss.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "norm0/group_engine.hpp"

namespace norm0 {

inline constexpr const char* kCacheSchema = "norm0-cache/1";
inline constexpr const char* kDefaultCacheDir = ".norm0-cache";

std::string group_to_cache_json(const QuotientGroup& g);

/// Parses and fully re-validates a cache document: generators must equal
/// canonical_generators(N), every right multiplication is rechecked exactly,
/// and the stored Cayley table must match. Throws Error on any mismatch.
QuotientGroup group_from_cache_json(const std::string& text, Level expected_level,
                                    std::uint64_t factor_cap = kDefaultFactorCap);

class GroupCache {
public:
    explicit GroupCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(Level n) const;

    std::optional<QuotientGroup> load(Level n, std::uint64_t factor_cap = kDefaultFactorCap) const;
    /// Write-temp-then-rename; creates the directory on demand. Throws Error{IoError}.
    void store(const QuotientGroup& g) const;

private:
    std::filesystem::path dir_;
};

/// Cache lookup, falling back to closure (and storing the result). A cached
/// group larger than `budget` raises BudgetExceeded just like a fresh closure.
QuotientGroup obtain_group(Level n, std::size_t budget, std::uint64_t factor_cap, const GroupCache* cache);

} // namespace norm0
