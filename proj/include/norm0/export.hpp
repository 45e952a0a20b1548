#pragma once

#include <string>

#include "norm0/group_engine.hpp"

namespace norm0 {

inline constexpr std::size_t kDotNodeCap = 500;

/// Element quadruples plus the full multiplication table.
std::string export_json(const QuotientGroup& g);
/// GAP script defining the regular permutation representation.
std::string export_gap(const QuotientGroup& g);
/// Cayley graph, one edge colour per generator. Groups above kDotNodeCap are
/// truncated to the first kDotNodeCap elements and `warning` is set.
std::string export_dot(const QuotientGroup& g, std::string* warning = nullptr);

} // namespace norm0
