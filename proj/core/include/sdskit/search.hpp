#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdskit/sds.hpp"

namespace sdskit {

enum class BlockConstraint { free, symmetric, skew };

/// All blocks of the given size under the constraint, each exactly once,
/// in a fixed deterministic order. Skew blocks exist only for odd group
/// order and size (n-1)/2; an infeasible combination yields an empty list.
std::vector<Block> enumerate_blocks(const Group& g, uint32_t size,
                                    BlockConstraint constraint);

enum class DedupMode { none, canonical };

struct SearchSpec {
  GroupSpec group;
  std::vector<uint32_t> k;        // block sizes, descending
  SymmetryType type;              // per-position constraint letters
  DedupMode dedup = DedupMode::canonical;
  bool allow_translation = true;  // canonical-form convention
  uint64_t budget = 50'000'000;   // partial nodes expanded before giving up
  std::optional<uint64_t> limit;  // stop after this many raw families
  uint32_t workers = 1;
};

struct SearchResult {
  bool complete = true;           // false when the node budget ran out
  uint64_t nodes = 0;             // partial assignments expanded
  std::vector<SdsFamily> families;  // deterministic order
};

/// Exhaustive depth-first search for SDS families with the prescribed
/// sizes and symmetry type. A partial assignment is abandoned as soon as
/// any element's accumulated difference count exceeds lambda. Workers
/// partition the first block's candidates; the merged result is sorted, so
/// the family set does not depend on the worker count.
SearchResult search(const SearchSpec& spec);

}  // namespace sdskit
