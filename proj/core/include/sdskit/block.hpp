#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "sdskit/group.hpp"

namespace sdskit {

/// A subset of group elements, stored as a bitset over the element
/// encodings [0, n). Blocks are plain data; the semantic operations that
/// need group arithmetic take the Group alongside.
class Block {
 public:
  Block() = default;
  explicit Block(uint32_t universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  static Block from_members(uint32_t universe, std::span<const uint32_t> members);

  uint32_t universe() const { return n_; }
  bool test(uint32_t e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
  void set(uint32_t e) { bits_[e >> 6] |= uint64_t{1} << (e & 63); }
  void reset(uint32_t e) { bits_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }
  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

  uint32_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<uint32_t> members() const;

  Block operator&(const Block& o) const;

  bool operator==(const Block&) const = default;

  /// Total order used for canonical forms and search symmetry breaking:
  /// by cardinality first, then by smallest differing element (the block
  /// containing it sorts first).
  static bool lex_less(const Block& a, const Block& b);

  std::span<const uint64_t> words() const { return bits_; }

 private:
  uint32_t n_ = 0;
  std::vector<uint64_t> bits_;
};

Block negate(const Group& g, const Block& b);
Block complement(const Group& g, const Block& b);
Block translate(const Group& g, const Block& b, uint32_t t);
Block apply(const Automorphism& phi, const Block& b);

enum class BlockSymmetry { symmetric, skew, neither };

/// symmetric iff -B == B; skew iff B, -B, {0} partition the group.
BlockSymmetry symmetry_of(const Group& g, const Block& b);

bool is_symmetric(const Group& g, const Block& b);
bool is_skew(const Group& g, const Block& b);

}  // namespace sdskit
