#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdskit/block.hpp"
#include "sdskit/group.hpp"

namespace sdskit {

/// Per-block symmetry letters: 's' symmetric, 'k' skew, '*' unconstrained.
/// Three letters for difference families, four for SDSs.
class SymmetryType {
 public:
  SymmetryType() = default;
  explicit SymmetryType(std::string letters);

  size_t size() const { return letters_.size(); }
  char operator[](size_t i) const { return letters_[i]; }
  const std::string& str() const { return letters_; }

  bool operator==(const SymmetryType&) const = default;

 private:
  std::string letters_;
};

/// Parameter tuple (n; k_1..k_m; lambda) with the derived row-sums
/// a_i = n - 2 k_i.
struct SdsParams {
  uint32_t n = 0;
  std::vector<uint32_t> k;
  int64_t lambda = 0;

  std::vector<int64_t> a() const;
  bool satisfies_eq1() const;  // lambda == sum(k) - n (4-block condition)
  bool satisfies_eq3() const;  // sum(a^2) == 4n
  std::string to_string() const;

  bool operator==(const SdsParams&) const = default;
};

struct SdsFamily {
  GroupPtr group;
  std::vector<Block> blocks;
  SymmetryType declared_type;
};

/// Counts, for each nonzero d, the ordered pairs (x,y) with x,y in the
/// same block and x - y = d, summed over blocks. Index 0 of the result is
/// left at zero.
std::vector<uint32_t> difference_spectrum(const Group& g, std::span<const Block> blocks);

struct VerifyReport {
  bool ok = false;
  SdsParams params;
  std::string error;
  uint32_t offender = 0;        // element with the wrong count, when applicable
  uint32_t offender_count = 0;

  explicit operator bool() const { return ok; }
};

/// Succeeds iff the difference spectrum is constant on nonzero elements
/// and, for 4-block families, the constant equals sum(k_i) - n >= 0.
/// Three-block families are checked in difference-family mode: constant
/// spectrum only, lambda reported as observed.
VerifyReport verify_sds(const Group& g, std::span<const Block> blocks);
VerifyReport verify_sds(const SdsFamily& f);

/// Strongest per-block label: 's' / 'k' / '*'.
SymmetryType type_of(const Group& g, std::span<const Block> blocks);
SymmetryType type_of(const SdsFamily& f);

/// All (k_1 >= k_2 >= k_3 >= k_4, 2 k_1 < n) with sum (n-2k_i)^2 = 4n and
/// lambda = sum k_i - n >= 0, ordered as in the standard parameter tables
/// (ascending lexicographic on the reversed k-tuple).
std::vector<SdsParams> feasible_params(uint32_t n);

/// True iff the multiset {k_i} admits an assignment giving every position
/// typed 'k' the size (n-1)/2; 's' and '*' positions are unconstrained.
bool type_compatible(const SdsParams& p, const SymmetryType& t);

}  // namespace sdskit
