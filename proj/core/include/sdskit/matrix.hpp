#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdskit/block.hpp"
#include "sdskit/group.hpp"

namespace sdskit {

/// Dense square integer matrix. Sign matrices hold only +1/-1 entries; the
/// permutation matrix R holds 0/1. All arithmetic is exact: orders stay
/// below 512 and entries are unit, so int32 accumulators never overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(uint32_t order, int32_t fill = 0)
      : n_(order), a_(static_cast<size_t>(order) * order, fill) {}

  uint32_t order() const { return n_; }
  int32_t& at(uint32_t r, uint32_t c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  int32_t at(uint32_t r, uint32_t c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  bool is_sign_matrix() const;
  IntMatrix transposed() const;

  /// Entrywise comparison; the group tag is metadata and not compared.
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  /// Group the rows/columns are indexed by, when group-indexed.
  std::optional<GroupSpec> group;

 private:
  uint32_t n_ = 0;
  std::vector<int32_t> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// The type I sign matrix of a block: entry(x,y) = 1 - 2*chi(y-x).
IntMatrix char_matrix(const Group& g, const Block& b);

/// The type II 0/1 permutation matrix R with R(x,y) = 1 iff x + y = 0.
IntMatrix r_matrix(const Group& g);

struct TypeCheckOptions {
  uint32_t exhaustive_bound = 64;  // full x,y,z sweep up to this order
  uint32_t samples = 24;           // sampled z values above the bound
  uint64_t seed = 0x5d5ea1u;
};

/// Shift-invariance predicates: type I means M(x+z,y+z) == M(x,y), type II
/// means M(x+z,y-z) == M(x,y). Exhaustive in z up to the configured bound,
/// seeded z-sampling above it (all x,y are always checked).
bool is_type1(const Group& g, const IntMatrix& m, TypeCheckOptions opts = {});
bool is_type2(const Group& g, const IntMatrix& m, TypeCheckOptions opts = {});

/// The 4n x 4n Goethals-Seidel assembly of four order-n type I sign
/// matrices and the permutation matrix R.
IntMatrix goethals_seidel(const IntMatrix& a1, const IntMatrix& a2,
                          const IntMatrix& a3, const IntMatrix& a4,
                          const IntMatrix& r);

/// Exact test H * H^T == order * I (entries must be +-1).
bool is_hadamard(const IntMatrix& h);

/// Exact test H + H^T == 2I.
bool is_skew_type(const IntMatrix& h);

/// Exact test X * Y^T == Y * X^T.
bool amicable(const IntMatrix& x, const IntMatrix& y);

}  // namespace sdskit
