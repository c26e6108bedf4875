#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdskit {

enum class GroupKind { cyclic, elementary_abelian };

/// Ambient finite abelian group: Z_n, or the additive group of a finite
/// field F_{p^k} presented as Z_p[x]/(modulus).
struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  uint32_t n = 0;                 // cyclic order (kind == cyclic)
  uint32_t p = 0;                 // field characteristic
  uint32_t k = 0;                 // field extension degree
  std::vector<uint32_t> modulus;  // c0..ck, constant term first, ck == 1

  static GroupSpec cyclic(uint32_t n);
  static GroupSpec elementary_abelian(uint32_t p, uint32_t k,
                                      std::vector<uint32_t> modulus);

  uint32_t order() const;
  bool operator==(const GroupSpec&) const = default;
};

/// Automorphism of the group, materialized as a permutation of element
/// encodings. perm[x] is the image of x; perm[0] == 0 always.
struct Automorphism {
  std::vector<uint32_t> perm;
  uint32_t apply(uint32_t x) const { return perm[x]; }
};

/// Thrown when an exhaustive enumeration is requested above its configured
/// size bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Immutable group handle. Elements are encoded as integers in [0, order):
/// the residue itself for cyclic groups, the radix-p encoding of the
/// coefficient vector (constant term least significant) for field-backed
/// groups. All operations are pure; handles are safe to share across
/// threads.
class Group {
 public:
  static constexpr uint32_t kAutomorphismOrderBound = 128;

  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  uint32_t order() const { return order_; }
  bool is_field() const { return spec_.kind == GroupKind::elementary_abelian; }

  uint32_t zero() const { return 0; }
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const { return neg_table_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_table_[b]); }

  /// Field multiplication modulo the spec's modulus polynomial.
  /// Throws std::domain_error on cyclic groups.
  uint32_t field_mul(uint32_t a, uint32_t b) const;
  uint32_t field_pow(uint32_t a, uint64_t e) const;
  /// Multiplicative order of a nonzero field element.
  uint32_t field_element_order(uint32_t a) const;

  /// Number of automorphisms: Euler phi(n) for Z_n, the order of GL(k,p)
  /// for elementary abelian groups of rank k.
  uint64_t automorphism_count() const;

  /// Enumerates every automorphism exactly once, in a fixed deterministic
  /// order. The callback returns false to stop early. Throws CapacityError
  /// when order() exceeds `order_bound`.
  void for_each_automorphism(const std::function<bool(const Automorphism&)>& fn,
                             uint32_t order_bound = kAutomorphismOrderBound) const;

  std::vector<Automorphism> automorphisms(
      uint32_t order_bound = kAutomorphismOrderBound) const;

 private:
  GroupSpec spec_;
  uint32_t order_ = 0;
  std::vector<uint32_t> neg_table_;
  std::vector<uint16_t> add_table_;  // order <= kAddTableBound only
  std::vector<uint32_t> pow_p_;      // p^0..p^k for digit codecs

  static constexpr uint32_t kAddTableBound = 256;

  uint32_t add_slow(uint32_t a, uint32_t b) const;
  void decode(uint32_t e, uint32_t* digits) const;
  uint32_t encode(const uint32_t* digits) const;
};

GroupPtr make_group(GroupSpec spec);

/// Renders a modulus polynomial as e.g. "x^3+3x+2" (coefficients mod p).
std::string poly_to_string(const std::vector<uint32_t>& coeffs);

}  // namespace sdskit
