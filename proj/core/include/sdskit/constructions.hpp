#pragma once

#include <array>
#include <string>
#include <vector>

#include "sdskit/sds.hpp"

namespace sdskit {

/// A named construction with its expected parameters and type.
struct CatalogEntry {
  std::string id;
  SdsFamily family;
  SdsParams expected_params;
  SymmetryType expected_type;
  std::string origin;
};

/// The embedded catalog: two Williamson SDSs over GF(25), two over GF(27),
/// one over GF(49), the order-37 G-matrix SDS, the (ks**) SDS at n=47, the
/// (k**s) SDS at n=61, the n=127 difference family (3 blocks) and its
/// 4-block extension by the Paley set, and the m-sequence construction at
/// n=63. Built once, then shared.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& id);

/// The set of nonzero quadratic residues mod p, for a prime p = 3 (mod 4):
/// a skew (p, (p-1)/2, (p-3)/4) difference set.
Block paley_skew_ds(uint32_t p);

/// The three 57-element blocks over Z_127 assembled from cosets of the
/// multiplicative subgroup {1,2,4,8,16,32,64}.
SdsFamily z127_family();

struct RdsReport {
  bool ok = false;
  // (quotient order, forbidden subgroup order, |X|, lambda)
  uint32_t quotient = 0, subgroup = 0, k = 0, lambda = 0;
  std::string error;
  uint32_t offender = 0;

  explicit operator bool() const { return ok; }
};

/// Checks that X is a relative difference set in Z_m with respect to the
/// subgroup of the given order: differences avoid the subgroup entirely
/// and cover every other element exactly lambda times.
RdsReport rds_check(const std::vector<uint32_t>& xs, uint32_t modulus,
                    uint32_t forbidden_subgroup_order);

struct BibdReport {
  bool ok = false;
  uint32_t v = 0, b = 0, r = 0, k = 0, lambda = 0;
  std::string error;
  uint32_t pair_x = 0, pair_y = 0;

  explicit operator bool() const { return ok; }
};

/// Develops every block by all group translates and verifies each
/// unordered point pair is covered the same number of times.
BibdReport develop_bibd(const Group& g, std::span<const Block> blocks);
BibdReport develop_bibd(const SdsFamily& f);

}  // namespace sdskit
