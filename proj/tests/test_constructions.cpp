#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdskit/constructions.hpp"
#include "sdskit/equivalence.hpp"
#include "sdskit/io.hpp"
#include "sdskit/sds.hpp"

using namespace sdskit;

TEST_CASE("catalog entries verify with their printed parameters and types") {
  const std::vector<CatalogEntry>& all = catalog();
  CHECK(all.size() >= 10);
  for (const CatalogEntry& e : all) {
    CAPTURE(e.id);
    VerifyReport r = verify_sds(e.family);
    CHECK(r.ok);
    CHECK(r.params == e.expected_params);
    CHECK(type_of(e.family) == e.expected_type);
    if (e.family.blocks.size() == 4) {
      CHECK(r.params.satisfies_eq1());
      CHECK(r.params.satisfies_eq3());
    }
  }
  CHECK(catalog_find("gf25-a") != nullptr);
  CHECK(catalog_find("missing") == nullptr);
}

TEST_CASE("paley_skew_ds") {
  Block p7 = paley_skew_ds(7);
  CHECK(p7.members() == std::vector<uint32_t>{1, 2, 4});

  GroupPtr z47 = make_group(GroupSpec::cyclic(47));
  Block p47 = paley_skew_ds(47);
  CHECK(p47.size() == 23);
  CHECK(symmetry_of(*z47, p47) == BlockSymmetry::skew);
  // constant spectrum (p-3)/4 on nonzero elements
  std::vector<Block> one = {p47};
  auto spec47 = difference_spectrum(*z47, one);
  for (uint32_t d = 1; d < 47; ++d) CHECK(spec47[d] == 11);

  Block p127 = paley_skew_ds(127);
  CHECK(p127.size() == 63);
  GroupPtr z127 = make_group(GroupSpec::cyclic(127));
  std::vector<Block> one127 = {p127};
  auto spec127 = difference_spectrum(*z127, one127);
  for (uint32_t d = 1; d < 127; ++d) CHECK(spec127[d] == 31);

  // the first z47 catalog block is exactly the residue set
  CHECK(catalog_find("z47")->family.blocks[0] == p47);
  CHECK(catalog_find("z127-4block")->family.blocks[0] == p127);

  CHECK_THROWS_AS(paley_skew_ds(13), std::invalid_argument);  // 13 = 1 mod 4
  CHECK_THROWS_AS(paley_skew_ds(15), std::invalid_argument);  // not prime
}

TEST_CASE("z127_family coset structure") {
  SdsFamily f = z127_family();
  REQUIRE(f.blocks.size() == 3);
  for (const Block& b : f.blocks) {
    CHECK(b.size() == 57);
    CHECK(b.test(0));
  }
  // first block symmetric (its coset index set is closed under the
  // negation pairing), others neither
  CHECK(type_of(f).str() == "s**");
  VerifyReport r = verify_sds(f);
  CHECK(r.ok);
  CHECK(r.params == SdsParams{127, {57, 57, 57}, 76});
}

TEST_CASE("rds_check") {
  // {1,2,4} covers Z_7 \ {0} once; trivial subgroup of order 1
  CHECK(rds_check({1, 2, 4}, 7, 1).ok);
  RdsReport r = rds_check({1, 2, 4}, 7, 1);
  CHECK(r.quotient == 7);
  CHECK(r.k == 3);
  CHECK(r.lambda == 1);

  // singleton: all counts zero, trivially uniform
  RdsReport r0 = rds_check({0}, 12, 3);
  CHECK(r0.ok);
  CHECK(r0.lambda == 0);

  // {0,1} in Z_4 relative to {0,2}: difference 1 occurs once, 3 once, 2 never
  RdsReport r2 = rds_check({0, 1}, 4, 2);
  CHECK(r2.ok);
  CHECK(r2.quotient == 2);
  CHECK(r2.lambda == 1);

  // failure names the offending residue
  RdsReport bad = rds_check({0, 1, 2}, 6, 3);
  CHECK_FALSE(bad.ok);
  CHECK(!bad.error.empty());

  CHECK_FALSE(rds_check({0}, 10, 3).ok);  // 3 does not divide 10
}

TEST_CASE("develop_bibd") {
  // Paley block at p=7 develops into the (7,7,3,3,1) point-pair design
  GroupPtr z7 = make_group(GroupSpec::cyclic(7));
  std::vector<Block> fano = {paley_skew_ds(7)};
  BibdReport r = develop_bibd(*z7, fano);
  REQUIRE(r.ok);
  CHECK(r.v == 7);
  CHECK(r.b == 7);
  CHECK(r.r == 3);
  CHECK(r.k == 3);
  CHECK(r.lambda == 1);

  // single block {0} in Z_3: no pair is covered - failure path
  GroupPtr z3 = make_group(GroupSpec::cyclic(3));
  Block zero(3);
  zero.set(0);
  std::vector<Block> solo = {zero};
  CHECK_FALSE(develop_bibd(*z3, solo).ok);

  // unequal sizes rejected
  std::vector<Block> uneven = {paley_skew_ds(7), Block(7)};
  CHECK_FALSE(develop_bibd(*z7, uneven).ok);
}

TEST_CASE("gf27 families: intersection invariants and non-equivalence") {
  const SdsFamily& a = catalog_find("gf27-a")->family;
  const SdsFamily& b = catalog_find("gf27-b")->family;
  CHECK((a.blocks[0] & a.blocks[1] & a.blocks[2]).size() == 4);
  CHECK((b.blocks[0] & b.blocks[1] & b.blocks[2]).size() == 2);
  CHECK_FALSE(equivalent(a, b, true));
}

TEST_CASE("gf49: the order-4 subgroup of the multiplicative group misses every block") {
  const SdsFamily& f = catalog_find("gf49")->family;
  const Group& g = *f.group;
  // {1, -1, 3x, -3x}: 3x squares to 9*3 = -1 under x^2 = 3
  uint32_t e1 = 1, e3x = parse_field_element(g.spec(), "3x");
  CHECK(g.field_mul(e3x, e3x) == g.neg(1));
  std::vector<uint32_t> subgroup = {e1, g.neg(e1), e3x, g.neg(e3x)};
  for (const Block& b : f.blocks) {
    bool contains_all = true;
    for (uint32_t e : subgroup) contains_all = contains_all && b.test(e);
    CHECK_FALSE(contains_all);
  }
}

TEST_CASE("pair-walk spectrum equals the spectrum read off the sign matrices") {
  // (C^T C)_{y,y'} = n - 4k + 4 c(y - y'), so the off-diagonal entries of
  // the summed products recover the difference spectrum
  for (const CatalogEntry& e : catalog()) {
    const Group& g = *e.family.group;
    const uint32_t n = g.order();
    std::vector<int64_t> from_matrix(n, 0);
    int64_t base = 0;
    for (const Block& b : e.family.blocks) {
      IntMatrix cm = char_matrix(g, b);
      IntMatrix prod = multiply(cm.transposed(), cm);
      base += static_cast<int64_t>(n) - 4 * static_cast<int64_t>(b.size());
      for (uint32_t y = 0; y < n; ++y) from_matrix[g.sub(y, 0)] += prod.at(0, y);
    }
    auto direct = difference_spectrum(g, e.family.blocks);
    for (uint32_t d = 1; d < n; ++d)
      CHECK(4 * static_cast<int64_t>(direct[d]) == from_matrix[d] - base);
  }
}

TEST_CASE("catalog blocks share the declared group and stay in range") {
  for (const CatalogEntry& e : catalog()) {
    for (const Block& b : e.family.blocks) {
      CHECK(b.universe() == e.family.group->order());
      for (uint32_t m : b.members()) CHECK(m < e.family.group->order());
    }
  }
}
