#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sdskit/sds.hpp"
#include "sdskit/spence.hpp"

using namespace sdskit;

TEST_CASE("pipeline stages") {
  SpenceTrace t = spence63();

  CHECK(t.period == 15624);
  CHECK(t.x_indices.size() == 125);

  // x_0 = x_1 = 1 and the recurrence a*x_{i+1} + x_i + x_{i-1} = 0 holds
  // on the recorded prefix
  GroupPtr f125 = make_group(GroupSpec::elementary_abelian(5, 3, {2, 3, 0, 1}));
  REQUIRE(t.seq_prefix.size() == 64);
  CHECK(t.seq_prefix[0] == 1);
  CHECK(t.seq_prefix[1] == 1);
  for (size_t i = 1; i + 1 < t.seq_prefix.size(); ++i) {
    uint32_t lhs = f125->add(f125->field_mul(5, t.seq_prefix[i + 1]),
                             f125->add(t.seq_prefix[i], t.seq_prefix[i - 1]));
    CHECK(lhs == 0);
  }

  CHECK(t.rds_large.ok);
  CHECK(t.rds_large.quotient == 126);
  CHECK(t.rds_large.subgroup == 124);
  CHECK(t.rds_large.k == 125);
  CHECK(t.rds_large.lambda == 1);

  CHECK(t.y_reduced.size() == 125);
  CHECK(t.rds_reduced.ok);
  // the reduced set avoids the image of the large forbidden subgroup,
  // which has order 4 in Z_504
  CHECK(t.rds_reduced.quotient == 126);
  CHECK(t.rds_reduced.subgroup == 4);
  CHECK(t.rds_reduced.k == 125);
  CHECK(t.rds_reduced.lambda == 31);
  CHECK(t.frame_tuple == std::array<uint32_t, 4>{63, 8, 125, 31});

  CHECK(t.translate == 11);
  CHECK(t.y.size() == 125);
  // fixed under multiplication by 125
  std::set<uint32_t> y_set(t.y.begin(), t.y.end());
  for (uint32_t e : t.y) CHECK(y_set.count(e * 125 % 504) == 1);
  // and it is the advertised translate of the reduced set
  std::set<uint32_t> shifted;
  for (uint32_t e : t.y_reduced) shifted.insert((e + t.translate) % 504);
  CHECK(shifted == y_set);

  size_t class_total = 0;
  for (const auto& cls : t.classes) class_total += cls.size();
  CHECK(class_total == 125);

  CHECK(t.pre_blocks[0].size() == 38);
  CHECK(t.pre_blocks[1].size() == 31);
  CHECK(t.pre_blocks[2].size() == 27);
  CHECK(t.pre_blocks[3].size() == 31);

  GroupPtr z63 = t.family.group;
  CHECK(symmetry_of(*z63, t.pre_blocks[0]) == BlockSymmetry::symmetric);
  CHECK(symmetry_of(*z63, t.pre_blocks[1]) == BlockSymmetry::skew);
  CHECK(symmetry_of(*z63, t.pre_blocks[2]) == BlockSymmetry::symmetric);
  CHECK(symmetry_of(*z63, t.pre_blocks[3]) == BlockSymmetry::skew);

  // the family before complementing already has a constant spectrum
  std::vector<Block> pre(t.pre_blocks.begin(), t.pre_blocks.end());
  auto spec = difference_spectrum(*z63, pre);
  for (uint32_t d = 1; d < 63; ++d) CHECK(spec[d] == 64);

  VerifyReport r = verify_sds(t.family);
  CHECK(r.ok);
  CHECK(r.params == SdsParams{63, {31, 31, 27, 25}, 51});
  CHECK(type_of(t.family).str() == "kkss");
}
