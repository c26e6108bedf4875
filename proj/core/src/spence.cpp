#include "sdskit/spence.hpp"

#include "sdskit/constructions.hpp"

#include <algorithm>

namespace sdskit {

namespace {

// The translated, multiplication-fixed index set over Z_504 (125 elements)
// and the block intersections with {0..31} that the construction must
// reproduce stage by stage.
constexpr uint32_t kExpectedY[] = {
    8,   9,   11,  12,  16,  17,  19,  21,  24,  26,  38,  39,  40,  41,  42,
    44,  45,  53,  54,  55,  59,  60,  62,  73,  80,  81,  83,  85,  91,  92,
    95,  96,  98,  103, 104, 105, 106, 109, 117, 119, 120, 122, 128, 130, 136,
    146, 154, 176, 177, 183, 190, 195, 198, 200, 204, 205, 210, 214, 220, 225,
    226, 237, 249, 252, 253, 257, 259, 265, 266, 270, 275, 277, 283, 284, 287,
    295, 300, 304, 310, 313, 317, 319, 322, 323, 328, 339, 342, 353, 359, 365,
    367, 368, 373, 376, 377, 381, 384, 393, 400, 405, 407, 408, 411, 412, 414,
    415, 424, 425, 427, 434, 444, 446, 453, 455, 460, 464, 467, 471, 475, 480,
    486, 488, 490, 492, 496};

const std::vector<uint32_t> kExpectedStar[4] = {
    {2, 4, 6, 7, 8, 10, 11, 13, 14, 16, 17, 20, 21, 22, 23, 24, 26, 28, 30},
    {5, 6, 7, 8, 9, 10, 11, 13, 15, 17, 18, 19, 20, 23, 24, 26, 28, 31},
    {0, 3, 4, 7, 12, 14, 15, 19, 20, 21, 26, 28, 29, 31},
    {1, 2, 3, 6, 7, 8, 11, 12, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31}};

[[noreturn]] void stage_fail(const std::string& stage, const std::string& detail) {
  throw PipelineError("spence63 stage \"" + stage + "\": " + detail);
}

}  // namespace

SpenceTrace spence63() {
  SpenceTrace trace;

  // GF(125) = Z_5[x]/(x^3 - 2x + 2); the image of x must generate the
  // multiplicative group.
  GroupPtr field = make_group(GroupSpec::elementary_abelian(5, 3, {2, 3, 0, 1}));
  const uint32_t q = field->order();
  const uint32_t a = 5;  // encoding of x
  if (field->field_element_order(a) != q - 1)
    stage_fail("primitivity", "x has multiplicative order " +
                                  std::to_string(field->field_element_order(a)) +
                                  ", expected " + std::to_string(q - 1));

  // Recurrence a*x_{i+1} + x_i + x_{i-1} = 0 from x_0 = x_1 = 1, i.e.
  // x_{i+1} = -a^{-1} (x_i + x_{i-1}). The state (x_i, x_{i+1}) determines
  // the sequence both ways, so the first return to (1,1) is the minimal
  // period.
  const uint32_t minus_inv_a = field->field_mul(field->field_pow(a, q - 2), 4);
  const uint32_t expected_period = q * q - 1;
  constexpr uint32_t kPrefixTerms = 64;
  std::vector<uint32_t> ones;
  {
    uint32_t prev = 1, cur = 1;
    uint32_t i = 0;
    do {
      if (i < kPrefixTerms) trace.seq_prefix.push_back(prev);
      if (prev == 1) ones.push_back(i);
      uint32_t next = field->field_mul(minus_inv_a, field->add(cur, prev));
      prev = cur;
      cur = next;
      ++i;
      if (i > expected_period)
        stage_fail("period", "no return to the initial state within " +
                                 std::to_string(expected_period) + " steps");
    } while (!(prev == 1 && cur == 1));
    trace.period = i;
  }
  if (trace.period != expected_period)
    stage_fail("period", "minimal period " + std::to_string(trace.period) +
                             ", expected " + std::to_string(expected_period));
  trace.x_indices = std::move(ones);

  trace.rds_large = rds_check(trace.x_indices, expected_period, q - 1);
  const RdsReport& big = trace.rds_large;
  if (!big || big.quotient != q + 1 || big.k != q || big.lambda != 1)
    stage_fail("rds(126,124,125,1)",
               big.ok ? "parameters (" + std::to_string(big.quotient) + "," +
                            std::to_string(big.subgroup) + "," + std::to_string(big.k) +
                            "," + std::to_string(big.lambda) + ")"
                      : big.error);

  // Reduce mod 4(q+1) = 504.
  const uint32_t m = 4 * (q + 1);
  {
    std::vector<char> present(m, 0);
    for (uint32_t x : trace.x_indices) present[x % m] = 1;
    for (uint32_t e = 0; e < m; ++e)
      if (present[e]) trace.y_reduced.push_back(e);
  }
  if (trace.y_reduced.size() != trace.x_indices.size())
    stage_fail("reduction", "index collisions while reducing mod " + std::to_string(m));

  // The forbidden subgroup <126> of the large stage maps onto <126> in
  // Z_504, which has order 4; that is the subgroup the reduced set avoids
  // (k(k-1) = lambda*(504-n) forces n = 4). The construction frame
  // Z_504 = Z_63 x Z_8 is reported alongside as (63, 8, k, lambda).
  trace.rds_reduced = rds_check(trace.y_reduced, m, 4);
  const RdsReport& small = trace.rds_reduced;
  if (!small || small.k != q || small.lambda != (q - 1) / 4)
    stage_fail("rds(63,8,125,31)",
               small.ok ? "parameters (" + std::to_string(small.quotient) + "," +
                              std::to_string(small.subgroup) + "," +
                              std::to_string(small.k) + "," + std::to_string(small.lambda) +
                              ")"
                        : small.error);
  trace.frame_tuple = {m / 8, 8, small.k, small.lambda};

  // Scan all translates for the first one fixed under multiplication by q.
  {
    std::vector<char> in_set(m, 0);
    bool found = false;
    for (uint32_t t = 0; t < m && !found; ++t) {
      std::fill(in_set.begin(), in_set.end(), 0);
      for (uint32_t e : trace.y_reduced) in_set[(e + t) % m] = 1;
      bool fixed = true;
      for (uint32_t e = 0; e < m && fixed; ++e)
        if (in_set[e] && !in_set[static_cast<uint64_t>(e) * q % m]) fixed = false;
      if (fixed) {
        trace.translate = t;
        for (uint32_t e = 0; e < m; ++e)
          if (in_set[e]) trace.y.push_back(e);
        found = true;
      }
    }
    if (!found) stage_fail("translate", "no translate is fixed under multiplication by q");
  }
  if (!std::equal(trace.y.begin(), trace.y.end(), std::begin(kExpectedY),
                  std::end(kExpectedY)))
    stage_fail("translate", "the multiplication-fixed translate (offset " +
                                std::to_string(trace.translate) +
                                ") does not match the expected index set");

  for (uint32_t e : trace.y) trace.classes[e % 8].push_back(e);

  // Block i collects the residue classes i-1 and i+1 (mod 8), reduced
  // mod 63. Classes 0,2,4,6 are fixed by multiplication by q (which acts
  // as -1 mod 63), so blocks 1 and 3 come out symmetric; classes pair
  // 1<->5 and 3<->7, so blocks 2 and 4 come out skew.
  GroupPtr z63 = make_group(GroupSpec::cyclic(63));
  const std::array<uint32_t, 4> expected_sizes = {38, 31, 27, 31};
  for (uint32_t i = 0; i < 4; ++i) {
    Block b(63);
    for (uint32_t e : trace.classes[i]) b.set(e % 63);
    for (uint32_t e : trace.classes[i + 2]) b.set(e % 63);
    if (b.size() != expected_sizes[i])
      stage_fail("split", "block " + std::to_string(i + 1) + " has " +
                              std::to_string(b.size()) + " elements, expected " +
                              std::to_string(expected_sizes[i]));
    std::vector<uint32_t> star;
    for (uint32_t e : b.members())
      if (e <= 31) star.push_back(e);
    if (star != kExpectedStar[i])
      stage_fail("split", "block " + std::to_string(i + 1) +
                              " does not match the expected intersection with {0..31}");
    BlockSymmetry sym = symmetry_of(*z63, b);
    const bool want_symmetric = i % 2 == 0;
    if (want_symmetric && sym != BlockSymmetry::symmetric)
      stage_fail("split", "block " + std::to_string(i + 1) + " is not symmetric");
    if (!want_symmetric && sym != BlockSymmetry::skew)
      stage_fail("split", "block " + std::to_string(i + 1) + " is not skew");
    trace.pre_blocks[i] = std::move(b);
  }

  // Complement the first block and order by descending size.
  std::vector<Block> blocks = {complement(*z63, trace.pre_blocks[0]), trace.pre_blocks[1],
                               trace.pre_blocks[2], trace.pre_blocks[3]};
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return a.size() > b.size(); });

  trace.family.group = z63;
  trace.family.blocks = std::move(blocks);
  VerifyReport report = verify_sds(*z63, trace.family.blocks);
  if (!report) stage_fail("final", report.error);
  const SdsParams expected{63, {31, 31, 27, 25}, 51};
  if (!(report.params == expected))
    stage_fail("final", "parameters " + report.params.to_string() + ", expected " +
                            expected.to_string());
  trace.family.declared_type = type_of(trace.family);
  if (trace.family.declared_type.str() != "kkss")
    stage_fail("final", "type " + trace.family.declared_type.str() + ", expected kkss");
  return trace;
}

}  // namespace sdskit
