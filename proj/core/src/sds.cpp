#include "sdskit/sds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sdskit {

SymmetryType::SymmetryType(std::string letters) : letters_(std::move(letters)) {
  if (letters_.size() != 3 && letters_.size() != 4)
    throw std::invalid_argument("symmetry type must have 3 or 4 letters, got \"" +
                                letters_ + "\"");
  for (char c : letters_)
    if (c != 's' && c != 'k' && c != '*')
      throw std::invalid_argument("symmetry type letters must be s, k or *, got \"" +
                                  letters_ + "\"");
}

std::vector<int64_t> SdsParams::a() const {
  std::vector<int64_t> out;
  out.reserve(k.size());
  for (uint32_t ki : k) out.push_back(static_cast<int64_t>(n) - 2 * static_cast<int64_t>(ki));
  return out;
}

bool SdsParams::satisfies_eq1() const {
  int64_t sum = 0;
  for (uint32_t ki : k) sum += ki;
  return lambda == sum - static_cast<int64_t>(n);
}

bool SdsParams::satisfies_eq3() const {
  int64_t s = 0;
  for (int64_t ai : a()) s += ai * ai;
  return s == 4 * static_cast<int64_t>(n);
}

std::string SdsParams::to_string() const {
  std::ostringstream os;
  os << "(" << n << ";";
  for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ";" << lambda << ")";
  return os.str();
}

std::vector<uint32_t> difference_spectrum(const Group& g, std::span<const Block> blocks) {
  std::vector<uint32_t> counts(g.order(), 0);
  for (const Block& b : blocks) {
    if (b.universe() != g.order())
      throw std::invalid_argument("block universe does not match group order");
    std::vector<uint32_t> m = b.members();
    for (uint32_t x : m)
      for (uint32_t y : m)
        if (x != y) ++counts[g.sub(x, y)];
  }
  counts[0] = 0;
  return counts;
}

VerifyReport verify_sds(const Group& g, std::span<const Block> blocks) {
  VerifyReport r;
  if (blocks.size() != 3 && blocks.size() != 4) {
    r.error = "expected 3 or 4 blocks, got " + std::to_string(blocks.size());
    return r;
  }
  const bool family_mode = blocks.size() == 3;

  std::vector<uint32_t> counts = difference_spectrum(g, blocks);

  r.params.n = g.order();
  for (const Block& b : blocks) r.params.k.push_back(b.size());
  int64_t sum_k = 0;
  for (uint32_t ki : r.params.k) sum_k += ki;

  int64_t lambda;
  if (g.order() > 1) {
    lambda = counts[1];
    for (uint32_t d = 1; d < g.order(); ++d) {
      if (counts[d] != counts[1]) {
        r.error = "not an SDS at element " + std::to_string(d) + " (count " +
                  std::to_string(counts[d]) + " != " + std::to_string(counts[1]) + ")";
        r.offender = d;
        r.offender_count = counts[d];
        r.params.lambda = counts[1];
        return r;
      }
    }
  } else {
    lambda = sum_k - 1;  // vacuous spectrum; condition (1) decides below
  }
  r.params.lambda = lambda;

  if (!family_mode) {
    const int64_t eq1 = sum_k - static_cast<int64_t>(g.order());
    if (lambda != eq1) {
      r.params.lambda = eq1;
      r.error = "SDS but violates condition (1): lambda " + std::to_string(lambda) +
                " != sum(k)-n = " + std::to_string(eq1);
      return r;
    }
    if (lambda < 0) {
      r.error = "condition (1) gives negative lambda " + std::to_string(lambda);
      return r;
    }
  }
  r.ok = true;
  return r;
}

VerifyReport verify_sds(const SdsFamily& f) {
  return verify_sds(*f.group, f.blocks);
}

SymmetryType type_of(const Group& g, std::span<const Block> blocks) {
  std::string letters;
  for (const Block& b : blocks) {
    switch (symmetry_of(g, b)) {
      case BlockSymmetry::symmetric: letters += 's'; break;
      case BlockSymmetry::skew: letters += 'k'; break;
      case BlockSymmetry::neither: letters += '*'; break;
    }
  }
  return SymmetryType(letters);
}

SymmetryType type_of(const SdsFamily& f) { return type_of(*f.group, f.blocks); }

std::vector<SdsParams> feasible_params(uint32_t n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("feasible_params needs an odd n >= 3");

  // Enumerate odd 1 <= a1 <= a2 <= a3 <= a4 with sum of squares 4n, then
  // map to k_i = (n - a_i)/2. Rows ordered as in the parameter tables:
  // descending lexicographic on (a4,a3,a2,a1).
  struct Row {
    std::array<int64_t, 4> a;
  };
  std::vector<Row> rows;
  const int64_t target = 4 * static_cast<int64_t>(n);
  for (int64_t a1 = 1; a1 * a1 * 4 <= target; a1 += 2)
    for (int64_t a2 = a1; a1 * a1 + 3 * a2 * a2 <= target; a2 += 2)
      for (int64_t a3 = a2; a1 * a1 + a2 * a2 + 2 * a3 * a3 <= target; a3 += 2) {
        int64_t rest = target - a1 * a1 - a2 * a2 - a3 * a3;
        int64_t a4 = static_cast<int64_t>(std::lround(std::sqrt(static_cast<double>(rest))));
        while (a4 * a4 < rest) ++a4;
        while (a4 * a4 > rest) --a4;
        if (a4 >= a3 && a4 * a4 == rest && a4 % 2 == 1) rows.push_back({{a1, a2, a3, a4}});
      }

  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    for (int i = 3; i >= 0; --i)
      if (x.a[i] != y.a[i]) return x.a[i] > y.a[i];
    return false;
  });

  std::vector<SdsParams> out;
  for (const Row& row : rows) {
    SdsParams p;
    p.n = n;
    int64_t sum_k = 0;
    for (int64_t ai : row.a) {
      p.k.push_back(static_cast<uint32_t>((n - ai) / 2));
      sum_k += (n - ai) / 2;
    }
    p.lambda = sum_k - n;
    if (p.lambda < 0) continue;
    out.push_back(std::move(p));
  }
  return out;
}

bool type_compatible(const SdsParams& p, const SymmetryType& t) {
  if (t.size() != p.k.size()) return false;
  size_t skew_positions = 0;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] == 'k') ++skew_positions;
  if (skew_positions == 0) return true;
  if (p.n % 2 == 0) return false;  // skew blocks force odd order
  const uint32_t half = (p.n - 1) / 2;
  size_t have = 0;
  for (uint32_t ki : p.k)
    if (ki == half) ++have;
  return have >= skew_positions;
}

}  // namespace sdskit
