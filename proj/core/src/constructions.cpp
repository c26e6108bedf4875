#include "sdskit/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdskit {

Block paley_skew_ds(uint32_t p) {
  if (p < 3) throw std::invalid_argument("need a prime p >= 3");
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p % 4 != 3)
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " is 1 (mod 4): the residue set is symmetric, not skew");
  Block b(p);
  for (uint64_t x = 1; x < p; ++x) b.set(static_cast<uint32_t>(x * x % p));
  return b;
}

SdsFamily z127_family() {
  const uint32_t n = 127;
  GroupPtr g = make_group(GroupSpec::cyclic(n));

  // Cosets of H = <2> in Z_127^*, numbered so that coset 2i+1 = -1 * coset 2i.
  const std::array<uint32_t, 9> even_reps = {1, 3, 5, 7, 9, 11, 13, 19, 21};
  std::array<std::vector<uint32_t>, 18> cosets;
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (size_t i = 0; i < 9; ++i) {
    uint64_t h = even_reps[i];
    for (int bit = 0; bit < 7; ++bit) {
      cosets[2 * i].push_back(static_cast<uint32_t>(h));
      cosets[2 * i + 1].push_back(static_cast<uint32_t>(n - h));
      h = h * 2 % n;
    }
    for (int parity = 0; parity < 2; ++parity)
      for (uint32_t e : cosets[2 * i + parity]) {
        if (seen[e])
          throw std::runtime_error("coset enumeration inconsistency at element " +
                                   std::to_string(e));
        seen[e] = 1;
      }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n))
    throw std::runtime_error("cosets do not partition the nonzero elements");

  const std::array<std::vector<uint32_t>, 3> index_sets = {{
      {0, 1, 2, 3, 6, 7, 16, 17},
      {4, 6, 7, 11, 13, 14, 15, 16},
      {0, 4, 5, 7, 11, 12, 15, 16},
  }};

  SdsFamily f;
  f.group = g;
  for (const auto& idx : index_sets) {
    Block b(n);
    b.set(0);
    for (uint32_t ci : idx)
      for (uint32_t e : cosets[ci]) b.set(e);
    if (b.size() != 57)
      throw std::runtime_error("coset union has size " + std::to_string(b.size()) +
                               ", expected 57");
    f.blocks.push_back(std::move(b));
  }
  f.declared_type = type_of(f);
  return f;
}

RdsReport rds_check(const std::vector<uint32_t>& xs, uint32_t modulus,
                    uint32_t forbidden_subgroup_order) {
  RdsReport r;
  if (modulus == 0 || forbidden_subgroup_order == 0 ||
      modulus % forbidden_subgroup_order != 0) {
    r.error = "forbidden subgroup order must divide the modulus";
    return r;
  }
  const uint32_t step = modulus / forbidden_subgroup_order;  // generator of the subgroup

  std::vector<uint32_t> counts(modulus, 0);
  for (uint32_t x : xs)
    for (uint32_t y : xs) {
      if (x == y) continue;
      ++counts[(x + modulus - y) % modulus];
    }

  uint32_t lambda = 0;
  bool lambda_set = false;
  for (uint32_t d = 1; d < modulus; ++d) {
    const bool in_subgroup = d % step == 0;
    if (in_subgroup) {
      if (counts[d] != 0) {
        r.error = "difference " + std::to_string(d) +
                  " lies in the forbidden subgroup but occurs " +
                  std::to_string(counts[d]) + " times";
        r.offender = d;
        return r;
      }
    } else {
      if (!lambda_set) {
        lambda = counts[d];
        lambda_set = true;
      } else if (counts[d] != lambda) {
        r.error = "difference " + std::to_string(d) + " occurs " +
                  std::to_string(counts[d]) + " times, expected " + std::to_string(lambda);
        r.offender = d;
        return r;
      }
    }
  }
  r.ok = true;
  r.quotient = modulus / forbidden_subgroup_order;
  r.subgroup = forbidden_subgroup_order;
  r.k = static_cast<uint32_t>(xs.size());
  r.lambda = lambda;
  return r;
}

BibdReport develop_bibd(const Group& g, std::span<const Block> blocks) {
  BibdReport r;
  if (blocks.empty()) {
    r.error = "no blocks";
    return r;
  }
  const uint32_t v = g.order();
  const uint32_t k = blocks.front().size();
  for (const Block& b : blocks)
    if (b.size() != k) {
      r.error = "blocks must share one size";
      return r;
    }

  // coverage[x][y] for unordered pairs x < y
  std::vector<uint32_t> coverage(static_cast<size_t>(v) * v, 0);
  for (const Block& base : blocks) {
    const std::vector<uint32_t> members = base.members();
    for (uint32_t t = 0; t < v; ++t) {
      for (size_t i = 0; i < members.size(); ++i) {
        uint32_t xi = g.add(members[i], t);
        for (size_t j = i + 1; j < members.size(); ++j) {
          uint32_t yj = g.add(members[j], t);
          uint32_t lo = std::min(xi, yj), hi = std::max(xi, yj);
          ++coverage[static_cast<size_t>(lo) * v + hi];
        }
      }
    }
  }

  uint32_t lambda = 0;
  bool lambda_set = false;
  for (uint32_t x = 0; x < v; ++x)
    for (uint32_t y = x + 1; y < v; ++y) {
      uint32_t c = coverage[static_cast<size_t>(x) * v + y];
      if (!lambda_set) {
        lambda = c;
        lambda_set = true;
      } else if (c != lambda) {
        r.error = "pair {" + std::to_string(x) + "," + std::to_string(y) + "} covered " +
                  std::to_string(c) + " times, expected " + std::to_string(lambda);
        r.pair_x = x;
        r.pair_y = y;
        return r;
      }
    }
  if (lambda == 0 && v > 1) {
    r.error = "no pair coverage: not a BIBD";
    return r;
  }

  r.ok = true;
  r.v = v;
  r.b = static_cast<uint32_t>(blocks.size()) * v;
  r.r = static_cast<uint32_t>(blocks.size()) * k;
  r.k = k;
  r.lambda = lambda;
  return r;
}

BibdReport develop_bibd(const SdsFamily& f) { return develop_bibd(*f.group, f.blocks); }

}  // namespace sdskit
