#include "sdskit/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "sdskit/equivalence.hpp"

namespace sdskit {

namespace {

uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

constexpr uint64_t kEnumerationCap = 20'000'000;

void combinations(uint32_t n, uint32_t k, const std::function<void(const std::vector<uint32_t>&)>& emit) {
  std::vector<uint32_t> idx(k);
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t level, uint32_t from) {
    if (level == k) {
      emit(idx);
      return;
    }
    for (uint32_t i = from; i + (k - level - 1) < n; ++i) {
      idx[level] = i;
      rec(level + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::string family_key(std::span<const Block> blocks) {
  std::string key;
  for (const Block& b : blocks) {
    const uint32_t n = b.universe();
    for (uint32_t base = 0; base < n; base += 8) {
      unsigned char byte = 0;
      for (uint32_t bit = 0; bit < 8 && base + bit < n; ++bit)
        if (b.test(base + bit)) byte |= static_cast<unsigned char>(1u << bit);
      key.push_back(static_cast<char>(byte));
    }
  }
  return key;
}

}  // namespace

std::vector<Block> enumerate_blocks(const Group& g, uint32_t size,
                                    BlockConstraint constraint) {
  const uint32_t n = g.order();
  std::vector<Block> out;
  if (size > n) return out;

  if (constraint == BlockConstraint::free) {
    if (binomial_capped(n, size, kEnumerationCap) > kEnumerationCap)
      throw CapacityError("free block enumeration too large");
    combinations(n, size, [&](const std::vector<uint32_t>& idx) {
      Block b(n);
      for (uint32_t e : idx) b.set(e);
      out.push_back(std::move(b));
    });
    return out;
  }

  // negation pairs {x, -x} and self-negating elements
  std::vector<uint32_t> fixed, pair_rep;
  for (uint32_t e = 0; e < n; ++e) {
    uint32_t ne = g.neg(e);
    if (ne == e) fixed.push_back(e);
    else if (e < ne) pair_rep.push_back(e);
  }

  if (constraint == BlockConstraint::symmetric) {
    // choose a subset of self-negating elements, then whole pairs
    for (uint32_t f = 0; f <= std::min<uint32_t>(size, fixed.size()); ++f) {
      if ((size - f) % 2 != 0) continue;
      uint32_t m = (size - f) / 2;
      uint64_t total = binomial_capped(fixed.size(), f, kEnumerationCap);
      total *= binomial_capped(pair_rep.size(), m, kEnumerationCap);
      if (total > kEnumerationCap) throw CapacityError("symmetric block enumeration too large");
      combinations(static_cast<uint32_t>(fixed.size()), f, [&](const std::vector<uint32_t>& fi) {
        combinations(static_cast<uint32_t>(pair_rep.size()), m,
                     [&](const std::vector<uint32_t>& pi) {
                       Block b(n);
                       for (uint32_t i : fi) b.set(fixed[i]);
                       for (uint32_t i : pi) {
                         b.set(pair_rep[i]);
                         b.set(g.neg(pair_rep[i]));
                       }
                       out.push_back(std::move(b));
                     });
      });
    }
    return out;
  }

  // skew: one element from every pair, no self-negating element
  if (n % 2 == 0 || size != (n - 1) / 2) return out;
  const uint32_t pairs = static_cast<uint32_t>(pair_rep.size());
  if (pairs != size) return out;
  if (pairs > 24) throw CapacityError("skew block enumeration too large");
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
    Block b(n);
    for (uint32_t i = 0; i < pairs; ++i)
      b.set((mask >> i) & 1 ? g.neg(pair_rep[i]) : pair_rep[i]);
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

struct Candidate {
  Block block;
  std::vector<uint32_t> members;
};

class Dfs {
 public:
  Dfs(const Group& g, const std::vector<std::vector<Candidate>>& cands,
      const std::vector<bool>& tied, int64_t lambda, std::atomic<uint64_t>& nodes,
      uint64_t budget)
      : g_(g), cands_(cands), tied_(tied), lambda_(lambda), nodes_(nodes),
        budget_(budget), counts_(g.order(), 0), chosen_(cands.size(), 0) {}

  bool exhausted = false;
  std::vector<std::vector<size_t>> found;  // index tuples

  void run_first(size_t first_index) {
    chosen_[0] = first_index;
    if (add_diffs(cands_[0][first_index].members)) {
      descend(1);
      remove_diffs(cands_[0][first_index].members);
    }
  }

 private:
  bool over_budget() {
    return nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_;
  }

  void descend(size_t level) {
    if (over_budget()) {
      exhausted = true;
      return;
    }
    if (level == cands_.size()) {
      for (uint32_t d = 1; d < g_.order(); ++d)
        if (counts_[d] != lambda_) return;
      found.emplace_back(chosen_.begin(), chosen_.end());
      return;
    }
    size_t from = tied_[level] ? chosen_[level - 1] : 0;
    for (size_t i = from; i < cands_[level].size(); ++i) {
      if (exhausted) return;
      chosen_[level] = i;
      if (!add_diffs(cands_[level][i].members)) continue;
      descend(level + 1);
      remove_diffs(cands_[level][i].members);
    }
  }

  // Adds every ordered within-block difference; backs out and fails as
  // soon as a count passes lambda.
  bool add_diffs(const std::vector<uint32_t>& m) {
    size_t applied = 0;
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) {
        if (i == j) continue;
        uint32_t d = g_.sub(m[i], m[j]);
        ++counts_[d];
        ++applied;
        if (static_cast<int64_t>(counts_[d]) > lambda_) {
          undo(m, applied);
          return false;
        }
      }
    return true;
  }

  void remove_diffs(const std::vector<uint32_t>& m) {
    undo(m, m.size() * (m.size() - 1));
  }

  void undo(const std::vector<uint32_t>& m, size_t applied) {
    for (size_t i = 0; i < m.size() && applied > 0; ++i)
      for (size_t j = 0; j < m.size() && applied > 0; ++j) {
        if (i == j) continue;
        --counts_[g_.sub(m[i], m[j])];
        --applied;
      }
  }

  const Group& g_;
  const std::vector<std::vector<Candidate>>& cands_;
  const std::vector<bool>& tied_;
  const int64_t lambda_;
  std::atomic<uint64_t>& nodes_;
  const uint64_t budget_;
  std::vector<uint32_t> counts_;
  std::vector<size_t> chosen_;
};

}  // namespace

SearchResult search(const SearchSpec& spec) {
  if (spec.type.size() != spec.k.size())
    throw std::invalid_argument("type letters and block sizes must agree in number");
  if (!std::is_sorted(spec.k.rbegin(), spec.k.rend()))
    throw std::invalid_argument("block sizes must be given in descending order");

  GroupPtr g = make_group(spec.group);
  SearchResult result;

  int64_t lambda = -static_cast<int64_t>(g->order());
  for (uint32_t ki : spec.k) lambda += ki;
  if (lambda < 0) return result;

  std::vector<std::vector<Candidate>> cands(spec.k.size());
  std::vector<bool> tied(spec.k.size(), false);
  for (size_t i = 0; i < spec.k.size(); ++i) {
    BlockConstraint c = spec.type[i] == 's'   ? BlockConstraint::symmetric
                        : spec.type[i] == 'k' ? BlockConstraint::skew
                                              : BlockConstraint::free;
    for (Block& b : enumerate_blocks(*g, spec.k[i], c))
      cands[i].push_back({b, b.members()});
    if (cands[i].empty()) return result;
    if (i > 0 && spec.k[i] == spec.k[i - 1] && spec.type[i] == spec.type[i - 1])
      tied[i] = true;
  }

  const uint32_t workers =
      std::max<uint32_t>(1, std::min<uint32_t>(spec.workers,
                                               static_cast<uint32_t>(cands[0].size())));
  std::atomic<uint64_t> nodes{0};
  std::vector<Dfs> states;
  states.reserve(workers);
  for (uint32_t w = 0; w < workers; ++w)
    states.emplace_back(*g, cands, tied, lambda, nodes, spec.budget);

  auto worker_main = [&](uint32_t w) {
    for (size_t i = w; i < cands[0].size(); i += workers) {
      states[w].run_first(i);
      if (states[w].exhausted) break;
    }
  };
  if (workers == 1) {
    worker_main(0);
  } else {
    std::vector<std::thread> threads;
    for (uint32_t w = 0; w < workers; ++w) threads.emplace_back(worker_main, w);
    for (std::thread& t : threads) t.join();
  }

  result.nodes = std::min<uint64_t>(nodes.load(), spec.budget);
  bool exhausted = false;
  for (const Dfs& s : states) exhausted = exhausted || s.exhausted;
  result.complete = !exhausted;

  // Deterministic merge: materialize, sort by raw encoding.
  std::vector<SdsFamily> families;
  for (const Dfs& s : states)
    for (const std::vector<size_t>& tuple : s.found) {
      SdsFamily f;
      f.group = g;
      for (size_t lvl = 0; lvl < tuple.size(); ++lvl)
        f.blocks.push_back(cands[lvl][tuple[lvl]].block);
      f.declared_type = spec.type;
      families.push_back(std::move(f));
    }
  std::sort(families.begin(), families.end(), [](const SdsFamily& a, const SdsFamily& b) {
    return family_key(a.blocks) < family_key(b.blocks);
  });

  if (spec.limit && families.size() > *spec.limit) families.resize(*spec.limit);

  if (spec.dedup == DedupMode::canonical && !families.empty()) {
    std::vector<std::pair<std::string, size_t>> keyed;
    keyed.reserve(families.size());
    for (size_t i = 0; i < families.size(); ++i)
      keyed.emplace_back(canonical_form(families[i], spec.allow_translation), i);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SdsFamily> reps;
    for (size_t i = 0; i < keyed.size(); ++i)
      if (i == 0 || keyed[i].first != keyed[i - 1].first)
        reps.push_back(std::move(families[keyed[i].second]));
    families = std::move(reps);
  }

  result.families = std::move(families);
  return result;
}

}  // namespace sdskit
