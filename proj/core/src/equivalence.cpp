#include "sdskit/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdskit {

namespace {

void append_bytes(const Block& b, std::string& out) {
  const uint32_t n = b.universe();
  for (uint32_t base = 0; base < n; base += 8) {
    unsigned char byte = 0;
    for (uint32_t bit = 0; bit < 8 && base + bit < n; ++bit)
      if (b.test(base + bit)) byte |= static_cast<unsigned char>(1u << bit);
    out.push_back(static_cast<char>(byte));
  }
}

// Least block (Block::lex_less) over {op(b) + t} with op in {id, -, comp,
// -comp} and t ranging over the group when translations are allowed.
Block normalize_block(const Group& g, const Block& b, bool allow_translation) {
  Block variants[4];
  variants[0] = b;
  variants[1] = negate(g, b);
  variants[2] = complement(g, b);
  variants[3] = negate(g, variants[2]);

  Block best;
  bool have = false;
  for (const Block& v : variants) {
    if (!allow_translation) {
      if (!have || Block::lex_less(v, best)) {
        best = v;
        have = true;
      }
      continue;
    }
    const std::vector<uint32_t> members = v.members();
    Block shifted(g.order());
    for (uint32_t t = 0; t < g.order(); ++t) {
      shifted.clear();
      for (uint32_t e : members) shifted.set(g.add(e, t));
      if (!have || Block::lex_less(shifted, best)) {
        best = shifted;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_form(const Group& g, std::span<const Block> blocks,
                           bool allow_translation) {
  std::string best;
  bool have = false;
  std::vector<Block> norms(blocks.size());

  g.for_each_automorphism([&](const Automorphism& phi) {
    for (size_t i = 0; i < blocks.size(); ++i)
      norms[i] = normalize_block(g, apply(phi, blocks[i]), allow_translation);
    std::sort(norms.begin(), norms.end(), Block::lex_less);
    std::string cand;
    cand.reserve(norms.size() * ((g.order() + 7) / 8));
    for (const Block& b : norms) append_bytes(b, cand);
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
    return true;
  });
  return best;
}

std::string canonical_form(const SdsFamily& f, bool allow_translation) {
  return canonical_form(*f.group, f.blocks, allow_translation);
}

bool equivalent(const SdsFamily& f, const SdsFamily& g, bool allow_translation) {
  if (!(f.group->spec() == g.group->spec()))
    throw std::invalid_argument("equivalence requires families over the same group");
  if (f.blocks.size() != g.blocks.size()) return false;
  return canonical_form(f, allow_translation) == canonical_form(g, allow_translation);
}

}  // namespace sdskit
