#include "sdskit/block.hpp"

#include <bit>
#include <stdexcept>

namespace sdskit {

Block Block::from_members(uint32_t universe, std::span<const uint32_t> members) {
  Block b(universe);
  for (uint32_t e : members) {
    if (e >= universe)
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside group of order " + std::to_string(universe));
    b.set(e);
  }
  return b;
}

uint32_t Block::size() const {
  uint32_t c = 0;
  for (uint64_t w : bits_) c += static_cast<uint32_t>(std::popcount(w));
  return c;
}

std::vector<uint32_t> Block::members() const {
  std::vector<uint32_t> out;
  out.reserve(size());
  for (size_t wi = 0; wi < bits_.size(); ++wi) {
    uint64_t w = bits_[wi];
    while (w) {
      out.push_back(static_cast<uint32_t>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Block Block::operator&(const Block& o) const {
  Block r(n_);
  for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
  return r;
}

bool Block::lex_less(const Block& a, const Block& b) {
  uint32_t sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  for (size_t i = 0; i < a.bits_.size(); ++i) {
    uint64_t d = a.bits_[i] ^ b.bits_[i];
    if (d) return (a.bits_[i] >> std::countr_zero(d)) & 1;  // holder of the smallest differing element wins
  }
  return false;
}

Block negate(const Group& g, const Block& b) {
  Block r(b.universe());
  for (uint32_t e = 0; e < b.universe(); ++e)
    if (b.test(e)) r.set(g.neg(e));
  return r;
}

Block complement(const Group& g, const Block& b) {
  Block r(g.order());
  for (uint32_t e = 0; e < g.order(); ++e)
    if (!b.test(e)) r.set(e);
  return r;
}

Block translate(const Group& g, const Block& b, uint32_t t) {
  Block r(b.universe());
  for (uint32_t e = 0; e < b.universe(); ++e)
    if (b.test(e)) r.set(g.add(e, t));
  return r;
}

Block apply(const Automorphism& phi, const Block& b) {
  Block r(b.universe());
  for (uint32_t e = 0; e < b.universe(); ++e)
    if (b.test(e)) r.set(phi.perm[e]);
  return r;
}

BlockSymmetry symmetry_of(const Group& g, const Block& b) {
  if (is_symmetric(g, b)) return BlockSymmetry::symmetric;
  if (is_skew(g, b)) return BlockSymmetry::skew;
  return BlockSymmetry::neither;
}

bool is_symmetric(const Group& g, const Block& b) {
  for (uint32_t e = 0; e < g.order(); ++e)
    if (b.test(e) != b.test(g.neg(e))) return false;
  return true;
}

bool is_skew(const Group& g, const Block& b) {
  if (b.test(0)) return false;
  // every nonzero element in exactly one of B, -B
  for (uint32_t e = 1; e < g.order(); ++e)
    if (b.test(e) == b.test(g.neg(e))) return false;
  return true;
}

}  // namespace sdskit
