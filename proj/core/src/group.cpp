#include "sdskit/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sdskit {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over Z_p as coefficient vectors, constant term first.
using Poly = std::vector<uint32_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic divisor d.
Poly poly_rem(Poly f, const Poly& d, uint32_t p) {
  poly_trim(f);
  const size_t dd = d.size() - 1;  // degree of d
  while (f.size() > dd) {
    uint32_t lead = f.back();
    size_t shift = f.size() - 1 - dd;
    if (lead != 0) {
      for (size_t i = 0; i <= dd; ++i) {
        uint32_t s = d[i] * lead % p;
        f[shift + i] = (f[shift + i] + p - s) % p;
      }
    }
    f.pop_back();
    poly_trim(f);
  }
  return f;
}

// Finds a monic factor of the monic polynomial f of degree 1..deg(f)/2,
// or an empty poly when f is irreducible.
Poly find_monic_factor(const Poly& f, uint32_t p) {
  const size_t k = f.size() - 1;
  for (size_t d = 1; 2 * d <= k; ++d) {
    // enumerate monic degree-d candidates by their low d coefficients
    uint64_t total = 1;
    for (size_t i = 0; i < d; ++i) total *= p;
    for (uint64_t code = 0; code < total; ++code) {
      Poly g(d + 1, 0);
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return g;
    }
  }
  return {};
}

}  // namespace

std::string poly_to_string(const std::vector<uint32_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    uint32_t c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupSpec GroupSpec::cyclic(uint32_t n) {
  GroupSpec s;
  s.kind = GroupKind::cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::elementary_abelian(uint32_t p, uint32_t k,
                                        std::vector<uint32_t> modulus) {
  GroupSpec s;
  s.kind = GroupKind::elementary_abelian;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}

uint32_t GroupSpec::order() const {
  if (kind == GroupKind::cyclic) return n;
  uint64_t o = 1;
  for (uint32_t i = 0; i < k; ++i) {
    o *= p;
    if (o > 0xffffffffull) throw std::invalid_argument("group order overflows 32 bits");
  }
  return static_cast<uint32_t>(o);
}

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == GroupKind::cyclic) {
    if (spec_.n == 0) throw std::invalid_argument("cyclic group order must be positive");
    order_ = spec_.n;
  } else {
    if (!is_prime(spec_.p))
      throw std::invalid_argument("field characteristic must be prime, got " +
                                  std::to_string(spec_.p));
    if (spec_.k == 0) throw std::invalid_argument("field degree must be >= 1");
    if (spec_.k > 16) throw std::invalid_argument("field degree above 16 is unsupported");
    if (spec_.p > 65535)  // keeps digit products within 32 bits
      throw std::invalid_argument("field characteristic above 65535 is unsupported");
    if (spec_.modulus.size() != spec_.k + 1)
      throw std::invalid_argument("modulus must have degree k = " + std::to_string(spec_.k));
    for (auto& c : spec_.modulus) c %= spec_.p;
    if (spec_.modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic");
    Poly factor = find_monic_factor(spec_.modulus, spec_.p);
    if (!factor.empty())
      throw std::invalid_argument("modulus " + poly_to_string(spec_.modulus) +
                                  " is reducible over Z_" + std::to_string(spec_.p) +
                                  ": divisible by " + poly_to_string(factor));
    order_ = spec_.order();
    pow_p_.resize(spec_.k + 1);
    pow_p_[0] = 1;
    for (uint32_t i = 1; i <= spec_.k; ++i) pow_p_[i] = pow_p_[i - 1] * spec_.p;
  }

  neg_table_.resize(order_);
  if (spec_.kind == GroupKind::cyclic) {
    for (uint32_t x = 0; x < order_; ++x) neg_table_[x] = (order_ - x) % order_;
  } else {
    for (uint32_t x = 0; x < order_; ++x) {
      uint32_t e = x, out = 0;
      for (uint32_t i = 0; i < spec_.k; ++i) {
        uint32_t d = e % spec_.p;
        e /= spec_.p;
        out += ((spec_.p - d) % spec_.p) * pow_p_[i];
      }
      neg_table_[x] = out;
    }
  }

  if (order_ <= kAddTableBound) {
    add_table_.resize(static_cast<size_t>(order_) * order_);
    for (uint32_t a = 0; a < order_; ++a)
      for (uint32_t b = 0; b < order_; ++b)
        add_table_[static_cast<size_t>(a) * order_ + b] =
            static_cast<uint16_t>(add_slow(a, b));
  }
}

void Group::decode(uint32_t e, uint32_t* digits) const {
  for (uint32_t i = 0; i < spec_.k; ++i) {
    digits[i] = e % spec_.p;
    e /= spec_.p;
  }
}

uint32_t Group::encode(const uint32_t* digits) const {
  uint32_t e = 0;
  for (uint32_t i = 0; i < spec_.k; ++i) e += digits[i] % spec_.p * pow_p_[i];
  return e;
}

uint32_t Group::add_slow(uint32_t a, uint32_t b) const {
  if (spec_.kind == GroupKind::cyclic) {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return static_cast<uint32_t>(s >= order_ ? s - order_ : s);
  }
  uint32_t out = 0;
  for (uint32_t i = 0; i < spec_.k; ++i) {
    uint32_t da = a % spec_.p, db = b % spec_.p;
    a /= spec_.p;
    b /= spec_.p;
    uint32_t d = da + db;
    if (d >= spec_.p) d -= spec_.p;
    out += d * pow_p_[i];
  }
  return out;
}

uint32_t Group::add(uint32_t a, uint32_t b) const {
  if (!add_table_.empty())
    return add_table_[static_cast<size_t>(a) * order_ + b];
  return add_slow(a, b);
}

uint32_t Group::field_mul(uint32_t a, uint32_t b) const {
  if (!is_field())
    throw std::domain_error("field_mul requires a field-backed group");
  const uint32_t p = spec_.p, k = spec_.k;
  uint32_t da[16], db[16];
  decode(a, da);
  decode(b, db);
  uint32_t prod[32] = {0};
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce modulo the monic modulus: x^k == -(c_{k-1}x^{k-1}+...+c_0)
  for (uint32_t d = 2 * k - 2; d >= k && d < 32; --d) {
    uint32_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t s = spec_.modulus[i] * lead % p;
      prod[d - k + i] = (prod[d - k + i] + p - s) % p;
    }
  }
  return encode(prod);
}

uint32_t Group::field_pow(uint32_t a, uint64_t e) const {
  uint32_t result = 1;  // encoding of the field's 1
  uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = field_mul(result, base);
    base = field_mul(base, base);
    e >>= 1;
  }
  return result;
}

uint32_t Group::field_element_order(uint32_t a) const {
  if (a == 0) throw std::domain_error("0 has no multiplicative order");
  uint32_t ord = 1;
  uint32_t x = a;
  while (x != 1) {
    x = field_mul(x, a);
    ++ord;
  }
  return ord;
}

uint64_t Group::automorphism_count() const {
  if (spec_.kind == GroupKind::cyclic) {
    // Euler phi
    uint32_t n = spec_.n, result = n;
    for (uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        result -= result / d;
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) result -= result / n;
    return result;
  }
  uint64_t count = 1;
  uint64_t q = order_;
  uint64_t pi = 1;
  for (uint32_t i = 0; i < spec_.k; ++i) {
    count *= q - pi;
    pi *= spec_.p;
  }
  return count;
}

void Group::for_each_automorphism(
    const std::function<bool(const Automorphism&)>& fn, uint32_t order_bound) const {
  if (order_ > order_bound)
    throw CapacityError("automorphism enumeration is capped at group order " +
                        std::to_string(order_bound) + ", got " + std::to_string(order_));

  Automorphism a;
  a.perm.resize(order_);

  if (spec_.kind == GroupKind::cyclic) {
    if (order_ == 1) {
      a.perm[0] = 0;
      fn(a);
      return;
    }
    for (uint32_t u = 1; u < order_; ++u) {
      if (std::gcd(u, order_) != 1) continue;
      for (uint32_t x = 0; x < order_; ++x)
        a.perm[x] = static_cast<uint32_t>(static_cast<uint64_t>(u) * x % order_);
      if (!fn(a)) return;
    }
    return;
  }

  // Invertible k x k matrices over Z_p acting on coefficient vectors.
  // Rows are chosen one at a time outside the span of the previous rows.
  const uint32_t p = spec_.p, k = spec_.k;
  std::vector<uint32_t> rows(k, 0);  // row i as an element encoding
  std::vector<char> in_span(order_);

  // span[] marked for rows[0..level); combos enumerated by radix-p counter
  auto mark_span = [&](uint32_t level) {
    std::fill(in_span.begin(), in_span.end(), 0);
    uint64_t combos = 1;
    for (uint32_t i = 0; i < level; ++i) combos *= p;
    for (uint64_t code = 0; code < combos; ++code) {
      uint64_t c = code;
      uint32_t acc = 0;
      for (uint32_t i = 0; i < level; ++i) {
        uint32_t coef = static_cast<uint32_t>(c % p);
        c /= p;
        uint32_t scaled = rows[i];
        uint32_t term = 0;  // coef * rows[i] componentwise
        for (uint32_t j = 0; j < k; ++j) {
          uint32_t d = scaled % p;
          scaled /= p;
          term += (d * coef % p) * pow_p_[j];
        }
        acc = add_slow(acc, term);
      }
      in_span[acc] = 1;
    }
  };

  std::vector<uint32_t> digits(k), image(k);
  std::function<bool(uint32_t)> rec = [&](uint32_t level) -> bool {
    if (level == k) {
      for (uint32_t x = 0; x < order_; ++x) {
        decode(x, digits.data());
        // image = M * v with M's row r stored as the element encoding rows[r]
        uint32_t out = 0;
        for (uint32_t r = 0; r < k; ++r) {
          uint32_t row = rows[r], acc = 0;
          for (uint32_t c = 0; c < k; ++c) {
            acc += row % p * digits[c];
            row /= p;
          }
          out += acc % p * pow_p_[r];
        }
        a.perm[x] = out;
      }
      return fn(a);
    }
    mark_span(level);
    std::vector<char> span_snapshot = in_span;
    for (uint32_t cand = 1; cand < order_; ++cand) {
      if (span_snapshot[cand]) continue;
      rows[level] = cand;
      if (!rec(level + 1)) return false;
    }
    return true;
  };
  rec(0);
}

std::vector<Automorphism> Group::automorphisms(uint32_t order_bound) const {
  std::vector<Automorphism> out;
  for_each_automorphism(
      [&](const Automorphism& a) {
        out.push_back(a);
        return true;
      },
      order_bound);
  return out;
}

GroupPtr make_group(GroupSpec spec) {
  return std::make_shared<Group>(std::move(spec));
}

}  // namespace sdskit
