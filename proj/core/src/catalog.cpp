#include "sdskit/constructions.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sdskit/io.hpp"
#include "sdskit/spence.hpp"

namespace sdskit {

namespace {

// Splits a comma-separated element list, expanding the "±" shorthand
// (UTF-8 0xC2 0xB1) into both signs.
std::vector<std::string> expand_elems(const std::string& csv) {
  std::vector<std::string> items;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) items.push_back(cur);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',') flush();
    else if (c != ' ') cur += c;
  }
  flush();

  std::vector<std::string> out;
  for (const std::string& item : items) {
    size_t pm = item.find("\xC2\xB1");
    if (pm == std::string::npos) {
      out.push_back(item);
    } else {
      out.push_back(item.substr(0, pm) + "+" + item.substr(pm + 2));
      out.push_back(item.substr(0, pm) + "-" + item.substr(pm + 2));
    }
  }
  return out;
}

// closure: 's' -> B' ∪ (-B'), 'z' -> B' ∪ {0} ∪ (-B')
Block closed_field_block(const Group& g, const std::string& csv, char closure) {
  Block b(g.order());
  for (const std::string& item : expand_elems(csv)) {
    uint32_t e = parse_field_element(g.spec(), item);
    b.set(e);
    b.set(g.neg(e));
  }
  if (closure == 'z') b.set(0);
  return b;
}

Block int_block(const Group& g, std::initializer_list<uint32_t> elems) {
  Block b(g.order());
  for (uint32_t e : elems) b.set(e);
  return b;
}

CatalogEntry make_entry(std::string id, SdsFamily family, std::vector<uint32_t> k,
                        int64_t lambda, const char* type, std::string origin) {
  CatalogEntry e;
  e.id = std::move(id);
  e.expected_params = SdsParams{family.group->order(), std::move(k), lambda};
  e.expected_type = SymmetryType(type);
  e.origin = std::move(origin);
  family.declared_type = e.expected_type;
  e.family = std::move(family);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  // --- Williamson pairs over GF(25) = Z_5[x]/(x^2+2) ---------------------
  {
    GroupPtr g = make_group(GroupSpec::elementary_abelian(5, 2, {2, 0, 1}));
    SdsFamily fa{g,
                 {closed_field_block(*g, "1,2,x,1+x,2+x,2+2x", 's'),
                  closed_field_block(*g, "x,1+x,1-2x,2\xC2\xB1x", 'z'),
                  closed_field_block(*g, "1,x,2x,2+x,1+2x", 'z'),
                  closed_field_block(*g, "1,1\xC2\xB1x,2-2x", 's')},
                 SymmetryType("ssss")};
    out.push_back(make_entry("gf25-a", std::move(fa), {12, 11, 11, 8}, 17, "ssss",
                             "symmetric half-set construction over GF(25)"));

    SdsFamily fb{g,
                 {closed_field_block(*g, "1,2,1+x,1-2x,2+x,2+2x", 's'),
                  closed_field_block(*g, "1,2,x,2x,1+x,2+2x", 's'),
                  closed_field_block(*g, "1,2,2-x,2-2x", 'z'),
                  closed_field_block(*g, "1\xC2\xB1x,1+2x,2+2x", 'z')},
                 SymmetryType("ssss")};
    out.push_back(make_entry("gf25-b", std::move(fb), {12, 12, 9, 9}, 17, "ssss",
                             "symmetric half-set construction over GF(25)"));
  }

  // --- Williamson pair over GF(27) = Z_3[x]/(x^3-x+1) --------------------
  {
    GroupPtr g = make_group(GroupSpec::elementary_abelian(3, 3, {1, 2, 0, 1}));
    SdsFamily fa{g,
                 {closed_field_block(*g, "1,x^2,1+x^2,x\xC2\xB1x^2,1-x-x^2", 's'),
                  closed_field_block(*g, "1,1+x^2,x\xC2\xB1x^2,1\xC2\xB1x-x^2", 's'),
                  closed_field_block(*g, "1,x,x^2,1-x^2,x-x^2,1+x-x^2", 's'),
                  closed_field_block(*g, "1,x,1-x^2,x-x^2", 'z')},
                 SymmetryType("ssss")};
    out.push_back(make_entry("gf27-a", std::move(fa), {12, 12, 12, 9}, 18, "ssss",
                             "symmetric half-set construction over GF(27)"));

    SdsFamily fb{g,
                 {closed_field_block(*g, "1,x,1+x,x+x^2,1\xC2\xB1x+x^2", 's'),
                  closed_field_block(*g, "x,x^2,1+x,1-x^2,x+x^2,1+x-x^2", 's'),
                  closed_field_block(*g, "x,x^2,x-x^2,1+x+x^2,x^2-x\xC2\xB1" "1", 's'),
                  closed_field_block(*g, "1,x,1-x^2,x-x^2", 'z')},
                 SymmetryType("ssss")};
    out.push_back(make_entry("gf27-b", std::move(fb), {12, 12, 12, 9}, 18, "ssss",
                             "symmetric half-set construction over GF(27)"));
  }

  // --- G-matrix quadruple of order 37 -------------------------------------
  {
    GroupPtr g = make_group(GroupSpec::cyclic(37));
    SdsFamily f{g,
                {int_block(*g, {2, 3, 5, 6, 9, 10, 11, 13, 15, 18, 20, 21, 23, 25, 29,
                                30, 33, 36}),
                 int_block(*g, {1, 2, 4, 6, 9, 10, 11, 12, 17, 18, 21, 22, 23, 24, 29,
                                30, 32, 34}),
                 int_block(*g, {1, 2, 4, 5, 6, 10, 17, 18, 19, 20, 27, 31, 32, 33, 35,
                                36}),
                 int_block(*g, {0, 3, 11, 13, 15, 16, 17, 20, 21, 22, 24, 26, 34})},
                SymmetryType("kkss")};
    out.push_back(make_entry("z37-g", std::move(f), {18, 18, 16, 13}, 28, "kkss",
                             "G-matrix quadruple of order 37"));
  }

  // --- Skew-plus-symmetric quadruple at n=47 ------------------------------
  {
    GroupPtr g = make_group(GroupSpec::cyclic(47));
    SdsFamily f{g,
                {int_block(*g, {1, 2, 3, 4, 6, 7, 8, 9, 12, 14, 16, 17, 18, 21, 24, 25,
                                27, 28, 32, 34, 36, 37, 42}),
                 int_block(*g, {0, 6, 8, 10, 11, 14, 17, 18, 19, 21, 23, 24, 26, 28, 29,
                                30, 33, 36, 37, 39, 41}),
                 int_block(*g, {0, 1, 2, 5, 6, 8, 9, 15, 16, 19, 21, 23, 27, 28, 33, 36,
                                38, 39, 40}),
                 int_block(*g, {0, 2, 3, 4, 7, 8, 9, 10, 12, 18, 21, 23, 24, 25, 26, 30,
                                34, 35, 44})},
                SymmetryType("ks**")};
    out.push_back(make_entry("z47", std::move(f), {23, 21, 19, 19}, 35, "ks**",
                             "quadratic-residue skew set plus three partners, n=47"));
  }

  // --- Williamson quadruple over GF(49) = Z_7[x]/(x^2-3) ------------------
  {
    GroupPtr g = make_group(GroupSpec::elementary_abelian(7, 2, {4, 0, 1}));
    SdsFamily f{g,
                {closed_field_block(
                     *g, "1,2,2x,x+2,2x+2,2x-1,3x+1,3x-2,3x\xC2\xB1" "3", 'z'),
                 closed_field_block(
                     *g, "2,x,2x,x+2,x-1,x\xC2\xB1" "3,2x+3,3x+2,3x+3", 'z'),
                 closed_field_block(
                     *g, "2,2x,x+1,x+3,x-2,2x-2,2x\xC2\xB1" "3,3x-2,3x-3", 'z'),
                 closed_field_block(
                     *g, "3,3x,x+2,x+3,2x+1,2x+3,3x-1,3x-2,3x\xC2\xB1" "3", 'z')},
                SymmetryType("ssss")};
    out.push_back(make_entry("gf49", std::move(f), {21, 21, 21, 21}, 35, "ssss",
                             "symmetric half-set construction over GF(49)"));
  }

  // --- Skew quadruple at n=61 ----------------------------------------------
  {
    GroupPtr g = make_group(GroupSpec::cyclic(61));
    SdsFamily f{g,
                {int_block(*g, {1,  6,  7,  9,  13, 16, 17, 18, 20, 22, 24, 25, 27, 28,
                                30, 32, 35, 38, 40, 42, 46, 47, 49, 50, 51, 53, 56, 57,
                                58, 59}),
                 int_block(*g, {0,  1,  2,  3,  7,  11, 12, 13, 14, 15, 19, 21, 22, 24,
                                26, 28, 29, 30, 33, 34, 35, 39, 42, 47, 48, 58, 59, 60}),
                 int_block(*g, {2,  3,  4,  5,  11, 16, 19, 20, 21, 22, 25, 26, 27, 29,
                                32, 33, 36, 39, 40, 41, 42, 45, 46, 49, 50, 52, 58}),
                 int_block(*g, {7,  8,  10, 12, 15, 16, 18, 20, 24, 25, 27, 30, 31, 34,
                                36, 37, 41, 43, 45, 46, 49, 51, 53, 54})},
                SymmetryType("k**s")};
    out.push_back(make_entry("z61", std::move(f), {30, 28, 27, 24}, 48, "k**s",
                             "skew quadruple of order 61"));
  }

  // --- n=127: coset difference family, alone and with the Paley set ------
  {
    SdsFamily three = z127_family();
    GroupPtr g = three.group;
    out.push_back(make_entry("z127-3block", three, {57, 57, 57}, 76, "s**",
                             "coset-union difference family over Z_127"));

    SdsFamily four;
    four.group = g;
    four.blocks.push_back(paley_skew_ds(127));
    for (const Block& b : three.blocks) four.blocks.push_back(b);
    out.push_back(make_entry("z127-4block", std::move(four), {63, 57, 57, 57}, 107,
                             "ks**",
                             "Paley skew set prepended to the coset difference family"));
  }

  // --- n=63 from the m-sequence pipeline ----------------------------------
  out.push_back(make_entry("spence63", spence63().family, {31, 31, 27, 25}, 51, "kkss",
                           "m-sequence construction at n=63"));

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace sdskit
