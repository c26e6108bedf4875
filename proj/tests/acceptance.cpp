// Acceptance suite: every criterion prints one PASS/FAIL line; the exit
// code is the number of failed criteria. Run with a criterion number to
// run just that one.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sdskit/constructions.hpp"
#include "sdskit/equivalence.hpp"
#include "sdskit/io.hpp"
#include "sdskit/matrix.hpp"
#include "sdskit/search.hpp"
#include "sdskit/sds.hpp"
#include "sdskit/spence.hpp"
#include "table_data.hpp"

using namespace sdskit;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    FAILED: " << what << "\n";
    }
  }
  void note(const std::string& what) { notes << "    note: " << what << "\n"; }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string params_str(uint32_t n, const std::vector<uint32_t>& k, int64_t lambda) {
  SdsParams p{n, k, lambda};
  return p.to_string();
}

// ---------------------------------------------------------------------------
// 1. Catalog verification at the printed parameters and types.
void criterion1(Checker& c) {
  struct Expected {
    const char* id;
    uint32_t n;
    std::vector<uint32_t> k;
    int64_t lambda;
    const char* type;
  };
  const std::vector<Expected> expected = {
      {"gf25-a", 25, {12, 11, 11, 8}, 17, "ssss"},
      {"gf25-b", 25, {12, 12, 9, 9}, 17, "ssss"},
      {"gf27-a", 27, {12, 12, 12, 9}, 18, "ssss"},
      {"gf27-b", 27, {12, 12, 12, 9}, 18, "ssss"},
      {"z37-g", 37, {18, 18, 16, 13}, 28, "kkss"},
      {"z47", 47, {23, 21, 19, 19}, 35, "ks**"},
      {"gf49", 49, {21, 21, 21, 21}, 35, "ssss"},
      {"z61", 61, {30, 28, 27, 24}, 48, "k**s"},
      {"z127-3block", 127, {57, 57, 57}, 76, "s**"},
      {"z127-4block", 127, {63, 57, 57, 57}, 107, "ks**"},
      {"spence63", 63, {31, 31, 27, 25}, 51, "kkss"},
  };
  c.require(catalog().size() >= 10, "catalog has >= 10 entries");
  auto t0 = Clock::now();
  for (const Expected& e : expected) {
    const CatalogEntry* entry = catalog_find(e.id);
    c.require(entry != nullptr, std::string("entry present: ") + e.id);
    if (!entry) continue;
    VerifyReport r = verify_sds(entry->family);
    c.require(r.ok, std::string(e.id) + " verifies");
    c.require(r.params == SdsParams{e.n, e.k, e.lambda},
              std::string(e.id) + " parameters " + r.params.to_string() + " == " +
                  params_str(e.n, e.k, e.lambda));
    c.require(type_of(entry->family).str() == e.type,
              std::string(e.id) + " type " + type_of(entry->family).str() + " == " +
                  e.type);
  }
  double dt = seconds_since(t0);
  c.require(dt < 1.0, "verification under 1 s (took " + std::to_string(dt) + ")");
}

// ---------------------------------------------------------------------------
// 2. Goethals-Seidel certification: H H^T = 4n I exactly; skew type
//    exactly when the first block is skew (covers orders 100..508).
void criterion2(Checker& c) {
  auto t0 = Clock::now();
  const std::set<uint32_t> required_skew = {47, 61, 63, 127};
  for (const CatalogEntry& e : catalog()) {
    if (e.family.blocks.size() != 4) continue;
    const Group& g = *e.family.group;
    std::array<IntMatrix, 4> m;
    for (size_t i = 0; i < 4; ++i) m[i] = char_matrix(g, e.family.blocks[i]);
    IntMatrix h = goethals_seidel(m[0], m[1], m[2], m[3], r_matrix(g));
    c.require(h.order() == 4 * g.order(), e.id + " assembles at order 4n");
    c.require(is_hadamard(h), e.id + " gives an exact Hadamard matrix");
    bool skew = is_skew_type(h);
    bool first_block_skew = e.expected_type[0] == 'k';
    c.require(skew == first_block_skew,
              e.id + " skew flag matches the first block (got " +
                  (skew ? "skew" : "plain") + ")");
    if (required_skew.count(g.order()))
      c.require(skew, e.id + " is a skew Hadamard matrix");
  }
  double dt = seconds_since(t0);
  c.note("all Goethals-Seidel products certified in " + std::to_string(dt) + " s");
  c.require(dt < 30.0, "certification under 30 s");
}

// ---------------------------------------------------------------------------
// 3. The m-sequence pipeline, stage by stage against the printed data.
void criterion3(Checker& c) {
  // second transcription of the printed translated index set
  static const uint32_t kPrintedY[] = {
      8,   9,   11,  12,  16,  17,  19,  21,  24,  26,  38,  39,  40,  41,  42,
      44,  45,  53,  54,  55,  59,  60,  62,  73,  80,  81,  83,  85,  91,  92,
      95,  96,  98,  103, 104, 105, 106, 109, 117, 119, 120, 122, 128, 130, 136,
      146, 154, 176, 177, 183, 190, 195, 198, 200, 204, 205, 210, 214, 220, 225,
      226, 237, 249, 252, 253, 257, 259, 265, 266, 270, 275, 277, 283, 284, 287,
      295, 300, 304, 310, 313, 317, 319, 322, 323, 328, 339, 342, 353, 359, 365,
      367, 368, 373, 376, 377, 381, 384, 393, 400, 405, 407, 408, 411, 412, 414,
      415, 424, 425, 427, 434, 444, 446, 453, 455, 460, 464, 467, 471, 475, 480,
      486, 488, 490, 492, 496};
  static const std::vector<uint32_t> kStars[4] = {
      {2, 4, 6, 7, 8, 10, 11, 13, 14, 16, 17, 20, 21, 22, 23, 24, 26, 28, 30},
      {5, 6, 7, 8, 9, 10, 11, 13, 15, 17, 18, 19, 20, 23, 24, 26, 28, 31},
      {0, 3, 4, 7, 12, 14, 15, 19, 20, 21, 26, 28, 29, 31},
      {1, 2, 3, 6, 7, 8, 11, 12, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31}};

  auto t0 = Clock::now();
  SpenceTrace t = spence63();
  c.require(t.period == 15624, "minimal period 15624");
  c.require(t.rds_large.ok && t.rds_large.quotient == 126 && t.rds_large.subgroup == 124 &&
                t.rds_large.k == 125 && t.rds_large.lambda == 1,
            "index set is a (126,124,125,1) relative difference set");
  c.require(t.rds_reduced.ok && t.rds_reduced.lambda == 31 && t.rds_reduced.k == 125,
            "reduced set is a relative difference set with lambda 31");
  c.require(t.frame_tuple == std::array<uint32_t, 4>{63, 8, 125, 31},
            "reduction frame tuple (63,8,125,31)");
  c.note("reduced set avoids the order-" + std::to_string(t.rds_reduced.subgroup) +
         " subgroup <126>; standard tuple (126,4,125,31), frame tuple (63,8,125,31)");
  c.require(t.y.size() == 125, "translated index set has the printed 125 elements");
  c.require(std::equal(t.y.begin(), t.y.end(), std::begin(kPrintedY), std::end(kPrintedY)),
            "translated index set matches the printed listing exactly");
  c.note("fixing translate found at offset " + std::to_string(t.translate) +
         " (printed prose says 113; the printed set itself is reproduced exactly)");
  for (int i = 0; i < 4; ++i) {
    std::vector<uint32_t> star;
    for (uint32_t e : t.pre_blocks[i].members())
      if (e <= 31) star.push_back(e);
    c.require(star == kStars[i],
              "block " + std::to_string(i + 1) + " intersection with {0..31} as printed");
  }
  VerifyReport r = verify_sds(t.family);
  c.require(r.ok && r.params == SdsParams{63, {31, 31, 27, 25}, 51},
            "final family is (63;31,31,27,25;51)");
  c.require(type_of(t.family).str() == "kkss", "final family has type kkss");
  double dt = seconds_since(t0);
  c.require(dt < 10.0, "pipeline under 10 s (took " + std::to_string(dt) + ")");
}

// ---------------------------------------------------------------------------
// 4. Parameter tables row for row, including the incompatibility marks.
void criterion4(Checker& c) {
  const char* types[4] = {"ssss", "ksss", "kkss", "kkks"};
  size_t fixture_pos = 0;
  const size_t fixture_len = std::size(table_data::kTable1);
  for (uint32_t n = 3; n <= 63; n += 2) {
    std::vector<SdsParams> rows = feasible_params(n);
    size_t start = fixture_pos;
    while (fixture_pos < fixture_len && table_data::kTable1[fixture_pos].n == n)
      ++fixture_pos;
    size_t expected_rows = fixture_pos - start;
    c.require(rows.size() == expected_rows,
              "n=" + std::to_string(n) + ": " + std::to_string(rows.size()) +
                  " rows == " + std::to_string(expected_rows));
    if (rows.size() != expected_rows) continue;
    for (size_t i = 0; i < rows.size(); ++i) {
      const table_data::Row& want = table_data::kTable1[start + i];
      const SdsParams& got = rows[i];
      bool same = std::equal(got.k.begin(), got.k.end(), want.k.begin()) &&
                  got.lambda == static_cast<int64_t>(want.lambda) &&
                  got.a() == std::vector<int64_t>(want.a.begin(), want.a.end());
      c.require(same, "n=" + std::to_string(n) + " row " + std::to_string(i + 1) +
                          ": " + got.to_string());
      for (int tix = 0; tix < 4; ++tix) {
        bool compat = type_compatible(got, SymmetryType(types[tix]));
        bool marked_x = want.marks[tix] == 'x';
        c.require(compat != marked_x, "n=" + std::to_string(n) + " row " +
                                          std::to_string(i + 1) + " " + types[tix] +
                                          " mark");
      }
    }
  }
  c.require(fixture_pos == fixture_len, "fixture fully consumed");

  // the multicirculant table reuses the same parameter rows; check its
  // three type columns and that kkks is impossible at these orders
  for (const table_data::Row2& want : table_data::kTable2) {
    std::vector<SdsParams> rows = feasible_params(want.n);
    const SdsParams* got = nullptr;
    for (const SdsParams& p : rows)
      if (std::equal(p.k.begin(), p.k.end(), want.k.begin())) got = &p;
    c.require(got != nullptr, "multicirculant row present for n=" + std::to_string(want.n));
    if (!got) continue;
    for (int tix = 0; tix < 3; ++tix) {
      bool compat = type_compatible(*got, SymmetryType(types[tix]));
      c.require(compat != (want.marks[tix] == 'x'),
                "multicirculant n=" + std::to_string(want.n) + " " + types[tix] + " mark");
    }
    c.require(!type_compatible(*got, SymmetryType("kkks")),
              "kkks impossible at n=" + std::to_string(want.n) + " (4n-3 not a square)");
  }

  c.note("documented erratum: printed n=55 row (27,24,24,23;43) is inconsistent with "
         "its own a-row (1,7,7,11) and the sum-of-squares identity; the feasible row "
         "is (27,24,24,22;42)");
  c.note("documented erratum: printed n=45 row (22,21,19,17) carries an x under ksss "
         "although a1=1 makes it compatible (cf. every other row in both tables)");
  c.note("documented erratum: printed n=57 row (27,25,25,23) lists lambda 44; the "
         "defining identity gives sum(k)-n = 43");
}

// ---------------------------------------------------------------------------
// naive unpruned product search used as the oracle for criterion 5
std::set<std::vector<std::vector<uint32_t>>> naive_family_set(
    const Group& g, const std::vector<uint32_t>& k, const SymmetryType& type) {
  std::vector<std::vector<Block>> cands(k.size());
  for (size_t i = 0; i < k.size(); ++i) {
    BlockConstraint bc = type[i] == 's'   ? BlockConstraint::symmetric
                         : type[i] == 'k' ? BlockConstraint::skew
                                          : BlockConstraint::free;
    cands[i] = enumerate_blocks(g, k[i], bc);
  }
  std::set<std::vector<std::vector<uint32_t>>> found;
  std::vector<size_t> idx(k.size(), 0);
  std::function<void(size_t)> rec = [&](size_t level) {
    if (level == k.size()) {
      std::vector<Block> tuple;
      for (size_t i = 0; i < k.size(); ++i) tuple.push_back(cands[i][idx[i]]);
      if (verify_sds(g, tuple).ok) {
        std::vector<std::vector<uint32_t>> key;
        for (const Block& b : tuple) key.push_back(b.members());
        found.insert(std::move(key));
      }
      return;
    }
    size_t from = 0;
    if (level > 0 && k[level] == k[level - 1] && type[level] == type[level - 1])
      from = idx[level - 1];
    for (size_t i = from; i < cands[level].size(); ++i) {
      idx[level] = i;
      rec(level + 1);
    }
  };
  rec(0);
  return found;
}

// 5. Small-order exhaustive counts under canonical dedup, plus the
//    pruned-search-equals-naive-oracle contract.
void criterion5(Checker& c) {
  const char* types[4] = {"ssss", "ksss", "kkss", "kkks"};
  for (const table_data::CountRow& row : table_data::kSmallCounts) {
    for (int tix = 0; tix < 4; ++tix) {
      SearchSpec spec;
      spec.group = GroupSpec::cyclic(row.n);
      spec.k.assign(row.k.begin(), row.k.end());
      spec.type = SymmetryType(types[tix]);

      SdsParams p{row.n, spec.k, 0};
      bool compat = type_compatible(p, spec.type);
      c.require(compat == (row.counts[tix] >= 0),
                "n=" + std::to_string(row.n) + " " + types[tix] + " compatibility mark");
      if (row.counts[tix] < 0) continue;

      auto t0 = Clock::now();
      spec.dedup = DedupMode::canonical;
      spec.allow_translation = true;
      size_t with_tr = search(spec).families.size();
      spec.allow_translation = false;
      size_t no_tr = search(spec).families.size();
      spec.dedup = DedupMode::none;
      SearchResult raw = search(spec);
      double dt = seconds_since(t0);

      std::string label = "n=" + std::to_string(row.n) + " " +
                          params_str(row.n, spec.k, 0) + " " + types[tix];
      c.require(with_tr == static_cast<size_t>(row.counts[tix]),
                label + ": " + std::to_string(with_tr) + " classes == " +
                    std::to_string(row.counts[tix]));
      if (no_tr != with_tr)
        c.note(label + ": translation convention changes the count (" +
               std::to_string(with_tr) + " with, " + std::to_string(no_tr) +
               " without); the table's convention includes translations");
      c.require(dt < 60.0, label + " under 60 s");

      // raw families equal the naive oracle's
      GroupPtr g = make_group(spec.group);
      std::set<std::vector<std::vector<uint32_t>>> raw_set;
      for (const SdsFamily& f : raw.families) {
        std::vector<std::vector<uint32_t>> key;
        for (const Block& b : f.blocks) key.push_back(b.members());
        raw_set.insert(std::move(key));
      }
      c.require(raw_set == naive_family_set(*g, spec.k, spec.type),
                label + ": pruned search equals the naive oracle");
    }
  }
  c.note("documented discrepancy at n=7 (3,3,3,1) kkks: the printed table says 1, the "
         "search finds 2 classes under both translation conventions; the class of "
         "({1,2,4},{1,2,4},{1,2,4},{0}) has all per-block difference counts constant "
         "while ({1,2,3},{1,3,5},{1,4,5},{0}) does not, and every transform in the "
         "equivalence group preserves that profile, so no blockwise convention can "
         "merge them (the same cited source matches at n=3 and n=13)");
}

// ---------------------------------------------------------------------------
// 6. Multicirculant searches over GF(9).
void criterion6(Checker& c) {
  auto t0 = Clock::now();
  SearchSpec spec;
  spec.group = GroupSpec::elementary_abelian(3, 2, {1, 0, 1});
  spec.k = {4, 4, 3, 2};
  for (const char* t : {"ssss", "ksss", "kkss"}) {
    spec.type = SymmetryType(t);
    SearchResult r = search(spec);
    c.require(r.complete && r.families.empty(),
              std::string("GF(9) (4,4,3,2) ") + t + " has no families");
  }
  spec.k = {3, 3, 3, 3};
  spec.type = SymmetryType("ssss");
  SearchResult r = search(spec);
  c.require(!r.families.empty(), "GF(9) (3,3,3,3) ssss has a family");
  for (const SdsFamily& f : r.families) {
    c.require(verify_sds(f).ok, "GF(9) family verifies");
    c.require(type_of(f).str() == "ssss", "GF(9) family is ssss");
  }
  double dt = seconds_since(t0);
  c.require(dt < 60.0, "multicirculant searches under 60 s");
}

// ---------------------------------------------------------------------------
// 7. The developed design on 127 points.
void criterion7(Checker& c) {
  auto t0 = Clock::now();
  SdsFamily f = z127_family();
  BibdReport r = develop_bibd(f);
  c.require(r.ok, "every point pair is covered equally (" + r.error + ")");
  c.require(r.v == 127 && r.b == 381 && r.r == 171 && r.k == 57 && r.lambda == 76,
            "design parameters (127, 381, 171, 57, 76)");
  double dt = seconds_since(t0);
  c.require(dt < 10.0, "development under 10 s (took " + std::to_string(dt) + ")");
}

// ---------------------------------------------------------------------------
// 8. verify_sds is exactly the matrix identity sum (A^c)^T A^c = 4n I.
bool eq2_holds(const Group& g, const std::vector<Block>& blocks) {
  const uint32_t n = g.order();
  IntMatrix sum(n, 0);
  for (const Block& b : blocks) {
    IntMatrix cm = char_matrix(g, b);
    IntMatrix prod = multiply(cm.transposed(), cm);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) sum.at(i, j) += prod.at(i, j);
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (sum.at(i, j) != (i == j ? static_cast<int32_t>(4 * n) : 0)) return false;
  return true;
}

void criterion8(Checker& c) {
  std::mt19937 rng(0x5d5ea1);
  uint64_t checked = 0, positives = 0;
  for (uint32_t n = 3; n <= 13; n += 2) {
    GroupPtr g = make_group(GroupSpec::cyclic(n));
    std::vector<uint32_t> elems(n);
    for (uint32_t i = 0; i < n; ++i) elems[i] = i;
    for (const SdsParams& p : feasible_params(n)) {
      for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Block> blocks;
        for (uint32_t ki : p.k) {
          std::shuffle(elems.begin(), elems.end(), rng);
          Block b(n);
          for (uint32_t i = 0; i < ki; ++i) b.set(elems[i]);
          blocks.push_back(std::move(b));
        }
        bool lhs = verify_sds(*g, blocks).ok;
        bool rhs = eq2_holds(*g, blocks);
        if (lhs != rhs) {
          c.require(false, "mismatch at " + p.to_string());
          return;
        }
        ++checked;
        if (lhs) ++positives;
      }
      // exercise the positive branch with genuine families of every
      // compatible type
      for (const char* t : {"ssss", "ksss", "kkss", "kkks"}) {
        if (!type_compatible(p, SymmetryType(t))) continue;
        SearchSpec spec;
        spec.group = GroupSpec::cyclic(n);
        spec.k = p.k;
        spec.type = SymmetryType(t);
        spec.dedup = DedupMode::none;
        for (const SdsFamily& f : search(spec).families) {
          bool lhs = verify_sds(f).ok;
          bool rhs = eq2_holds(*g, f.blocks);
          c.require(lhs && rhs, "found family satisfies both routes at " + p.to_string());
          ++checked;
          ++positives;
        }
      }
    }
  }
  c.note(std::to_string(checked) + " tuples cross-checked, " + std::to_string(positives) +
         " positive");
  c.require(positives > 0, "positive branch exercised");
}

// ---------------------------------------------------------------------------
// 9. The two GF(27) families are not equivalent; intersection invariants.
void criterion9(Checker& c) {
  const SdsFamily& a = catalog_find("gf27-a")->family;
  const SdsFamily& b = catalog_find("gf27-b")->family;
  c.require((a.blocks[0] & a.blocks[1] & a.blocks[2]).size() == 4,
            "|A1 & A2 & A3| == 4");
  c.require((b.blocks[0] & b.blocks[1] & b.blocks[2]).size() == 2,
            "|B1 & B2 & B3| == 2");
  c.require(!equivalent(a, b, true), "not equivalent (translations allowed)");
  c.require(!equivalent(a, b, false), "not equivalent (translations excluded)");
  c.require(equivalent(a, a, true), "self-equivalence sanity");
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    void (*fn)(Checker&);
  };
  const Criterion criteria[] = {
      {1, "catalog verification", criterion1},
      {2, "Goethals-Seidel certification", criterion2},
      {3, "m-sequence pipeline", criterion3},
      {4, "parameter tables", criterion4},
      {5, "small-order exhaustive counts", criterion5},
      {6, "multicirculant searches at order 9", criterion6},
      {7, "developed design on 127 points", criterion7},
      {8, "matrix-identity cross-check", criterion8},
      {9, "GF(27) non-equivalence", criterion9},
  };

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const Criterion& cr : criteria) {
    if (only != 0 && cr.id != only) continue;
    Checker c;
    auto t0 = Clock::now();
    cr.fn(c);
    double dt = seconds_since(t0);
    char line[160];
    snprintf(line, sizeof line, "%s  criterion %d: %s [%.2f s]", c.ok ? "PASS" : "FAIL",
             cr.id, cr.name, dt);
    std::cout << line << "\n" << c.notes.str();
    if (!c.ok) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures;
}
