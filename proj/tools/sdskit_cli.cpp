// Command line front end: verification, Goethals-Seidel construction,
// the embedded catalog, parameter tables, and exhaustive search.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 search budget exhausted.

#include <CLI11.hpp>

#include <chrono>
#include <cinttypes>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sdskit/constructions.hpp"
#include "sdskit/equivalence.hpp"
#include "sdskit/io.hpp"
#include "sdskit/matrix.hpp"
#include "sdskit/search.hpp"
#include "sdskit/sds.hpp"
#include "sdskit/spence.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string k_list(const sdskit::SdsParams& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.k.size(); ++i) os << (i ? "," : "") << p.k[i];
  return os.str();
}

std::string first_line(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

int verify_sds_file(const std::string& path, bool tsv) {
  sdskit::SdsFamily f = sdskit::read_sds_file_from(path);
  sdskit::VerifyReport r = sdskit::verify_sds(f);
  sdskit::SymmetryType detected = sdskit::type_of(f);
  bool eq3 = r.params.satisfies_eq3();
  if (tsv) {
    std::cout << path << "\t" << (r.ok ? "pass" : "fail") << "\t"
              << r.params.to_string() << "\t" << detected.str() << "\t"
              << (r.ok ? "-" : r.error) << "\n";
  } else if (r.ok) {
    std::cout << "verify " << path << ": pass " << r.params.to_string() << " type "
              << detected.str() << " eq1=ok eq3=" << (eq3 ? "ok" : "n/a") << "\n";
  } else {
    std::cout << "verify " << path << ": fail " << r.error << "\n";
  }
  if (r.ok && !(detected == f.declared_type))
    std::cout << "note: declared type " << f.declared_type.str() << ", detected "
              << detected.str() << "\n";
  return r.ok ? kExitOk : kExitVerifyFailure;
}

int verify_matrix_file(const std::string& path, bool tsv) {
  sdskit::IntMatrix m = sdskit::read_matrix_from(path);
  bool had = sdskit::is_hadamard(m);
  bool skew = sdskit::is_skew_type(m);
  if (tsv)
    std::cout << path << "\t" << (had ? "pass" : "fail") << "\torder " << m.order()
              << "\thadamard=" << had << "\tskew=" << skew << "\n";
  else
    std::cout << "verify " << path << ": order " << m.order() << " hadamard="
              << (had ? "yes" : "NO") << " skew_type=" << (skew ? "yes" : "no") << "\n";
  return had ? kExitOk : kExitVerifyFailure;
}

int cmd_verify(const std::string& path, bool tsv) {
  std::string head = first_line(path);
  if (head.rfind("hadamard", 0) == 0 || head.rfind("matrix", 0) == 0)
    return verify_matrix_file(path, tsv);
  return verify_sds_file(path, tsv);
}

int construct_from_family(const sdskit::SdsFamily& f, const std::string& out,
                          const std::string& label, bool tsv, uint64_t seed) {
  auto t0 = Clock::now();
  sdskit::VerifyReport r = sdskit::verify_sds(f);
  if (!r.ok) {
    std::cout << "construct " << label << ": verification failed: " << r.error << "\n";
    return kExitVerifyFailure;
  }
  if (f.blocks.size() != 4) {
    std::cout << "construct " << label << ": need 4 blocks, got " << f.blocks.size()
              << "\n";
    return kExitVerifyFailure;
  }
  sdskit::TypeCheckOptions opts;
  opts.seed = seed;
  std::array<sdskit::IntMatrix, 4> c;
  for (size_t i = 0; i < 4; ++i) {
    c[i] = sdskit::char_matrix(*f.group, f.blocks[i]);
    if (!sdskit::is_type1(*f.group, c[i], opts)) {
      std::cout << "construct " << label << ": block " << i + 1
                << " gave a non-type-I matrix\n";
      return kExitVerifyFailure;
    }
  }
  sdskit::IntMatrix h = sdskit::goethals_seidel(c[0], c[1], c[2], c[3],
                                                sdskit::r_matrix(*f.group));
  bool had = sdskit::is_hadamard(h);
  bool skew = sdskit::is_skew_type(h);
  if (!had) {
    std::cout << "construct " << label << ": assembled matrix is not Hadamard\n";
    return kExitVerifyFailure;
  }
  std::ofstream os(out);
  if (!os) {
    std::cout << "construct " << label << ": cannot write " << out << "\n";
    return kExitVerifyFailure;
  }
  sdskit::write_matrix(os, h, /*hadamard_header=*/true);
  if (tsv)
    std::cout << label << "\tpass\t" << r.params.to_string() << "\torder " << h.order()
              << "\thadamard=1\tskew=" << skew << "\t" << out << "\n";
  else
    std::cout << "construct " << label << ": " << r.params.to_string() << " -> order "
              << h.order() << " hadamard=yes skew_type=" << (skew ? "yes" : "no")
              << " -> " << out << " [" << ms_since(t0) << " ms]\n";
  return kExitOk;
}

int cmd_catalog_list(bool tsv) {
  for (const sdskit::CatalogEntry& e : sdskit::catalog()) {
    if (tsv)
      std::cout << e.id << "\t" << e.expected_params.to_string() << "\t"
                << e.expected_type.str() << "\t" << e.origin << "\n";
    else
      std::cout << e.id << " " << e.expected_params.to_string() << " "
                << e.expected_type.str() << " -- " << e.origin << "\n";
  }
  return kExitOk;
}

int cmd_catalog_export(const std::string& id, const std::string& out) {
  const sdskit::CatalogEntry* e = sdskit::catalog_find(id);
  if (!e) {
    std::cerr << "unknown catalog id \"" << id << "\"\n";
    return kExitUsage;
  }
  if (out.empty()) {
    sdskit::write_sds_file(std::cout, e->family);
  } else {
    sdskit::write_sds_file_to(out, e->family);
    std::cout << "exported " << id << " -> " << out << "\n";
  }
  return kExitOk;
}

int cmd_catalog_check_all(bool tsv) {
  int failures = 0;
  for (const sdskit::CatalogEntry& e : sdskit::catalog()) {
    auto t0 = Clock::now();
    sdskit::VerifyReport r = sdskit::verify_sds(e.family);
    sdskit::SymmetryType detected = sdskit::type_of(e.family);
    bool ok = r.ok && r.params == e.expected_params && detected == e.expected_type;
    if (!ok) ++failures;
    if (tsv)
      std::cout << e.id << "\t" << (ok ? "pass" : "fail") << "\t"
                << r.params.to_string() << "\t" << detected.str() << "\n";
    else
      std::cout << (ok ? "pass " : "FAIL ") << e.id << " " << r.params.to_string()
                << " " << detected.str() << " [" << ms_since(t0) << " ms]\n";
  }
  try {
    sdskit::SpenceTrace trace = sdskit::spence63();
    std::cout << "pass spence63 pipeline (period " << trace.period << ", translate "
              << trace.translate << ")\n";
  } catch (const sdskit::PipelineError& e) {
    ++failures;
    std::cout << "FAIL spence63 pipeline: " << e.what() << "\n";
  }
  if (failures) std::cout << failures << " failure(s)\n";
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

int cmd_params(uint32_t n, bool tsv) {
  const char* types[4] = {"ssss", "ksss", "kkss", "kkks"};
  for (const sdskit::SdsParams& p : sdskit::feasible_params(n)) {
    std::ostringstream a;
    auto av = p.a();
    for (size_t i = 0; i < av.size(); ++i) a << (i ? "," : "") << av[i];
    if (tsv) {
      std::cout << n << "\t" << k_list(p) << "\t" << p.lambda << "\t" << a.str();
      for (const char* t : types)
        std::cout << "\t"
                  << (sdskit::type_compatible(p, sdskit::SymmetryType(t)) ? "ok" : "x");
      std::cout << "\n";
    } else {
      std::cout << "k=" << k_list(p) << " lambda=" << p.lambda << " a=" << a.str();
      for (const char* t : types)
        std::cout << " " << t << ":"
                  << (sdskit::type_compatible(p, sdskit::SymmetryType(t)) ? "ok" : "x");
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_search(const std::string& group, const std::string& k_csv, const std::string& type,
               bool no_translation, const std::string& dedup, uint64_t budget,
               uint32_t workers, uint64_t limit, const std::string& out_dir, bool tsv) {
  sdskit::SearchSpec spec;
  spec.group = sdskit::parse_group_spec(group);
  {
    std::istringstream ks(k_csv);
    std::string item;
    while (std::getline(ks, item, ','))
      spec.k.push_back(static_cast<uint32_t>(std::stoul(item)));
  }
  spec.type = sdskit::SymmetryType(type);
  spec.allow_translation = !no_translation;
  spec.dedup = dedup == "none" ? sdskit::DedupMode::none : sdskit::DedupMode::canonical;
  spec.budget = budget;
  spec.workers = workers;
  if (limit > 0) spec.limit = limit;

  sdskit::SdsParams params;
  params.n = sdskit::Group(spec.group).order();
  params.k = spec.k;
  params.lambda = 0;
  for (uint32_t ki : spec.k) params.lambda += ki;
  params.lambda -= params.n;
  if (!sdskit::type_compatible(params, spec.type)) {
    std::cout << "incompatible\n";
    return kExitOk;
  }

  auto t0 = Clock::now();
  sdskit::SearchResult result = sdskit::search(spec);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const sdskit::SdsFamily& f : result.families) {
      std::string key = sdskit::canonical_form(f, spec.allow_translation);
      char name[32];
      snprintf(name, sizeof name, "sds-%016" PRIx64 ".sds", fnv1a(key));
      sdskit::write_sds_file_to((std::filesystem::path(out_dir) / name).string(), f);
    }
  }

  if (tsv)
    std::cout << group << "\t" << k_csv << "\t" << type << "\t" << result.families.size()
              << "\t" << result.nodes << "\t" << (result.complete ? "complete" : "partial")
              << "\n";
  else
    std::cout << (spec.dedup == sdskit::DedupMode::none ? "families: " : "classes: ")
              << result.families.size() << " (nodes: " << result.nodes
              << (result.complete ? "" : ", PARTIAL: budget exhausted") << ") ["
              << ms_since(t0) << " ms]\n";
  return result.complete ? kExitOk : kExitBudget;
}

int cmd_spence(const std::string& dump_dir) {
  sdskit::SpenceTrace t = sdskit::spence63();
  std::cout << "period " << t.period << "\n";
  std::cout << "rds large (" << t.rds_large.quotient << "," << t.rds_large.subgroup << ","
            << t.rds_large.k << "," << t.rds_large.lambda << ")\n";
  std::cout << "rds reduced (" << t.rds_reduced.quotient << "," << t.rds_reduced.subgroup
            << "," << t.rds_reduced.k << "," << t.rds_reduced.lambda << ") frame ("
            << t.frame_tuple[0] << "," << t.frame_tuple[1] << "," << t.frame_tuple[2]
            << "," << t.frame_tuple[3] << ")\n";
  std::cout << "translate " << t.translate << ", |Y| = " << t.y.size() << "\n";
  sdskit::VerifyReport r = sdskit::verify_sds(t.family);
  std::cout << "family " << r.params.to_string() << " type "
            << sdskit::type_of(t.family).str() << "\n";
  if (!dump_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(dump_dir);
    auto dump_seq = [&](const std::string& name, const std::vector<uint32_t>& v) {
      std::ofstream os(fs::path(dump_dir) / name);
      for (size_t i = 0; i < v.size(); ++i) os << v[i] << (i + 1 == v.size() ? "" : " ");
      os << "\n";
    };
    dump_seq("sequence-prefix.txt", t.seq_prefix);
    dump_seq("x-indices.txt", t.x_indices);
    dump_seq("y-reduced.txt", t.y_reduced);
    dump_seq("y-fixed.txt", t.y);
    for (int r8 = 0; r8 < 8; ++r8)
      dump_seq("y-class-" + std::to_string(r8) + ".txt", t.classes[r8]);
    for (int i = 0; i < 4; ++i)
      dump_seq("block-" + std::to_string(i + 1) + "-pre.txt", t.pre_blocks[i].members());
    sdskit::write_sds_file_to((fs::path(dump_dir) / "spence63.sds").string(), t.family);
    std::cout << "stages dumped to " << dump_dir << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supplementary difference sets with symmetry: verify, construct, search"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand
  bool tsv = false;
  app.add_flag("--tsv", tsv, "machine-readable tab-separated output");

  auto* verify = app.add_subcommand("verify", "verify an SDS file or exported matrix");
  std::string verify_path;
  verify->add_option("file", verify_path, "input file")->required();

  auto* construct = app.add_subcommand("construct", "assemble the Goethals-Seidel matrix");
  std::string construct_path, construct_out = "hadamard.txt", construct_id;
  uint64_t seed = 0x5d5ea1u;
  construct->add_option("file", construct_path, "verified 4-block SDS file");
  construct->add_option("--id", construct_id, "catalog id instead of a file");
  construct->add_option("-o,--out", construct_out, "output matrix path");
  construct->add_option("--seed", seed, "seed for sampled type checks");

  auto* cat = app.add_subcommand("catalog", "embedded constructions");
  auto* cat_list = cat->add_subcommand("list", "list entries");
  auto* cat_export = cat->add_subcommand("export", "write one entry as an SDS file");
  std::string export_id, export_out;
  cat_export->add_option("id", export_id, "catalog id")->required();
  cat_export->add_option("-o,--out", export_out, "output path (default stdout)");
  auto* cat_check = cat->add_subcommand("check-all", "verify every entry and the pipeline");
  cat->require_subcommand(1);

  auto* params = app.add_subcommand("params", "feasible parameter rows for odd n");
  uint32_t params_n = 0;
  params->add_option("--n", params_n, "odd order >= 3")->required();

  auto* search_cmd = app.add_subcommand("search", "exhaustive SDS search");
  std::string s_group, s_k, s_type, s_dedup = "canonical", s_out;
  bool s_no_translation = false;
  uint64_t s_budget = 50'000'000, s_limit = 0;
  uint32_t s_workers = 1;
  search_cmd->add_option("--group", s_group, "group spec, e.g. cyclic:9")->required();
  search_cmd->add_option("--k", s_k, "block sizes, e.g. 4,4,3,2")->required();
  search_cmd->add_option("--type", s_type, "symmetry type, e.g. kkss")->required();
  search_cmd->add_flag("--no-translation", s_no_translation,
                       "exclude per-block translations from equivalence");
  search_cmd->add_option("--dedup", s_dedup, "none | canonical")
      ->check(CLI::IsMember({"none", "canonical"}));
  search_cmd->add_option("--budget", s_budget, "node budget");
  search_cmd->add_option("--workers", s_workers, "parallel workers");
  search_cmd->add_option("--limit", s_limit, "stop after this many families");
  search_cmd->add_option("--out", s_out, "directory for result SDS files");

  auto* spence = app.add_subcommand("spence63", "run the m-sequence pipeline");
  std::string dump_dir;
  spence->add_option("--dump", dump_dir, "directory for per-stage dumps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_path, tsv);
    if (construct->parsed()) {
      if (!construct_id.empty()) {
        const sdskit::CatalogEntry* e = sdskit::catalog_find(construct_id);
        if (!e) {
          std::cerr << "unknown catalog id \"" << construct_id << "\"\n";
          return kExitUsage;
        }
        return construct_from_family(e->family, construct_out, construct_id, tsv, seed);
      }
      if (construct_path.empty()) {
        std::cerr << "construct: need a file or --id\n";
        return kExitUsage;
      }
      return construct_from_family(sdskit::read_sds_file_from(construct_path),
                                   construct_out, construct_path, tsv, seed);
    }
    if (cat->parsed()) {
      if (cat_list->parsed()) return cmd_catalog_list(tsv);
      if (cat_export->parsed()) return cmd_catalog_export(export_id, export_out);
      if (cat_check->parsed()) return cmd_catalog_check_all(tsv);
    }
    if (params->parsed()) {
      if (params_n < 3 || params_n % 2 == 0) {
        std::cerr << "params: n must be odd and >= 3\n";
        return kExitUsage;
      }
      return cmd_params(params_n, tsv);
    }
    if (search_cmd->parsed())
      return cmd_search(s_group, s_k, s_type, s_no_translation, s_dedup, s_budget,
                        s_workers, s_limit, s_out, tsv);
    if (spence->parsed()) return cmd_spence(dump_dir);
  } catch (const sdskit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sdskit::PipelineError& e) {
    std::cerr << "pipeline error: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
