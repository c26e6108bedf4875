#include "sdskit/io.hpp"

#include <fstream>
#include <sstream>

namespace sdskit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

uint32_t parse_u32(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string("bad ") + what + ": \"" + s + "\"");
  unsigned long v = 0;
  try {
    v = std::stoul(s);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(what) + " out of range: \"" + s + "\"");
  }
  if (v > 0xfffffffful) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<uint32_t>(v);
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  if (text.rfind("cyclic:", 0) == 0)
    return GroupSpec::cyclic(parse_u32(text.substr(7), "cyclic order"));
  if (text.rfind("ea:", 0) == 0) {
    std::string rest = text.substr(3);
    size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected ea:<p>^<k>:<c0,...,ck>, got \"" + text + "\"");
    std::string pk = rest.substr(0, colon);
    size_t caret = pk.find('^');
    if (caret == std::string::npos)
      throw std::invalid_argument("expected <p>^<k> in \"" + text + "\"");
    uint32_t p = parse_u32(pk.substr(0, caret), "characteristic");
    uint32_t k = parse_u32(pk.substr(caret + 1), "degree");
    std::vector<uint32_t> coeffs;
    for (const std::string& c : split(rest.substr(colon + 1), ','))
      coeffs.push_back(parse_u32(c, "modulus coefficient"));
    return GroupSpec::elementary_abelian(p, k, std::move(coeffs));
  }
  throw std::invalid_argument("unrecognized group spec \"" + text +
                              "\" (expected cyclic:<n> or ea:<p>^<k>:<coeffs>)");
}

std::string group_spec_to_string(const GroupSpec& spec) {
  if (spec.kind == GroupKind::cyclic) return "cyclic:" + std::to_string(spec.n);
  std::ostringstream os;
  os << "ea:" << spec.p << "^" << spec.k << ":";
  for (size_t i = 0; i < spec.modulus.size(); ++i) os << (i ? "," : "") << spec.modulus[i];
  return os.str();
}

uint32_t parse_field_element(const GroupSpec& spec, const std::string& expr) {
  if (spec.kind != GroupKind::elementary_abelian)
    throw std::invalid_argument("field element expressions need a field-backed group");
  const uint32_t p = spec.p;
  std::vector<int64_t> digits(spec.k, 0);

  size_t i = 0;
  while (i < expr.size()) {
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i >= expr.size()) throw std::invalid_argument("dangling sign in \"" + expr + "\"");
    int64_t coeff = 1;
    bool saw_digits = false;
    while (i < expr.size() && isdigit(static_cast<unsigned char>(expr[i]))) {
      if (!saw_digits) coeff = 0;
      saw_digits = true;
      coeff = coeff * 10 + (expr[i] - '0');
      ++i;
    }
    uint32_t power = 0;
    if (i < expr.size() && expr[i] == 'x') {
      ++i;
      power = 1;
      if (i < expr.size() && expr[i] == '^') {
        ++i;
        uint32_t e = 0;
        if (i >= expr.size() || !isdigit(static_cast<unsigned char>(expr[i])))
          throw std::invalid_argument("bad exponent in \"" + expr + "\"");
        while (i < expr.size() && isdigit(static_cast<unsigned char>(expr[i])))
          e = e * 10 + (expr[i++] - '0');
        power = e;
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("unexpected character in \"" + expr + "\"");
    }
    if (power >= spec.k)
      throw std::invalid_argument("power x^" + std::to_string(power) +
                                  " out of range in \"" + expr + "\"");
    digits[power] += sign * coeff;
  }

  uint32_t enc = 0, base = 1;
  for (uint32_t d = 0; d < spec.k; ++d) {
    int64_t v = digits[d] % p;
    if (v < 0) v += p;
    enc += static_cast<uint32_t>(v) * base;
    base *= p;
  }
  return enc;
}

SdsFamily read_sds_file(std::istream& in) {
  std::string line;
  size_t lineno = 0;
  SdsFamily f;
  std::vector<std::vector<uint32_t>> raw_blocks;
  bool have_group = false, have_type = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "group") {
      std::string spec;
      ls >> spec;
      if (spec.empty()) throw ParseError(lineno, "missing group spec");
      try {
        f.group = make_group(parse_group_spec(spec));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      have_group = true;
    } else if (word == "type") {
      std::string t;
      ls >> t;
      try {
        f.declared_type = SymmetryType(t);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      have_type = true;
    } else if (word == "block") {
      if (!have_group) throw ParseError(lineno, "block before group line");
      std::vector<uint32_t> members;
      long long e;
      while (ls >> e) {
        if (e < 0 || static_cast<uint64_t>(e) >= f.group->order())
          throw ParseError(lineno, "element " + std::to_string(e) +
                                       " outside group of order " +
                                       std::to_string(f.group->order()));
        members.push_back(static_cast<uint32_t>(e));
      }
      if (!ls.eof()) throw ParseError(lineno, "malformed block element list");
      raw_blocks.push_back(std::move(members));
    } else {
      throw ParseError(lineno, "unknown directive \"" + word + "\"");
    }
  }
  if (!have_group) throw ParseError(lineno, "missing group line");
  if (!have_type) throw ParseError(lineno, "missing type line");
  if (raw_blocks.size() != 3 && raw_blocks.size() != 4)
    throw ParseError(lineno, "expected 3 or 4 block lines, got " +
                                 std::to_string(raw_blocks.size()));
  if (f.declared_type.size() != raw_blocks.size())
    throw ParseError(lineno, "type has " + std::to_string(f.declared_type.size()) +
                                 " letters but file has " +
                                 std::to_string(raw_blocks.size()) + " blocks");
  for (const auto& members : raw_blocks) {
    Block b(f.group->order());
    for (uint32_t e : members) {
      if (b.test(e))
        throw ParseError(lineno, "duplicate element " + std::to_string(e) + " in block");
      b.set(e);
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

SdsFamily read_sds_file_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sds_file(in);
}

void write_sds_file(std::ostream& out, const SdsFamily& f) {
  out << "group " << group_spec_to_string(f.group->spec()) << "\n";
  out << "type " << f.declared_type.str() << "\n";
  for (const Block& b : f.blocks) {
    out << "block";
    for (uint32_t e : b.members()) out << " " << e;
    out << "\n";
  }
}

void write_sds_file_to(const std::string& path, const SdsFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_sds_file(out, f);
}

void write_matrix(std::ostream& out, const IntMatrix& m, bool hadamard_header) {
  out << (hadamard_header ? "hadamard " : "matrix ") << m.order() << "\n";
  for (uint32_t r = 0; r < m.order(); ++r) {
    for (uint32_t c = 0; c < m.order(); ++c) {
      int32_t v = m.at(r, c);
      if (v != 1 && v != -1)
        throw std::invalid_argument("matrix export requires +-1 entries");
      out << (v == 1 ? '+' : '-');
    }
    out << "\n";
  }
}

IntMatrix read_matrix(std::istream& in) {
  std::string header;
  size_t lineno = 1;
  if (!std::getline(in, header)) throw ParseError(lineno, "empty matrix file");
  std::istringstream hs(header);
  std::string kind;
  uint32_t order = 0;
  hs >> kind >> order;
  if ((kind != "hadamard" && kind != "matrix") || order == 0)
    throw ParseError(lineno, "expected \"hadamard <order>\" or \"matrix <order>\"");
  IntMatrix m(order);
  for (uint32_t r = 0; r < order; ++r) {
    std::string row;
    ++lineno;
    if (!std::getline(in, row)) throw ParseError(lineno, "missing matrix row");
    if (row.size() != order)
      throw ParseError(lineno, "row has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(order));
    for (uint32_t c = 0; c < order; ++c) {
      if (row[c] == '+') m.at(r, c) = 1;
      else if (row[c] == '-') m.at(r, c) = -1;
      else throw ParseError(lineno, std::string("bad matrix character '") + row[c] + "'");
    }
  }
  return m;
}

IntMatrix read_matrix_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_matrix(in);
}

}  // namespace sdskit
