#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdskit/matrix.hpp"
#include "sdskit/sds.hpp"

namespace sdskit {

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  size_t line;
};

/// Group spec text: "cyclic:<n>" or "ea:<p>^<k>:<c0,c1,...,ck>" with the
/// modulus coefficients constant-first and leading coefficient 1.
GroupSpec parse_group_spec(const std::string& text);
std::string group_spec_to_string(const GroupSpec& spec);

/// Parses a field element written as a polynomial expression in x, e.g.
/// "1+2x", "x^2-x+1", "2x". Signs +/- only (no ± here); whitespace free.
uint32_t parse_field_element(const GroupSpec& spec, const std::string& expr);

/// SDS file format:
///   group <spec>
///   type <3 or 4 letters over s,k,*>
///   block <e1 e2 ...>        (one line per block, encodings ascending)
SdsFamily read_sds_file(std::istream& in);
SdsFamily read_sds_file_from(const std::string& path);
void write_sds_file(std::ostream& out, const SdsFamily& f);
void write_sds_file_to(const std::string& path, const SdsFamily& f);

/// Matrix export format: header "hadamard <order>" or "matrix <order>",
/// then one row per line with characters '+'/'-'.
void write_matrix(std::ostream& out, const IntMatrix& m, bool hadamard_header);
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_from(const std::string& path);

}  // namespace sdskit
