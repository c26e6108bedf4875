#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "sdskit/constructions.hpp"
#include "sdskit/sds.hpp"

namespace sdskit {

/// Thrown when a stage of the m-sequence pipeline does not produce the
/// expected intermediate object; the message names the stage.
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full trace of the m-sequence construction of the (63;31,31,27,25;51)
/// SDS of type (kkss): every intermediate stage is kept for audit.
struct SpenceTrace {
  uint32_t period = 0;                  // minimal period of the sequence (15624)
  std::vector<uint32_t> seq_prefix;     // first terms of the sequence, encoded
  std::vector<uint32_t> x_indices;      // indices i with x_i = 1, in Z_15624
  RdsReport rds_large;                  // (126,124,125,1)
  std::vector<uint32_t> y_reduced;      // x_indices mod 504
  RdsReport rds_reduced;                // (126,4,125,31): Y avoids <126>
  // The reduction frame Z_504 = Z_63 x Z_8 written as (504/8, 8, k, lambda).
  std::array<uint32_t, 4> frame_tuple{};
  uint32_t translate = 0;               // offset making Y fixed under *125 (113)
  std::vector<uint32_t> y;              // the translated, multiplication-fixed Y
  std::array<std::vector<uint32_t>, 8> classes;  // y split by residue mod 8
  std::array<Block, 4> pre_blocks;      // blocks before complementing, over Z_63
  SdsFamily family;                     // final (63;31,31,27,25;51), type kkss
};

/// Runs the pipeline end to end: builds GF(125), checks the generator is
/// primitive, generates the recurrent sequence and confirms its minimal
/// period, checks both relative-difference-set stages, finds the
/// multiplication-fixed translate, splits into blocks, and normalizes to
/// the descending-size (kkss) family. Throws PipelineError on any stage
/// mismatch.
SpenceTrace spence63();

}  // namespace sdskit
