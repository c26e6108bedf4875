#pragma once

#include <span>
#include <string>

#include "sdskit/sds.hpp"

namespace sdskit {

/// Canonical byte string of a family's equivalence orbit under the
/// transform group generated by: one global automorphism, any block
/// permutation, per-block negation and complementation, and (when
/// allow_translation) per-block translation. Equal canonical forms iff
/// the families are equivalent. Throws CapacityError above the
/// automorphism enumeration bound.
std::string canonical_form(const Group& g, std::span<const Block> blocks,
                           bool allow_translation);
std::string canonical_form(const SdsFamily& f, bool allow_translation);

bool equivalent(const SdsFamily& f, const SdsFamily& g, bool allow_translation);

}  // namespace sdskit
