#pragma once

// Norm and pair documents.
//
//   norm: {"basis": [[col_1], ..., [col_n]], "dim": n, "label": "...",
//          "prime": p, "values": ["a_1", ..., "a_n"]}
//   pair: {"dim": n, "lattice": [[col_1], ...], "prime": p, "weights": [...]}
//
// Rationals are strings in lowest terms ("3", "-1/2"); "label" is optional.
// Keys are emitted sorted, so serialization is byte-stable.

#include <optional>
#include <string>
#include <string_view>

#include "btnorm/splittings.hpp"

namespace btnorm {

struct NormDocument {
  SplitNorm norm;
  std::optional<std::string> label;
};

/// Throws Error(malformed) on any syntax, schema or validity problem.
NormDocument parse_norm_document(std::string_view text);
std::string serialize_norm_document(const SplitNorm& norm, const std::optional<std::string>& label = std::nullopt);

SplittingPair parse_pair_document(std::string_view text);
std::string serialize_pair_document(const SplittingPair& pair);

}  // namespace btnorm
