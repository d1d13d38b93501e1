#pragma once

#include <cstddef>
#include <optional>

#include "dtc/simplicial_map.hpp"

namespace dtc {

enum class Verdict { kYes, kNo, kUnknown };

const char* to_string(Verdict v);

enum class MoveSet {
  /// Change the image of one domain vertex at a time. Two simplicial maps
  /// lie in one contiguity class iff such moves connect them.
  kElementary,
  /// Jump to any contiguous map (full neighbor enumeration).
  kContiguous,
};

struct SearchOptions {
  /// Maximum number of distinct maps visited by one class query.
  std::size_t budget = 1'000'000;
  /// Search among maps from the domain's strong-collapse core into the
  /// codomain's, joining the endpoints to them through the core retractions.
  bool reduce_to_core = true;
  MoveSet moves = MoveSet::kElementary;
  /// Drop intermediate steps whenever an earlier step is already contiguous
  /// to a later one.
  bool shorten = true;
};

struct ClassResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<ContiguityWitness> witness;  // set iff verdict == kYes
  std::size_t states = 0;                    // distinct maps visited
};

/// Decides whether f and g lie in one contiguity class. kNo is reported only
/// after the whole component of f has been exhausted; kUnknown when that
/// would exceed the budget.
ClassResult same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                  const SearchOptions& options = {});

/// Greedily replaces runs of steps by a direct jump to the farthest step
/// still contiguous to the current one.
ContiguityWitness shorten_witness(const ContiguityWitness& w);

}  // namespace dtc
