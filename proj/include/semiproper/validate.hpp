#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiproper/graph.hpp"

namespace semiproper {

struct Verdict {
  bool accepted = true;
  std::vector<std::string> violations;
  std::vector<std::int64_t> in_weights;  // recomputed from the arcs
  std::int64_t mu = 0;
};

/// Checks that `arcs` is a semi-proper orientation of `g`: every edge
/// oriented exactly once with positive weight, in-weights recomputed from the
/// arcs match `claimed_in_weights` (if non-empty), adjacent in-weights differ,
/// optional μ bound and optional maximum weight.
///
/// Deliberately independent of Orientation's own bookkeeping and of every
/// construction routine; it is the oracle the rest of the library is tested
/// against.
Verdict validate(const Graph& g, std::span<const Arc> arcs,
                 std::span<const std::int64_t> claimed_in_weights = {},
                 std::optional<std::int64_t> mu_bound = std::nullopt,
                 std::optional<std::int64_t> max_weight = std::nullopt);

Verdict validate(const Graph& g, const Orientation& o,
                 std::optional<std::int64_t> mu_bound = std::nullopt,
                 std::optional<std::int64_t> max_weight = std::nullopt);

}  // namespace semiproper
