#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "semiproper/graph.hpp"

namespace semiproper {

enum class SolveKind { chi_s_brute, chi_s_labeling, chi_proper };
std::string_view solve_kind_name(SolveKind k);

/// Wall-clock and node caps; exceeding either makes the report inconclusive.
struct Budget {
  double seconds = std::numeric_limits<double>::infinity();
  std::int64_t nodes = std::numeric_limits<std::int64_t>::max();
};

struct SolveReport {
  SolveKind kind = SolveKind::chi_s_brute;
  std::int64_t mu_cap = 0;
  std::int64_t max_weight = 2;
  /// Exact optimum when found; the witness then attains it and every smaller
  /// cap was refuted.
  std::optional<std::int64_t> value;
  std::optional<Orientation> witness;
  /// Largest k for which "no orientation with μ ≤ k" was proved; -1 if none.
  std::int64_t refuted_up_to = -1;
  bool budget_exhausted = false;
  std::int64_t nodes = 0;
  double elapsed_seconds = 0.0;

  /// No value, no exhaustion: μ ≤ mu_cap is impossible.
  bool certificate() const { return !value && !budget_exhausted; }
};

/// Minimum μ over semi-proper orientations with weights in 1..max_weight,
/// by branch and bound over per-edge (direction, weight), for caps 0, 1, ...,
/// mu_cap in turn.
SolveReport chi_s_brute(const Graph& g, int max_weight = 2, std::int64_t mu_cap = 4, Budget budget = {});

/// Same question decided through in-weight labelings: proper labelings
/// t: V -> {0..k} are enumerated with forward checking, and each partial
/// labeling is kept only if some orientation has in-degree d(v) in
/// [ceil(t(v)/2), t(v)] at every labelled vertex (one bounded max-flow).
/// Weights are restricted to {1, 2}. `workers` > 1 splits the search by
/// the first labelling decisions.
SolveReport chi_s_labeling(const Graph& g, std::int64_t mu_cap, Budget budget = {}, int workers = 1);

/// Proper orientation number (all weights 1).
SolveReport chi_proper(const Graph& g, std::int64_t cap, Budget budget = {});

/// An orientation with weights in {1,2} realising the in-weight labelling
/// `t`, if one exists (degree-window max-flow).
std::optional<Orientation> realize_labeling(const Graph& g, std::span<const std::int64_t> t);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

struct AuditReport {
  int omega = 0;
  int chi = 0;
  std::int64_t chi_s = 0;
  std::int64_t chi_proper = 0;
  int delta = 0;
  bool holds = false;
};

/// ω-1 ≤ χ-1 ≤ χ⃗ₛ ≤ χ⃗ ≤ Δ, every term computed exactly. Requires n ≤ 10 and
/// m ≤ 16 (std::invalid_argument otherwise).
AuditReport inequality_audit(const Graph& g);

struct TightnessReport {
  std::vector<int> class_sizes;  // class_sizes[i] = |V_i|
  std::int64_t in_weight_sum = 0;  // S
  int weight_two_arcs = 0;
  int edge_count = 0;
  bool sum_identity = false;     // S == |E| + #weight-2 arcs
  bool sum_at_least_edges = false;  // S >= |E|
  /// When classes are supplied: every triangle has one vertex in each class.
  std::optional<bool> classes_meet_every_triangle;
  std::optional<bool> classes_proper;
};

/// In-weight class sizes and sums for an orientation with weights in {1,2}
/// (std::invalid_argument otherwise).
TightnessReport tightness_report(const Graph& g, const Orientation& o,
                                 const std::array<std::vector<Vertex>, 3>* classes = nullptr);

}  // namespace semiproper
