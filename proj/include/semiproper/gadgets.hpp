#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semiproper {

/// Constraints for orienting a path v0 ... v(length-1). Positions are
/// 0-based. In-weights are those induced by the path alone, so the end
/// positions only count path arcs; distinctness is checked along the path.
struct GadgetSpec {
  int length = 2;
  int max_weight = 2;  // weight domain is 1..max_weight
  int mu_cap = 4;
  std::map<int, int> required;                // position -> in-weight
  std::map<int, std::vector<int>> avoid;      // position -> forbidden in-weights
  std::map<int, int> edge_weight;             // path edge i (vi, vi+1) -> weight

  /// Throws std::invalid_argument if the spec is malformed.
  void check() const;
};

struct PathArc {
  bool forward;  // v(i) -> v(i+1)
  int weight;
  friend bool operator==(const PathArc&, const PathArc&) = default;
};

struct Gadget {
  GadgetSpec spec;
  std::vector<PathArc> arcs;
  std::vector<int> in_profile;

  friend bool operator==(const Gadget& a, const Gadget& b) {
    return a.arcs == b.arcs && a.in_profile == b.in_profile;
  }
};

/// Exact search for a path orientation meeting `spec`. Dynamic programming
/// over (previous in-weight, carry into the current vertex); returns the
/// lexicographically smallest arc vector under the per-edge order
/// (forward,1) < (forward,2) < (backward,1) < (backward,2), or nullopt when
/// no orientation exists.
std::optional<Gadget> synthesize(const GadgetSpec& spec);

/// The same gadget read from the other end.
Gadget reverse(const Gadget& g);
GadgetSpec reverse(const GadgetSpec& s);

/// Path in-weights induced by `arcs` on a path with arcs.size()+1 vertices.
std::vector<int> path_profile(const std::vector<PathArc>& arcs);

/// The named closed-path profiles used by the orienter. The "long-*" profiles
/// are instantiated at `long_length` (at least 7).
std::vector<std::pair<std::string, GadgetSpec>> path_fixtures(int long_length = 7);

/// One named fixture, with the n >= 7 family instantiated at `length`.
GadgetSpec fixture_spec(const std::string& name, int length = 7);

}  // namespace semiproper
