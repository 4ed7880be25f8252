#pragma once

// Automorphism group order of small digraphs by colour refinement and
// individualisation with backtracking.
//
// The order is obtained along a chain of point stabilisers: fix a path
// v_0, v_1, ... of individualised vertices, and at each level find, for every
// vertex w in the target cell of v_i, whether some automorphism fixing
// v_0..v_{i-1} maps v_i to w. |Aut| is the product of the orbit sizes.
// Levels are processed bottom-up so that automorphisms found deeper in the
// chain prune candidate images higher up.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "heiscay/digraph.hpp"
#include "heiscay/permcheck.hpp"

namespace heiscay {

using Coloring = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultAutVertexCap = 256;
inline constexpr std::uint64_t kDefaultAutNodeBudget = 5'000'000;

/// Coarsest stable refinement of `initial` under the signature
/// (own colour, multiset of out-neighbour colours, multiset of in-neighbour
/// colours). Colour ids are ranks of signatures, so the numbering depends only
/// on the coloured digraph up to isomorphism.
Coloring refine_colors(const Digraph& d, const Coloring& initial);

struct AutResult {
  std::uint64_t aut_order = 1;
  std::vector<Perm> generators_found;
  std::size_t vertices = 0;
  /// Set when the search node budget ran out or the order overflowed; the
  /// order is then only a lower bound.
  bool capped = false;
};

/// Throws CapExceeded when d has more than vertex_cap vertices.
AutResult count_automorphisms(const Digraph& d,
                              std::size_t vertex_cap = kDefaultAutVertexCap,
                              std::uint64_t node_budget = kDefaultAutNodeBudget);

}  // namespace heiscay
