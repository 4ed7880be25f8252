#pragma once

// Valency-two base cases:
//   graph:               the cycle C_{2m}
//   oriented, m >= 3:    Cay(Z_3 x Z_m, {(1,1), (1,-1)})
//   oriented, m = 2:     Cay(Z_4 x Z_2, {(1,0), (1,1)})

#include "heiscay/digraph.hpp"
#include "heiscay/permcheck.hpp"

namespace heiscay {

enum class Kind { Graph, Oriented };

std::string_view to_string(Kind kind);

struct SmallBuild {
  Digraph digraph;
  ActionGens gens;
  BlockSystem blocks;
  OrientationKind kind = OrientationKind::Graph;
};

/// Throws VacuousM when m < 2.
SmallBuild build_k2(int m, Kind kind);

/// Vertex count of build_k2(m, kind): 2m, 3m, or 8 for the oriented m = 2 case.
std::size_t k2_vertex_count(int m, Kind kind);

}  // namespace heiscay
