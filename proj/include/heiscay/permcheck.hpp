#pragma once

// Permutation actions of the constructed groups and the checks used to
// certify automorphism, transitivity, block and order claims.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heiscay/budget.hpp"
#include "heiscay/digraph.hpp"
#include "heiscay/heisenberg.hpp"

namespace heiscay {

/// A bijection of {0, ..., n-1}. Composition reads left to right:
/// p.then(q)(x) = q(p(x)).
class Perm {
 public:
  Perm() = default;
  /// Throws InvalidPerm unless `image` is a permutation.
  explicit Perm(std::vector<Vertex> image);

  static Perm identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex x) const { return image_[x]; }
  std::span<const Vertex> image() const { return image_; }

  bool is_identity() const;
  Perm inverse() const;
  /// First apply *this, then `then`.
  Perm then(const Perm& then) const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Vertex> image_;
};

enum class GenRole {
  Translation,      // right translation by a group element
  Stabilizer,       // fixes the base vertex (b-map, tau, reflection)
  CoordinateLift,   // base generator acting in one coordinate
  DiagonalLift,     // base stabilizer generator acting in every coordinate
  CoordinateCycle,  // (v_0, ..., v_{a-1}) -> (v_{a-1}, v_0, ..., v_{a-2})
  CoordinateSwap,   // swap coordinates 0 and 1
};

std::string_view to_string(GenRole role);

struct GenTag {
  GenRole role;
  std::string description;
};

struct ActionGens {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<GenTag> tags;

  /// Appends after checking the degree (SizeMismatch otherwise).
  void add(Perm perm, GenRole role, std::string description);
};

struct BlockSystem {
  std::vector<std::vector<Vertex>> blocks;  // each sorted; sorted by first point

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

enum class Flavor { L, G };

/// L: vertices H (m^k), generators = right translation by each p in P plus the
/// vertex map of b.  G: vertices R (2 m^k), right translation by each s in S
/// plus the vertex map of b on R. Vertex numbering follows
/// enumerate_elements / enumerate_r.
ActionGens action_gens(const Params& p, Flavor flavor,
                       std::size_t budget = element_budget());

/// Throws SizeMismatch when the degrees differ.
bool is_automorphism(const Perm& perm, const Digraph& d);

/// Closure of {seed} under the generators, sorted.
std::vector<Vertex> orbit(const ActionGens& gens, Vertex seed);
/// Orbit of an arc, as sorted arc ids of d.
std::vector<std::size_t> arc_orbit(const ActionGens& gens, const Digraph& d,
                                   std::size_t arc_id);

struct Transitivity {
  bool vertex_transitive = false;
  bool arc_transitive = false;
};

/// Throws NotAutomorphism naming the first generator that does not preserve d.
Transitivity check_transitive(const ActionGens& gens, const Digraph& d);

/// Orbits of <z> on the vertices of the L (H) or G (R) action: right cosets
/// {g z^i}.
BlockSystem z_block_partition(const Params& p, Flavor flavor,
                              std::size_t budget = element_budget());

/// Set-orbit of `cell` under the generators. Returns the images when they are
/// pairwise equal-or-disjoint (and, for a transitive action, cover every
/// point), std::nullopt otherwise.
std::optional<BlockSystem> block_orbit(const ActionGens& gens,
                                       std::span<const Vertex> cell);

bool check_block(const ActionGens& gens, std::span<const Vertex> cell);

/// Smallest block containing u and w (Atkinson). Throws NotTransitive.
std::vector<Vertex> min_block(const ActionGens& gens, Vertex u, Vertex w);

/// Order of the generated group by breadth-first closure under composition.
/// Throws CapExceeded once more than `cap` elements are found or the stored
/// permutations would exceed `storage_cap` entries in total.
std::uint64_t closure_order(const ActionGens& gens, std::uint64_t cap,
                            std::uint64_t storage_cap = 50'000'000);

/// Action of base wr Sym(a) on the a-tuples of cartesian_power: every base
/// generator in every coordinate, plus the coordinate cycle and (a >= 2) the
/// transposition of coordinates 0 and 1.
ActionGens wreath_lift(const ActionGens& base, unsigned a,
                       std::size_t budget = element_budget());

/// Subgroup of base wr Sym(a) in which Translation generators act in one
/// coordinate at a time and every other base generator acts in all
/// coordinates at once, plus the coordinate cycle and transposition. If the
/// translations form a regular subgroup T and B is a subgroup of T invariant
/// under the remaining generators, the diagonal {(u, ..., u) | u in B} is a
/// block of this group even when it is not one for the full wreath product.
ActionGens diagonal_lift(const ActionGens& base, unsigned a,
                         std::size_t budget = element_budget());

/// Index of the tuple (v, ..., v) in the cartesian power of an n-vertex digraph.
Vertex diagonal_vertex(std::size_t n, unsigned a, Vertex v);

}  // namespace heiscay
