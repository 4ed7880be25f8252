#pragma once

// Plan, build and certify an arc-transitive digraph of valency k whose
// certifying group has blocks of size m.
//
// Composite k is reduced to a prime p | k: the prime-valency base is built
// (Heisenberg quotient for odd p, the valency-two constructions for p = 2) and
// its Cartesian (k/p)-th power is taken.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heiscay/budget.hpp"
#include "heiscay/digraph.hpp"
#include "heiscay/heisenberg.hpp"
#include "heiscay/permcheck.hpp"
#include "heiscay/smallvalency.hpp"

namespace heiscay {

struct BuildPlan {
  int k = 0;
  int m = 0;
  Kind kind = Kind::Graph;
  int base_prime = 0;
  unsigned power = 1;
  std::uint64_t base_vertices = 0;
  std::uint64_t predicted_vertices = 0;
};

/// Vertex count of the prime-valency base for (p, m, kind).
std::uint64_t base_vertex_count(int p, int m, Kind kind);

/// Picks the prime divisor p of k minimising (base size)^(k/p), preferring the
/// larger prime on ties. `base_prime` forces the choice (BadK unless it is a
/// prime divisor of k). Throws BadK for k < 2 and VacuousM for m < 2.
BuildPlan plan(int k, int m, Kind kind, std::optional<int> base_prime = std::nullopt);

struct BuildOutput {
  BuildPlan plan;
  Digraph digraph;
  ActionGens gens;
  /// The certified cell: the base z-block (or k = 2 block) through vertex 0,
  /// or its diagonal {(u, ..., u)} in the Cartesian power.
  std::vector<Vertex> cell;
  /// Set-orbit partition of `cell`; just {cell} when the orbit is not a
  /// block system.
  BlockSystem blocks;
  std::optional<Params> params;  // odd prime base only
  /// |T|^a * |stabiliser| * (a > 1 ? a! : 1) for the regular translation
  /// group T of the base.
  std::uint64_t predicted_group_order = 0;
};

/// Throws BudgetExceeded when plan.predicted_vertices > budget.
BuildOutput build(const BuildPlan& plan, std::size_t budget = element_budget());

struct CertifyOptions {
  std::size_t aut_cap = 256;
  std::uint64_t closure_cap = 100'000;
  bool timings = true;
};

struct MinBlockCheck {
  Vertex u = 0;
  Vertex w = 0;
  std::size_t size = 0;
  bool subset_of_cell = false;
  bool size_divides_m = false;
  bool equals_cell = false;
  bool passed = false;
};

struct AutReport {
  bool computed = false;
  std::string skipped_reason;
  std::uint64_t order = 0;
  bool capped = false;
  bool multiple_of_group_order = false;
  std::optional<std::uint64_t> ratio;
  std::optional<std::uint64_t> expected_ratio;
};

struct CertReport {
  BuildPlan plan;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::optional<std::size_t> valency;
  OrientationKind orientation = OrientationKind::Mixed;
  bool connected = false;
  bool generators_are_automorphisms = false;
  std::size_t generator_count = 0;
  bool vertex_transitive = false;
  bool arc_transitive = false;
  std::optional<std::uint64_t> group_order;
  std::string group_order_note;
  std::uint64_t predicted_group_order = 0;
  std::size_t block_size = 0;
  std::size_t block_count = 0;
  bool block_certified = false;
  MinBlockCheck min_block_crosscheck;
  std::optional<StructureReport> structure;
  AutReport aut;
  std::optional<std::vector<int>> v_vector_used;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> failures;

  bool certified() const { return failures.empty(); }
};

CertReport certify(const BuildOutput& built, const CertifyOptions& options = {});

/// Throws CertificationFailed naming the first failed property.
void require_certified(const CertReport& report);

/// JSON object with keys in alphabetical order. Timings are included only
/// when requested.
nlohmann::json to_json(const CertReport& report, bool include_timings = true);
nlohmann::json to_json(const BuildPlan& plan);

/// Command-line entry: subcommands build, certify, plan. Returns 0 on
/// success, 1 on certification failure, 2 on usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heiscay
