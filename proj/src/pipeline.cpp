#include "heiscay/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "heiscay/autsearch.hpp"
#include "heiscay/group_ext.hpp"

namespace heiscay {

namespace {

std::vector<int> prime_divisors(int k) {
  std::vector<int> out;
  for (int p = 2; p <= k; ++p) {
    if (k % p == 0 && is_prime(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t factorial(unsigned a) {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= a; ++i) out = saturating_mul(out, i);
  return out;
}

}  // namespace

std::uint64_t base_vertex_count(int p, int m, Kind kind) {
  if (p == 2) return k2_vertex_count(m, kind);
  const std::uint64_t heis = saturating_pow(static_cast<std::uint64_t>(m),
                                            static_cast<unsigned>(p));
  return kind == Kind::Oriented ? heis : saturating_mul(2, heis);
}

BuildPlan plan(int k, int m, Kind kind, std::optional<int> base_prime) {
  if (k < 2) {
    throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + ": valency must be at least 2");
  }
  if (m < 2) {
    throw Error(ErrorCode::VacuousM,
                "m = " + std::to_string(m) +
                    ": block size must be at least 2 (the case that $m=1$ is vacuous)");
  }
  std::vector<int> primes = prime_divisors(k);
  if (base_prime) {
    if (std::find(primes.begin(), primes.end(), *base_prime) == primes.end()) {
      throw Error(ErrorCode::BadK, "base prime " + std::to_string(*base_prime) +
                                       " is not a prime divisor of k = " + std::to_string(k));
    }
    primes = {*base_prime};
  }
  std::optional<BuildPlan> best;
  for (int p : primes) {
    BuildPlan candidate;
    candidate.k = k;
    candidate.m = m;
    candidate.kind = kind;
    candidate.base_prime = p;
    candidate.power = static_cast<unsigned>(k / p);
    candidate.base_vertices = base_vertex_count(p, m, kind);
    candidate.predicted_vertices = saturating_pow(candidate.base_vertices, candidate.power);
    // primes ascend, so <= keeps the larger prime on ties
    if (!best || candidate.predicted_vertices <= best->predicted_vertices) best = candidate;
  }
  return *best;
}

BuildOutput build(const BuildPlan& plan, std::size_t budget) {
  if (plan.predicted_vertices > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "planned " + std::to_string(plan.predicted_vertices) +
                    " vertices exceed budget " + std::to_string(budget));
  }
  BuildOutput out;
  out.plan = plan;

  Digraph base;
  ActionGens base_gens;
  BlockSystem base_blocks;
  std::uint64_t stabilizer_order = 0;
  if (plan.base_prime == 2) {
    SmallBuild small = build_k2(plan.m, plan.kind);
    base = std::move(small.digraph);
    base_gens = std::move(small.gens);
    base_blocks = std::move(small.blocks);
    stabilizer_order = 2;
  } else {
    const Params p = make_params(plan.base_prime, plan.m);
    const GenSets sets = gen_sets(p);
    if (plan.kind == Kind::Oriented) {
      const std::vector<HeisElem> elements = enumerate_elements(p, budget);
      base = cayley<HeisElem>(
          elements, sets.P,
          [&p](const HeisElem& s, const HeisElem& g) { return multiply(p, s, g); },
          [&p](const HeisElem& g) -> std::optional<std::size_t> { return index_of(p, g); },
          [](const HeisElem& g) { return label(g); });
      base_gens = action_gens(p, Flavor::L, budget);
      base_blocks = z_block_partition(p, Flavor::L, budget);
    } else {
      const std::vector<ExtElem> elements = enumerate_r(p, budget);
      base = cayley<ExtElem>(
          elements, sets.S,
          [&p](const ExtElem& s, const ExtElem& g) { return ext_multiply(p, s, g); },
          [&p](const ExtElem& g) -> std::optional<std::size_t> { return index_of_r(p, g); },
          [](const ExtElem& g) { return label(g); });
      base_gens = action_gens(p, Flavor::G, budget);
      base_blocks = z_block_partition(p, Flavor::G, budget);
    }
    stabilizer_order = static_cast<std::uint64_t>(plan.base_prime);
    out.params = p;
  }

  out.predicted_group_order = saturating_mul(
      saturating_mul(saturating_pow(base.num_vertices(), plan.power), stabilizer_order),
      plan.power > 1 ? factorial(plan.power) : 1);

  // blocks are sorted by first point, so blocks[0] holds vertex 0
  const std::vector<Vertex> base_cell = base_blocks.blocks.front();
  if (plan.power == 1) {
    out.digraph = std::move(base);
    out.gens = std::move(base_gens);
    out.cell = base_cell;
    out.blocks = std::move(base_blocks);
    return out;
  }

  out.digraph = cartesian_power(base, plan.power, budget);
  out.gens = diagonal_lift(base_gens, plan.power, budget);
  for (Vertex u : base_cell) {
    out.cell.push_back(diagonal_vertex(base.num_vertices(), plan.power, u));
  }
  std::sort(out.cell.begin(), out.cell.end());
  if (auto system = block_orbit(out.gens, out.cell)) {
    out.blocks = std::move(*system);
  } else {
    out.blocks.blocks = {out.cell};
  }
  return out;
}

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

CertReport certify(const BuildOutput& built, const CertifyOptions& options) {
  CertReport r;
  r.plan = built.plan;
  const Digraph& d = built.digraph;
  const int m = built.plan.m;
  r.vertices = d.num_vertices();
  r.arcs = d.num_arcs();
  r.predicted_group_order = built.predicted_group_order;
  r.generator_count = built.gens.gens.size();
  Stopwatch clock;
  auto fail = [&r](std::string what) { r.failures.push_back(std::move(what)); };
  auto lap = [&](const char* stage) { r.timings_ms.emplace_back(stage, clock.lap_ms()); };

  if (r.vertices != built.plan.predicted_vertices) fail("vertex count differs from plan");

  const auto valency = out_valency(d);
  if (const auto* v = std::get_if<std::size_t>(&valency)) r.valency = *v;
  if (r.valency != static_cast<std::size_t>(built.plan.k)) fail("valency");
  r.orientation = orientation_kind(d);
  const OrientationKind wanted =
      built.plan.kind == Kind::Graph ? OrientationKind::Graph : OrientationKind::Oriented;
  if (r.orientation != wanted) fail("orientation");
  r.connected = is_strongly_connected(d);
  if (!r.connected) fail("connected");
  lap("digraph");

  r.generators_are_automorphisms =
      std::all_of(built.gens.gens.begin(), built.gens.gens.end(),
                  [&d](const Perm& g) { return is_automorphism(g, d); });
  if (!r.generators_are_automorphisms) {
    fail("generators_are_automorphisms");
  } else {
    const Transitivity t = check_transitive(built.gens, d);
    r.vertex_transitive = t.vertex_transitive;
    r.arc_transitive = t.arc_transitive;
  }
  if (!r.vertex_transitive) fail("vertex_transitive");
  if (!r.arc_transitive) fail("arc_transitive");
  lap("transitivity");

  // Every cell of the system is an image of the first one, so a set-orbit of
  // the first cell that reproduces the whole partition certifies every cell.
  r.block_size = built.cell.size();
  r.block_count = built.blocks.blocks.size();
  {
    const auto system = block_orbit(built.gens, built.cell);
    std::set<std::vector<Vertex>> given(built.blocks.blocks.begin(), built.blocks.blocks.end());
    r.block_certified =
        system && std::set<std::vector<Vertex>>(system->blocks.begin(), system->blocks.end()) ==
                      given;
    for (const auto& cell : built.blocks.blocks) {
      if (cell.size() != static_cast<std::size_t>(m)) r.block_certified = false;
    }
  }
  if (!r.block_certified) fail("block_certified");
  if (r.block_size != static_cast<std::size_t>(m)) fail("block_size");
  lap("blocks");

  if (r.vertex_transitive && built.cell.size() >= 2) {
    MinBlockCheck& mb = r.min_block_crosscheck;
    mb.u = built.cell[0];
    mb.w = built.cell[1];
    const std::vector<Vertex> block = min_block(built.gens, mb.u, mb.w);
    mb.size = block.size();
    mb.subset_of_cell = std::includes(built.cell.begin(), built.cell.end(),
                                      block.begin(), block.end());
    mb.size_divides_m = m % static_cast<int>(mb.size) == 0;
    mb.equals_cell = block == built.cell;
    mb.passed = mb.subset_of_cell && mb.size_divides_m && (!is_prime(m) || mb.equals_cell);
  }
  if (!r.min_block_crosscheck.passed) fail("min_block_crosscheck");
  lap("min_block");

  try {
    r.group_order = closure_order(built.gens, options.closure_cap);
    if (*r.group_order != built.predicted_group_order) fail("group_order");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    r.group_order_note = std::string("skipped: ") + e.what();
  }
  lap("group_order");

  if (built.params && built.plan.power == 1) {
    const Params& p = *built.params;
    r.structure = structure_report(p);
    const StructureReport& s = *r.structure;
    if (s.group_order != group_order(p) || s.center_order != static_cast<std::uint64_t>(m) ||
        s.z_order != static_cast<std::uint64_t>(m) || !s.central_quotient_elementary_abelian) {
      fail("structure");
    }
    if (p.kind == QuotientKind::E) r.v_vector_used = p.v;
  }
  lap("structure");

  if (d.num_vertices() <= options.aut_cap) {
    const AutResult aut = count_automorphisms(d, options.aut_cap);
    r.aut.computed = true;
    r.aut.order = aut.aut_order;
    r.aut.capped = aut.capped;
    if (r.group_order) {
      r.aut.multiple_of_group_order = aut.aut_order % *r.group_order == 0;
      if (r.aut.multiple_of_group_order) r.aut.ratio = aut.aut_order / *r.group_order;
      if (!aut.capped && !r.aut.multiple_of_group_order) fail("aut_multiple_of_group_order");
    }
    // Observed ratio 2 for the graph on R/E; reported, never enforced.
    if (built.params && built.plan.power == 1 && built.plan.kind == Kind::Graph &&
        built.params->kind == QuotientKind::E) {
      r.aut.expected_ratio = 2;
    }
  } else {
    r.aut.skipped_reason = "vertices exceed aut cap " + std::to_string(options.aut_cap);
  }
  lap("aut");
  return r;
}

void require_certified(const CertReport& report) {
  if (!report.certified()) {
    throw Error(ErrorCode::CertificationFailed,
                "certification failed: " + report.failures.front());
  }
}

nlohmann::json to_json(const BuildPlan& plan) {
  return {{"base_prime", plan.base_prime},
          {"base_vertices", plan.base_vertices},
          {"k", plan.k},
          {"kind", std::string(to_string(plan.kind))},
          {"m", plan.m},
          {"power", plan.power},
          {"predicted_vertices", plan.predicted_vertices}};
}

nlohmann::json to_json(const CertReport& r, bool include_timings) {
  using nlohmann::json;
  json j;
  j["arc_transitive"] = r.arc_transitive;
  j["arcs"] = r.arcs;
  j["block_certified"] = r.block_certified;
  j["block_count"] = r.block_count;
  j["block_size"] = r.block_size;
  j["certified"] = r.certified();
  j["connected"] = r.connected;
  j["failures"] = r.failures;
  j["generator_count"] = r.generator_count;
  j["generators_are_automorphisms"] = r.generators_are_automorphisms;
  j["group_order"] = r.group_order ? json(*r.group_order) : json("skipped");
  if (!r.group_order_note.empty()) j["group_order_note"] = r.group_order_note;
  j["predicted_group_order"] = r.predicted_group_order;
  j["inputs"] = {{"k", r.plan.k}, {"kind", std::string(to_string(r.plan.kind))}, {"m", r.plan.m}};
  j["plan"] = to_json(r.plan);
  j["orientation"] = std::string(to_string(r.orientation));
  j["valency"] = r.valency ? json(*r.valency) : json("non-uniform");
  j["vertex_transitive"] = r.vertex_transitive;
  j["vertices"] = r.vertices;

  const MinBlockCheck& mb = r.min_block_crosscheck;
  j["min_block_crosscheck"] = {{"equals_cell", mb.equals_cell},
                               {"pair", {mb.u, mb.w}},
                               {"passed", mb.passed},
                               {"size", mb.size},
                               {"size_divides_m", mb.size_divides_m},
                               {"subset_of_cell", mb.subset_of_cell}};

  if (r.structure) {
    j["structure"] = {{"center_order", r.structure->center_order},
                      {"central_quotient_elementary_abelian",
                       r.structure->central_quotient_elementary_abelian},
                      {"derived_order", r.structure->derived_order},
                      {"group_order", r.structure->group_order},
                      {"z_order", r.structure->z_order}};
  } else {
    j["structure"] = nullptr;
  }

  if (r.aut.computed) {
    json aut = {{"capped", r.aut.capped},
                {"multiple_of_group_order", r.aut.multiple_of_group_order},
                {"order", r.aut.order}};
    aut["ratio"] = r.aut.ratio ? json(*r.aut.ratio) : json(nullptr);
    if (r.aut.expected_ratio) {
      aut["expected_ratio"] = *r.aut.expected_ratio;
      aut["agrees_with_expected"] = r.aut.ratio == r.aut.expected_ratio;
    }
    j["aut"] = aut;
  } else {
    j["aut"] = {{"skipped", r.aut.skipped_reason}};
  }

  if (r.v_vector_used) {
    j["v_vector_used"] = {{"rule", "v_i = 1 for i >= n; below n alternating from "
                                   "v_{n-1} = 0, so v_1 = n mod 2"},
                          {"v", *r.v_vector_used}};
  } else {
    j["v_vector_used"] = nullptr;
  }

  if (include_timings) {
    json t = json::object();
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    j["timings"] = t;
  }
  return j;
}

}  // namespace heiscay
