#include "heiscay/permcheck.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "heiscay/group_ext.hpp"

namespace heiscay {

Perm::Perm(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (Vertex x : image_) {
    if (x >= image_.size() || seen[x]) {
      throw Error(ErrorCode::InvalidPerm, "image is not a permutation");
    }
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Perm(std::move(image));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Vertex>(i);
  Perm out;
  out.image_ = std::move(inv);
  return out;
}

Perm Perm::then(const Perm& then) const {
  if (then.size() != size()) {
    throw Error(ErrorCode::SizeMismatch, "composing permutations of different degree");
  }
  Perm out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[i] = then.image_[image_[i]];
  return out;
}

std::string_view to_string(GenRole role) {
  switch (role) {
    case GenRole::Translation: return "translation";
    case GenRole::Stabilizer: return "stabilizer";
    case GenRole::CoordinateLift: return "coordinate-lift";
    case GenRole::DiagonalLift: return "diagonal-lift";
    case GenRole::CoordinateCycle: return "coordinate-cycle";
    case GenRole::CoordinateSwap: return "coordinate-swap";
  }
  return "unknown";
}

void ActionGens::add(Perm perm, GenRole role, std::string description) {
  if (perm.size() != degree) {
    throw Error(ErrorCode::SizeMismatch,
                "generator of degree " + std::to_string(perm.size()) +
                    " added to action of degree " + std::to_string(degree));
  }
  gens.push_back(std::move(perm));
  tags.push_back(GenTag{role, std::move(description)});
}

ActionGens action_gens(const Params& p, Flavor flavor, std::size_t budget) {
  const GenSets sets = gen_sets(p);
  ActionGens out;
  if (flavor == Flavor::L) {
    const std::vector<HeisElem> elements = enumerate_elements(p, budget);
    out.degree = elements.size();
    for (const auto& s : sets.P) {
      std::vector<Vertex> image(elements.size());
      for (std::size_t i = 0; i < elements.size(); ++i) {
        image[i] = static_cast<Vertex>(index_of(p, multiply(p, elements[i], s)));
      }
      out.add(Perm(std::move(image)), GenRole::Translation,
              "right translation by " + label(s));
    }
    const HeisMorphism b = HeisMorphism::b(p);
    std::vector<Vertex> image(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      image[i] = static_cast<Vertex>(index_of(p, b(elements[i])));
    }
    out.add(Perm(std::move(image)), GenRole::Stabilizer, "b-map");
    return out;
  }

  const std::vector<ExtElem> elements = enumerate_r(p, budget);
  out.degree = elements.size();
  for (const auto& s : sets.S) {
    std::vector<Vertex> image(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      image[i] = static_cast<Vertex>(index_of_r(p, ext_multiply(p, elements[i], s)));
    }
    out.add(Perm(std::move(image)), GenRole::Translation,
            "right translation by " + label(s));
  }
  std::vector<Vertex> image(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    image[i] = static_cast<Vertex>(index_of_r(p, apply_b_ext(p, elements[i])));
  }
  out.add(Perm(std::move(image)), GenRole::Stabilizer, "b-map");
  return out;
}

bool is_automorphism(const Perm& perm, const Digraph& d) {
  if (perm.size() != d.num_vertices()) {
    throw Error(ErrorCode::SizeMismatch,
                "permutation of degree " + std::to_string(perm.size()) +
                    " on digraph with " + std::to_string(d.num_vertices()) +
                    " vertices");
  }
  // Injective on a finite arc set, so arcs map onto arcs as well.
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v : d.out_neighbors(u)) {
      if (!d.has_arc(perm(u), perm(v))) return false;
    }
  }
  return true;
}

std::vector<Vertex> orbit(const ActionGens& gens, Vertex seed) {
  std::vector<char> seen(gens.degree, 0);
  std::vector<Vertex> out{seed};
  seen[seed] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens.gens) {
      const Vertex y = g(out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> arc_orbit(const ActionGens& gens, const Digraph& d,
                                   std::size_t arc_id) {
  std::vector<char> seen(d.num_arcs(), 0);
  std::vector<std::size_t> out{arc_id};
  seen[arc_id] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const auto [u, v] = d.arc_at(out[head]);
    for (std::size_t gi = 0; gi < gens.gens.size(); ++gi) {
      const auto& g = gens.gens[gi];
      const auto id = d.arc_id(g(u), g(v));
      if (!id) {
        throw Error(ErrorCode::NotAutomorphism,
                    "generator " + std::to_string(gi) + " does not preserve the arcs");
      }
      if (!seen[*id]) {
        seen[*id] = 1;
        out.push_back(*id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Transitivity check_transitive(const ActionGens& gens, const Digraph& d) {
  for (std::size_t gi = 0; gi < gens.gens.size(); ++gi) {
    if (!is_automorphism(gens.gens[gi], d)) {
      throw Error(ErrorCode::NotAutomorphism,
                  "generator " + std::to_string(gi) + " (" +
                      gens.tags[gi].description + ") is not an automorphism");
    }
  }
  Transitivity out;
  if (d.num_vertices() == 0) return {true, true};
  out.vertex_transitive = orbit(gens, 0).size() == d.num_vertices();
  out.arc_transitive =
      d.num_arcs() == 0 || arc_orbit(gens, d, 0).size() == d.num_arcs();
  return out;
}

BlockSystem z_block_partition(const Params& p, Flavor flavor, std::size_t budget) {
  BlockSystem out;
  const std::uint64_t z_order = element_order(p, gen_z(p));
  if (flavor == Flavor::L) {
    const std::vector<HeisElem> elements = enumerate_elements(p, budget);
    std::vector<char> done(elements.size(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (done[i]) continue;
      std::vector<Vertex> cell;
      HeisElem g = elements[i];
      for (std::uint64_t e = 0; e < z_order; ++e) {
        const std::size_t idx = index_of(p, g);
        cell.push_back(static_cast<Vertex>(idx));
        done[idx] = 1;
        g = multiply(p, g, gen_z(p));
      }
      std::sort(cell.begin(), cell.end());
      out.blocks.push_back(std::move(cell));
    }
    return out;
  }
  const std::vector<ExtElem> elements = enumerate_r(p, budget);
  const ExtElem z = ext_from(gen_z(p));
  std::vector<char> done(elements.size(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (done[i]) continue;
    std::vector<Vertex> cell;
    ExtElem g = elements[i];
    for (std::uint64_t e = 0; e < z_order; ++e) {
      const std::size_t idx = index_of_r(p, g);
      cell.push_back(static_cast<Vertex>(idx));
      done[idx] = 1;
      g = ext_multiply(p, g, z);
    }
    std::sort(cell.begin(), cell.end());
    out.blocks.push_back(std::move(cell));
  }
  return out;
}

std::optional<BlockSystem> block_orbit(const ActionGens& gens,
                                       std::span<const Vertex> cell) {
  std::vector<std::vector<Vertex>> images;
  std::vector<std::int64_t> owner(gens.degree, -1);

  // Returns false on a partial overlap with an earlier image.
  auto admit = [&](std::vector<Vertex> image) {
    std::sort(image.begin(), image.end());
    const std::int64_t first_owner = owner[image.front()];
    if (first_owner >= 0) {
      return images[static_cast<std::size_t>(first_owner)] == image;
    }
    for (Vertex x : image) {
      if (owner[x] >= 0) return false;
    }
    for (Vertex x : image) owner[x] = static_cast<std::int64_t>(images.size());
    images.push_back(std::move(image));
    return true;
  };

  if (!admit(std::vector<Vertex>(cell.begin(), cell.end()))) return std::nullopt;
  std::vector<Vertex> image(cell.size());
  for (std::size_t head = 0; head < images.size(); ++head) {
    for (const auto& g : gens.gens) {
      const auto& src = images[head];
      for (std::size_t i = 0; i < src.size(); ++i) image[i] = g(src[i]);
      if (!admit(image)) return std::nullopt;
    }
  }

  if (gens.degree > 0 && orbit(gens, 0).size() == gens.degree) {
    for (std::int64_t o : owner) {
      if (o < 0) return std::nullopt;
    }
  }
  BlockSystem out{std::move(images)};
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool check_block(const ActionGens& gens, std::span<const Vertex> cell) {
  if (cell.empty()) {
    throw Error(ErrorCode::SizeMismatch, "check_block needs a non-empty cell");
  }
  return block_orbit(gens, cell).has_value();
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  std::vector<Vertex> parent;
};

}  // namespace

std::vector<Vertex> min_block(const ActionGens& gens, Vertex u, Vertex w) {
  if (orbit(gens, u).size() != gens.degree) {
    throw Error(ErrorCode::NotTransitive, "min_block needs a transitive action");
  }
  if (u == w) return {u};
  UnionFind classes(gens.degree);
  std::deque<std::pair<Vertex, Vertex>> queue;
  classes.parent[classes.find(w)] = classes.find(u);
  queue.emplace_back(u, w);
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& g : gens.gens) {
      const Vertex c = classes.find(g(a));
      const Vertex d = classes.find(g(b));
      if (c != d) {
        classes.parent[d] = c;
        queue.emplace_back(c, d);
      }
    }
  }
  std::vector<Vertex> out;
  const Vertex root = classes.find(u);
  for (Vertex x = 0; x < gens.degree; ++x) {
    if (classes.find(x) == root) out.push_back(x);
  }
  return out;
}

std::uint64_t closure_order(const ActionGens& gens, std::uint64_t cap,
                            std::uint64_t storage_cap) {
  const std::size_t n = gens.degree;
  if (n == 0) return 1;
  // Permutations are stored back to back; the hash set keys are slot numbers.
  std::vector<Vertex> arena;
  auto slot = [&arena, n](std::size_t i) {
    return std::span<const Vertex>(arena.data() + i * n, n);
  };
  auto hash = [&slot](std::size_t i) {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex x : slot(i)) h = (h ^ x) * 1099511628211ULL;
    return h;
  };
  auto equal = [&slot](std::size_t i, std::size_t j) {
    const auto a = slot(i);
    const auto b = slot(j);
    return std::equal(a.begin(), a.end(), b.begin());
  };
  std::unordered_set<std::size_t, decltype(hash), decltype(equal)> seen(64, hash, equal);

  const Perm id = Perm::identity(n);
  arena.insert(arena.end(), id.image().begin(), id.image().end());
  seen.insert(0);
  std::size_t count = 1;
  for (std::size_t head = 0; head < count; ++head) {
    for (const auto& g : gens.gens) {
      if (static_cast<std::uint64_t>(count + 1) * n > storage_cap) {
        throw Error(ErrorCode::CapExceeded,
                    "closure storage exceeds " + std::to_string(storage_cap) +
                        " entries after " + std::to_string(count) + " elements");
      }
      arena.resize((count + 1) * n);
      for (std::size_t x = 0; x < n; ++x) {
        arena[count * n + x] = g(arena[head * n + x]);
      }
      if (seen.insert(count).second) {
        ++count;
        if (count > cap) {
          throw Error(ErrorCode::CapExceeded,
                      "group order exceeds cap " + std::to_string(cap));
        }
      } else {
        arena.resize(count * n);
      }
    }
  }
  return count;
}

namespace {

struct TupleCoder {
  TupleCoder(std::size_t n, unsigned a, std::size_t budget) : n(n), a(a), stride(a, 1) {
    const std::uint64_t total_vertices = saturating_pow(n, a);
    if (total_vertices > budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  std::to_string(n) + "^" + std::to_string(a) +
                      " points exceed budget " + std::to_string(budget));
    }
    total = static_cast<std::size_t>(total_vertices);
    for (unsigned i = a - 1; i-- > 0;) stride[i] = stride[i + 1] * n;
  }
  Vertex digit(std::size_t x, unsigned i) const {
    return static_cast<Vertex>((x / stride[i]) % n);
  }

  std::size_t n;
  unsigned a;
  std::vector<std::size_t> stride;
  std::size_t total = 0;
};

Perm lift_in_coordinates(const TupleCoder& coder, const Perm& g,
                         const std::vector<unsigned>& coords) {
  std::vector<Vertex> image(coder.total);
  for (std::size_t x = 0; x < coder.total; ++x) {
    std::size_t y = x;
    for (unsigned i : coords) {
      const Vertex d = coder.digit(x, i);
      y = y - d * coder.stride[i] + g(d) * coder.stride[i];
    }
    image[x] = static_cast<Vertex>(y);
  }
  return Perm(std::move(image));
}

// Image tuple coordinate j takes source coordinate source[j].
Perm permute_coordinates(const TupleCoder& coder, const std::vector<unsigned>& source) {
  std::vector<Vertex> image(coder.total);
  for (std::size_t x = 0; x < coder.total; ++x) {
    std::size_t y = 0;
    for (unsigned j = 0; j < coder.a; ++j) y += coder.digit(x, source[j]) * coder.stride[j];
    image[x] = static_cast<Vertex>(y);
  }
  return Perm(std::move(image));
}

void add_coordinate_perms(const TupleCoder& coder, ActionGens& out) {
  std::vector<unsigned> cycle(coder.a);
  for (unsigned j = 0; j < coder.a; ++j) cycle[j] = (j + coder.a - 1) % coder.a;
  out.add(permute_coordinates(coder, cycle), GenRole::CoordinateCycle, "coordinate cycle");
  std::vector<unsigned> swap(coder.a);
  std::iota(swap.begin(), swap.end(), 0U);
  std::swap(swap[0], swap[1]);
  out.add(permute_coordinates(coder, swap), GenRole::CoordinateSwap, "swap coordinates 0,1");
}

}  // namespace

ActionGens wreath_lift(const ActionGens& base, unsigned a, std::size_t budget) {
  if (a <= 1) return base;
  const TupleCoder coder(base.degree, a, budget);
  ActionGens out;
  out.degree = coder.total;
  for (std::size_t gi = 0; gi < base.gens.size(); ++gi) {
    for (unsigned i = 0; i < a; ++i) {
      out.add(lift_in_coordinates(coder, base.gens[gi], {i}), GenRole::CoordinateLift,
              base.tags[gi].description + " @" + std::to_string(i));
    }
  }
  add_coordinate_perms(coder, out);
  return out;
}

ActionGens diagonal_lift(const ActionGens& base, unsigned a, std::size_t budget) {
  if (a <= 1) return base;
  const TupleCoder coder(base.degree, a, budget);
  std::vector<unsigned> all(a);
  std::iota(all.begin(), all.end(), 0U);
  ActionGens out;
  out.degree = coder.total;
  for (std::size_t gi = 0; gi < base.gens.size(); ++gi) {
    if (base.tags[gi].role == GenRole::Translation) {
      for (unsigned i = 0; i < a; ++i) {
        out.add(lift_in_coordinates(coder, base.gens[gi], {i}), GenRole::CoordinateLift,
                base.tags[gi].description + " @" + std::to_string(i));
      }
    } else {
      out.add(lift_in_coordinates(coder, base.gens[gi], all), GenRole::DiagonalLift,
              base.tags[gi].description + " @all");
    }
  }
  add_coordinate_perms(coder, out);
  return out;
}

Vertex diagonal_vertex(std::size_t n, unsigned a, Vertex v) {
  std::size_t x = 0;
  for (unsigned i = 0; i < a; ++i) x = x * n + v;
  return static_cast<Vertex>(x);
}

}  // namespace heiscay
