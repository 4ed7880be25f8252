#include "heiscay/autsearch.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

namespace heiscay {

namespace {

constexpr std::uint32_t kSeparator = std::numeric_limits<std::uint32_t>::max();

Coloring rank_values(const std::vector<std::uint64_t>& values) {
  std::vector<std::uint64_t> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring out(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    out[v] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), values[v]) - distinct.begin());
  }
  return out;
}

std::size_t color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

class Refiner {
 public:
  explicit Refiner(const Digraph& d) : d_(d), in_(d.in_neighbors()) {
    out_.resize(d.num_vertices());
    for (Vertex u = 0; u < d.num_vertices(); ++u) {
      const auto nbrs = d.out_neighbors(u);
      out_[u].assign(nbrs.begin(), nbrs.end());
    }
  }

  std::size_t size() const { return out_.size(); }

  Coloring refine(Coloring colors) const {
    const std::size_t n = out_.size();
    std::size_t count = color_count(colors);
    std::vector<std::vector<std::uint32_t>> sig(n);
    std::vector<std::size_t> order(n);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) signature(colors, v, sig[v]);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(),
                [&sig](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      Coloring next(n);
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
        next[order[i]] = id;
      }
      const std::size_t next_count = n == 0 ? 0 : id + 1;
      colors = std::move(next);
      if (next_count == count) return colors;
      count = next_count;
    }
  }

  // Per-colour neighbourhood profile of an equitable colouring.
  std::vector<std::vector<std::uint32_t>> quotient(const Coloring& colors) const {
    std::vector<std::vector<std::uint32_t>> out(color_count(colors));
    std::vector<char> done(out.size(), 0);
    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (done[colors[v]]) continue;
      done[colors[v]] = 1;
      signature(colors, v, out[colors[v]]);
    }
    return out;
  }

  bool is_automorphism(const std::vector<Vertex>& map) const {
    for (Vertex u = 0; u < out_.size(); ++u) {
      for (Vertex v : out_[u]) {
        if (!d_.has_arc(map[u], map[v])) return false;
      }
    }
    return true;
  }

 private:
  void signature(const Coloring& colors, std::size_t v,
                 std::vector<std::uint32_t>& sig) const {
    sig.clear();
    sig.push_back(colors[v]);
    const std::size_t out_start = sig.size();
    for (Vertex w : out_[v]) sig.push_back(colors[w]);
    std::sort(sig.begin() + static_cast<std::ptrdiff_t>(out_start), sig.end());
    sig.push_back(kSeparator);
    const std::size_t in_start = sig.size();
    for (Vertex w : in_[v]) sig.push_back(colors[w]);
    std::sort(sig.begin() + static_cast<std::ptrdiff_t>(in_start), sig.end());
  }

  const Digraph& d_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

Coloring individualize(const Coloring& colors, Vertex v) {
  std::vector<std::uint64_t> values(colors.size());
  for (std::size_t x = 0; x < colors.size(); ++x) values[x] = 2ULL * colors[x];
  values[v] += 1;
  return rank_values(values);
}

// Smallest non-singleton cell, lowest colour id on ties.
std::optional<std::uint32_t> target_cell(const Coloring& colors) {
  std::vector<std::size_t> sizes(color_count(colors), 0);
  for (auto c : colors) ++sizes[c];
  std::optional<std::uint32_t> best;
  for (std::uint32_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > 1 && (!best || sizes[c] < sizes[*best])) best = c;
  }
  return best;
}

std::vector<Vertex> cell_members(const Coloring& colors, std::uint32_t cell) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < colors.size(); ++v) {
    if (colors[v] == cell) out.push_back(v);
  }
  return out;
}

struct OrbitTracker {
  explicit OrbitTracker(std::size_t n) : parent(n), failed(n, 0) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    failed[a] = failed[a] || failed[b];
  }
  void absorb(const Perm& g) {
    for (Vertex x = 0; x < parent.size(); ++x) unite(x, g(x));
  }

  std::vector<Vertex> parent;
  std::vector<char> failed;
};

class Search {
 public:
  Search(const Refiner& refiner, std::uint64_t node_budget)
      : refiner_(refiner), budget_(node_budget) {}

  void build_first_path() {
    Coloring colors = refiner_.refine(Coloring(refiner_.size(), 0));
    path_colors_.push_back(colors);
    while (auto cell = target_cell(colors)) {
      const Vertex v = cell_members(colors, *cell).front();
      path_vertices_.push_back(v);
      path_cells_.push_back(*cell);
      colors = refiner_.refine(individualize(colors, v));
      path_colors_.push_back(colors);
    }
  }

  AutResult run() {
    AutResult result;
    result.vertices = refiner_.size();
    build_first_path();
    for (std::size_t level = path_vertices_.size(); level-- > 0;) {
      const Vertex v = path_vertices_[level];
      const Coloring& colors = path_colors_[level];
      OrbitTracker orbits(refiner_.size());
      for (const auto& g : result.generators_found) orbits.absorb(g);

      for (Vertex w : cell_members(colors, path_cells_[level])) {
        if (exhausted_) break;
        if (orbits.find(w) == orbits.find(v) || orbits.failed[orbits.find(w)]) continue;
        std::optional<std::vector<Vertex>> found =
            extend(level + 1, refiner_.refine(individualize(colors, w)));
        if (found) {
          result.generators_found.emplace_back(std::move(*found));
          orbits.absorb(result.generators_found.back());
        } else {
          orbits.failed[orbits.find(w)] = 1;
        }
      }

      std::uint64_t orbit_size = 0;
      for (Vertex w : cell_members(colors, path_cells_[level])) {
        if (orbits.find(w) == orbits.find(v)) ++orbit_size;
      }
      if (result.aut_order > std::numeric_limits<std::uint64_t>::max() / orbit_size) {
        result.capped = true;
      } else {
        result.aut_order *= orbit_size;
      }
    }
    result.capped = result.capped || exhausted_;
    return result;
  }

 private:
  bool compatible(const Coloring& left, const Coloring& right) const {
    if (color_count(left) != color_count(right)) return false;
    std::vector<std::size_t> left_sizes(color_count(left), 0);
    std::vector<std::size_t> right_sizes(color_count(right), 0);
    for (auto c : left) ++left_sizes[c];
    for (auto c : right) ++right_sizes[c];
    if (left_sizes != right_sizes) return false;
    return refiner_.quotient(left) == refiner_.quotient(right);
  }

  // Search for an automorphism mapping the first path's colouring at `depth`
  // onto `right`.
  std::optional<std::vector<Vertex>> extend(std::size_t depth, const Coloring& right) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    const Coloring& left = path_colors_[depth];
    if (!compatible(left, right)) return std::nullopt;
    if (depth == path_vertices_.size()) {
      std::vector<Vertex> by_color(right.size());
      for (Vertex y = 0; y < right.size(); ++y) by_color[right[y]] = y;
      std::vector<Vertex> map(left.size());
      for (Vertex x = 0; x < left.size(); ++x) map[x] = by_color[left[x]];
      if (refiner_.is_automorphism(map)) return map;
      return std::nullopt;
    }
    for (Vertex y : cell_members(right, path_cells_[depth])) {
      auto found = extend(depth + 1, refiner_.refine(individualize(right, y)));
      if (found || exhausted_) return found;
    }
    return std::nullopt;
  }

  const Refiner& refiner_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Coloring> path_colors_;
  std::vector<Vertex> path_vertices_;
  std::vector<std::uint32_t> path_cells_;
};

}  // namespace

Coloring refine_colors(const Digraph& d, const Coloring& initial) {
  if (initial.size() != d.num_vertices()) {
    throw Error(ErrorCode::SizeMismatch, "colouring size does not match vertex count");
  }
  std::vector<std::uint64_t> values(initial.begin(), initial.end());
  return Refiner(d).refine(rank_values(values));
}

AutResult count_automorphisms(const Digraph& d, std::size_t vertex_cap,
                              std::uint64_t node_budget) {
  if (d.num_vertices() > vertex_cap) {
    throw Error(ErrorCode::CapExceeded,
                std::to_string(d.num_vertices()) + " vertices exceed automorphism cap " +
                    std::to_string(vertex_cap));
  }
  const Refiner refiner(d);
  Search search(refiner, node_budget);
  return search.run();
}

}  // namespace heiscay
