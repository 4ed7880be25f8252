#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "heiscay/budget.hpp"
#include "heiscay/error.hpp"

namespace heiscay {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

enum class OrientationKind { Graph, Oriented, Mixed };

std::string_view to_string(OrientationKind kind);

/// Finite digraph without loops. Arcs are stored in compressed sparse rows
/// with sorted out-neighbour lists, so arc ids follow lexicographic (u, v)
/// order.
class Digraph {
 public:
  Digraph() = default;

  /// Duplicated arcs are merged. Throws InvalidArc for loops or endpoints
  /// outside [0, n_vertices).
  Digraph(std::size_t n_vertices, std::vector<Arc> arcs,
          std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_arcs() const { return targets_.size(); }

  std::span<const Vertex> out_neighbors(Vertex u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t out_degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }

  bool has_arc(Vertex u, Vertex v) const { return arc_id(u, v).has_value(); }
  std::optional<std::size_t> arc_id(Vertex u, Vertex v) const;
  Arc arc_at(std::size_t id) const;
  std::vector<Arc> arcs() const;

  /// In-neighbour lists, sorted.
  std::vector<std::vector<Vertex>> in_neighbors() const;

  /// Canonical printable label; falls back to the decimal index.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structural equality: vertex count and arc set. Labels are ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

/// Cayley digraph with arcs (g, s g): vertex i is elements[i], and for every
/// s in `connection` there is an arc from i to the index of mul(s, elements[i]).
/// Left multiplication makes right translations automorphisms.
///
/// `index_of(elem)` must return std::optional<std::size_t>. Throws NotClosed
/// when a product leaves the element list and LoopGenerated when a
/// connection element fixes a vertex (i.e. is the identity).
template <class Elem, class Mul, class IndexOf, class Labeler>
Digraph cayley(std::span<const Elem> elements, std::span<const Elem> connection,
               Mul mul, IndexOf index_of, Labeler labeler) {
  std::vector<Arc> arcs;
  arcs.reserve(elements.size() * connection.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : connection) {
      const std::optional<std::size_t> j = index_of(mul(s, elements[i]));
      if (!j) {
        throw Error(ErrorCode::NotClosed,
                    "product of connection element with " + labeler(elements[i]) +
                        " is outside the element list");
      }
      if (*j == i) {
        throw Error(ErrorCode::LoopGenerated,
                    "connection element " + labeler(s) + " generates a loop");
      }
      arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(*j));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& e : elements) labels.push_back(labeler(e));
  return Digraph(elements.size(), std::move(arcs), std::move(labels));
}

/// Convenience overload: element lookup through an ordered map.
template <class Elem, class Mul, class Labeler>
Digraph cayley(std::span<const Elem> elements, std::span<const Elem> connection,
               Mul mul, Labeler labeler) {
  std::map<Elem, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  auto lookup = [&index](const Elem& e) -> std::optional<std::size_t> {
    const auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  return cayley(elements, connection, mul, lookup, labeler);
}

struct NonUniform {
  Vertex first;
  std::size_t first_degree;
  Vertex second;
  std::size_t second_degree;
};

/// Common out-degree, or a witness pair of vertices with different degrees.
std::variant<std::size_t, NonUniform> out_valency(const Digraph& d);

OrientationKind orientation_kind(const Digraph& d);

/// Every vertex reachable from vertex 0 along arcs and along reversed arcs.
bool is_strongly_connected(const Digraph& d);

/// Cartesian power: vertices are a-tuples in lexicographic order (tuple
/// (v_0, ..., v_{a-1}) has index sum v_i n^{a-1-i}); an arc changes exactly
/// one coordinate along an arc of d. Throws BudgetExceeded when n^a > budget.
Digraph cartesian_power(const Digraph& d, unsigned a,
                        std::size_t budget = element_budget());

enum class ExportFormat { Dot, Edgelist };

struct ExportMeta {
  int k = 0;
  int m = 0;
};

/// Deterministic text rendering. Edgelist:
///   #heiscay 1 kind=<graph|oriented|mixed> k=<k> m=<m> vertices=<N> arcs=<A>
///   u v            (one line per arc, sorted by (u, v))
/// Dot: "digraph" with "u -> v;" lines, or "graph" with one "u -- v;" line
/// per unordered pair when the arc set is symmetric.
std::string export_digraph(const Digraph& d, ExportFormat format,
                           const ExportMeta& meta);

struct ParsedEdgelist {
  Digraph digraph;
  ExportMeta meta;
  std::string kind;
};

/// Reference parser for the edgelist format. Throws ParseError.
ParsedEdgelist parse_edgelist(std::string_view text);

}  // namespace heiscay
