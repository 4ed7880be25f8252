#include "heiscay/smallvalency.hpp"

#include <algorithm>

namespace heiscay {

std::string_view to_string(Kind kind) {
  return kind == Kind::Graph ? "graph" : "oriented";
}

std::size_t k2_vertex_count(int m, Kind kind) {
  if (kind == Kind::Graph) return static_cast<std::size_t>(2 * m);
  return m == 2 ? 8 : static_cast<std::size_t>(3 * m);
}

namespace {

// Z_p x Z_q, element (x, y) at index x * q + y.
struct ProductGroup {
  int p;
  int q;

  std::size_t size() const { return static_cast<std::size_t>(p * q); }
  Vertex index(int x, int y) const {
    return static_cast<Vertex>(((x % p + p) % p) * q + ((y % q + q) % q));
  }
  int x(Vertex v) const { return static_cast<int>(v) / q; }
  int y(Vertex v) const { return static_cast<int>(v) % q; }
  std::string label(Vertex v) const {
    return "(" + std::to_string(x(v)) + "," + std::to_string(y(v)) + ")";
  }
};

template <class Map>
Perm perm_of(std::size_t n, Map map) {
  std::vector<Vertex> image(n);
  for (Vertex v = 0; v < n; ++v) image[v] = map(v);
  return Perm(std::move(image));
}

SmallBuild build_cycle(int m) {
  const int len = 2 * m;
  const auto n = static_cast<std::size_t>(len);
  std::vector<Arc> arcs;
  std::vector<std::string> labels;
  for (int i = 0; i < len; ++i) {
    arcs.emplace_back(i, (i + 1) % len);
    arcs.emplace_back(i, (i + len - 1) % len);
    labels.push_back(std::to_string(i));
  }
  SmallBuild out;
  out.digraph = Digraph(n, std::move(arcs), std::move(labels));
  out.kind = OrientationKind::Graph;
  out.gens.degree = n;
  out.gens.add(perm_of(n, [len](Vertex v) { return static_cast<Vertex>((v + 1) % len); }),
               GenRole::Translation, "rotation by 1");
  out.gens.add(perm_of(n, [len](Vertex v) { return static_cast<Vertex>((len - v) % len); }),
               GenRole::Stabilizer, "reflection i -> -i");
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Vertex> cell;
    for (int i = parity; i < len; i += 2) cell.push_back(static_cast<Vertex>(i));
    out.blocks.blocks.push_back(std::move(cell));
  }
  return out;
}

SmallBuild build_product(const ProductGroup& group, std::pair<int, int> s1,
                         std::pair<int, int> s2, bool shear,
                         const std::string& tau_description) {
  const std::size_t n = group.size();
  std::vector<Arc> arcs;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& [dx, dy] : {s1, s2}) {
      arcs.emplace_back(v, group.index(group.x(v) + dx, group.y(v) + dy));
    }
    labels.push_back(group.label(v));
  }
  SmallBuild out;
  out.digraph = Digraph(n, std::move(arcs), std::move(labels));
  out.kind = OrientationKind::Oriented;
  out.gens.degree = n;
  for (const auto& [dx, dy] : {s1, s2}) {
    out.gens.add(perm_of(n, [&](Vertex v) {
                   return group.index(group.x(v) + dx, group.y(v) + dy);
                 }),
                 GenRole::Translation,
                 "translation by (" + std::to_string(dx) + "," +
                     std::to_string((dy % group.q + group.q) % group.q) + ")");
  }
  // tau swaps s1 and s2: (x, -y) on Z_3 x Z_m, (x, x + y) on Z_4 x Z_2.
  out.gens.add(perm_of(n, [&](Vertex v) {
                 const int x = group.x(v);
                 const int y = group.y(v);
                 return shear ? group.index(x, x + y) : group.index(x, -y);
               }),
               GenRole::Stabilizer, tau_description);
  for (int x = 0; x < group.p; ++x) {
    std::vector<Vertex> cell;
    for (int y = 0; y < group.q; ++y) cell.push_back(group.index(x, y));
    out.blocks.blocks.push_back(std::move(cell));
  }
  return out;
}

}  // namespace

SmallBuild build_k2(int m, Kind kind) {
  if (m < 2) {
    throw Error(ErrorCode::VacuousM,
                "m = " + std::to_string(m) +
                    ": block size must be at least 2 (the case that m=1 is vacuous)");
  }
  if (kind == Kind::Graph) return build_cycle(m);
  if (m == 2) {
    return build_product(ProductGroup{4, 2}, {1, 0}, {1, 1}, true, "tau(x,y) = (x, x+y)");
  }
  return build_product(ProductGroup{3, m}, {1, 1}, {1, -1}, false, "tau(x,y) = (x, -y)");
}

}  // namespace heiscay
