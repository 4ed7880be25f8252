#include "heiscay/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace heiscay {

std::string_view to_string(OrientationKind kind) {
  switch (kind) {
    case OrientationKind::Graph: return "graph";
    case OrientationKind::Oriented: return "oriented";
    case OrientationKind::Mixed: return "mixed";
  }
  return "mixed";
}

Digraph::Digraph(std::size_t n_vertices, std::vector<Arc> arcs,
                 std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (const auto& [u, v] : arcs) {
    if (u == v || u >= n_vertices || v >= n_vertices) {
      throw Error(ErrorCode::InvalidArc, "invalid arc (" + std::to_string(u) +
                                             ", " + std::to_string(v) + ")");
    }
  }
  if (!labels_.empty() && labels_.size() != n_vertices) {
    throw Error(ErrorCode::SizeMismatch, "label count does not match vertex count");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets_.assign(n_vertices + 1, 0);
  for (const auto& arc : arcs) ++offsets_[arc.first + 1];
  for (std::size_t i = 0; i < n_vertices; ++i) offsets_[i + 1] += offsets_[i];
  targets_.reserve(arcs.size());
  for (const auto& arc : arcs) targets_.push_back(arc.second);
}

std::optional<std::size_t> Digraph::arc_id(Vertex u, Vertex v) const {
  if (u >= num_vertices()) return std::nullopt;
  const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
  const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - targets_.begin());
}

Arc Digraph::arc_at(std::size_t id) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  const auto u = static_cast<Vertex>(it - offsets_.begin() - 1);
  return {u, targets_[id]};
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : out_neighbors(u)) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::vector<Vertex>> Digraph::in_neighbors() const {
  std::vector<std::vector<Vertex>> in(num_vertices());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : out_neighbors(u)) in[v].push_back(u);
  }
  return in;
}

std::string Digraph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::variant<std::size_t, NonUniform> out_valency(const Digraph& d) {
  if (d.num_vertices() == 0) return std::size_t{0};
  const std::size_t first = d.out_degree(0);
  for (Vertex v = 1; v < d.num_vertices(); ++v) {
    if (d.out_degree(v) != first) return NonUniform{0, first, v, d.out_degree(v)};
  }
  return first;
}

OrientationKind orientation_kind(const Digraph& d) {
  bool symmetric = true;
  bool asymmetric = true;
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v : d.out_neighbors(u)) {
      if (d.has_arc(v, u)) {
        asymmetric = false;
      } else {
        symmetric = false;
      }
    }
  }
  if (symmetric) return OrientationKind::Graph;
  if (asymmetric) return OrientationKind::Oriented;
  return OrientationKind::Mixed;
}

namespace {

std::size_t reach(std::size_t n, const std::vector<std::vector<Vertex>>& adj) {
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto nbrs = d.out_neighbors(u);
    out[u].assign(nbrs.begin(), nbrs.end());
  }
  return reach(n, out) == n && reach(n, d.in_neighbors()) == n;
}

Digraph cartesian_power(const Digraph& d, unsigned a, std::size_t budget) {
  const std::size_t n = d.num_vertices();
  const std::uint64_t total = saturating_pow(n, a);
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(n) + "^" + std::to_string(a) +
                    " vertices exceed budget " + std::to_string(budget));
  }
  if (a == 1) return d;

  // stride[i] = n^{a-1-i}
  std::vector<std::size_t> stride(a, 1);
  for (unsigned i = a - 1; i-- > 0;) stride[i] = stride[i + 1] * n;

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(total) * a * (n ? d.num_arcs() / n : 0));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(total));
  for (std::size_t x = 0; x < total; ++x) {
    std::string lbl = "<";
    for (unsigned i = 0; i < a; ++i) {
      const auto digit = static_cast<Vertex>((x / stride[i]) % n);
      if (i != 0) lbl += ',';
      lbl += d.label(digit);
      for (Vertex w : d.out_neighbors(digit)) {
        const std::size_t y = x - digit * stride[i] + w * stride[i];
        arcs.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    }
    lbl += '>';
    labels.push_back(std::move(lbl));
  }
  return Digraph(static_cast<std::size_t>(total), std::move(arcs), std::move(labels));
}

std::string export_digraph(const Digraph& d, ExportFormat format,
                           const ExportMeta& meta) {
  std::ostringstream out;
  const OrientationKind kind = orientation_kind(d);
  if (format == ExportFormat::Edgelist) {
    out << "#heiscay 1 kind=" << to_string(kind) << " k=" << meta.k
        << " m=" << meta.m << " vertices=" << d.num_vertices()
        << " arcs=" << d.num_arcs() << '\n';
    for (Vertex u = 0; u < d.num_vertices(); ++u) {
      for (Vertex v : d.out_neighbors(u)) out << u << ' ' << v << '\n';
    }
    return out.str();
  }
  if (kind == OrientationKind::Graph) {
    out << "graph heiscay {\n";
    for (Vertex u = 0; u < d.num_vertices(); ++u) {
      for (Vertex v : d.out_neighbors(u)) {
        if (u < v) out << "  " << u << " -- " << v << ";\n";
      }
    }
  } else {
    out << "digraph heiscay {\n";
    for (Vertex u = 0; u < d.num_vertices(); ++u) {
      for (Vertex v : d.out_neighbors(u)) out << "  " << u << " -> " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, "edgelist: " + what);
}

template <class T>
T parse_number(std::string_view token, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_fail("bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) parse_fail("expected " + std::string(key));
  return token.substr(key.size());
}

}  // namespace

ParsedEdgelist parse_edgelist(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) parse_fail("missing trailing newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) parse_fail("empty input");

  std::vector<std::string_view> header;
  std::string_view rest = lines[0];
  while (!rest.empty()) {
    const auto sp = rest.find(' ');
    header.push_back(rest.substr(0, sp));
    if (sp == std::string_view::npos) break;
    rest.remove_prefix(sp + 1);
  }
  if (header.size() != 7 || header[0] != "#heiscay" || header[1] != "1") {
    parse_fail("bad header");
  }
  ParsedEdgelist parsed;
  parsed.kind = std::string(field(header[2], "kind="));
  parsed.meta.k = parse_number<int>(field(header[3], "k="), "k");
  parsed.meta.m = parse_number<int>(field(header[4], "m="), "m");
  const auto n = parse_number<std::size_t>(field(header[5], "vertices="), "vertices");
  const auto count = parse_number<std::size_t>(field(header[6], "arcs="), "arcs");
  if (lines.size() != count + 1) parse_fail("arc count does not match header");

  std::vector<Arc> arcs;
  arcs.reserve(count);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto sp = lines[i].find(' ');
    if (sp == std::string_view::npos) parse_fail("bad arc line");
    arcs.emplace_back(parse_number<Vertex>(lines[i].substr(0, sp), "vertex"),
                      parse_number<Vertex>(lines[i].substr(sp + 1), "vertex"));
  }
  if (!std::is_sorted(arcs.begin(), arcs.end())) parse_fail("arcs not sorted");
  parsed.digraph = Digraph(n, std::move(arcs));
  return parsed;
}

}  // namespace heiscay
