#include "kmetric/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace kmetric {

namespace {

void require_order(int n, int min, const char* family) {
  if (n < min)
    fail(ErrorCode::InvalidOrder, std::string(family) + " needs order >= " +
                                      std::to_string(min) + ", got " +
                                      std::to_string(n));
}

}  // namespace

Graph path(int n) {
  require_order(n, 1, "path");
  std::vector<std::pair<int, int>> e;
  e.reserve(size_t(n) - 1);
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  require_order(n, 3, "cycle");
  std::vector<std::pair<int, int>> e;
  e.reserve(size_t(n));
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  require_order(n, 1, "complete");
  std::vector<std::pair<int, int>> e;
  e.reserve(size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star(int n) {
  require_order(n, 2, "star");
  std::vector<std::pair<int, int>> e;
  e.reserve(size_t(n) - 1);
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return Graph::from_edges(n, e, g.labels());
}

std::pair<Graph, JoinLayout> join(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  const int n = na + nb;
  if (n > kMaxOrder) fail(ErrorCode::InvalidOrder, "join exceeds max order");

  std::vector<std::pair<int, int>> e;
  e.reserve(size_t(a.edge_count()) + size_t(b.edge_count()) +
            size_t(na) * size_t(nb));
  for (int u = 0; u < na; ++u)
    for (int v : a.neighbors(u))
      if (u < v) e.emplace_back(u, v);
  for (int u = 0; u < nb; ++u)
    for (int v : b.neighbors(u))
      if (u < v) e.emplace_back(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) e.emplace_back(u, na + v);

  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int u = 0; u < na; ++u)
    labels[size_t(u)] = a.labels().empty() ? "A" + std::to_string(u)
                                           : a.labels()[size_t(u)];
  for (int v = 0; v < nb; ++v)
    labels[size_t(na + v)] = b.labels().empty() ? "B" + std::to_string(v)
                                                : b.labels()[size_t(v)];
  return {Graph::from_edges(n, e, std::move(labels)), JoinLayout{0, na}};
}

namespace {

// Hub 0 joined to rim 1..n carrying the given rim edges.
Graph hub_plus_rim(int n, std::vector<std::pair<int, int>> rim_edges) {
  std::vector<std::pair<int, int>> e = std::move(rim_edges);
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  std::vector<std::string> labels;
  labels.reserve(size_t(n) + 1);
  labels.emplace_back("hub");
  for (int i = 1; i <= n; ++i) labels.push_back("u" + std::to_string(i));
  return Graph::from_edges(n + 1, e, std::move(labels));
}

}  // namespace

Graph fan(int n) {
  require_order(n, 1, "fan");
  std::vector<std::pair<int, int>> rim;
  for (int i = 1; i < n; ++i) rim.emplace_back(i, i + 1);
  return hub_plus_rim(n, std::move(rim));
}

Graph wheel(int n) {
  require_order(n, 3, "wheel");
  std::vector<std::pair<int, int>> rim;
  for (int i = 1; i < n; ++i) rim.emplace_back(i, i + 1);
  rim.emplace_back(1, n);
  return hub_plus_rim(n, std::move(rim));
}

// copy_offset carries a sentinel one past the last block, so every block's
// extent is the difference of consecutive offsets.
int CoronaLayout::copy_order(int i) const {
  return copy_offset[size_t(i) + 1] - copy_offset[size_t(i)];
}

Bitset CoronaLayout::copy_mask(int i, int total_order) const {
  Bitset b(total_order);
  for (int j = 0; j < copy_order(i); ++j) b.set(copy_index(i, j));
  return b;
}

std::pair<Graph, CoronaLayout> corona(const CoronaSpec& spec) {
  const int nb = spec.base.order();
  if (int(spec.attachments.size()) != nb)
    throw std::invalid_argument("corona: need exactly one attachment per base vertex");
  for (const Graph& h : spec.attachments) {
    if (h.order() < 1) throw std::invalid_argument("corona: empty attachment");
  }

  CoronaLayout layout;
  layout.base_order = nb;
  layout.copy_offset.resize(size_t(nb) + 1);
  int total = nb;
  for (int i = 0; i < nb; ++i) {
    layout.copy_offset[size_t(i)] = total;
    total += spec.attachments[size_t(i)].order();
  }
  layout.copy_offset[size_t(nb)] = total;
  if (total > kMaxOrder) fail(ErrorCode::InvalidOrder, "corona exceeds max order");

  std::vector<std::pair<int, int>> e;
  std::vector<std::string> labels(static_cast<size_t>(total));
  for (int u = 0; u < nb; ++u) {
    labels[size_t(u)] = spec.base.labels().empty()
                            ? "v" + std::to_string(u)
                            : spec.base.labels()[size_t(u)];
    for (int v : spec.base.neighbors(u))
      if (u < v) e.emplace_back(u, v);
  }
  for (int i = 0; i < nb; ++i) {
    const Graph& h = spec.attachments[size_t(i)];
    const int off = layout.copy_offset[size_t(i)];
    for (int u = 0; u < h.order(); ++u) {
      labels[size_t(off + u)] = "H" + std::to_string(i) + "." + std::to_string(u);
      e.emplace_back(i, off + u);  // spoke from base vertex i
      for (int v : h.neighbors(u))
        if (u < v) e.emplace_back(off + u, off + v);
    }
  }
  return {Graph::from_edges(total, e, std::move(labels)), std::move(layout)};
}

}  // namespace kmetric
