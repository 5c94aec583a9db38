#include "contin/analyzer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "contin/geometry.hpp"

namespace contin {
namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so that roots are minimal indices.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::size_t> parent_;
};

struct Bounds {
  Point lo;
  Point hi;
};

Bounds bounds_of(const Cell& c) {
  if (c.kind == CellKind::point) return {c.a, c.a};
  if (c.kind == CellKind::rect) return {c.a, c.b};
  Bounds b{c.a, c.a};
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    b.lo[i] = min(c.a[i], c.b[i]);
    b.hi[i] = max(c.a[i], c.b[i]);
  }
  return b;
}

bool bounds_overlap(const Bounds& x, const Bounds& y) {
  for (std::size_t i = 0; i < x.lo.size(); ++i) {
    if (x.hi[i] < y.lo[i] || y.hi[i] < x.lo[i]) return false;
  }
  return true;
}

bool is_removed(const Point& p, std::span<const Point> removed) {
  return std::find(removed.begin(), removed.end(), p) != removed.end();
}

bool touches(const Cell& x, const Cell& y, std::span<const Point> removed) {
  const Meet m = meet(x, y);
  if (m.kind == MeetKind::empty) return false;
  if (m.kind == MeetKind::extended) return true;
  return !is_removed(m.at, removed);
}

// Pieces of a cell after removing points lying on it.
std::vector<Cell> refine(const Cell& c, std::span<const Point> on_cell_removed) {
  if (c.kind == CellKind::point) return on_cell_removed.empty() ? std::vector<Cell>{c} : std::vector<Cell>{};
  if (c.kind == CellKind::rect) return {c};
  std::vector<std::pair<Rational, Point>> cuts;
  std::size_t axis = 0;
  while (c.a[axis] == c.b[axis]) ++axis;
  const Rational span = c.b[axis] - c.a[axis];
  for (const auto& p : on_cell_removed) {
    const Rational t = (p[axis] - c.a[axis]) / span;
    if (t > 0 && t < 1) cuts.emplace_back(t, p);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Cell> out;
  Point from = c.a;
  for (auto& [t, p] : cuts) {
    out.push_back(Cell::segment(from, p, c.label));
    from = p;
  }
  out.push_back(Cell::segment(from, c.b, c.label));
  return out;
}

}  // namespace

IncidenceGraph::IncidenceGraph(GeoComplex complex) : complex_(std::move(complex)) {
  const auto& cells = complex_.cells;
  const std::size_t n = cells.size();
  adjacency_.assign(n, {});
  std::vector<Bounds> bounds;
  bounds.reserve(n);
  for (const auto& c : cells) bounds.push_back(bounds_of(c));
  // Sweep on the first axis; only pairs with overlapping ranges are tested.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return bounds[x].lo[0] < bounds[y].lo[0]; });
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < n; ++oj) {
      const std::size_t j = order[oj];
      if (bounds[j].lo[0] > bounds[i].hi[0]) break;
      if (!bounds_overlap(bounds[i], bounds[j])) continue;
      if (meet(cells[i], cells[j]).kind != MeetKind::empty) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
      }
    }
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

ComponentLabeling IncidenceGraph::components() const {
  const std::size_t n = adjacency_.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : adjacency_[i]) sets.unite(i, j);
  }
  ComponentLabeling out;
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.labels[i] = sets.find(i);
    if (out.labels[i] == i) ++out.count;
  }
  return out;
}

std::size_t IncidenceGraph::component_count_without(std::span<const Point> removed) const {
  if (removed.empty()) return components().count;
  return components_without(removed).size();
}

std::vector<std::vector<std::size_t>> IncidenceGraph::components_without(std::span<const Point> removed) const {
  const auto& cells = complex_.cells;
  const std::size_t n = cells.size();

  // Cells touching a removed point are refined; all others keep their
  // original adjacency, since a single-point contact between two cells
  // that lies in the removed set involves two affected cells.
  std::vector<std::vector<Point>> hits(n);
  std::vector<bool> affected(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : removed) {
      if (on_cell(p, cells[i])) hits[i].push_back(p);
    }
    affected[i] = !hits[i].empty();
  }

  std::vector<Cell> pieces;
  std::vector<std::size_t> owner;  // original cell of each extra piece
  for (std::size_t i = 0; i < n; ++i) {
    if (!affected[i]) continue;
    for (auto& piece : refine(cells[i], hits[i])) {
      pieces.push_back(std::move(piece));
      owner.push_back(i);
    }
  }

  // Node ids: original cells 0..n-1 (affected ones unused), pieces n..
  DisjointSets sets(n + pieces.size());
  std::vector<bool> present(n + pieces.size(), true);
  for (std::size_t i = 0; i < n; ++i) {
    if (affected[i]) {
      present[i] = false;
      continue;
    }
    for (auto j : adjacency_[i]) {
      if (!affected[j]) sets.unite(i, j);
    }
  }
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    const Bounds ba = bounds_of(pieces[a]);
    for (std::size_t j = 0; j < n; ++j) {
      if (affected[j]) continue;
      if (!bounds_overlap(ba, bounds_of(cells[j]))) continue;
      if (touches(pieces[a], cells[j], removed)) sets.unite(n + a, j);
    }
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      if (touches(pieces[a], pieces[b], removed)) sets.unite(n + a, n + b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n + pieces.size(); ++v) {
    if (!present[v]) continue;
    auto& g = groups[sets.find(v)];
    const std::size_t cell = v < n ? v : owner[v - n];
    if (std::find(g.begin(), g.end(), cell) == g.end()) g.push_back(cell);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PunctureResult IncidenceGraph::puncture(const Point& p, std::span<const Point> already_removed) const {
  const auto& cells = complex_.cells;
  const bool on = std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return on_cell(p, c); });
  if (!on || is_removed(p, already_removed)) {
    throw std::invalid_argument("puncture point not on the complex: " + point_str(p));
  }
  const std::size_t before = component_count_without(already_removed);
  std::vector<Point> removed(already_removed.begin(), already_removed.end());
  removed.push_back(p);
  const std::size_t after = component_count_without(removed);
  return {p, after > before, after};
}

ComponentLabeling path_components(const GeoComplex& c) { return IncidenceGraph(c).components(); }

PunctureResult puncture(const GeoComplex& c, const Point& p) { return IncidenceGraph(c).puncture(p); }

std::vector<Point> classify_non_cut(const GeoComplex& c, std::span<const Point> candidates,
                                    std::span<const Point> already_removed) {
  const IncidenceGraph graph(c);
  std::vector<Point> out;
  for (const auto& p : candidates) {
    if (!graph.puncture(p, already_removed).is_cut) out.push_back(p);
  }
  return out;
}

GeoComplex clip_complex(const GeoComplex& c, const Point& lo, const Point& hi) {
  GeoComplex out = c;
  out.cells.clear();
  for (const auto& cell : c.cells) {
    if (auto clipped = clip_to_box(cell, lo, hi)) out.cells.push_back(std::move(*clipped));
  }
  return out;
}

}  // namespace contin
