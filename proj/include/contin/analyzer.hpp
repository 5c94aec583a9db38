#pragma once

#include <span>
#include <vector>

#include "contin/complex.hpp"

namespace contin {

struct ComponentLabeling {
  /// labels[i] is the smallest cell index in the component of cell i.
  std::vector<std::size_t> labels;
  std::size_t count = 0;
};

struct PunctureResult {
  Point point;
  bool is_cut = false;
  std::size_t component_count_after = 0;
};

/// Cell intersection graph of a complex. Every cell is convex, so a union
/// of cells is path-connected exactly when its cells form a connected
/// subgraph; path components are graph components.
///
/// Point removal refines the cells: a segment is split at every removed
/// point in its relative interior and the pieces no longer share that
/// point; a rect stays one piece (a planar convex set minus finitely many
/// points is path-connected). Two pieces are adjacent when their closed
/// intersection has more than one point, or is a single point that was not
/// removed.
class IncidenceGraph {
public:
  explicit IncidenceGraph(GeoComplex complex);

  const GeoComplex& complex() const { return complex_; }
  std::span<const std::vector<std::size_t>> adjacency() const { return adjacency_; }

  ComponentLabeling components() const;
  /// Number of path components of the complex minus the given points.
  std::size_t component_count_without(std::span<const Point> removed) const;
  /// Components of the complex minus the given points, each as the sorted
  /// indices of the original cells with a piece in it; sorted by first cell.
  std::vector<std::vector<std::size_t>> components_without(std::span<const Point> removed) const;

  /// Cut test at p in the complex minus `already_removed`. Throws
  /// std::invalid_argument when p is not on the remaining complex.
  PunctureResult puncture(const Point& p, std::span<const Point> already_removed = {}) const;

private:
  GeoComplex complex_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

ComponentLabeling path_components(const GeoComplex& c);
PunctureResult puncture(const GeoComplex& c, const Point& p);
/// The candidates that are not cut points of C minus `already_removed`.
std::vector<Point> classify_non_cut(const GeoComplex& c, std::span<const Point> candidates,
                                    std::span<const Point> already_removed = {});

/// The part of the complex inside the closed box [lo, hi].
GeoComplex clip_complex(const GeoComplex& c, const Point& lo, const Point& hi);

}  // namespace contin
