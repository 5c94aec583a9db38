#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contin/rational.hpp"

namespace contin {

using Point = std::vector<Rational>;

enum class CellKind { point, segment, rect };

/// Role tag carried by a cell: floor, dset, cone, apex, floor-cube,
/// cylinder, i0, junction, stripe, connector. Stripe cells also carry their
/// stripe index n, rectangle index k and side (l, r, b, fill, rail);
/// connector cells carry n and the sample index.
struct CellLabel {
  std::string role;
  std::optional<long> n;
  std::optional<long> k;
  std::string side;
  std::optional<long> index;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Point(a), Segment(a, b) or axis-parallel Rect(min = a, max = b).
struct Cell {
  CellKind kind = CellKind::point;
  Point a;
  Point b;
  CellLabel label;

  static Cell point(Point p, CellLabel label = {});
  static Cell segment(Point p, Point q, CellLabel label = {});
  static Cell rect(Point lo, Point hi, CellLabel label = {});

  /// Corner vertices: 1 for a point, 2 for a segment, 4 for a rect.
  std::vector<Point> vertices() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Marks one axis as a chart coordinate z rendered physically as the
/// logistic value 1/(1 + 2^-z); the values -bound and +bound stand for the
/// physical ends 0 and 1.
struct LogisticChart {
  int axis = 1;
  Rational bound;
  friend bool operator==(const LogisticChart&, const LogisticChart&) = default;
};

/// Finite union of convex cells in an axis-aligned ambient box.
struct GeoComplex {
  int dim = 2;
  std::vector<Cell> cells;
  Point box_lo;
  Point box_hi;
  std::optional<LogisticChart> chart;

  /// Empty complex in [0,1]^dim.
  static GeoComplex unit(int dim);

  /// Throws std::invalid_argument on wrong arity, coordinates outside the
  /// box, degenerate segments or rects that are not 2-dimensional.
  void validate() const;

  std::size_t count_role(const std::string& role) const;
};

/// Canonical key for comparing cells as sets (segment endpoints unordered,
/// label ignored).
std::string cell_geometry_key(const Cell& c);
/// True when both complexes consist of the same cell geometries, as
/// multisets, ignoring labels.
bool same_cells(const GeoComplex& x, const GeoComplex& y);

std::string point_str(const Point& p);
/// Parses "x,y,..." rationals.
Point parse_point(const std::string& text);

}  // namespace contin
