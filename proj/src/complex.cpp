#include "contin/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace contin {

Cell Cell::point(Point p, CellLabel label) { return {CellKind::point, std::move(p), {}, std::move(label)}; }

Cell Cell::segment(Point p, Point q, CellLabel label) {
  return {CellKind::segment, std::move(p), std::move(q), std::move(label)};
}

Cell Cell::rect(Point lo, Point hi, CellLabel label) {
  return {CellKind::rect, std::move(lo), std::move(hi), std::move(label)};
}

std::vector<Point> Cell::vertices() const {
  switch (kind) {
    case CellKind::point:
      return {a};
    case CellKind::segment:
      return {a, b};
    case CellKind::rect: {
      std::vector<std::size_t> axes;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) axes.push_back(i);
      }
      std::vector<Point> out;
      for (int mask = 0; mask < 4; ++mask) {
        Point v = a;
        if (mask & 1) v[axes[0]] = b[axes[0]];
        if (mask & 2) v[axes[1]] = b[axes[1]];
        out.push_back(std::move(v));
      }
      return out;
    }
  }
  return {};
}

GeoComplex GeoComplex::unit(int dim) {
  GeoComplex c;
  c.dim = dim;
  c.box_lo.assign(static_cast<std::size_t>(dim), Rational(0));
  c.box_hi.assign(static_cast<std::size_t>(dim), Rational(1));
  return c;
}

void GeoComplex::validate() const {
  const auto d = static_cast<std::size_t>(dim);
  if (dim < 1 || box_lo.size() != d || box_hi.size() != d) throw std::invalid_argument("complex box has wrong arity");
  auto inside = [&](const Point& p) {
    if (p.size() != d) throw std::invalid_argument("cell coordinate arity differs from complex dimension");
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] < box_lo[i] || p[i] > box_hi[i]) {
        throw std::invalid_argument("cell coordinate outside ambient box: " + point_str(p));
      }
    }
  };
  for (const auto& c : cells) {
    inside(c.a);
    if (c.kind == CellKind::point) continue;
    inside(c.b);
    if (c.kind == CellKind::segment && c.a == c.b) throw std::invalid_argument("segment with equal endpoints");
    if (c.kind == CellKind::rect) {
      int extent = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (c.a[i] > c.b[i]) throw std::invalid_argument("rect corners not ordered");
        if (c.a[i] < c.b[i]) ++extent;
      }
      if (extent != 2) throw std::invalid_argument("rect must have positive extent in exactly two axes");
    }
  }
}

std::size_t GeoComplex::count_role(const std::string& role) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const Cell& c) { return c.label.role == role; }));
}

std::string point_str(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].str();
  }
  return out;
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(Rational::parse(item));
  if (p.empty()) throw std::invalid_argument("empty point");
  return p;
}

std::string cell_geometry_key(const Cell& c) {
  switch (c.kind) {
    case CellKind::point:
      return "p:" + point_str(c.a);
    case CellKind::segment: {
      auto lo = c.a;
      auto hi = c.b;
      if (hi < lo) std::swap(lo, hi);
      return "s:" + point_str(lo) + ";" + point_str(hi);
    }
    case CellKind::rect:
      return "r:" + point_str(c.a) + ";" + point_str(c.b);
  }
  return {};
}

bool same_cells(const GeoComplex& x, const GeoComplex& y) {
  if (x.dim != y.dim || x.cells.size() != y.cells.size()) return false;
  std::vector<std::string> kx;
  std::vector<std::string> ky;
  for (const auto& c : x.cells) kx.push_back(cell_geometry_key(c));
  for (const auto& c : y.cells) ky.push_back(cell_geometry_key(c));
  std::sort(kx.begin(), kx.end());
  std::sort(ky.begin(), ky.end());
  return kx == ky;
}

}  // namespace contin
