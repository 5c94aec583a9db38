#include "contin/coding.hpp"

#include <algorithm>
#include <stdexcept>

namespace contin {
namespace {

Rational nearest_in(const ClosedSet1D& a, const Rational& x) {
  std::optional<Rational> best;
  Rational best_dist;
  for (const auto& c : a.components()) {
    const Rational p = min(max(x, c.lo), c.hi);
    const Rational d = abs(p - x);
    if (!best || d < best_dist || (d == best_dist && p < *best)) {
      best = p;
      best_dist = d;
    }
  }
  return *best;
}

CellLabel role(const char* r) { return CellLabel{r, {}, {}, {}, {}}; }

}  // namespace

DSet gen_dset(const ClosedSet1D& a, int depth) {
  if (depth < 1 || depth > 30) throw std::invalid_argument("D-set depth must be in 1..30");
  DSet d{a, depth, {}};
  for (int k = 1; k <= depth; ++k) {
    const std::int64_t cells = std::int64_t{1} << k;
    std::vector<Rational> level;
    for (std::int64_t j = 0; j <= cells; ++j) level.push_back(nearest_in(a, Rational(j, cells)));
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (auto& p : level) d.points.push_back({p, Rational(1, cells), k});
  }
  return d;
}

std::optional<int> dset_invalid_level(const DSet& d) {
  for (int k = 1; k <= d.depth; ++k) {
    const Rational radius = pow2(-k);
    std::vector<Rational> positions;
    for (const auto& p : d.points) {
      if (p.level != k) continue;
      if (p.height != radius || !d.base.contains(p.position)) return k;
      positions.push_back(p.position);
    }
    if (positions.empty()) return k;
    std::sort(positions.begin(), positions.end());
    // Union of the closed radius-balls, merged left to right.
    std::vector<std::pair<Rational, Rational>> cover;
    for (const auto& p : positions) {
      if (!cover.empty() && p - radius <= cover.back().second) {
        cover.back().second = p + radius;
      } else {
        cover.emplace_back(p - radius, p + radius);
      }
    }
    for (const auto& c : d.base.components()) {
      const bool inside = std::any_of(cover.begin(), cover.end(),
                                      [&](const auto& iv) { return iv.first <= c.lo && c.hi <= iv.second; });
      if (!inside) return k;
    }
  }
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    for (std::size_t j = i + 1; j < d.points.size(); ++j) {
      if (d.points[i].position == d.points[j].position && d.points[i].height == d.points[j].height) {
        return d.points[i].level;
      }
    }
  }
  return std::nullopt;
}

Point default_apex(int dim) {
  Point apex(static_cast<std::size_t>(dim + 1), Rational(1, 2));
  apex.back() = 1;
  return apex;
}

GeoComplex build_I(const DSet& d) {
  GeoComplex c = GeoComplex::unit(2);
  for (const auto& comp : d.base.components()) {
    if (comp.is_point()) {
      c.cells.push_back(Cell::point({comp.lo, 0}, role("floor")));
    } else {
      c.cells.push_back(Cell::segment({comp.lo, 0}, {comp.hi, 0}, role("floor")));
    }
  }
  for (const auto& p : d.points) c.cells.push_back(Cell::point({p.position, p.height}, role("dset")));
  return c;
}

GeoComplex build_I(const ClosedSet1D& a, int depth) { return build_I(gen_dset(a, depth)); }

GeoComplex build_fan(const GeoComplex& base, const Point& apex) {
  if (apex.size() != static_cast<std::size_t>(base.dim + 1)) throw std::invalid_argument("apex has wrong dimension");
  if (apex.back().sign() <= 0) throw std::invalid_argument("apex must lie above the floor");
  GeoComplex out;
  out.dim = base.dim + 1;
  out.box_lo = base.box_lo;
  out.box_hi = base.box_hi;
  out.box_lo.push_back(0);
  out.box_hi.push_back(1);
  auto lift = [](Point p) {
    p.push_back(0);
    return p;
  };
  for (const auto& cell : base.cells) {
    Cell lifted = cell;
    lifted.a = lift(cell.a);
    if (cell.kind != CellKind::point) lifted.b = lift(cell.b);
    out.cells.push_back(std::move(lifted));
  }
  for (const auto& cell : base.cells) {
    if (cell.label.role != "floor" && cell.label.role != "dset") continue;
    for (const auto& v : cell.vertices()) out.cells.push_back(Cell::segment(lift(v), apex, role("cone")));
  }
  out.cells.push_back(Cell::point(apex, role("apex")));
  out.validate();
  return out;
}

GeoComplex build_tilde(const DSet& d) { return build_fan(build_I(d), default_apex(2)); }

GeoComplex build_tilde(const ClosedSet1D& a, int depth) { return build_tilde(gen_dset(a, depth)); }

GeoComplex build_J(const ClosedSet1D& a, int depth) {
  GeoComplex base = build_I(a, depth);
  base.cells.insert(base.cells.begin(), Cell::segment({0, 0}, {1, 0}, role("floor-cube")));
  return build_fan(base, default_apex(2));
}

GeoComplex build_hat(const ClosedSet1D& a) {
  GeoComplex c = GeoComplex::unit(2);
  const Rational third(1, 3);
  c.cells.push_back(Cell::segment({third, 0}, {2 * third, 0}, role("floor")));
  for (const auto& comp : a.components()) {
    const Rational lo = (comp.lo + 1) * third;
    const Rational hi = (comp.hi + 1) * third;
    if (comp.is_point()) {
      c.cells.push_back(Cell::segment({lo, 0}, {lo, third}, role("cylinder")));
    } else {
      c.cells.push_back(Cell::rect({lo, 0}, {hi, third}, role("cylinder")));
    }
  }
  return c;
}

GeoComplex build_hat(const BoxSet2D& a) {
  GeoComplex c = GeoComplex::unit(3);
  const Rational third(1, 3);
  c.cells.push_back(Cell::rect({third, third, 0}, {2 * third, 2 * third, 0}, role("floor")));
  auto scale = [&](const Point& p) { return Point{(p[0] + 1) * third, (p[1] + 1) * third}; };
  for (const auto& part : a.parts) {
    if (part.a.size() != 2) throw std::invalid_argument("planar base cell must be 2-dimensional");
    if (part.kind == CellKind::rect) throw std::invalid_argument("planar rects have solid cylinders");
    const Point lo = scale(part.a);
    if (part.kind == CellKind::point) {
      c.cells.push_back(Cell::segment({lo[0], lo[1], 0}, {lo[0], lo[1], third}, role("cylinder")));
      continue;
    }
    const Point hi = scale(part.b);
    if (lo[0] != hi[0] && lo[1] != hi[1]) throw std::invalid_argument("planar base segments must be axis-parallel");
    Point mn{min(lo[0], hi[0]), min(lo[1], hi[1]), 0};
    Point mx{max(lo[0], hi[0]), max(lo[1], hi[1]), third};
    c.cells.push_back(Cell::rect(std::move(mn), std::move(mx), role("cylinder")));
  }
  c.validate();
  return c;
}

}  // namespace contin
