#include "contin/homeo.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "contin/geometry.hpp"

namespace contin {
namespace {

const Rational kThird(1, 3);
const Rational kHalf(1, 2);

bool on_inner_boundary(const Point& p) {
  bool inside = true;
  bool on_face = false;
  for (const auto& v : p) {
    if (v < kThird || v > 2 * kThird) inside = false;
    if (v == kThird || v == 2 * kThird) on_face = true;
  }
  return inside && on_face;
}

// Grid points on the boundary of [1/3,2/3]^d at spacing 1/(3 * steps).
std::vector<Point> inner_boundary_samples(int dim, int steps) {
  std::vector<Point> out;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    Point p;
    bool face = false;
    for (int v : idx) {
      p.push_back(kThird + Rational(v, 3 * steps));
      if (v == 0 || v == steps) face = true;
    }
    if (face) out.push_back(std::move(p));
    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] > steps) idx[a++] = 0;
    if (a == idx.size()) break;
  }
  return out;
}

EvaluableHomeo::Fn radial_fn(EvaluableHomeo phi) {
  return [phi = std::move(phi)](const Point& p) {
    const Rational rho = sup_radius(p);
    if (rho <= kThird) return phi(p);
    // Direction: the point of the inner boundary on the same ray.
    const Rational shrink = kThird / rho;
    Point dir(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) dir[i] = kHalf + (p[i] - kHalf) * shrink;
    const Point moved = phi(dir);
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = kHalf + (moved[i] - kHalf) / shrink;
    return out;
  };
}

}  // namespace

EvaluableHomeo::EvaluableHomeo(int dim, Rational lo, Rational hi, Fn forward, Fn backward)
    : dim_(dim),
      lo_(lo),
      hi_(hi),
      forward_(std::make_shared<const Fn>(std::move(forward))),
      backward_(std::make_shared<const Fn>(std::move(backward))) {}

EvaluableHomeo EvaluableHomeo::identity(int dim, Rational lo, Rational hi) {
  auto id = [](const Point& p) { return p; };
  return {dim, lo, hi, id, id};
}

EvaluableHomeo EvaluableHomeo::product(std::vector<PLHomeo1D> factors) {
  std::vector<PLHomeo1D> inverses;
  for (const auto& f : factors) inverses.push_back(pl_invert(f));
  auto apply = [](const std::vector<PLHomeo1D>& fs) {
    return [fs](const Point& p) {
      Point out(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) out[i] = pl_eval(fs[i], p[i]);
      return out;
    };
  };
  const int d = static_cast<int>(factors.size());
  return {d, 0, 1, apply(factors), apply(inverses)};
}

Point EvaluableHomeo::operator()(const Point& p) const {
  if (p.size() != static_cast<std::size_t>(dim_)) throw std::domain_error("point has wrong dimension");
  for (const auto& v : p) {
    if (v < lo_ || v > hi_) throw std::domain_error("point outside homeomorphism domain: " + point_str(p));
  }
  return (*forward_)(p);
}

EvaluableHomeo EvaluableHomeo::inverse() const {
  EvaluableHomeo inv = *this;
  std::swap(inv.forward_, inv.backward_);
  return inv;
}

PLHomeo1D extend_homeo_1d(const PLHomeo1D& f) {
  std::vector<Breakpoint> bps;
  const bool keep = f.preserving();
  bps.push_back({0, keep ? Rational(0) : Rational(1)});
  for (const auto& b : f.breakpoints()) bps.push_back({(b.in + 1) * kThird, (b.out + 1) * kThird});
  bps.push_back({1, keep ? Rational(1) : Rational(0)});
  return PLHomeo1D(std::move(bps), f.orientation());
}

EvaluableHomeo rescale_inner(const EvaluableHomeo& f) {
  auto conj = [](EvaluableHomeo g) {
    return [g = std::move(g)](const Point& p) {
      Point q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = 3 * p[i] - 1;
      Point r = g(q);
      for (auto& v : r) v = (v + 1) * kThird;
      return r;
    };
  };
  return {f.dim(), kThird, 2 * kThird, conj(f), conj(f.inverse())};
}

Rational sup_radius(const Point& p) {
  Rational r = 0;
  for (const auto& v : p) r = max(r, abs(v - kHalf));
  return 2 * r;
}

EvaluableHomeo radial_extend(const EvaluableHomeo& phi) {
  if (phi.dim() < 2) throw std::invalid_argument("radial extension needs dimension >= 2");
  if (phi.lo() != kThird || phi.hi() != 2 * kThird) throw std::invalid_argument("phi must act on [1/3,2/3]^d");
  for (const auto& s : inner_boundary_samples(phi.dim(), 4)) {
    if (!on_inner_boundary(phi(s)) || !on_inner_boundary(phi.inverse()(s))) {
      throw std::invalid_argument("phi does not preserve the inner boundary at " + point_str(s));
    }
  }
  return {phi.dim(), 0, 1, radial_fn(phi), radial_fn(phi.inverse())};
}

GeoComplex map_cells(const EvaluableHomeo& h, const GeoComplex& c) {
  GeoComplex out = c;
  for (auto& cell : out.cells) {
    if (cell.kind == CellKind::rect) {
      Point x = h(cell.a);
      Point y = h(cell.b);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (y[i] < x[i]) std::swap(x[i], y[i]);
      }
      cell.a = std::move(x);
      cell.b = std::move(y);
    } else {
      cell.a = h(cell.a);
      if (cell.kind == CellKind::segment) cell.b = h(cell.b);
    }
  }
  return out;
}

EvaluableHomeo lift_hat_homeo(const PLHomeo1D& f, const ClosedSet1D& a, const ClosedSet1D& b) {
  if (pl_image(f, a) != b) throw std::invalid_argument("f does not map A onto B");
  const PLHomeo1D ext = extend_homeo_1d(f);
  const PLHomeo1D inv = pl_invert(ext);
  auto fwd = [ext](const Point& p) { return Point{pl_eval(ext, p[0]), p[1]}; };
  auto bwd = [inv](const Point& p) { return Point{pl_eval(inv, p[0]), p[1]}; };
  EvaluableHomeo fhat(2, 0, 1, fwd, bwd);
  if (!same_cells(map_cells(fhat, build_hat(a)), build_hat(b))) {
    throw std::logic_error("lifted map does not carry the cylinder complex of A onto that of B");
  }
  return fhat;
}

EvaluableHomeo lift_hat_homeo(const EvaluableHomeo& f) {
  const EvaluableHomeo ext = radial_extend(rescale_inner(f));
  auto lift = [](EvaluableHomeo g) {
    return [g = std::move(g)](const Point& p) {
      Point base(p.begin(), p.end() - 1);
      Point out = g(base);
      out.push_back(p.back());
      return out;
    };
  };
  return {f.dim() + 1, 0, 1, lift(ext), lift(ext.inverse())};
}

BaseHomeo extract_base_homeo(const EvaluableHomeo& fhat, int sample_bits) {
  if (fhat.dim() != 2) throw std::invalid_argument("base extraction expects a map of [0,1]^2");
  if (sample_bits < 1 || sample_bits > 30) throw std::invalid_argument("sample_bits out of range");
  const std::int64_t steps = std::int64_t{1} << sample_bits;
  std::vector<Breakpoint> bps;
  bps.reserve(static_cast<std::size_t>(steps + 1));
  for (std::int64_t j = 0; j <= steps; ++j) {
    const Rational x(j, steps);
    const Point img = fhat({(x + 1) * kThird, 0});
    if (img[1] != 0 || img[0] < kThird || img[0] > 2 * kThird) {
      throw std::invalid_argument("floor not preserved at x = " + x.str());
    }
    bps.push_back({x, 3 * img[0] - 1});
  }
  const Orientation o = bps.front().out == 0 ? Orientation::preserving : Orientation::reversing;
  return {PLHomeo1D(std::move(bps), o), Rational(1, steps)};
}

TildeLift lift_tilde_homeo(const PLHomeo1D& f, const ClosedSet1D& a, const ClosedSet1D& b, int depth) {
  if (pl_image(f, a) != b) throw std::invalid_argument("f does not map A onto B");
  const DSet source_d = gen_dset(a, depth);
  DSet moved{b, depth, {}};
  for (const auto& p : source_d.points) moved.points.push_back({pl_eval(f, p.position), p.height, p.level});
  if (const auto bad = dset_invalid_level(moved)) {
    throw TransportError(*bad, "transported D-set is not a net of B at level " + std::to_string(*bad));
  }
  TildeLift lift{moved, build_tilde(source_d), build_tilde(moved), {}};

  // f-tilde fixes the apex and moves the first floor coordinate by f.
  const Point apex = default_apex(2);
  auto image = [&](const Point& p) {
    if (p == apex) return p;
    Point q = p;
    q[0] = pl_eval(f, p[0]);
    return q;
  };
  std::map<std::string, std::size_t> target_index;
  for (std::size_t j = 0; j < lift.target.cells.size(); ++j) {
    target_index.emplace(cell_geometry_key(lift.target.cells[j]), j);
  }
  for (const auto& cell : lift.source.cells) {
    Cell img = cell;
    img.a = image(cell.a);
    if (cell.kind != CellKind::point) img.b = image(cell.b);
    if (img.kind == CellKind::rect) {
      for (std::size_t i = 0; i < img.a.size(); ++i) {
        if (img.b[i] < img.a[i]) std::swap(img.a[i], img.b[i]);
      }
    }
    const auto it = target_index.find(cell_geometry_key(img));
    if (it == target_index.end() || lift.target.cells[it->second].label.role != cell.label.role) {
      throw std::logic_error("no matching target cell for " + cell_geometry_key(cell));
    }
    lift.cell_map.push_back(it->second);
  }
  return lift;
}

bool preserves_incidence(const TildeLift& lift) {
  const auto& s = lift.source.cells;
  const auto& t = lift.target.cells;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const bool before = meet(s[i], s[j]).kind != MeetKind::empty;
      const bool after = meet(t[lift.cell_map[i]], t[lift.cell_map[j]]).kind != MeetKind::empty;
      if (before != after) return false;
    }
  }
  return true;
}

}  // namespace contin
