#include "contin/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace contin {
namespace {

struct Box {
  Point lo;
  Point hi;
};

struct Seg {
  Point p;
  Point q;
};

Box as_box(const Cell& c) {
  if (c.kind == CellKind::point) return {c.a, c.a};
  return {c.a, c.b};
}

Point along(const Seg& s, const Rational& t) {
  Point out(s.p.size());
  for (std::size_t i = 0; i < s.p.size(); ++i) out[i] = s.p[i] + (s.q[i] - s.p[i]) * t;
  return out;
}

// Parameter range [t0, t1] of the segment inside the box, if non-empty.
std::optional<std::pair<Rational, Rational>> clip_param(const Seg& s, const Box& b) {
  Rational t0 = 0;
  Rational t1 = 1;
  for (std::size_t i = 0; i < s.p.size(); ++i) {
    const Rational u = s.q[i] - s.p[i];
    if (u.sign() == 0) {
      if (s.p[i] < b.lo[i] || s.p[i] > b.hi[i]) return std::nullopt;
      continue;
    }
    Rational lo = (b.lo[i] - s.p[i]) / u;
    Rational hi = (b.hi[i] - s.p[i]) / u;
    if (hi < lo) std::swap(lo, hi);
    t0 = max(t0, lo);
    t1 = min(t1, hi);
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

Meet meet_box_box(const Box& x, const Box& y) {
  Point lo(x.lo.size());
  bool single = true;
  for (std::size_t i = 0; i < x.lo.size(); ++i) {
    lo[i] = max(x.lo[i], y.lo[i]);
    const Rational hi = min(x.hi[i], y.hi[i]);
    if (lo[i] > hi) return {};
    if (lo[i] != hi) single = false;
  }
  if (single) return {MeetKind::single, std::move(lo)};
  return {MeetKind::extended, {}};
}

Meet meet_seg_box(const Seg& s, const Box& b) {
  const auto range = clip_param(s, b);
  if (!range) return {};
  if (range->first == range->second) return {MeetKind::single, along(s, range->first)};
  return {MeetKind::extended, {}};
}

Meet meet_seg_seg(const Seg& x, const Seg& y) {
  const std::size_t d = x.p.size();
  Point u(d), v(d), w(d);
  for (std::size_t i = 0; i < d; ++i) {
    u[i] = x.q[i] - x.p[i];
    v[i] = y.q[i] - y.p[i];
    w[i] = y.p[i] - x.p[i];
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Rational det = u[i] * v[j] - u[j] * v[i];
      if (det.sign() == 0) continue;
      const Rational s = (w[i] * v[j] - w[j] * v[i]) / det;
      const Rational t = (w[i] * u[j] - w[j] * u[i]) / det;
      if (s < 0 || s > 1 || t < 0 || t > 1) return {};
      Point at = along(x, s);
      if (at != along(y, t)) return {};
      return {MeetKind::single, std::move(at)};
    }
  }
  // Parallel directions: the segments meet only if collinear.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (w[i] * u[j] - w[j] * u[i] != 0) return {};
    }
  }
  std::size_t axis = 0;
  while (u[axis].sign() == 0) ++axis;
  Rational ta = w[axis] / u[axis];
  Rational tb = (w[axis] + v[axis]) / u[axis];
  if (tb < ta) std::swap(ta, tb);
  const Rational lo = max(ta, Rational(0));
  const Rational hi = min(tb, Rational(1));
  if (lo > hi) return {};
  if (lo == hi) return {MeetKind::single, along(x, lo)};
  return {MeetKind::extended, {}};
}

// Distance kernel, generic over the scalar so that it can be rerun in
// arbitrary precision when 64-bit rationals overflow.
template <class T>
using Vec = std::vector<T>;

template <class T>
T to_scalar(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return T(r.num()) / T(r.den());
  }
}

template <class T>
Vec<T> lift(const Point& p) {
  Vec<T> out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(to_scalar<T>(v));
  return out;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> sub(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <class T>
Vec<T> along_t(const Vec<T>& p, const Vec<T>& q, const T& t) {
  Vec<T> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + (q[i] - p[i]) * t;
  return out;
}

template <class T>
T point_point_sq(const Vec<T>& a, const Vec<T>& b) {
  const Vec<T> d = sub(a, b);
  return dot(d, d);
}

template <class T>
T point_box_sq(const Vec<T>& p, const Vec<T>& lo, const Vec<T>& hi) {
  T s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    T g = 0;
    if (p[i] < lo[i]) g = lo[i] - p[i];
    if (p[i] > hi[i]) g = p[i] - hi[i];
    s += g * g;
  }
  return s;
}

template <class T>
T point_seg_sq(const Vec<T>& p, const Vec<T>& a, const Vec<T>& b) {
  const Vec<T> u = sub(b, a);
  T t = dot(sub(p, a), u) / dot(u, u);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return point_point_sq(p, along_t(a, b, t));
}

template <class T>
T seg_seg_sq(const Seg& xs, const Seg& ys) {
  if (meet_seg_seg(xs, ys).kind != MeetKind::empty) return T(0);
  const Vec<T> xp = lift<T>(xs.p), xq = lift<T>(xs.q), yp = lift<T>(ys.p), yq = lift<T>(ys.q);
  const Vec<T> u = sub(xq, xp);
  const Vec<T> v = sub(yq, yp);
  const Vec<T> r = sub(xp, yp);
  const T a = dot(u, u);
  const T b = dot(u, v);
  const T c = dot(u, r);
  const T e = dot(v, v);
  const T f = dot(v, r);
  T best = point_seg_sq(xp, yp, yq);
  for (const T& d : {point_seg_sq(xq, yp, yq), point_seg_sq(yp, xp, xq), point_seg_sq(yq, xp, xq)}) {
    if (d < best) best = d;
  }
  const T denom = a * e - b * b;
  if (denom != 0) {
    const T s = (b * f - c * e) / denom;
    const T t = (a * f - b * c) / denom;
    if (s >= 0 && s <= 1 && t >= 0 && t <= 1) {
      const T d = point_point_sq(along_t(xp, xq, s), along_t(yp, yq, t));
      if (d < best) best = d;
    }
  }
  return best;
}

std::vector<Seg> box_edges(const Box& b) {
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < b.lo.size(); ++i) {
    if (b.lo[i] != b.hi[i]) axes.push_back(i);
  }
  if (axes.size() == 1) return {{b.lo, b.hi}};
  std::vector<Seg> out;
  if (axes.size() != 2) return out;
  for (int side = 0; side < 2; ++side) {
    for (int which = 0; which < 2; ++which) {
      const std::size_t fixed = axes[which];
      const std::size_t free = axes[1 - which];
      Point p = b.lo;
      p[fixed] = side ? b.hi[fixed] : b.lo[fixed];
      Point q = p;
      q[free] = b.hi[free];
      out.push_back({std::move(p), std::move(q)});
    }
  }
  return out;
}

template <class T>
T seg_box_sq(const Seg& s, const Box& b) {
  if (meet_seg_box(s, b).kind != MeetKind::empty) return T(0);
  const Vec<T> lo = lift<T>(b.lo), hi = lift<T>(b.hi);
  T best = point_box_sq(lift<T>(s.p), lo, hi);
  const T other = point_box_sq(lift<T>(s.q), lo, hi);
  if (other < best) best = other;
  for (const auto& e : box_edges(b)) {
    const T d = seg_seg_sq<T>(s, e);
    if (d < best) best = d;
  }
  return best;
}

template <class T>
T box_box_sq(const Box& x, const Box& y) {
  T s = 0;
  for (std::size_t i = 0; i < x.lo.size(); ++i) {
    Rational g = 0;
    if (x.hi[i] < y.lo[i]) g = y.lo[i] - x.hi[i];
    if (y.hi[i] < x.lo[i]) g = x.lo[i] - y.hi[i];
    const T gt = to_scalar<T>(g);
    s += gt * gt;
  }
  return s;
}

template <class T>
T distance_sq_as(const Cell& x, const Cell& y) {
  const bool xs = x.kind == CellKind::segment;
  const bool ys = y.kind == CellKind::segment;
  if (xs && ys) return seg_seg_sq<T>({x.a, x.b}, {y.a, y.b});
  if (xs && y.kind == CellKind::point) return point_seg_sq(lift<T>(y.a), lift<T>(x.a), lift<T>(x.b));
  if (ys && x.kind == CellKind::point) return point_seg_sq(lift<T>(x.a), lift<T>(y.a), lift<T>(y.b));
  if (xs) return seg_box_sq<T>({x.a, x.b}, as_box(y));
  if (ys) return seg_box_sq<T>({y.a, y.b}, as_box(x));
  return box_box_sq<T>(as_box(x), as_box(y));
}

}  // namespace

Meet meet(const Cell& x, const Cell& y) {
  const bool xs = x.kind == CellKind::segment;
  const bool ys = y.kind == CellKind::segment;
  if (xs && ys) return meet_seg_seg({x.a, x.b}, {y.a, y.b});
  if (xs) return meet_seg_box({x.a, x.b}, as_box(y));
  if (ys) return meet_seg_box({y.a, y.b}, as_box(x));
  return meet_box_box(as_box(x), as_box(y));
}

bool on_cell(const Point& p, const Cell& c) {
  return meet(Cell::point(p), c).kind != MeetKind::empty;
}

std::optional<Cell> clip_to_box(const Cell& c, const Point& lo, const Point& hi) {
  const Box box{lo, hi};
  if (c.kind == CellKind::segment) {
    const Seg s{c.a, c.b};
    const auto range = clip_param(s, box);
    if (!range) return std::nullopt;
    if (range->first == range->second) return Cell::point(along(s, range->first), c.label);
    return Cell::segment(along(s, range->first), along(s, range->second), c.label);
  }
  const Box own = as_box(c);
  Point l(lo.size()), h(lo.size());
  int extent = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    l[i] = max(own.lo[i], lo[i]);
    h[i] = min(own.hi[i], hi[i]);
    if (l[i] > h[i]) return std::nullopt;
    if (l[i] < h[i]) ++extent;
  }
  if (extent == 0) return Cell::point(std::move(l), c.label);
  if (extent == 1) return Cell::segment(std::move(l), std::move(h), c.label);
  return Cell::rect(std::move(l), std::move(h), c.label);
}

Rational distance_sq(const Cell& x, const Cell& y) { return distance_sq_as<Rational>(x, y); }

BigRational distance_sq_big(const Cell& x, const Cell& y) {
  try {
    return to_big(distance_sq_as<Rational>(x, y));
  } catch (const RationalOverflow&) {
    return distance_sq_as<BigRational>(x, y);
  }
}

BigRational to_big(const Rational& r) { return BigRational(r.num()) / BigRational(r.den()); }

}  // namespace contin
