#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "contin/closed_set.hpp"
#include "contin/coding.hpp"
#include "contin/complex.hpp"
#include "contin/pl_homeo.hpp"

namespace contin {

/// Self-homeomorphism of the cube [lo, hi]^dim that can be evaluated at
/// rational points, together with its inverse. Every map built here has
/// rational defining formulas, so evaluation is exact (error bound 0).
class EvaluableHomeo {
public:
  using Fn = std::function<Point(const Point&)>;

  EvaluableHomeo(int dim, Rational lo, Rational hi, Fn forward, Fn backward);

  static EvaluableHomeo identity(int dim, Rational lo = 0, Rational hi = 1);
  /// (x_1, ..., x_d) -> (h(x_1), ..., h(x_d)) on [0,1]^d.
  static EvaluableHomeo product(std::vector<PLHomeo1D> factors);

  /// Throws std::domain_error for points outside the cube.
  Point operator()(const Point& p) const;
  EvaluableHomeo inverse() const;

  int dim() const { return dim_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational error_bound() const { return 0; }

private:
  int dim_;
  Rational lo_;
  Rational hi_;
  std::shared_ptr<const Fn> forward_;
  std::shared_ptr<const Fn> backward_;
};

/// f' on [0,1]: f rescaled onto [1/3,2/3], extended by x (order-preserving
/// f) or 1 - x (order-reversing f) outside.
PLHomeo1D extend_homeo_1d(const PLHomeo1D& f);

/// phi(x) = (f(3x - 1) + 1) / 3, the copy of f acting on [1/3,2/3]^d.
EvaluableHomeo rescale_inner(const EvaluableHomeo& f);

/// Extends phi on [1/3,2/3]^d (d >= 2) to [0,1]^d using sup-norm radial
/// coordinates about the centre: inside the inner cube phi applies; outside,
/// the radius is kept and the direction is moved by phi's action on the
/// inner boundary. Throws std::invalid_argument when sampled inner-boundary
/// points are not mapped to the inner boundary.
EvaluableHomeo radial_extend(const EvaluableHomeo& phi);

/// Sup-norm distance from the centre of [0,1]^d, scaled so that the cube
/// boundary has radius 1 and the inner cube radius 1/3.
Rational sup_radius(const Point& p);

/// Image of each cell under a map, computed from the cell corners. Exact
/// for maps that are affine on each cell or coordinatewise monotone on
/// axis-parallel cells.
GeoComplex map_cells(const EvaluableHomeo& h, const GeoComplex& c);

/// f-hat(x, t) = (f'(x), t) on [0,1]^2. Throws std::invalid_argument when f
/// does not carry A onto B, or the image of build_hat(A) is not build_hat(B).
EvaluableHomeo lift_hat_homeo(const PLHomeo1D& f, const ClosedSet1D& a, const ClosedSet1D& b);
/// The same lift for a homeomorphism of [0,1]^d, d >= 2, via radial_extend.
EvaluableHomeo lift_hat_homeo(const EvaluableHomeo& f);

struct BaseHomeo {
  PLHomeo1D map;
  /// Sample spacing; the interpolant is exact at every sample and agrees
  /// with the true base map wherever that map is linear between samples.
  Rational spacing;
};

/// f(x) = 3 * first(f-hat((x + 1)/3, 0)) - 1 sampled at multiples of
/// 2^-sample_bits. Throws std::invalid_argument when a sampled floor point is
/// not mapped into the floor [1/3,2/3] x {0}.
BaseHomeo extract_base_homeo(const EvaluableHomeo& fhat, int sample_bits = 10);

class TransportError : public std::runtime_error {
public:
  TransportError(int level, const std::string& what) : std::runtime_error(what), level_(level) {}
  int level() const { return level_; }

private:
  int level_;
};

struct TildeLift {
  DSet transported;
  GeoComplex source;
  GeoComplex target;
  /// cell_map[i] is the target cell matching source cell i.
  std::vector<std::size_t> cell_map;
};

/// Moves the D-set of A by (position, height) -> (f(position), height),
/// builds both fans, and returns the induced cell bijection (apex to apex,
/// floor to floor, cone to cone). Throws std::invalid_argument when f does
/// not carry A onto B and TransportError when the moved D-set is not a
/// valid D-set for B.
TildeLift lift_tilde_homeo(const PLHomeo1D& f, const ClosedSet1D& a, const ClosedSet1D& b, int depth);

/// Whether any two cells meet iff their images under the bijection meet.
bool preserves_incidence(const TildeLift& lift);

}  // namespace contin
