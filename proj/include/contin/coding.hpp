#pragma once

#include <optional>
#include <vector>

#include "contin/closed_set.hpp"
#include "contin/complex.hpp"

namespace contin {

/// An isolated point (position, height) above the base set; height is
/// 1/2^level.
struct DPoint {
  Rational position;
  Rational height;
  int level = 1;
  friend bool operator==(const DPoint&, const DPoint&) = default;
};

/// Truncation of a set D of isolated points whose closure adds exactly the
/// base set at height 0: levels 1..depth, each a 1/2^level-net of the base.
struct DSet {
  ClosedSet1D base;
  int depth = 1;
  std::vector<DPoint> points;

  std::size_t size() const { return points.size(); }
};

/// Level k positions are the dyadic grid j/2^k snapped to the nearest point
/// of A (ties toward 0), de-duplicated.
DSet gen_dset(const ClosedSet1D& a, int depth);

/// First level whose positions fail to lie in the base or to form a
/// 1/2^level-net of it; nullopt when the D-set is valid.
std::optional<int> dset_invalid_level(const DSet& d);

/// Default apex (1/2, ..., 1/2, 1) of a fan over [0,1]^dim.
Point default_apex(int dim);

/// Truncated I(A, A) in [0,1]^2: components of A at height 0 (label floor)
/// and the D-set points (label dset).
GeoComplex build_I(const ClosedSet1D& a, int depth);
GeoComplex build_I(const DSet& d);

/// Cone over the floor and dset cells of `base` with the given apex, in one
/// dimension more. Points are joined to the apex by one segment, segments
/// and rects by one segment per corner. Throws std::invalid_argument when
/// the apex has height 0.
GeoComplex build_fan(const GeoComplex& base, const Point& apex);

/// The fan over I(A, A), embedded in [0,1]^3.
GeoComplex build_tilde(const ClosedSet1D& a, int depth);
GeoComplex build_tilde(const DSet& d);

/// Truncated J([0,1], A) in [0,1]^3: the floor segment [0,1] (label
/// floor-cube), the D-set at height 0, and the cone over D and A.
GeoComplex build_J(const ClosedSet1D& a, int depth);

/// The cylinder complex [1/3,2/3] x {0} together with ((A + 1)/3) x [0,1/3]
/// in [0,1]^2.
GeoComplex build_hat(const ClosedSet1D& a);

/// A closed set in [0,1]^2 given as points and axis-parallel segments.
struct BoxSet2D {
  std::vector<Cell> parts;
};

/// The same cylinder construction one dimension up, in [0,1]^3. Planar
/// rects in the base would produce solid cylinders and are rejected.
GeoComplex build_hat(const BoxSet2D& a);

}  // namespace contin
