#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "contin/complex.hpp"

namespace contin {

enum class MeetKind { empty, single, extended };

/// Closed intersection of two convex cells: empty, exactly one point (`at`),
/// or a set with more than one point.
struct Meet {
  MeetKind kind = MeetKind::empty;
  Point at;
};

Meet meet(const Cell& x, const Cell& y);

bool on_cell(const Point& p, const Cell& c);

/// Intersection of a cell with the closed box [lo, hi]; the result may
/// degenerate to a lower-dimensional cell. Labels are kept.
std::optional<Cell> clip_to_box(const Cell& c, const Point& lo, const Point& hi);

using BigRational = boost::multiprecision::cpp_rational;

/// Exact squared Euclidean distance between two cells. Throws
/// RationalOverflow when the value or an intermediate leaves 64 bits.
Rational distance_sq(const Cell& x, const Cell& y);
/// The same distance, falling back to arbitrary precision on overflow.
BigRational distance_sq_big(const Cell& x, const Cell& y);
BigRational to_big(const Rational& r);

}  // namespace contin
