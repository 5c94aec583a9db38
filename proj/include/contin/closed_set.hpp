#pragma once

#include <span>
#include <string>
#include <vector>

#include "contin/rational.hpp"

namespace contin {

/// One connected component of a closed subset of [0,1]: a point when lo == hi,
/// otherwise the closed interval [lo, hi].
struct Component {
  Rational lo;
  Rational hi;

  static Component point(Rational p) { return {p, p}; }
  static Component interval(Rational a, Rational b) { return {a, b}; }

  bool is_point() const { return lo == hi; }
  bool is_interval() const { return lo < hi; }

  friend bool operator==(const Component&, const Component&) = default;
};

/// Maximal relatively-open subinterval of [0,1] minus a closed set. The
/// flags record whether 0 or 1 itself belongs to the interval, i.e. whether
/// it is [0,hi) or (lo,1] rather than (lo,hi).
struct OpenInterval {
  Rational lo;
  Rational hi;
  bool touches_0 = false;
  bool touches_1 = false;

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Finite presentation of a non-empty closed subset of [0,1]: sorted,
/// pairwise disjoint, non-touching point and interval components.
class ClosedSet1D {
public:
  /// Canonicalizes raw items: sorts, merges touching or overlapping items.
  /// Throws std::invalid_argument on empty input, coordinates outside [0,1]
  /// or an item with lo > hi.
  explicit ClosedSet1D(std::vector<Component> raw);

  std::span<const Component> components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  bool contains(const Rational& x) const;
  Rational min() const { return components_.front().lo; }
  Rational max() const { return components_.back().hi; }

  std::string str() const;

  friend bool operator==(const ClosedSet1D&, const ClosedSet1D&) = default;

private:
  std::vector<Component> components_;
};

ClosedSet1D mk_closed_set(std::vector<Component> raw);

/// Maximal relatively-open intervals of [0,1] - A in increasing order.
std::vector<OpenInterval> complement_intervals(const ClosedSet1D& a);

/// A* = {1 - x : x in A}.
ClosedSet1D mirror_set(const ClosedSet1D& a);

}  // namespace contin
