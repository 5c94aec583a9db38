#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "contin/closed_set.hpp"
#include "contin/rational.hpp"

namespace contin {

enum class Orientation { preserving, reversing };

struct Breakpoint {
  Rational in;
  Rational out;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear self-homeomorphism of [0,1].
///
/// Stored canonically: inputs strictly increasing from 0 to 1, outputs
/// strictly monotone in the declared orientation, and no interior breakpoint
/// that is collinear with its neighbours. Two values compare equal exactly
/// when they are the same function.
class PLHomeo1D {
public:
  /// Throws std::invalid_argument when the breakpoints do not describe a
  /// homeomorphism with the declared orientation.
  PLHomeo1D(std::vector<Breakpoint> breakpoints, Orientation orientation);

  static PLHomeo1D identity();
  static PLHomeo1D reversal();

  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  Orientation orientation() const { return orientation_; }
  bool preserving() const { return orientation_ == Orientation::preserving; }

  friend bool operator==(const PLHomeo1D&, const PLHomeo1D&) = default;

private:
  std::vector<Breakpoint> breakpoints_;
  Orientation orientation_;
};

/// Exact value h(x). Throws std::domain_error for x outside [0,1].
Rational pl_eval(const PLHomeo1D& h, const Rational& x);

/// h[A] in canonical form. Component types and count are preserved.
ClosedSet1D pl_image(const PLHomeo1D& h, const ClosedSet1D& a);

/// g after h.
PLHomeo1D pl_compose(const PLHomeo1D& g, const PLHomeo1D& h);

PLHomeo1D pl_invert(const PLHomeo1D& h);

}  // namespace contin
