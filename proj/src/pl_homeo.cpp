#include "contin/pl_homeo.hpp"

#include <algorithm>
#include <stdexcept>

namespace contin {
namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.out - a.out) * (c.in - b.in) == (c.out - b.out) * (b.in - a.in);
}

}  // namespace

PLHomeo1D::PLHomeo1D(std::vector<Breakpoint> breakpoints, Orientation orientation)
    : orientation_(orientation) {
  if (breakpoints.size() < 2) throw std::invalid_argument("PL homeomorphism needs at least two breakpoints");
  const Rational out0 = orientation == Orientation::preserving ? Rational(0) : Rational(1);
  if (breakpoints.front().in != 0 || breakpoints.back().in != 1) {
    throw std::invalid_argument("PL homeomorphism inputs must start at 0 and end at 1");
  }
  if (breakpoints.front().out != out0 || breakpoints.back().out != 1 - out0) {
    throw std::invalid_argument("PL homeomorphism endpoint outputs disagree with orientation");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1].in < breakpoints[i].in)) {
      throw std::invalid_argument("PL homeomorphism inputs must be strictly increasing");
    }
    const bool up = breakpoints[i - 1].out < breakpoints[i].out;
    const bool down = breakpoints[i - 1].out > breakpoints[i].out;
    if ((orientation == Orientation::preserving && !up) || (orientation == Orientation::reversing && !down)) {
      throw std::invalid_argument("PL homeomorphism outputs are not strictly monotone in the declared orientation");
    }
  }
  breakpoints_.reserve(breakpoints.size());
  for (const auto& bp : breakpoints) {
    while (breakpoints_.size() >= 2 &&
           collinear(breakpoints_[breakpoints_.size() - 2], breakpoints_.back(), bp)) {
      breakpoints_.pop_back();
    }
    breakpoints_.push_back(bp);
  }
}

PLHomeo1D PLHomeo1D::identity() { return PLHomeo1D({{0, 0}, {1, 1}}, Orientation::preserving); }
PLHomeo1D PLHomeo1D::reversal() { return PLHomeo1D({{0, 1}, {1, 0}}, Orientation::reversing); }

Rational pl_eval(const PLHomeo1D& h, const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("pl_eval argument outside [0,1]: " + x.str());
  const auto bps = h.breakpoints();
  auto it = std::lower_bound(bps.begin(), bps.end(), x,
                             [](const Breakpoint& b, const Rational& v) { return b.in < v; });
  if (it->in == x) return it->out;
  const auto& right = *it;
  const auto& left = *(it - 1);
  return left.out + (right.out - left.out) * ((x - left.in) / (right.in - left.in));
}

ClosedSet1D pl_image(const PLHomeo1D& h, const ClosedSet1D& a) {
  std::vector<Component> out;
  out.reserve(a.size());
  for (const auto& c : a.components()) {
    const Rational lo = pl_eval(h, c.lo);
    const Rational hi = c.is_point() ? lo : pl_eval(h, c.hi);
    out.push_back(h.preserving() ? Component{lo, hi} : Component{hi, lo});
  }
  if (!h.preserving()) std::reverse(out.begin(), out.end());
  return ClosedSet1D(std::move(out));
}

PLHomeo1D pl_compose(const PLHomeo1D& g, const PLHomeo1D& h) {
  const PLHomeo1D h_inv = pl_invert(h);
  std::vector<Rational> inputs;
  for (const auto& b : h.breakpoints()) inputs.push_back(b.in);
  for (const auto& b : g.breakpoints()) inputs.push_back(pl_eval(h_inv, b.in));
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  std::vector<Breakpoint> bps;
  bps.reserve(inputs.size());
  for (const auto& x : inputs) bps.push_back({x, pl_eval(g, pl_eval(h, x))});
  const bool same = g.preserving() == h.preserving();
  return PLHomeo1D(std::move(bps), same ? Orientation::preserving : Orientation::reversing);
}

PLHomeo1D pl_invert(const PLHomeo1D& h) {
  std::vector<Breakpoint> bps;
  for (const auto& b : h.breakpoints()) bps.push_back({b.out, b.in});
  if (!h.preserving()) std::reverse(bps.begin(), bps.end());
  return PLHomeo1D(std::move(bps), h.orientation());
}

}  // namespace contin
