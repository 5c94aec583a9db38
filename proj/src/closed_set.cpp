#include "contin/closed_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace contin {

ClosedSet1D::ClosedSet1D(std::vector<Component> raw) {
  if (raw.empty()) throw std::invalid_argument("closed set must be non-empty");
  for (const auto& c : raw) {
    if (c.lo < 0 || c.hi > 1 || c.lo > 1 || c.hi < 0) {
      throw std::invalid_argument("coordinate outside [0,1]: " + c.lo.str() + ", " + c.hi.str());
    }
    if (c.lo > c.hi) {
      throw std::invalid_argument("interval with lo > hi: [" + c.lo.str() + ", " + c.hi.str() + "]");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Component& a, const Component& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  components_.reserve(raw.size());
  for (const auto& c : raw) {
    if (!components_.empty() && c.lo <= components_.back().hi) {
      components_.back().hi = contin::max(components_.back().hi, c.hi);
    } else {
      components_.push_back(c);
    }
  }
}

bool ClosedSet1D::contains(const Rational& x) const {
  auto it = std::upper_bound(components_.begin(), components_.end(), x,
                             [](const Rational& v, const Component& c) { return v < c.lo; });
  if (it == components_.begin()) return false;
  --it;
  return x <= it->hi;
}

std::string ClosedSet1D::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    const auto& c = components_[i];
    out += c.is_point() ? c.lo.str() : "[" + c.lo.str() + "," + c.hi.str() + "]";
  }
  return out + "}";
}

ClosedSet1D mk_closed_set(std::vector<Component> raw) { return ClosedSet1D(std::move(raw)); }

std::vector<OpenInterval> complement_intervals(const ClosedSet1D& a) {
  std::vector<OpenInterval> out;
  const auto comps = a.components();
  if (comps.front().lo > 0) out.push_back({Rational(0), comps.front().lo, true, false});
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    out.push_back({comps[i].hi, comps[i + 1].lo, false, false});
  }
  if (comps.back().hi < 1) {
    out.push_back({comps.back().hi, Rational(1), false, true});
  }
  return out;
}

ClosedSet1D mirror_set(const ClosedSet1D& a) {
  std::vector<Component> out;
  out.reserve(a.size());
  const auto comps = a.components();
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
    out.push_back({1 - it->hi, 1 - it->lo});
  }
  return ClosedSet1D(std::move(out));
}

}  // namespace contin
