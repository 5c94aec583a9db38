#include "contin/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "contin/order_encoder.hpp"

namespace contin {

std::size_t UVPattern::v_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const UVEntry& e) { return e.kind == UVKind::V; }));
}

std::size_t UVPattern::u_count() const { return entries.size() - v_count(); }

std::string UVPattern::str() const {
  std::string out;
  std::string t0 = "-";
  std::string t1 = "-";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ' ';
    out += entries[i].kind == UVKind::U ? 'U' : 'V';
    if (entries[i].touches_0) t0 = std::to_string(i);
    if (entries[i].touches_1) t1 = std::to_string(i);
  }
  if (out.empty()) out = "(empty)";
  return out + " | t0:" + t0 + " t1:" + t1;
}

UVPattern UVPattern::mirrored() const {
  UVPattern out;
  out.entries.assign(entries.rbegin(), entries.rend());
  for (auto& e : out.entries) std::swap(e.touches_0, e.touches_1);
  return out;
}

UVPattern extract_T(const ClosedSet1D& a) {
  const auto gaps = complement_intervals(a);
  UVPattern out;
  out.entries.reserve(gaps.size() + a.size());
  std::size_t g = 0;
  // Gaps and components alternate; a gap precedes component i iff its upper
  // end is at or below the component's lower end.
  for (const auto& c : a.components()) {
    while (g < gaps.size() && gaps[g].hi <= c.lo) {
      out.entries.push_back({UVKind::V, gaps[g].touches_0, gaps[g].touches_1});
      ++g;
    }
    if (c.is_interval()) out.entries.push_back({UVKind::U});
  }
  for (; g < gaps.size(); ++g) out.entries.push_back({UVKind::V, gaps[g].touches_0, gaps[g].touches_1});
  return out;
}

SInvariant extract_S(const ClosedSet1D& a) {
  SInvariant s;
  for (const auto& c : a.components()) (c.is_point() ? s.point_count : s.interval_count)++;
  return s;
}

MPair extract_M(const ClosedSet1D& a) {
  MPair m{extract_T(a), {}};
  m.mirrored = m.forward.mirrored();
  return m;
}

bool decide_h1(const ClosedSet1D& a, const ClosedSet1D& b) { return extract_S(a) == extract_S(b); }

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> h1_matching(const ClosedSet1D& a,
                                                                            const ClosedSet1D& b) {
  if (!decide_h1(a, b)) return std::nullopt;
  std::vector<std::size_t> b_points;
  std::vector<std::size_t> b_intervals;
  for (std::size_t j = 0; j < b.size(); ++j) (b.components()[j].is_point() ? b_points : b_intervals).push_back(j);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t p = 0;
  std::size_t q = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.emplace_back(i, a.components()[i].is_point() ? b_points[p++] : b_intervals[q++]);
  }
  return out;
}

bool decide_r1(const MPair& a, const MPair& b) {
  return a.forward == b.forward || a.forward == b.mirrored;
}

bool decide_r1(const ClosedSet1D& a, const ClosedSet1D& b) { return decide_r1(extract_M(a), extract_M(b)); }

std::optional<PLHomeo1D> r1_witness(const ClosedSet1D& a, const ClosedSet1D& b) {
  const auto ta = extract_T(a);
  const auto tb = extract_T(b);
  const bool forward = ta == tb;
  if (!forward && ta != tb.mirrored()) return std::nullopt;

  const auto ca = a.components();
  const auto cb = b.components();
  const std::size_t k = ca.size();
  std::vector<Breakpoint> bps;
  bps.reserve(2 * k + 2);
  auto push = [&bps](const Rational& in, const Rational& out) {
    if (bps.empty() || bps.back().in != in) bps.push_back({in, out});
  };
  push(0, forward ? Rational(0) : Rational(1));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& src = ca[i];
    const auto& dst = forward ? cb[i] : cb[k - 1 - i];
    push(src.lo, forward ? dst.lo : dst.hi);
    if (src.is_interval()) push(src.hi, forward ? dst.hi : dst.lo);
  }
  push(1, forward ? Rational(1) : Rational(0));
  return PLHomeo1D(std::move(bps), forward ? Orientation::preserving : Orientation::reversing);
}

bool pattern_order_iso(const UVPattern& pattern, const LinearOrderSpec& order,
                       std::span<const std::size_t> v_labels) {
  if (!v_labels.empty()) {
    if (pattern.u_count() != 0) throw std::invalid_argument("provenance labels given for a pattern with U entries");
    if (v_labels.size() != pattern.v_count()) {
      throw std::invalid_argument("provenance label count differs from V entry count");
    }
  }
  if (pattern.v_count() != order.n) return false;
  for (std::size_t s = 0; s < v_labels.size(); ++s) {
    const auto k = v_labels[s];
    if (k >= order.n || order.ranks[k] != static_cast<int>(s) + 1) return false;
  }
  return true;
}

}  // namespace contin
