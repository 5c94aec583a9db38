#include "contin/order_encoder.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "contin/invariants.hpp"

namespace contin {

void LinearOrderSpec::validate() const {
  if (n == 0) throw std::invalid_argument("linear order must be non-empty");
  if (ranks.size() != n) throw std::invalid_argument("ranks length differs from n");
  std::vector<bool> seen(n + 1, false);
  for (int r : ranks) {
    if (r < 1 || static_cast<std::size_t>(r) > n || seen[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("ranks must be a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(r)] = true;
  }
}

LinearOrderSpec LinearOrderSpec::chain(std::vector<int> ranks) {
  LinearOrderSpec spec{ranks.size(), std::move(ranks)};
  spec.validate();
  return spec;
}

EncodedOrder encode_order(const LinearOrderSpec& order) {
  order.validate();
  const int n = static_cast<int>(order.n);
  const Rational third(1, 3);
  const Rational two_thirds(2, 3);
  std::vector<OpenSpan> iv;
  iv.reserve(order.n);

  const int r1 = order.ranks[0];
  if (n == 1) {
    // The only element is both least and largest; both one-sided clauses apply.
    iv.push_back({0, 1});
  } else if (r1 == 1) {
    iv.push_back({0, third});
  } else if (r1 == n) {
    iv.push_back({two_thirds, 1});
  } else {
    iv.push_back({third, two_thirds});
  }

  for (std::size_t t = 1; t < order.n; ++t) {
    const int r = order.ranks[t];
    std::optional<std::size_t> below;  // rank-greatest earlier element under r
    std::optional<std::size_t> above;  // rank-least earlier element over r
    for (std::size_t s = 0; s < t; ++s) {
      const int rs = order.ranks[s];
      if (rs < r && (!below || rs > order.ranks[*below])) below = s;
      if (rs > r && (!above || rs < order.ranks[*above])) above = s;
    }
    if (!below && !above) throw std::logic_error("encode_order: element without enumerated neighbours");
    Rational a;
    Rational b;
    if (below && above) {
      const auto& bi = iv[*below].hi;
      const auto& aj = iv[*above].lo;
      a = (r - order.ranks[*below] == 1) ? bi : two_thirds * bi + third * aj;
      b = (order.ranks[*above] - r == 1) ? aj : third * bi + two_thirds * aj;
    } else if (!below) {
      const auto& aj = iv[*above].lo;
      a = (r == 1) ? Rational(0) : third * aj;
      b = (order.ranks[*above] - r == 1) ? aj : two_thirds * aj;
    } else {
      const auto& bi = iv[*below].hi;
      a = (r - order.ranks[*below] == 1) ? bi : two_thirds * bi + third;
      b = (r == n) ? Rational(1) : third * bi + two_thirds;
    }
    iv.push_back({a, b});
  }
  RemovedIntervals removed{std::move(iv)};
  ClosedSet1D set = complement_of(removed);
  return {std::move(removed), std::move(set)};
}

ClosedSet1D complement_of(const RemovedIntervals& removed) {
  auto spans = removed.intervals;
  std::sort(spans.begin(), spans.end(), [](const OpenSpan& x, const OpenSpan& y) { return x.lo < y.lo; });
  std::vector<Component> comps;
  Rational cursor = 0;
  for (const auto& s : spans) {
    if (!(s.lo < s.hi) || s.lo < 0 || s.hi > 1) throw std::invalid_argument("removed interval is empty or leaves [0,1]");
    if (s.lo < cursor) throw std::invalid_argument("removed intervals overlap");
    comps.push_back({cursor, s.lo});
    cursor = s.hi;
  }
  comps.push_back({cursor, 1});
  return ClosedSet1D(std::move(comps));
}

bool verify_encoding(const LinearOrderSpec& order, const RemovedIntervals& removed) {
  order.validate();
  const auto& iv = removed.intervals;
  if (iv.size() != order.n) return false;

  std::vector<std::size_t> by_position(order.n);
  std::iota(by_position.begin(), by_position.end(), std::size_t{0});
  std::sort(by_position.begin(), by_position.end(),
            [&iv](std::size_t x, std::size_t y) { return iv[x].lo < iv[y].lo; });
  for (std::size_t s = 0; s < order.n; ++s) {
    if (order.ranks[by_position[s]] != static_cast<int>(s) + 1) return false;
    if (s > 0 && iv[by_position[s]].lo < iv[by_position[s - 1]].hi) return false;
  }

  ClosedSet1D set = complement_of(removed);
  const UVPattern pattern = extract_T(set);
  if (pattern.u_count() != 0) return false;

  std::vector<std::size_t> labels;
  for (const auto& gap : complement_intervals(set)) {
    auto it = std::find(iv.begin(), iv.end(), OpenSpan{gap.lo, gap.hi});
    if (it == iv.end() || gap.touches_0 || gap.touches_1) return false;
    labels.push_back(static_cast<std::size_t>(it - iv.begin()));
  }
  return pattern_order_iso(pattern, order, labels);
}

bool verify_encoding(const LinearOrderSpec& order) {
  return verify_encoding(order, encode_order(order).removed);
}

}  // namespace contin
