#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "contin/invariants.hpp"
#include "contin/order_encoder.hpp"
#include "support/oracles.hpp"

using namespace contin;

namespace {

ClosedSet1D points(std::vector<Rational> ps) {
  std::vector<Component> raw;
  for (const auto& p : ps) raw.push_back(Component::point(p));
  return mk_closed_set(raw);
}

// Removed intervals disjoint, in rank order, and the set is exactly what
// they leave behind on a fine grid.
bool independent_check(const LinearOrderSpec& order, const EncodedOrder& enc) {
  const auto& iv = enc.removed.intervals;
  if (iv.size() != order.n) return false;
  std::vector<std::size_t> by_rank(order.n);
  for (std::size_t k = 0; k < order.n; ++k) by_rank[static_cast<std::size_t>(order.ranks[k] - 1)] = k;
  for (std::size_t r = 0; r + 1 < order.n; ++r) {
    if (!(iv[by_rank[r]].hi <= iv[by_rank[r + 1]].lo)) return false;
  }
  const std::vector<Component> raw(enc.set.components().begin(), enc.set.components().end());
  for (std::int64_t j = 0; j <= 729 * 4; ++j) {
    const Rational x(j, 729 * 4);
    bool removed = false;
    for (const auto& s : iv) removed = removed || (s.lo < x && x < s.hi);
    if (removed == oracle::raw_member(raw, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("encoder examples") {
  const auto a = encode_order(LinearOrderSpec::chain({1, 2}));
  CHECK(a.removed.intervals == std::vector<OpenSpan>{{0, Rational(1, 3)}, {Rational(1, 3), 1}});
  CHECK(a.set == points({0, Rational(1, 3), 1}));

  const auto b = encode_order(LinearOrderSpec::chain({2, 1}));
  CHECK(b.removed.intervals == std::vector<OpenSpan>{{Rational(2, 3), 1}, {0, Rational(2, 3)}});
  CHECK(b.set == points({0, Rational(2, 3), 1}));

  const auto c = encode_order(LinearOrderSpec::chain({2, 1, 3}));
  CHECK(c.removed.intervals ==
        std::vector<OpenSpan>{{Rational(1, 3), Rational(2, 3)}, {0, Rational(1, 3)}, {Rational(2, 3), 1}});
  CHECK(c.set == points({0, Rational(1, 3), Rational(2, 3), 1}));
}

TEST_CASE("one-element order removes the open unit interval") {
  const auto a = encode_order(LinearOrderSpec::chain({1}));
  CHECK(a.removed.intervals == std::vector<OpenSpan>{{0, 1}});
  CHECK(a.set == points({0, 1}));
  CHECK(verify_encoding(LinearOrderSpec::chain({1})));
}

TEST_CASE("every enumeration up to size 6 encodes its order") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1);
    do {
      const auto order = LinearOrderSpec::chain(ranks);
      CHECK(verify_encoding(order));
      CHECK(independent_check(order, encode_order(order)));
    } while (std::next_permutation(ranks.begin(), ranks.end()));
  }
}

TEST_CASE("all enumerations of a chain are R1-equivalent") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1);
    const auto base = encode_order(LinearOrderSpec::chain(ranks)).set;
    do {
      CHECK(decide_r1(base, encode_order(LinearOrderSpec::chain(ranks)).set));
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    const auto longer = encode_order(LinearOrderSpec::chain([&] {
                          std::vector<int> r(n + 1);
                          std::iota(r.begin(), r.end(), 1);
                          return r;
                        }()))
                            .set;
    CHECK_FALSE(decide_r1(base, longer));
  }
}

TEST_CASE("corrupted intervals fail verification") {
  const auto order = LinearOrderSpec::chain({2, 1, 3, 4});
  auto removed = encode_order(order).removed;
  CHECK(verify_encoding(order, removed));
  std::swap(removed.intervals[0], removed.intervals[1]);
  CHECK_FALSE(verify_encoding(order, removed));
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(LinearOrderSpec::chain({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(encode_order(LinearOrderSpec{3, {1, 2, 4}}), std::invalid_argument);
}
