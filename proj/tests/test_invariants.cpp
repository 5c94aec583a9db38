#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contin/invariants.hpp"
#include "contin/order_encoder.hpp"
#include "contin/corpus.hpp"
#include "support/oracles.hpp"

using namespace contin;

namespace {

Component pt(std::int64_t p, std::int64_t q) { return Component::point(Rational(p, q)); }
Component iv(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Component::interval(Rational(a, b), Rational(c, d));
}
ClosedSet1D set(std::vector<Component> raw) { return mk_closed_set(std::move(raw)); }

}  // namespace

TEST_CASE("extract_T examples") {
  const auto a = set({iv(0, 1, 1, 4), pt(1, 2), iv(3, 4, 1, 1)});
  CHECK(extract_T(a).str() == "U V V U | t0:- t1:-");
  CHECK(extract_T(a) == oracle::scanned_pattern(a, 16));

  const auto b = extract_T(set({pt(1, 2)}));
  REQUIRE(b.entries.size() == 2);
  CHECK(b.entries[0] == UVEntry{UVKind::V, true, false});
  CHECK(b.entries[1] == UVEntry{UVKind::V, false, true});

  const auto c = extract_T(set({iv(0, 1, 1, 1)}));
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].kind == UVKind::U);
}

TEST_CASE("extract_T matches the sample scan on the grid corpus") {
  for (const auto& a : grid_corpus(6, 3)) CHECK(extract_T(a) == oracle::scanned_pattern(a, 24));
}

TEST_CASE("mirror_set examples and mirror law") {
  CHECK(mirror_set(set({pt(0, 1)})) == set({pt(1, 1)}));
  CHECK(mirror_set(set({iv(0, 1, 1, 4)})) == set({iv(3, 4, 1, 1)}));
  CHECK(mirror_set(set({pt(1, 3), iv(1, 2, 1, 1)})) == set({iv(0, 1, 1, 2), pt(2, 3)}));
  for (const auto& a : grid_corpus(6, 3)) {
    CHECK(mirror_set(mirror_set(a)) == a);
    CHECK(extract_T(mirror_set(a)) == extract_T(a).mirrored());
  }
}

TEST_CASE("extract_S examples") {
  CHECK(extract_S(set({pt(0, 1), pt(1, 2), pt(1, 1)})) == SInvariant{3, 0});
  CHECK(extract_S(set({iv(0, 1, 1, 1)})) == SInvariant{0, 1});
  CHECK(extract_S(encode_order(LinearOrderSpec::chain({1, 2})).set) == SInvariant{3, 0});
}

TEST_CASE("decide_h1 examples") {
  CHECK(decide_h1(set({pt(0, 1), pt(1, 2), pt(1, 1)}), set({pt(1, 3), pt(2, 3), pt(1, 1)})));
  CHECK_FALSE(decide_h1(set({iv(0, 1, 1, 1)}), set({pt(1, 2)})));
  CHECK(decide_h1(set({iv(0, 1, 1, 4), pt(1, 2)}), set({pt(0, 1), iv(1, 2, 1, 1)})));
  CHECK(h1_matching(set({iv(0, 1, 1, 4), pt(1, 2)}), set({pt(0, 1), iv(1, 2, 1, 1)})).has_value());
}

TEST_CASE("decide_r1 examples") {
  const auto a = set({iv(0, 1, 1, 4), pt(1, 2)});
  CHECK(decide_r1(a, a));
  CHECK_FALSE(decide_r1(set({pt(0, 1)}), set({pt(1, 2)})));
  CHECK(decide_r1(set({pt(0, 1)}), set({pt(1, 1)})));
  const auto w = r1_witness(set({pt(0, 1)}), set({pt(1, 1)}));
  REQUIRE(w.has_value());
  CHECK(*w == PLHomeo1D::reversal());
  CHECK_FALSE(r1_witness(set({pt(0, 1)}), set({pt(1, 2)})).has_value());
}

TEST_CASE("decide_r1 agrees with monotone matching on a small corpus") {
  const auto corpus = grid_corpus(4, 3);
  std::vector<oracle::Shape> shapes;
  std::vector<MPair> pairs;
  for (const auto& a : corpus) {
    shapes.push_back(oracle::shape_of(a));
    pairs.push_back(extract_M(a));
  }
  std::size_t disagreements = 0;
  std::size_t bad_witnesses = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const bool r1 = decide_r1(pairs[i], pairs[j]);
      if (r1 != oracle::monotone_matching_exists(shapes[i], shapes[j])) ++disagreements;
      if (r1 != decide_r1(corpus[i], corpus[j])) ++disagreements;
      if (r1) {
        if (!decide_h1(corpus[i], corpus[j])) ++disagreements;
        const auto w = r1_witness(corpus[i], corpus[j]);
        if (!w || pl_image(*w, corpus[i]) != corpus[j]) ++bad_witnesses;
      }
    }
  }
  CHECK(disagreements == 0);
  CHECK(bad_witnesses == 0);
}

TEST_CASE("pattern_order_iso") {
  const auto chain3 = LinearOrderSpec::chain({2, 1, 3});
  const auto enc = encode_order(chain3);
  CHECK(pattern_order_iso(extract_T(enc.set), chain3));
  CHECK_FALSE(pattern_order_iso(extract_T(set({pt(1, 2)})), chain3));
  CHECK(pattern_order_iso(extract_T(set({pt(0, 1), pt(1, 2), pt(1, 1)})), LinearOrderSpec::chain({1, 2})));
  // Spatial gap labels in rank order pass; a scrambled labelling fails.
  const std::vector<std::size_t> ok{1, 0, 2};
  const std::vector<std::size_t> bad{0, 1, 2};
  CHECK(pattern_order_iso(extract_T(enc.set), chain3, ok));
  CHECK_FALSE(pattern_order_iso(extract_T(enc.set), chain3, bad));
  const std::vector<std::size_t> one{0};
  CHECK_THROWS_AS(pattern_order_iso(extract_T(set({iv(1, 4, 1, 2)})), LinearOrderSpec::chain({1}), one),
                  std::invalid_argument);
}
