#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contin/closed_set.hpp"
#include "contin/pl_homeo.hpp"
#include "contin/corpus.hpp"
#include "support/oracles.hpp"

using namespace contin;

namespace {

Component pt(std::int64_t p, std::int64_t q) { return Component::point(Rational(p, q)); }
Component iv(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Component::interval(Rational(a, b), Rational(c, d));
}

PLHomeo1D quarter_map() { return PLHomeo1D({{0, 0}, {Rational(1, 2), Rational(1, 4)}, {1, 1}}, Orientation::preserving); }

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * 3 == 1);
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("7") == 7);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/x"));
  CHECK_THROWS_AS(Rational(INT64_MAX) + 1, RationalOverflow);
}

TEST_CASE("mk_closed_set canonicalizes") {
  CHECK(mk_closed_set({iv(0, 1, 1, 4), pt(1, 4)}).components().size() == 1);
  CHECK(mk_closed_set({iv(0, 1, 1, 4), pt(1, 4)}) == mk_closed_set({iv(0, 1, 1, 4)}));
  const auto sorted = mk_closed_set({pt(1, 2), pt(1, 4)});
  CHECK(sorted.components()[0] == pt(1, 4));
  CHECK(sorted.components()[1] == pt(1, 2));
  CHECK(mk_closed_set({iv(1, 3, 1, 2), iv(2, 5, 3, 5)}) == mk_closed_set({iv(1, 3, 3, 5)}));
  CHECK_THROWS_AS(mk_closed_set({}), std::invalid_argument);
  CHECK_THROWS_AS(mk_closed_set({pt(3, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(mk_closed_set({iv(1, 2, 1, 3)}), std::invalid_argument);
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::vector<Component> raw;
    std::uniform_int_distribution<int> c(0, 16);
    const int k = 1 + t % 6;
    for (int i = 0; i < k; ++i) {
      int a = c(rng);
      int b = c(rng);
      if (a > b) std::swap(a, b);
      raw.push_back(Component::interval(Rational(a, 16), Rational(b, 16)));
    }
    const auto once = mk_closed_set(raw);
    const std::vector<Component> again(once.components().begin(), once.components().end());
    CHECK(mk_closed_set(again) == once);
    for (int j = 0; j <= 64; ++j) CHECK(once.contains(Rational(j, 64)) == oracle::raw_member(raw, Rational(j, 64)));
  }
}

TEST_CASE("complement_intervals examples") {
  const auto a = complement_intervals(mk_closed_set({pt(1, 2)}));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == OpenInterval{0, Rational(1, 2), true, false});
  CHECK(a[1] == OpenInterval{Rational(1, 2), 1, false, true});

  const auto b = complement_intervals(mk_closed_set({pt(0, 1)}));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == OpenInterval{0, 1, false, true});

  const auto set = mk_closed_set({iv(0, 1, 1, 4), pt(1, 2), iv(3, 4, 1, 1)});
  const auto c = complement_intervals(set);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == OpenInterval{Rational(1, 4), Rational(1, 2), false, false});
  CHECK(c[1] == OpenInterval{Rational(1, 2), Rational(3, 4), false, false});
  CHECK(oracle::partition_defects(set, 256) == 0);
}

TEST_CASE("complement and set partition [0,1] on the grid corpus") {
  for (const auto& a : grid_corpus(6, 3)) CHECK(oracle::partition_defects(a, 96) == 0);
}

TEST_CASE("pl_eval examples") {
  CHECK(pl_eval(PLHomeo1D::identity(), Rational(1, 3)) == Rational(1, 3));
  CHECK(pl_eval(PLHomeo1D::reversal(), Rational(1, 4)) == Rational(3, 4));
  CHECK(pl_eval(quarter_map(), Rational(3, 4)) == Rational(5, 8));
  for (int j = 0; j <= 64; ++j) {
    CHECK(pl_eval(quarter_map(), Rational(j, 64)) == oracle::pl_value(quarter_map(), Rational(j, 64)));
  }
  CHECK_THROWS_AS(pl_eval(quarter_map(), Rational(5, 4)), std::domain_error);
}

TEST_CASE("PLHomeo1D validation") {
  CHECK_THROWS_AS(PLHomeo1D({{0, 0}, {Rational(1, 2), Rational(1, 2)}}, Orientation::preserving),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLHomeo1D({{0, 0}, {Rational(1, 2), Rational(3, 4)}, {Rational(3, 4), Rational(1, 2)}, {1, 1}},
                            Orientation::preserving),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLHomeo1D({{0, 0}, {1, 1}}, Orientation::reversing), std::invalid_argument);
  // Collinear breakpoints are dropped, so equal maps compare equal.
  CHECK(PLHomeo1D({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, 1}}, Orientation::preserving) ==
        PLHomeo1D::identity());
}

TEST_CASE("pl_image examples") {
  const auto a = mk_closed_set({iv(0, 1, 1, 3), pt(1, 2)});
  CHECK(pl_image(PLHomeo1D::identity(), a) == a);
  CHECK(pl_image(PLHomeo1D::reversal(), mk_closed_set({pt(0, 1), iv(1, 2, 1, 1)})) ==
        mk_closed_set({iv(0, 1, 1, 2), pt(1, 1)}));
  CHECK(pl_image(quarter_map(), mk_closed_set({iv(1, 4, 3, 4)})) == mk_closed_set({iv(1, 8, 5, 8)}));
}

TEST_CASE("compose and invert") {
  const auto h = quarter_map();
  CHECK(pl_compose(PLHomeo1D::identity(), h) == h);
  CHECK(pl_invert(PLHomeo1D::reversal()) == PLHomeo1D::reversal());
  CHECK(pl_invert(h) == PLHomeo1D({{0, 0}, {Rational(1, 4), Rational(1, 2)}, {1, 1}}, Orientation::preserving));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_pl(rng, 32, 4);
    const auto f = random_pl(rng, 32, 4);
    const auto gf = pl_compose(g, f);
    const auto inv = pl_invert(f);
    for (int j = 0; j <= 32; ++j) {
      const Rational x(j, 32);
      CHECK(pl_eval(inv, pl_eval(f, x)) == x);
      CHECK(pl_eval(gf, x) == oracle::pl_value(g, oracle::pl_value(f, x)));
    }
    const auto a = random_set(rng, 24, 4);
    const auto image = pl_image(f, a);
    CHECK(pl_image(inv, image) == a);
    CHECK(image.size() == a.size());
    const auto sa = oracle::shape_of(a);
    const auto si = oracle::shape_of(image);
    CHECK(std::count(sa.kinds.begin(), sa.kinds.end(), true) == std::count(si.kinds.begin(), si.kinds.end(), true));
  }
}
