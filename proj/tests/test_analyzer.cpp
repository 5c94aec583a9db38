#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contin/analyzer.hpp"
#include "contin/coding.hpp"
#include "contin/gadget.hpp"
#include "contin/geometry.hpp"
#include "contin/raster.hpp"
#include "contin/corpus.hpp"
#include "support/oracles.hpp"

using namespace contin;

namespace {

GeoComplex planar(std::vector<Cell> cells) {
  GeoComplex c = GeoComplex::unit(2);
  c.cells = std::move(cells);
  return c;
}

Rational q(std::int64_t p, std::int64_t d) { return Rational(p, d); }

}  // namespace

TEST_CASE("meet classification") {
  const auto s = Cell::segment({0, 0}, {1, 1});
  CHECK(meet(s, Cell::segment({0, 1}, {1, 0})).kind == MeetKind::single);
  CHECK(meet(s, Cell::segment({0, 1}, {1, 0})).at == Point{q(1, 2), q(1, 2)});
  CHECK(meet(s, Cell::segment({q(1, 2), q(1, 2)}, {2, 2})).kind == MeetKind::extended);
  CHECK(meet(s, Cell::segment({0, q(1, 10)}, {1, q(11, 10)})).kind == MeetKind::empty);
  CHECK(meet(Cell::rect({0, 0}, {1, 1}), Cell::rect({1, 1}, {2, 2})).kind == MeetKind::single);
  CHECK(meet(Cell::rect({0, 0}, {1, 1}), Cell::segment({2, 0}, {0, 2})).kind == MeetKind::single);
  CHECK(meet(Cell::rect({0, 0}, {1, 1}), Cell::point({q(1, 2), q(1, 3)})).kind == MeetKind::single);
  CHECK(distance_sq(Cell::point({0, 0}), Cell::segment({1, 1}, {1, 2})) == 2);
  CHECK(distance_sq(Cell::rect({0, 0}, {1, 1}), Cell::segment({2, 0}, {2, 1})) == 1);
}

TEST_CASE("path_components examples") {
  const auto two = planar({Cell::segment({0, 0}, {q(1, 2), 0}), Cell::segment({0, 1}, {1, 1})});
  CHECK(path_components(two).count == 2);
  CHECK(path_components(two).labels == std::vector<std::size_t>{0, 1});
  CHECK(path_components(build_tilde(mk_closed_set({Component::point(q(1, 2))}), 2)).count == 1);
  CHECK(path_components(build_F(IntSeq{{0, 0, 0}}, 4).complex).count == 2);
}

TEST_CASE("puncture examples") {
  const auto seg = planar({Cell::segment({0, 0}, {1, 0})});
  const auto mid = puncture(seg, {q(1, 2), 0});
  CHECK(mid.is_cut);
  CHECK(mid.component_count_after == 2);
  const auto end = puncture(seg, {0, 0});
  CHECK_FALSE(end.is_cut);
  CHECK(end.component_count_after == 1);
  CHECK_THROWS_AS(puncture(seg, {q(1, 2), q(1, 2)}), std::invalid_argument);

  const auto filled = planar({Cell::rect({0, 0}, {1, 1}), Cell::segment({1, 0}, {2, 0})});
  CHECK_FALSE(puncture(filled, {q(1, 2), q(1, 2)}).is_cut);
  // The segment hangs off a corner, so that corner separates it.
  CHECK(puncture(filled, {1, 0}).is_cut);

  // Two rects sharing only a corner come apart there.
  const auto corner = planar({Cell::rect({0, 0}, {1, 1}), Cell::rect({1, 1}, {2, 2})});
  CHECK(puncture(corner, {1, 1}).component_count_after == 2);
}

TEST_CASE("puncture with earlier removals") {
  const auto seg = planar({Cell::segment({0, 0}, {1, 0})});
  const IncidenceGraph g(seg);
  const std::vector<Point> removed{{q(1, 4), 0}};
  const auto r = g.puncture({q(3, 4), 0}, removed);
  CHECK(r.is_cut);
  CHECK(r.component_count_after == 3);
  CHECK_THROWS_AS(g.puncture({q(1, 4), 0}, removed), std::invalid_argument);
  const std::vector<Point> candidates{{0, 0}, {q(1, 2), 0}, {1, 0}};
  CHECK(classify_non_cut(seg, candidates) == std::vector<Point>{{0, 0}, {1, 0}});
}

TEST_CASE("puncture never lowers the component count") {
  const auto c = build_tilde(mk_closed_set({Component::point(0), Component::interval(q(1, 2), 1)}), 2);
  const IncidenceGraph g(c);
  const auto before = g.components().count;
  for (const auto& cell : c.cells) {
    for (const auto& v : cell.vertices()) CHECK(g.puncture(v).component_count_after >= before);
  }
}

TEST_CASE("raster oracle examples") {
  const auto two = planar({Cell::segment({0, 0}, {q(1, 2), 0}), Cell::segment({0, 1}, {1, 1})});
  for (int r = 64; r <= 1024; r *= 2) CHECK(raster_oracle(two, r) == 2);
  const auto touching = planar({Cell::rect({0, 0}, {q(1, 2), q(1, 2)}), Cell::segment({q(1, 2), q(1, 4)}, {1, 1})});
  CHECK(raster_oracle(touching, 64) == 1);
  const auto f = build_F(IntSeq{{0, 0, 0}}, 4).complex;
  CHECK(raster_resolution_sufficient(f, 1024));
  CHECK(raster_oracle(f, 1024) == 2);
  CHECK_THROWS(raster_oracle(two, 100));
}

TEST_CASE("raster oracle agrees with the incidence graph on coding complexes") {
  for (const auto& a : grid_corpus(4, 2)) {
    for (int m = 1; m <= 2; ++m) {
      for (const auto& c : {build_I(a, m), build_tilde(a, m), build_J(a, m), build_hat(a)}) {
        if (!raster_resolution_sufficient(c, 256)) continue;
        CHECK(raster_oracle(c, 256) == path_components(c).count);
      }
    }
  }
}

TEST_CASE("minimum gap is exact") {
  const auto two = planar({Cell::segment({0, 0}, {q(1, 2), 0}), Cell::segment({0, q(1, 4)}, {1, q(1, 4)})});
  CHECK(*min_component_gap_sq(two) == to_big(q(1, 16)));
  CHECK_FALSE(min_component_gap_sq(planar({Cell::segment({0, 0}, {1, 0})})).has_value());
}

TEST_CASE("J apex puncture leaves the floor component and one component per dset segment") {
  const auto a = mk_closed_set({Component::interval(q(1, 4), q(3, 4))});
  for (int m = 1; m <= 3; ++m) {
    const auto j = build_J(a, m);
    const auto d = gen_dset(a, m);
    const IncidenceGraph g(j);
    const std::vector<Point> apex{default_apex(2)};
    CHECK(g.component_count_without(apex) == d.size() + 1);
    // Inside each dset component the only non-cut original vertex is the
    // dset point itself.
    for (const auto& p : d.points) {
      const Point v{p.position, p.height, 0};
      CHECK_FALSE(g.puncture(v, apex).is_cut);
    }
  }
}

TEST_CASE("clip_complex keeps only the part inside the box") {
  const auto c = planar({Cell::segment({0, 0}, {1, 1}), Cell::rect({q(1, 2), 0}, {1, q(1, 2)})});
  const auto clipped = clip_complex(c, {0, 0}, {q(1, 4), q(1, 4)});
  REQUIRE(clipped.cells.size() == 1);
  CHECK(clipped.cells[0] == Cell::segment({0, 0}, {q(1, 4), q(1, 4)}));
}
