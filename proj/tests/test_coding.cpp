#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contin/analyzer.hpp"
#include "contin/coding.hpp"
#include "contin/geometry.hpp"
#include "contin/corpus.hpp"
#include "support/oracles.hpp"

using namespace contin;

namespace {

ClosedSet1D set(std::vector<Component> raw) { return mk_closed_set(std::move(raw)); }
Component pt(std::int64_t p, std::int64_t q) { return Component::point(Rational(p, q)); }
const ClosedSet1D kHalf = set({pt(1, 2)});
const ClosedSet1D kEnds = set({pt(0, 1), pt(1, 1)});
const ClosedSet1D kUnit = set({Component::interval(0, 1)});

// Every base point within 1/2^k of a level-k position, checked by scanning
// the base at spacing 1/2^(k+4) with exact distances.
bool net_by_scan(const DSet& d) {
  for (int k = 1; k <= d.depth; ++k) {
    const Rational radius(1, std::int64_t{1} << k);
    const std::int64_t res = std::int64_t{1} << (k + 4);
    for (std::int64_t j = 0; j <= res; ++j) {
      const Rational x(j, res);
      if (!d.base.contains(x)) continue;
      bool near = false;
      for (const auto& p : d.points) near = near || (p.level == k && abs(p.position - x) <= radius);
      if (!near) return false;
    }
  }
  return true;
}

std::size_t cones(const GeoComplex& c) { return c.count_role("cone"); }

}  // namespace

TEST_CASE("gen_dset examples") {
  const auto a = gen_dset(kHalf, 3);
  CHECK(a.points == std::vector<DPoint>{{Rational(1, 2), Rational(1, 2), 1},
                                        {Rational(1, 2), Rational(1, 4), 2},
                                        {Rational(1, 2), Rational(1, 8), 3}});
  const auto b = gen_dset(kUnit, 1);
  CHECK(b.points == std::vector<DPoint>{{0, Rational(1, 2), 1}, {Rational(1, 2), Rational(1, 2), 1}, {1, Rational(1, 2), 1}});
  const auto c = gen_dset(kEnds, 2);
  CHECK(c.size() == 4);
  for (const auto& p : c.points) CHECK((p.position == 0 || p.position == 1));
}

TEST_CASE("generated D-sets are valid nets") {
  for (const auto& a : grid_corpus(6, 2)) {
    for (int m = 1; m <= 4; ++m) {
      const auto d = gen_dset(a, m);
      CHECK_FALSE(dset_invalid_level(d).has_value());
      CHECK(net_by_scan(d));
      for (const auto& p : d.points) CHECK(a.contains(p.position));
    }
  }
}

TEST_CASE("dset_invalid_level reports the first broken level") {
  auto d = gen_dset(kUnit, 3);
  std::erase_if(d.points, [](const DPoint& p) { return p.level == 2 && p.position > 0 && p.position < 1; });
  CHECK(dset_invalid_level(d) == 2);
}

TEST_CASE("build_I examples") {
  CHECK(build_I(kHalf, 1).cells.size() == 2);
  const auto c = build_I(kEnds, 2);
  CHECK(c.count_role("floor") == 2);
  CHECK(c.count_role("dset") == 4);
  for (const auto& a : {kHalf, kEnds, set({pt(0, 1), Component::interval(Rational(1, 2), 1)})}) {
    for (int m = 1; m <= 3; ++m) CHECK(path_components(build_I(a, m)).count == a.size() + gen_dset(a, m).size());
  }
}

TEST_CASE("build_fan examples") {
  GeoComplex base = GeoComplex::unit(2);
  base.cells.push_back(Cell::point({Rational(1, 4), 0}, {"floor", {}, {}, "", {}}));
  const auto fan = build_fan(base, default_apex(2));
  CHECK(cones(fan) == 1);
  CHECK(default_apex(2) == Point{Rational(1, 2), Rational(1, 2), 1});
  CHECK(cones(build_fan(build_I(kHalf, 1), default_apex(2))) == 2);
  CHECK_THROWS_AS(build_fan(base, Point{Rational(1, 2), Rational(1, 2), 0}), std::invalid_argument);
}

TEST_CASE("build_tilde examples") {
  CHECK(cones(build_tilde(kHalf, 1)) == 2);
  const auto t = build_tilde(kEnds, 2);
  CHECK(cones(t) == 6);
  CHECK(t.count_role("floor") == 2);
  CHECK(path_components(t).count == 1);
}

TEST_CASE("tilde structure: dset points are leaves, floor points have disconnected neighbourhoods") {
  for (const auto& a : {kHalf, kEnds, kUnit}) {
    for (int m = 1; m <= 3; ++m) {
      const auto d = gen_dset(a, m);
      const auto t = build_tilde(d);
      const IncidenceGraph g(t);
      for (const auto& p : d.points) {
        const Point v{p.position, p.height, 0};
        std::size_t incident = 0;
        for (const auto& cell : t.cells) incident += cell.label.role == "cone" && on_cell(v, cell);
        CHECK(incident == 1);
        CHECK_FALSE(g.puncture(v).is_cut);
      }
      const Rational eps(1, std::int64_t{1} << m);
      for (const auto& comp : a.components()) {
        const Point lo{comp.lo - eps, -eps, -eps};
        const Point hi{comp.lo + eps, eps, eps};
        CHECK(path_components(clip_complex(t, lo, hi)).count >= 2);
      }
    }
  }
}

TEST_CASE("build_J examples and apex law") {
  const auto j = build_J(kHalf, 1);
  CHECK(j.count_role("floor-cube") == 1);
  CHECK(j.count_role("dset") == 1);
  CHECK(cones(j) == 2);
  const auto ends = build_J(kEnds, 2);
  std::size_t attached = 0;
  for (const auto& cell : ends.cells) {
    if (cell.label.role != "cone") continue;
    for (const auto& v : cell.vertices()) attached += v == Point{0, 0, 0} || v == Point{1, 0, 0};
  }
  CHECK(attached == 2);
  for (const auto& a : grid_corpus(4, 1)) {
    for (int m = 1; m <= 3; ++m) {
      const auto jm = build_J(a, m);
      const auto r = puncture(jm, default_apex(2));
      CHECK(r.component_count_after == gen_dset(a, m).size() + 1);
    }
  }
}

TEST_CASE("build_hat examples") {
  const auto a = build_hat(set({pt(0, 1)}));
  CHECK(a.cells.size() == 2);
  CHECK(a.cells[1] == Cell::segment({Rational(1, 3), 0}, {Rational(1, 3), Rational(1, 3)}, a.cells[1].label));
  const auto b = build_hat(kUnit);
  REQUIRE(b.cells.size() == 2);
  CHECK(b.cells[1].kind == CellKind::rect);
  CHECK(b.cells[1].a == Point{Rational(1, 3), 0});
  CHECK(b.cells[1].b == Point{Rational(2, 3), Rational(1, 3)});
  const auto c = build_hat(kEnds);
  CHECK(c.cells.size() == 3);
  CHECK(c.cells[1].a[0] == Rational(1, 3));
  CHECK(c.cells[2].a[0] == Rational(2, 3));
}

TEST_CASE("build_hat for box sets") {
  BoxSet2D box{{Cell::point({Rational(1, 2), Rational(1, 2)}),
                Cell::segment({0, 0}, {1, 0})}};
  const auto h = build_hat(box);
  CHECK(h.dim == 3);
  CHECK(h.count_role("cylinder") == 2);
  CHECK(path_components(h).count == 1);
  BoxSet2D planar{{Cell::rect({0, 0}, {1, 1})}};
  CHECK_THROWS_AS(build_hat(planar), std::invalid_argument);
}
