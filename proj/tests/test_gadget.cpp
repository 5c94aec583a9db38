#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "contin/analyzer.hpp"
#include "contin/gadget.hpp"
#include "contin/raster.hpp"
#include "support/oracles.hpp"

using namespace contin;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return Rational(p, d); }

std::vector<const Cell*> cells_of(const GadgetComplex& g, const std::string& role) {
  std::vector<const Cell*> out;
  for (const auto& c : g.complex.cells) {
    if (c.label.role == role) out.push_back(&c);
  }
  return out;
}

}  // namespace

TEST_CASE("fscale examples") {
  CHECK(fscale(Rational(0)) == q(1, 2));
  CHECK(fscale(Rational(1)) == q(2, 3));
  CHECK(fscale(Rational(-1)) == q(1, 3));
  CHECK(std::abs(fscale(q(1, 2)).to_double() - 1 / (1 + std::pow(2.0, -0.5))) < std::ldexp(1.0, -40));
  Rational prev = fscale(q(-40, 1));
  for (int i = -159; i <= 160; ++i) {
    const Rational cur = fscale(q(i, 4));
    CHECK(prev < cur);
    prev = cur;
  }
}

TEST_CASE("rect examples") {
  const auto r10 = rect(1, 0);
  CHECK(r10.a == Point{q(1, 3), 0});
  CHECK(r10.b == Point{q(1, 2), 1});
  CHECK(rect_y(1, 0) == std::pair{q(1, 2), q(2, 3)});
  CHECK(rect_y(1, -1) == std::pair{q(1, 3), q(1, 2)});
  const auto r20 = rect(2, 0);
  CHECK(r20.a == Point{q(1, 5), 0});
  CHECK(r20.b == Point{q(1, 4), q(1, 2)});
  CHECK_THROWS_AS(rect(0, 0), std::invalid_argument);
}

TEST_CASE("build_F smallest case") {
  const auto g = build_F(IntSeq{{0, 0}}, 2);
  CHECK(cells_of(g, "junction").size() == 1);
  CHECK(cells_of(g, "connector").size() == kConnectorSamples);
  std::size_t fills = 0;
  for (const auto* c : cells_of(g, "stripe")) fills += c->label.side == "fill";
  CHECK(fills == 2);
  CHECK(path_components(g.complex).count == 2);
  g.complex.validate();
  CHECK_THROWS_AS(build_F(IntSeq{{0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_F(IntSeq{{0, 0}}, 1), std::invalid_argument);
}

TEST_CASE("connector endpoints") {
  const IntSeq x{{3, -2, 1}};
  const auto g = build_F(x, 4);
  const auto conn = cells_of(g, "connector");
  CHECK(conn.front()->a == Point{q(1, 3), q(7, 2)});
  const Cell* last = nullptr;
  for (const auto* c : conn) {
    if (*c->label.n == 1 && *c->label.index == kConnectorSamples - 1) last = c;
  }
  REQUIRE(last);
  CHECK(last->b == Point{q(1, 4), (Rational(-2) + q(1, 2)) / 2});
}

TEST_CASE("one filled rect per stripe at k = x_n + 1") {
  const IntSeq x{{2, -1, 0, 5}};
  const auto g = build_F(x, 3);
  for (long n = 1; n <= x.size(); ++n) {
    std::size_t fills = 0;
    for (const auto* c : cells_of(g, "stripe")) {
      if (*c->label.n != n || c->label.side != "fill") continue;
      ++fills;
      CHECK(*c->label.k == x.at(n) + 1);
      CHECK(c->kind == CellKind::rect);
    }
    CHECK(fills == 1);
  }
}

TEST_CASE("junction and I0") {
  const auto g = build_F(IntSeq{{0, 1, 0}}, 2);
  GeoComplex i0 = g.complex;
  std::erase_if(i0.cells, [](const Cell& c) { return c.label.role != "i0" && c.label.role != "junction"; });
  CHECK(puncture(i0, {0, 0}).component_count_after == 3);
  const std::vector<Point> ends{{-1, 0}, {0, -g.bound()}, {0, g.bound()}, {0, 0}, {q(-1, 2), 0}};
  CHECK(classify_non_cut(i0, ends) == std::vector<Point>{{-1, 0}, {0, -g.bound()}, {0, g.bound()}});
  CHECK(puncture(g.complex, {0, 0}).component_count_after == 4);
}

TEST_CASE("connector vertices are cut points, side interiors are not") {
  const IntSeq x{{0, 2, -1}};
  const auto g = build_F(x, 3);
  const IncidenceGraph graph(g.complex);
  for (const auto* c : cells_of(g, "connector")) {
    if (*c->label.index == 0) continue;
    CHECK(graph.puncture(c->a).is_cut);
  }
  for (const auto* c : cells_of(g, "stripe")) {
    if (c->kind != CellKind::segment || c->label.side == "rail") continue;
    Point mid{(c->a[0] + c->b[0]) / 2, (c->a[1] + c->b[1]) / 2};
    const bool attach = std::any_of(g.complex.cells.begin(), g.complex.cells.end(), [&](const Cell& other) {
      return other.label.role == "connector" && (other.a == mid || other.b == mid);
    });
    if (attach) continue;
    CHECK_FALSE(graph.puncture(mid).is_cut);
  }
}

TEST_CASE("sigma examples") {
  const IntSeq x{{0, 0}};
  const IntSeq y{{1, 0}};
  const auto a = sigma_logical(x, y, q(1, 3), ExtZ::finite(0));
  CHECK(a == ExtZ::finite(1));
  CHECK(fscale(a.value) == q(2, 3));
  const auto b = sigma_logical(x, y, q(2, 3), ExtZ::finite(0));
  CHECK(b == ExtZ::finite(q(1, 2)));
  CHECK(sigma_eval(x, y, q(2, 3), ExtZ::finite(0)).second == doctest::Approx(fscale(0.5)));
  for (int i = 1; i < 64; ++i) {
    for (int j = -8; j <= 8; ++j) {
      CHECK(sigma_logical(x, x, q(i, 64), ExtZ::finite(q(j, 3))) == ExtZ::finite(q(j, 3)));
    }
  }
  CHECK(sigma_logical(x, y, q(1, 3), ExtZ::pos_inf()) == ExtZ::pos_inf());
  CHECK(sigma_logical(x, y, q(-1, 2), ExtZ::finite(0)) == ExtZ::finite(0));
  CHECK(sigma_logical(x, y, Rational(0), ExtZ::finite(3)) == ExtZ::finite(3));
}

TEST_CASE("sigma is continuous at stripe edges and inverts exactly") {
  const IntSeq x{{0, 3, -2, 1}};
  const IntSeq y{{2, -1, 0, 4}};
  for (long n = 1; n <= 5; ++n) {
    const Rational left(1, 2 * n + 1);
    const Rational right(1, 2 * n);
    const Rational eps(1, 1 << 20);
    // The shift is Lipschitz in px across stripe edges.
    for (const Rational& edge : {left, right}) {
      CHECK(abs(sigma_shift(x, y, edge) - sigma_shift(x, y, edge + eps)) <= 1024 * eps);
      CHECK(abs(sigma_shift(x, y, edge) - sigma_shift(x, y, edge - eps)) <= 1024 * eps);
    }
  }
  for (int i = 1; i < 200; ++i) {
    const Rational px(i, 200);
    const ExtZ z = ExtZ::finite(q(i % 13 - 6, 5));
    CHECK(sigma_logical(y, x, px, sigma_logical(x, y, px, z)) == z);
  }
}

TEST_CASE("sigma_verify") {
  const IntSeq zero{{0, 0, 0, 0}};
  const auto same = sigma_verify(zero, zero, 4, 1e-9);
  CHECK(same.ok());
  for (const auto& d : same.displacement) {
    CHECK(d.stripe == 0);
    CHECK(d.connector == 0);
  }

  const auto tail = sigma_verify(zero, IntSeq{{0, 0, 0, 1}}, 4, 1e-9);
  CHECK(tail.ok());
  for (const auto& d : tail.displacement) {
    CHECK((d.stripe > 0) == (d.n == 4));
    CHECK((d.connector > 0) == (d.n == 3));
  }

  const IntSeq four{{4, 0, 0, 0}};
  const auto shifted = sigma_verify(zero, four, 4, 1e-9);
  CHECK(shifted.ok());
  const auto fx = build_F(zero, 4);
  const auto fy = build_F(four, 4);
  for (std::size_t i = 0; i < fx.complex.cells.size(); ++i) {
    const auto& c = fx.complex.cells[i];
    if (c.label.role == "stripe" && *c.label.n == 1 && c.label.k) {
      CHECK(*fy.complex.cells[shifted.cell_map[i]].label.k == *c.label.k + 4);
    }
  }

  const auto mutant = sigma_verify(zero, four, 4, 1e-9, -1);
  CHECK_FALSE(mutant.mismatches.empty());
  CHECK_THROWS_AS(sigma_verify(zero, IntSeq{{0, 0}}, 4, 1e-9), std::invalid_argument);
}

TEST_CASE("displacement profile") {
  CHECK(logistic_gap(0) == 0);
  CHECK(std::abs(logistic_gap(1) - (3 - 2 * std::sqrt(2.0))) < std::ldexp(1.0, -20));
  CHECK(std::abs(oracle::logistic_gap_closed_form(1) - std::pow(std::sqrt(2.0) - 1, 2)) < 1e-15);
  for (double d : {0.01, 0.3, 1.0, 2.5, 7.0, 40.0}) {
    CHECK(std::abs(logistic_gap(d) - oracle::logistic_gap_closed_form(d)) < std::ldexp(1.0, -20));
  }
  IntSeq x;
  IntSeq y;
  for (int n = 1; n <= 25; ++n) {
    x.values.push_back(0);
    y.values.push_back(3);
  }
  const auto p = displacement_profile(x, y);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] < p[i - 1]);
}

TEST_CASE("gadget components agree with the raster oracle") {
  for (const auto& x : {IntSeq{{0, 0}}, IntSeq{{1, -1, 2}}, IntSeq{{0, 3, -3, 1, 0, 2}}}) {
    const auto g = build_F(x, 2);
    CHECK(raster_resolution_sufficient(g.complex, 1024));
    CHECK(raster_oracle(g.complex, 1024) == 2);
  }
}
