#include "contin/gadget.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <map>
#include <stdexcept>

#include "contin/geometry.hpp"

namespace contin {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;
constexpr int kDyadicBits = 44;

// Left and right abscissae of stripe n.
Rational stripe_left(long n) { return Rational(1, 2 * n + 1); }
Rational stripe_right(long n) { return Rational(1, 2 * n); }

CellLabel stripe_label(long n, std::optional<long> k, std::string side, std::optional<long> index = {}) {
  return {"stripe", n, k, std::move(side), index};
}

Rational delta(const IntSeq& x, const IntSeq& y, long n, int sign) {
  if (n < 1 || n > x.size()) return 0;
  return Rational(sign * (y.at(n) - x.at(n)), n);
}

}  // namespace

Rational fscale(const Rational& z) {
  if (z.is_integer() && z.num() >= -62 && z.num() <= 62) {
    const Rational p = pow2(static_cast<int>(z.num()));
    return p / (p + 1);
  }
  const Big e = Big(z.num()) / Big(z.den());
  const Big v = 1 / (1 + boost::multiprecision::pow(Big(2), -e));
  const Big scaled = boost::multiprecision::round(v * boost::multiprecision::ldexp(Big(1), kDyadicBits));
  return Rational(scaled.convert_to<std::int64_t>(), std::int64_t{1} << kDyadicBits);
}

double fscale(double z) { return 1.0 / (1.0 + std::exp2(-z)); }

double ExtZ::physical() const {
  if (infinite < 0) return 0.0;
  if (infinite > 0) return 1.0;
  return fscale(value.to_double());
}

std::string ExtZ::str() const {
  if (infinite < 0) return "-inf";
  if (infinite > 0) return "+inf";
  return value.str();
}

Cell rect(long n, long k) {
  if (n < 1) throw std::invalid_argument("stripe index must be >= 1");
  return Cell::rect({stripe_left(n), Rational(k, n)}, {stripe_right(n), Rational(k + 1, n)},
                    stripe_label(n, k, "fill"));
}

std::pair<Rational, Rational> rect_y(long n, long k) {
  if (n < 1) throw std::invalid_argument("stripe index must be >= 1");
  return {fscale(Rational(k, n)), fscale(Rational(k + 1, n))};
}

GadgetComplex build_F(const IntSeq& x, long window) {
  const long big_n = x.size();
  if (big_n < 2) throw std::invalid_argument("sequence needs at least 2 terms");
  if (window < 2) throw std::invalid_argument("window radius must be >= 2");

  // Chart bound: an integer beyond every finite chart value.
  Rational zmax = 0;
  for (long n = 1; n <= big_n; ++n) {
    zmax = max(zmax, abs(Rational(x.at(n) - window, n)));
    zmax = max(zmax, abs(Rational(x.at(n) + window + 1, n)));
  }
  const Rational bound(floor(zmax) + 2);

  GadgetComplex g{x, window, {}};
  GeoComplex& c = g.complex;
  c.dim = 2;
  c.box_lo = {-1, -bound};
  c.box_hi = {1, bound};
  c.chart = LogisticChart{1, bound};

  c.cells.push_back(Cell::segment({-1, 0}, {0, 0}, {"i0", {}, {}, "arm", {}}));
  c.cells.push_back(Cell::segment({0, -bound}, {0, bound}, {"i0", {}, {}, "vertical", {}}));
  c.cells.push_back(Cell::point({0, 0}, {"junction", {}, {}, "", {}}));

  for (long n = 1; n <= big_n; ++n) {
    const Rational a = stripe_left(n);
    const Rational b = stripe_right(n);
    const long xn = x.at(n);
    for (long k = xn - window; k <= xn + window; ++k) {
      const Rational lo(k, n);
      const Rational hi(k + 1, n);
      c.cells.push_back(Cell::segment({a, lo}, {a, hi}, stripe_label(n, k, "l")));
      c.cells.push_back(Cell::segment({b, lo}, {b, hi}, stripe_label(n, k, "r")));
      c.cells.push_back(Cell::segment({a, lo}, {b, lo}, stripe_label(n, k, "b")));
    }
    const long top = xn + window + 1;
    c.cells.push_back(Cell::segment({a, Rational(top, n)}, {b, Rational(top, n)}, stripe_label(n, top, "b")));
    c.cells.push_back(rect(n, xn + 1));
    const Rational low(xn - window, n);
    const Rational high(top, n);
    c.cells.push_back(Cell::segment({a, -bound}, {a, low}, stripe_label(n, {}, "rail", 0)));
    c.cells.push_back(Cell::segment({b, -bound}, {b, low}, stripe_label(n, {}, "rail", 1)));
    c.cells.push_back(Cell::segment({a, high}, {a, bound}, stripe_label(n, {}, "rail", 2)));
    c.cells.push_back(Cell::segment({b, high}, {b, bound}, stripe_label(n, {}, "rail", 3)));
  }

  for (long n = 1; n < big_n; ++n) {
    const Rational z0 = (Rational(x.at(n)) + Rational(1, 2)) / n;
    const Rational z1 = (Rational(x.at(n + 1)) + Rational(1, 2)) / (n + 1);
    auto vertex = [&](long j) {
      const Rational lambda(j, kConnectorSamples);
      return Point{Rational(kConnectorSamples, kConnectorSamples * (2 * n + 1) + j), z0 + (z1 - z0) * lambda};
    };
    for (long j = 0; j < kConnectorSamples; ++j) {
      c.cells.push_back(Cell::segment(vertex(j), vertex(j + 1), {"connector", n, {}, "", j}));
    }
  }
  return g;
}

ExtZ chart_z(const GadgetComplex& g, const Rational& z) {
  if (z >= g.bound()) return ExtZ::pos_inf();
  if (z <= -g.bound()) return ExtZ::neg_inf();
  return ExtZ::finite(z);
}

Rational chart_value(const GadgetComplex& g, const ExtZ& z) {
  if (z.infinite != 0) return z.infinite * g.bound();
  return z.value;
}

Rational sigma_shift(const IntSeq& x, const IntSeq& y, const Rational& px, int sign) {
  if (x.size() != y.size()) throw std::invalid_argument("sequences differ in length");
  if (px <= 0 || px >= 1) return 0;
  const Rational t = 1 / px;  // t in [2n, 2n+1] on stripe n
  const long n = floor(t / 2);
  const Rational r = t - 2 * n;
  if (r <= 1) return delta(x, y, n, sign);
  const Rational lambda = r - 1;
  return delta(x, y, n, sign) * (1 - lambda) + delta(x, y, n + 1, sign) * lambda;
}

ExtZ sigma_logical(const IntSeq& x, const IntSeq& y, const Rational& px, const ExtZ& pz, int sign) {
  if (pz.infinite != 0) return pz;
  return ExtZ::finite(pz.value + sigma_shift(x, y, px, sign));
}

std::pair<double, double> sigma_eval(const IntSeq& x, const IntSeq& y, const Rational& px, const ExtZ& pz) {
  return {px.to_double(), sigma_logical(x, y, px, pz).physical()};
}

double logistic_gap(double d) {
  d = std::abs(d);
  if (d == 0) return 0;
  const auto gap = [d](double z) { return fscale(z + d) - fscale(z); };
  double lo = -d - 64;
  double hi = 64;
  while (hi - lo > 0x1p-20) {
    const double m1 = lo + (hi - lo) / 3;
    const double m2 = hi - (hi - lo) / 3;
    if (gap(m1) < gap(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return gap((lo + hi) / 2);
}

std::vector<double> displacement_profile(const IntSeq& x, const IntSeq& y) {
  if (x.size() != y.size()) throw std::invalid_argument("sequences differ in length");
  std::vector<double> out;
  for (long n = 1; n <= x.size(); ++n) out.push_back(logistic_gap(delta(x, y, n, 1).to_double()));
  return out;
}

SigmaReport sigma_verify(const IntSeq& x, const IntSeq& y, long window, double tol, int sign) {
  if (x.size() != y.size()) throw std::invalid_argument("sequences differ in length");
  const GadgetComplex fx = build_F(x, window);
  const GadgetComplex fy = build_F(y, window);
  const std::vector<double> profile = displacement_profile(x, y);

  std::map<std::string, std::size_t> target;
  for (std::size_t j = 0; j < fy.complex.cells.size(); ++j) {
    target.emplace(cell_geometry_key(fy.complex.cells[j]), j);
  }

  SigmaReport report;
  for (long n = 1; n <= x.size(); ++n) {
    report.displacement.push_back({n, 0, 0, profile[static_cast<std::size_t>(n - 1)]});
  }
  std::vector<char> used(fy.complex.cells.size(), 0);

  auto map_vertex = [&](const Point& p, double& moved) {
    const ExtZ z = chart_z(fx, p[1]);
    const ExtZ image = sigma_logical(x, y, p[0], z, sign);
    if (sigma_logical(y, x, p[0], image, sign) != z) report.round_trip_exact = false;
    moved = std::max(moved, std::abs(image.physical() - z.physical()));
    return Point{p[0], chart_value(fy, image)};
  };

  for (std::size_t i = 0; i < fx.complex.cells.size(); ++i) {
    const Cell& cell = fx.complex.cells[i];
    double moved = 0;
    Cell image = cell;
    image.a = map_vertex(cell.a, moved);
    if (cell.kind != CellKind::point) image.b = map_vertex(cell.b, moved);
    if (cell.label.role == "stripe" && cell.label.k) {
      const long n = *cell.label.n;
      *image.label.k += y.at(n) - x.at(n);
    }
    if (cell.label.role == "stripe") {
      auto& d = report.displacement[static_cast<std::size_t>(*cell.label.n - 1)];
      d.stripe = std::max(d.stripe, moved);
    } else if (cell.label.role == "connector") {
      auto& d = report.displacement[static_cast<std::size_t>(*cell.label.n - 1)];
      d.connector = std::max(d.connector, moved);
    }
    ++report.cells_checked;
    const auto it = target.find(cell_geometry_key(image));
    if (it == target.end()) {
      report.mismatches.push_back({i, "no cell of F(y) at " + cell_geometry_key(image)});
      report.cell_map.push_back(fy.complex.cells.size());
      continue;
    }
    const Cell& hit = fy.complex.cells[it->second];
    if (hit.label != image.label) {
      report.mismatches.push_back({i, "label mismatch at " + cell_geometry_key(image)});
    } else if (used[it->second]) {
      report.mismatches.push_back({i, "cell hit twice at " + cell_geometry_key(image)});
    }
    used[it->second] = 1;
    report.cell_map.push_back(it->second);
  }
  if (fx.complex.cells.size() != fy.complex.cells.size()) {
    report.mismatches.push_back({fx.complex.cells.size(), "cell counts differ"});
  }

  // Round trip on gap and outer-strip points that no cell vertex reaches.
  for (long n = 0; n <= x.size(); ++n) {
    for (const Rational lambda : {Rational(1, 3), Rational(1, 2), Rational(7, 8)}) {
      const Rational px = 1 / (2 * n + 1 + lambda);
      for (const Rational z : {Rational(-3), Rational(0), Rational(5, 7)}) {
        const ExtZ image = sigma_logical(x, y, px, ExtZ::finite(z), sign);
        if (sigma_logical(y, x, px, image, sign) != ExtZ::finite(z)) report.round_trip_exact = false;
      }
    }
  }

  for (const auto& d : report.displacement) {
    if (std::max(d.stripe, 0.0) > d.bound + tol) report.bound_violations.push_back(d.n);
  }
  return report;
}

}  // namespace contin
