#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contin/complex.hpp"

namespace contin {

/// x_1..x_N; index n in the formulas below is 1-based.
struct IntSeq {
  std::vector<long> values;
  long at(long n) const { return values.at(static_cast<std::size_t>(n - 1)); }
  long size() const { return static_cast<long>(values.size()); }
  friend bool operator==(const IntSeq&, const IntSeq&) = default;
};

/// 1/(1 + 2^-z). Exact for integers |z| <= 62, otherwise rounded to the
/// nearest multiple of 2^-44.
Rational fscale(const Rational& z);
double fscale(double z);

/// Chart value z, possibly infinite (the physical ends y = 0 and y = 1).
struct ExtZ {
  Rational value;
  int infinite = 0;  // -1, 0 or +1
  static ExtZ finite(Rational v) { return {v, 0}; }
  static ExtZ neg_inf() { return {0, -1}; }
  static ExtZ pos_inf() { return {0, 1}; }
  double physical() const;
  std::string str() const;
  friend bool operator==(const ExtZ&, const ExtZ&) = default;
};

/// R_{n,k} in the logical chart: x in [1/(2n+1), 1/(2n)], z in [k/n, (k+1)/n].
/// Throws std::invalid_argument for n < 1.
Cell rect(long n, long k);
/// Physical y-range [fscale(k/n), fscale((k+1)/n)] of R_{n,k}.
std::pair<Rational, Rational> rect_y(long n, long k);

/// The truncated gadget in the logical chart: x in [-1,1] and z in
/// [-bound, bound], where +-bound stands for z = +-infinity.
///
/// Cells: I0 as the arm (-1,0)-(0,0), the vertical (0,-inf)-(0,+inf) and the
/// junction point; per stripe n the l/r/b sides of R_{n,k} for
/// |k - x_n| <= K, the top side of the last window rect, the filled
/// R_{n,x_n+1} and four rails reaching from the window to z = +-inf; per
/// n < N a connector polyline of 64 segments, straight in (lambda, z).
struct GadgetComplex {
  IntSeq seq;
  long window = 4;
  GeoComplex complex;
  const Rational& bound() const { return complex.chart->bound; }
};

inline constexpr int kConnectorSamples = 64;

/// Throws std::invalid_argument when N < 2 or K < 2.
GadgetComplex build_F(const IntSeq& x, long window);

/// Map a chart value of a gadget complex to ExtZ (+-bound become infinite).
ExtZ chart_z(const GadgetComplex& g, const Rational& z);
Rational chart_value(const GadgetComplex& g, const ExtZ& z);

/// sigma in logical coordinates: the z-shift at abscissa px. On stripe n the
/// shift is delta_n = (y_n - x_n)/n; between stripes n and n+1 (and on
/// (1/2,1) with delta_0 = 0) it interpolates linearly in
/// lambda = 1/px - (2n+1). delta_n = 0 for n > N. Identity for px <= 0,
/// px >= 1 and infinite z. `sign` = -1 flips every shift (used only to
/// build a deliberately wrong map).
ExtZ sigma_logical(const IntSeq& x, const IntSeq& y, const Rational& px, const ExtZ& pz, int sign = 1);
Rational sigma_shift(const IntSeq& x, const IntSeq& y, const Rational& px, int sign = 1);

/// sigma on physical points of (0,1)^2 whose ordinate is fscale of a
/// known chart value; returns the physical image as doubles.
std::pair<double, double> sigma_eval(const IntSeq& x, const IntSeq& y, const Rational& px, const ExtZ& pz);

struct CellMismatch {
  std::size_t cell = 0;
  std::string description;
};

struct StripeDisplacement {
  long n = 0;
  double stripe = 0;     // sup over stripe cell corners
  double connector = 0;  // sup over connector n vertices (0 when n = N)
  double bound = 0;      // sup_z |fscale(z + delta_n) - fscale(z)|
};

struct SigmaReport {
  std::size_t cells_checked = 0;
  std::vector<CellMismatch> mismatches;
  /// cell_map[i]: index in F(y) of the image of cell i of F(x).
  std::vector<std::size_t> cell_map;
  std::vector<StripeDisplacement> displacement;
  /// Stripes whose displacement exceeds the bound by more than tol.
  std::vector<long> bound_violations;
  bool round_trip_exact = true;
  bool ok() const { return mismatches.empty() && bound_violations.empty() && round_trip_exact; }
};

/// Checks that sigma carries each cell of build_F(x, K) exactly onto the
/// matching cell of build_F(y, K) (stripe cells k -> k + y_n - x_n, rails to
/// rails, connector vertex j to connector vertex j), and that physical
/// corner displacement on stripe n stays within the profile bound. Throws
/// std::invalid_argument when x and y differ in length.
SigmaReport sigma_verify(const IntSeq& x, const IntSeq& y, long window, double tol, int sign = 1);

/// sup_z |fscale(z + d) - fscale(z)| by ternary search to 2^-20.
double logistic_gap(double d);
/// Entry n (1-based) is logistic_gap((y_n - x_n)/n).
std::vector<double> displacement_profile(const IntSeq& x, const IntSeq& y);

}  // namespace contin
