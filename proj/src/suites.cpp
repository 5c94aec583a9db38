#include "contin/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "contin/analyzer.hpp"
#include "contin/coding.hpp"
#include "contin/corpus.hpp"
#include "contin/gadget.hpp"
#include "contin/geometry.hpp"
#include "contin/homeo.hpp"
#include "contin/invariants.hpp"
#include "contin/order_encoder.hpp"
#include "contin/raster.hpp"

namespace contin {
namespace {

class Recorder {
public:
  explicit Recorder(SuiteReport& r) : report_(r) {}

  bool check(bool ok, const std::string& name, const Json& inputs, const std::string& expected,
             const std::string& actual) {
    ++report_.cases;
    if (ok) return true;
    ++report_.failure_count;
    if (report_.failures.size() < SuiteReport::kMaxRecorded) report_.failures.push_back({name, inputs, expected, actual});
    return false;
  }
  bool check(bool ok, const std::string& name, const Json& inputs) { return check(ok, name, inputs, "true", "false"); }

  template <class T>
  bool equal(const T& expected, const T& actual, const std::string& name, const Json& inputs) {
    return check(expected == actual, name, inputs, std::to_string(expected), std::to_string(actual));
  }

private:
  SuiteReport& report_;
};

int scale(const SuiteOptions& o, int fallback) { return o.max_size > 0 ? o.max_size : fallback; }

// --- encoder -------------------------------------------------------------

bool intervals_in_rank_order(const LinearOrderSpec& order, const RemovedIntervals& removed) {
  std::vector<std::size_t> by_rank(order.n);
  for (std::size_t k = 0; k < order.n; ++k) by_rank[static_cast<std::size_t>(order.ranks[k] - 1)] = k;
  for (std::size_t r = 0; r + 1 < order.n; ++r) {
    if (!(removed.intervals[by_rank[r]].hi <= removed.intervals[by_rank[r + 1]].lo)) return false;
  }
  return true;
}

// Every sample at spacing 1/(2 * 3^n) is in exactly one of: a removed
// interval, the encoded set.
bool covers_unit(const RemovedIntervals& removed, const ClosedSet1D& a, std::size_t n) {
  std::int64_t res = 2;
  for (std::size_t i = 0; i < n; ++i) res *= 3;
  for (std::int64_t j = 0; j <= res; ++j) {
    const Rational x(j, res);
    int claims = a.contains(x) ? 1 : 0;
    for (const auto& s : removed.intervals) claims += s.lo < x && x < s.hi;
    if (claims != 1) return false;
  }
  return true;
}

void encoder_case(Recorder& rec, const LinearOrderSpec& order, bool mutant) {
  const Json in = to_json(order);
  EncodedOrder enc = encode_order(order);
  if (mutant && order.n >= 2) std::swap(enc.removed.intervals[0], enc.removed.intervals[1]);
  rec.check(verify_encoding(order, enc.removed), "verify_encoding", in);
  rec.check(intervals_in_rank_order(order, enc.removed), "intervals in rank order and disjoint", in);
  if (order.n <= 7) rec.check(covers_unit(enc.removed, enc.set, order.n), "intervals and set partition [0,1]", in);
}

void run_encoder(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int max_n = scale(o, 6);
  std::mt19937_64 rng(o.seed);
  std::size_t exhaustive = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 1);
    do {
      encoder_case(rec, LinearOrderSpec::chain(ranks), o.mutant);
      ++exhaustive;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
  }
  std::vector<int> ranks(static_cast<std::size_t>(max_n + 1));
  std::iota(ranks.begin(), ranks.end(), 1);
  for (int t = 0; t < 500; ++t) {
    std::shuffle(ranks.begin(), ranks.end(), rng);
    encoder_case(rec, LinearOrderSpec::chain(ranks), o.mutant);
  }

  // Enumeration independence and size separation under R1.
  std::vector<ClosedSet1D> by_size;
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    std::vector<int> r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 1);
    const auto first = encode_order(LinearOrderSpec::chain(r)).set;
    by_size.push_back(first);
    do {
      const auto other = encode_order(LinearOrderSpec::chain(r)).set;
      rec.check(decide_r1(first, other), "enumerations are R1-equivalent", to_json(LinearOrderSpec::chain(r)));
    } while (std::next_permutation(r.begin(), r.end()));
  }
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    for (std::size_t j = 0; j < by_size.size(); ++j) {
      rec.check(decide_r1(by_size[i], by_size[j]) == (i == j), "R1 separates chain sizes",
                Json{{"sizes", {i + 1, j + 1}}});
    }
  }
  report.metrics["exhaustive_orders"] = exhaustive;
  report.metrics["random_orders"] = 500;
  report.metrics["random_order_size"] = max_n + 1;
}

// --- invariants ----------------------------------------------------------

void run_invariants(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int comps = scale(o, 4);
  const auto corpus = grid_corpus(12, comps);
  std::vector<MPair> pairs;
  std::vector<std::string> keys;
  pairs.reserve(corpus.size());
  for (const auto& a : corpus) {
    MPair m = extract_M(a);
    UVPattern mirror_pattern = extract_T(mirror_set(a));
    if (o.mutant) std::reverse(mirror_pattern.entries.begin(), mirror_pattern.entries.end());
    rec.check(mirror_pattern == m.forward.mirrored(), "mirror law", to_json(a), m.forward.mirrored().str(),
              mirror_pattern.str());
    rec.check(decide_r1(m, m), "R1 reflexive", to_json(a));
    keys.push_back(std::min(m.forward.str(), m.mirrored.str()));
    pairs.push_back(std::move(m));
  }
  // Sampled pairs, biased towards equivalent ones so that witnesses are
  // exercised: half the samples pick B from A's equivalence key.
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < corpus.size(); ++i) classes[keys[i]].push_back(i);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  const std::size_t samples = 20000;
  std::size_t positives = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (t % 2 == 0) {
      const auto& cls = classes[keys[i]];
      j = cls[std::uniform_int_distribution<std::size_t>(0, cls.size() - 1)(rng)];
    }
    const Json in{{"a", to_json(corpus[i])}, {"b", to_json(corpus[j])}};
    const bool r1 = decide_r1(pairs[i], pairs[j]);
    rec.check(r1 == decide_r1(pairs[j], pairs[i]), "R1 symmetric", in);
    rec.check(r1 == (keys[i] == keys[j]), "R1 classes are the mirror-invariant pattern classes", in);
    if (!r1) continue;
    ++positives;
    rec.check(decide_h1(corpus[i], corpus[j]), "R1 implies H1", in);
    auto w = r1_witness(corpus[i], corpus[j]);
    if (o.mutant && w) w = pl_compose(PLHomeo1D::reversal(), *w);
    rec.check(w && pl_image(*w, corpus[i]) == corpus[j], "witness maps A onto B", in);
  }
  report.metrics["corpus_sets"] = corpus.size();
  report.metrics["sampled_pairs"] = samples;
  report.metrics["sampled_positives"] = positives;
  report.metrics["r1_classes"] = classes.size();
}

// --- hat -----------------------------------------------------------------

Rational sup_dist(const Point& p, const Point& q) {
  Rational d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d = max(d, abs(p[i] - q[i]));
  return d;
}

void run_hat(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int comps = scale(o, 4);
  std::mt19937_64 rng(o.seed);
  for (int t = 0; t < 200; ++t) {
    const PLHomeo1D f = random_pl(rng, 1024, 3);
    const ClosedSet1D a = random_set(rng, 12, comps);
    const ClosedSet1D b = pl_image(f, a);
    const Json in{{"f", to_json(f)}, {"a", to_json(a)}};
    const PLHomeo1D used = o.mutant ? pl_compose(f, PLHomeo1D({{0, 0}, {Rational(1, 2), Rational(1, 4)}, {1, 1}},
                                                             Orientation::preserving))
                                    : f;
    try {
      const EvaluableHomeo fhat = lift_hat_homeo(used, a, b);
      rec.check(same_cells(map_cells(fhat, build_hat(a)), build_hat(b)), "hat cells map exactly", in);
      const BaseHomeo base = extract_base_homeo(fhat);
      bool agree = true;
      for (const auto& bp : f.breakpoints()) agree = agree && pl_eval(base.map, bp.in) == bp.out;
      rec.check(agree, "extracted base map agrees at breakpoints", in);
    } catch (const std::exception& e) {
      rec.check(false, "lift_hat_homeo", in, "lift", e.what());
    }
  }

  // Radial extension.
  const Rational third(1, 3);
  const auto id = radial_extend(rescale_inner(EvaluableHomeo::identity(2)));
  auto swap = [](const Point& p) { return Point{p[1], p[0]}; };
  const auto sw = radial_extend(EvaluableHomeo(2, third, 2 * third, swap, swap));
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; j <= 12; ++j) {
      const Point p{Rational(i, 12), Rational(j, 12)};
      rec.check(id(p) == p, "radial identity", Json{{"p", point_str(p)}});
      rec.check(sw(p) == swap(p), "radial coordinate swap", Json{{"p", point_str(p)}});
    }
  }
  const auto phi = rescale_inner(EvaluableHomeo::product({random_pl(rng, 1024, 4), random_pl(rng, 1024, 4)}));
  const auto ext = radial_extend(phi);
  std::uniform_int_distribution<std::int64_t> u(0, 1 << 20);
  auto coord = [&](Rational lo, Rational hi) { return lo + (hi - lo) * Rational(u(rng), 1 << 20); };
  for (int t = 0; t < 64; ++t) {
    const Point p{coord(third, 2 * third), coord(third, 2 * third)};
    rec.check(ext(p) == phi(p), "radial restriction to inner cube", Json{{"p", point_str(p)}});
  }
  std::size_t outer = 0;
  while (outer < 256) {
    const Point p{coord(0, 1), coord(0, 1)};
    if (sup_radius(p) <= third) continue;
    ++outer;
    rec.check(sup_radius(ext(p)) == sup_radius(p), "radius preserved outside inner cube", Json{{"p", point_str(p)}});
  }
  const Rational step(1, 1 << 12);
  for (int t = 0; t < 256; ++t) {
    Point p{coord(third, 2 * third), coord(third, 2 * third)};
    p[static_cast<std::size_t>(t % 2)] = (t / 2) % 2 ? 2 * third : third;
    Point in = p;
    Point out = p;
    for (std::size_t i = 0; i < 2; ++i) {
      const Rational dir = p[i] - Rational(1, 2);
      in[i] = p[i] - dir * 3 * step / 2;
      out[i] = p[i] + dir * 3 * step / 2;
    }
    const Rational d = sup_dist(ext(in), ext(out));
    rec.check(sup_dist(in, out) <= step && d <= Rational(1, 256), "shell continuity",
              Json{{"inside", point_str(in)}, {"outside", point_str(out)}}, "<= 1/256", d.str());
  }
}

// --- tilde ---------------------------------------------------------------

void run_tilde(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int depth = scale(o, 3);
  const auto corpus = grid_corpus(4, 2);
  std::size_t neighbourhoods = 0;
  for (const auto& a : corpus) {
    for (int m = 1; m <= depth; ++m) {
      const Json in{{"a", to_json(a)}, {"depth", m}};
      const DSet d = gen_dset(a, m);
      rec.check(!dset_invalid_level(d).has_value(), "D-set is a net at every level", in);
      const GeoComplex t = build_tilde(d);
      const IncidenceGraph g(t);
      rec.equal<std::size_t>(1, g.components().count, "tilde complex is connected", in);
      for (const auto& p : d.points) {
        const Point v{p.position, p.height, 0};
        std::size_t incident = 0;
        for (const auto& cell : t.cells) incident += cell.label.role == "cone" && on_cell(v, cell);
        rec.equal<std::size_t>(1, incident, "dset point on exactly one cone segment", in);
        rec.check(!g.puncture(v).is_cut, "dset point is not a cut point", in);
      }
      // Floor points with a level-m dset point within 1/2^m: the box of that
      // radius around the floor point meets the complex in >= 2 pieces.
      const Rational eps(1, std::int64_t{1} << m);
      for (const auto& comp : a.components()) {
        for (const Rational& q : {comp.lo, comp.hi}) {
          const bool has_near = std::any_of(d.points.begin(), d.points.end(), [&](const DPoint& p) {
            return p.level == m && abs(p.position - q) <= eps;
          });
          if (!has_near) continue;
          ++neighbourhoods;
          const auto local = clip_complex(t, {q - eps, -eps, -eps}, {q + eps, eps, eps});
          rec.check(path_components(local).count >= 2, "floor neighbourhood is disconnected", in);
        }
      }
    }
  }

  std::mt19937_64 rng(o.seed);
  std::size_t lifted = 0;
  std::size_t rejected = 0;
  for (int t = 0; t < 60; ++t) {
    const PLHomeo1D f = random_pl(rng, 8, 2);
    const ClosedSet1D a = random_set(rng, 8, 3);
    const int m = 1 + t % std::min(depth, 2);
    const Json in{{"f", to_json(f)}, {"a", to_json(a)}, {"depth", m}};
    try {
      TildeLift lift = lift_tilde_homeo(f, a, pl_image(f, a), m);
      ++lifted;
      if (o.mutant) std::rotate(lift.cell_map.begin(), lift.cell_map.begin() + 1, lift.cell_map.end());
      rec.check(preserves_incidence(lift), "tilde lift preserves incidence", in);
      std::size_t apex_src = 0;
      std::size_t apex_dst = 0;
      for (std::size_t i = 0; i < lift.source.cells.size(); ++i) {
        if (lift.source.cells[i].label.role == "apex") apex_src = i;
      }
      for (std::size_t i = 0; i < lift.target.cells.size(); ++i) {
        if (lift.target.cells[i].label.role == "apex") apex_dst = i;
      }
      rec.check(lift.cell_map[apex_src] == apex_dst, "apex maps to apex", in);
    } catch (const TransportError&) {
      ++rejected;
    }
  }
  report.metrics["floor_neighbourhoods_checked"] = neighbourhoods;
  report.metrics["lifts"] = lifted;
  report.metrics["transport_rejections"] = rejected;
}

// --- j -------------------------------------------------------------------

// The J-apex law for one complex; shared with the topology suite.
void j_apex_case(Recorder& rec, const ClosedSet1D& a, int m, bool mutant) {
  const Json in{{"a", to_json(a)}, {"depth", m}};
  const DSet d = gen_dset(a, m);
  const GeoComplex j = build_J(a, m);
  const IncidenceGraph g(j);
  std::vector<Point> removed{default_apex(2)};
  if (mutant) removed.clear();
  const auto comps = g.components_without(removed);
  rec.equal<std::size_t>(d.size() + 1, comps.size(), "apex puncture leaves |D|+1 components", in);
  std::size_t floor_components = 0;
  std::size_t dset_components = 0;
  for (const auto& comp : comps) {
    bool has_cube = false;
    std::size_t dset_cells = 0;
    std::vector<Point> vertices;
    for (auto i : comp) {
      const Cell& c = j.cells[i];
      has_cube = has_cube || c.label.role == "floor-cube";
      dset_cells += c.label.role == "dset";
      for (const auto& v : c.vertices()) {
        if (v != default_apex(2) && std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
      }
    }
    if (has_cube) {
      ++floor_components;
      continue;
    }
    ++dset_components;
    rec.check(dset_cells == 1 && comp.size() == 2, "dset component is one segment with its dset vertex", in);
    std::size_t non_cut = 0;
    for (const auto& v : vertices) non_cut += !g.puncture(v, removed).is_cut;
    rec.equal<std::size_t>(1, non_cut, "unique non-cut original vertex per dset component", in);
  }
  rec.equal<std::size_t>(1, floor_components, "one component holds the floor cube", in);
  rec.equal<std::size_t>(d.size(), dset_components, "one component per dset point", in);
}

std::vector<ClosedSet1D> single_component_corpus() { return grid_corpus(12, 1); }

void run_j(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int depth = scale(o, 3);
  std::size_t complexes = 0;
  for (const auto& a : single_component_corpus()) {
    for (int m = 1; m <= depth; ++m) {
      j_apex_case(rec, a, m, o.mutant);
      ++complexes;
    }
  }
  report.metrics["complexes"] = complexes;
}

// --- turbulence ----------------------------------------------------------

struct TurbulenceInputs {
  std::vector<std::pair<IntSeq, long>> builds;
  std::vector<std::pair<std::pair<IntSeq, IntSeq>, long>> pairs;
};

TurbulenceInputs turbulence_inputs(std::uint64_t seed, int max_len) {
  std::mt19937_64 rng(seed);
  TurbulenceInputs in;
  std::uniform_int_distribution<long> len(2, std::max(2, max_len));
  for (int t = 0; t < 100; ++t) {
    const long k = t % 2 ? 4 : 2;
    in.builds.push_back({random_int_seq(rng, len(rng), -5, 5), k});
  }
  for (int t = 0; t < 100; ++t) {
    const long k = t % 2 ? 4 : 2;
    const IntSeq x = random_int_seq(rng, len(rng), -5, 5);
    IntSeq y = x;
    std::uniform_int_distribution<long> shift(-k / 2, k / 2);
    for (auto& v : y.values) v += shift(rng);
    in.pairs.push_back({{x, y}, k});
  }
  return in;
}

void run_turbulence(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int max_len = scale(o, 6);
  const auto inputs = turbulence_inputs(o.seed, max_len);
  for (const auto& [x, k] : inputs.builds) {
    const Json in{{"x", to_json(x)}, {"window", k}};
    const GadgetComplex g = build_F(x, k);
    const IncidenceGraph graph(g.complex);
    rec.equal<std::size_t>(2, graph.components().count, "gadget has two path components", in);
    GeoComplex i0 = g.complex;
    std::erase_if(i0.cells, [](const Cell& c) { return c.label.role != "i0" && c.label.role != "junction"; });
    rec.equal<std::size_t>(3, puncture(i0, {0, 0}).component_count_after, "junction splits I0 in three", in);
    for (long n = 1; n <= x.size(); ++n) {
      std::size_t fills = 0;
      bool at_marker = true;
      for (const auto& c : g.complex.cells) {
        if (c.label.role == "stripe" && c.label.side == "fill" && *c.label.n == n) {
          ++fills;
          at_marker = at_marker && *c.label.k == x.at(n) + 1;
        }
      }
      rec.check(fills == 1 && at_marker, "one filled rect per stripe at x_n + 1", in);
    }
  }
  for (const auto& [xy, k] : inputs.pairs) {
    const auto& [x, y] = xy;
    const Json in{{"x", to_json(x)}, {"y", to_json(y)}, {"window", k}};
    const SigmaReport r = sigma_verify(x, y, k, 1e-9, o.mutant ? -1 : 1);
    rec.check(r.mismatches.empty(), "sigma cell bijection", in, "0 mismatches",
              std::to_string(r.mismatches.size()) +
                  (r.mismatches.empty() ? "" : " (first: " + r.mismatches.front().description + ")"));
    rec.check(r.round_trip_exact, "sigma inverse round trip exact", in);
    rec.check(r.bound_violations.empty(), "stripe displacement within profile bound", in);
    const SigmaReport same = sigma_verify(x, x, k, 0, o.mutant ? -1 : 1);
    double moved = 0;
    for (const auto& d : same.displacement) moved = std::max({moved, d.stripe, d.connector});
    rec.check(moved == 0 && same.ok(), "x = y gives zero displacement", Json{{"x", to_json(x)}});
  }

  // Decay dichotomy.
  IntSeq zero;
  IntSeq ones;
  IntSeq linear;
  for (long n = 1; n <= 24; ++n) {
    zero.values.push_back(0);
    ones.values.push_back(1);
    linear.values.push_back(n);
  }
  const auto decay = displacement_profile(zero, ones);
  bool decreasing = true;
  for (std::size_t i = 1; i < decay.size(); ++i) decreasing = decreasing && decay[i] < decay[i - 1];
  rec.check(decreasing, "profile strictly decreasing for constant difference", {});
  rec.check(decay[19] < 0.02, "profile entry 20 below 0.02", {}, "< 0.02", std::to_string(decay[19]));
  const double floor_value = 3 - 2 * std::sqrt(2.0);
  const auto flat = displacement_profile(zero, linear);
  const double lowest = *std::min_element(flat.begin(), flat.end());
  rec.check(lowest >= floor_value - std::ldexp(1.0, -20), "no decay for difference n", {},
            ">= " + std::to_string(floor_value), std::to_string(lowest));
  rec.check(std::abs(logistic_gap(1) - std::pow(std::sqrt(2.0) - 1, 2)) < std::ldexp(1.0, -20),
            "logistic gap at 1 is (sqrt2 - 1)^2", {});
  report.metrics["profile_entry_20"] = decay[19];
  report.metrics["profile_min_no_decay"] = lowest;
}

// --- topology ------------------------------------------------------------

void raster_case(Recorder& rec, const GeoComplex& c, const Json& in, std::size_t& skipped, bool mutant) {
  constexpr int kResolution = 1024;
  if (!raster_resolution_sufficient(c, kResolution)) {
    ++skipped;
    return;
  }
  // The mutant hands the analyzer a copy that lost its joining cells.
  GeoComplex analyzed = c;
  if (mutant) {
    std::erase_if(analyzed.cells,
                  [](const Cell& cell) { return cell.label.role == "cone" || cell.label.role == "connector"; });
  }
  const std::size_t exact = path_components(analyzed).count;
  const std::size_t raster = raster_oracle(c, kResolution);
  rec.equal(exact, raster, "path_components agrees with raster", in);
}

void run_topology(SuiteReport& report, const SuiteOptions& o) {
  Recorder rec(report);
  const int depth = scale(o, 3);
  std::size_t skipped = 0;
  std::size_t complexes = 0;
  for (const auto& a : single_component_corpus()) {
    for (int m = 1; m <= depth; ++m) {
      raster_case(rec, build_J(a, m), Json{{"kind", "j"}, {"a", to_json(a)}, {"depth", m}}, skipped, o.mutant);
      ++complexes;
    }
  }
  const auto inputs = turbulence_inputs(o.seed, 6);
  for (const auto& [x, k] : inputs.builds) {
    raster_case(rec, build_F(x, k).complex, Json{{"kind", "F"}, {"x", to_json(x)}, {"window", k}}, skipped, o.mutant);
    ++complexes;
  }
  for (const auto& [xy, k] : inputs.pairs) {
    for (const IntSeq* s : {&xy.first, &xy.second}) {
      raster_case(rec, build_F(*s, k).complex, Json{{"kind", "F"}, {"x", to_json(*s)}, {"window", k}}, skipped, o.mutant);
      ++complexes;
    }
  }

  // Puncture rules on the tilde corpus.
  for (const auto& a : grid_corpus(4, 2)) {
    const GeoComplex t = build_tilde(a, 2);
    const IncidenceGraph g(t);
    const std::size_t before = g.components().count;
    for (const auto& cell : t.cells) {
      for (const auto& v : cell.vertices()) {
        rec.check(g.puncture(v).component_count_after >= before, "puncture never merges components",
                  Json{{"a", to_json(a)}, {"point", point_str(v)}});
      }
    }
  }
  GeoComplex rects = GeoComplex::unit(2);
  rects.cells = {Cell::rect({0, 0}, {Rational(1, 2), Rational(1, 2)}),
                 Cell::segment({Rational(1, 2), Rational(1, 4)}, {1, Rational(1, 4)})};
  rec.check(!puncture(rects, {Rational(1, 4), Rational(1, 4)}).is_cut, "rect interior point is never a cut point", {});
  report.metrics["complexes"] = complexes;
  report.metrics["raster_skipped_resolution"] = skipped;
}

using Runner = std::function<void(SuiteReport&, const SuiteOptions&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"encoder", run_encoder}, {"invariants", run_invariants}, {"hat", run_hat},
      {"tilde", run_tilde},     {"j", run_j},                   {"turbulence", run_turbulence},
      {"topology", run_topology}};
  return table;
}

}  // namespace

Json SuiteReport::to_json() const {
  Json out = Json::object();
  out["suite"] = suite;
  out["max_size"] = max_size;
  out["seed"] = seed;
  out["mutant"] = mutant;
  out["cases"] = cases;
  out["failure_count"] = failure_count;
  Json fs = Json::array();
  for (const auto& f : failures) {
    fs.push_back({{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  out["failures"] = std::move(fs);
  out["metrics"] = metrics;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"encoder", "invariants", "hat", "tilde", "j", "turbulence", "topology"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = runners().find(name);
  if (it == runners().end()) throw std::invalid_argument("unknown suite: " + name);
  if (options.max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  SuiteReport report;
  report.suite = name;
  report.max_size = options.max_size;
  report.seed = options.seed;
  report.mutant = options.mutant;
  const auto start = std::chrono::steady_clock::now();
  it->second(report, options);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace contin
