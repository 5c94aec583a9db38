// Command-line front end. Reports go to stdout as JSON, a one-line summary to
// stderr. Exit codes: 0 success, 1 property violation, 2 input error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "contin/analyzer.hpp"
#include "contin/coding.hpp"
#include "contin/gadget.hpp"
#include "contin/homeo.hpp"
#include "contin/invariants.hpp"
#include "contin/io.hpp"
#include "contin/order_encoder.hpp"
#include "contin/render.hpp"
#include "contin/suites.hpp"

using namespace contin;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

int emit(const Json& report, bool ok, const std::string& summary) {
  std::cout << dump(report);
  std::cerr << summary << '\n';
  return ok ? kOk : kViolation;
}

Json sinv_json(const SInvariant& s) { return {{"points", s.point_count}, {"intervals", s.interval_count}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contin: exact constructions on closed sets, coding continua and the turbulence gadget"};
  app.require_subcommand(1);
  std::function<int()> action;

  // encode-order
  std::string order_path, out_path, intervals_path;
  auto* enc = app.add_subcommand("encode-order", "encode a linear order as a closed subset of [0,1]");
  enc->add_option("--order", order_path, "LinearOrderSpec JSON")->required();
  enc->add_option("--out", out_path, "where to write the closed set");
  enc->add_option("--intervals", intervals_path, "where to write the removed intervals");
  enc->callback([&] {
    action = [&] {
      const LinearOrderSpec order = order_from_json(read_json_file(order_path));
      const EncodedOrder e = encode_order(order);
      if (!out_path.empty()) write_file(out_path, dump(to_json(e.set)));
      if (!intervals_path.empty()) write_file(intervals_path, dump(to_json(e.removed)));
      const bool ok = verify_encoding(order, e.removed);
      Json r{{"order", to_json(order)}, {"set", to_json(e.set)}, {"intervals", to_json(e.removed)}, {"verified", ok}};
      return emit(r, ok, std::string("encoded order of size ") + std::to_string(order.n) + (ok ? ", verified" : ", NOT verified"));
    };
  });

  // invariants
  std::string set_path;
  auto* inv = app.add_subcommand("invariants", "print the U/V pattern and S invariant of a closed set");
  inv->add_option("--set", set_path, "ClosedSet1D JSON")->required();
  inv->callback([&] {
    action = [&] {
      const ClosedSet1D a = closed_set_from_json(read_json_file(set_path));
      const MPair m = extract_M(a);
      Json r{{"pattern", m.forward.str()}, {"mirrored", m.mirrored.str()}, {"s_invariant", sinv_json(extract_S(a))}};
      return emit(r, true, m.forward.str());
    };
  });

  // decide
  std::string relation = "r1", a_path, b_path;
  auto* dec = app.add_subcommand("decide", "decide H1 or R1 equivalence of two closed sets");
  dec->add_option("--relation", relation)->check(CLI::IsMember({"h1", "r1"}));
  dec->add_option("--a", a_path)->required();
  dec->add_option("--b", b_path)->required();
  dec->callback([&] {
    action = [&] {
      const ClosedSet1D a = closed_set_from_json(read_json_file(a_path));
      const ClosedSet1D b = closed_set_from_json(read_json_file(b_path));
      const bool related = relation == "h1" ? decide_h1(a, b) : decide_r1(a, b);
      Json r{{"relation", relation}, {"related", related}};
      if (related && relation == "r1") {
        const auto w = r1_witness(a, b);
        if (!w || pl_image(*w, a) != b) {
          r["witness_error"] = "witness does not map A onto B";
          return emit(r, false, "r1 holds but the witness is wrong");
        }
        r["witness"] = to_json(*w);
      }
      std::cout << dump(r);
      std::cerr << relation << (related ? ": related\n" : ": not related\n");
      return related ? kOk : kViolation;
    };
  });

  // build
  std::string kind, in_path, apex_text;
  int depth = 2;
  auto* bld = app.add_subcommand("build", "build a coding complex");
  bld->add_option("--kind", kind)->required()->check(CLI::IsMember({"i", "fan", "tilde", "j", "hat"}));
  bld->add_option("--set", set_path, "ClosedSet1D JSON");
  bld->add_option("--in", in_path, "base complex for --kind fan (default: I(A))");
  bld->add_option("--apex", apex_text, "apex for --kind fan, e.g. \"1/2,1/2,1\"");
  bld->add_option("--depth", depth)->check(CLI::Range(1, 12));
  bld->add_option("--out", out_path);
  bld->callback([&] {
    action = [&] {
      GeoComplex c;
      if (kind == "fan" && !in_path.empty()) {
        const GeoComplex base = complex_from_json(read_json_file(in_path));
        c = build_fan(base, apex_text.empty() ? default_apex(base.dim) : parse_point(apex_text));
      } else {
        if (set_path.empty()) throw FormatError("--set is required for --kind " + kind);
        const ClosedSet1D a = closed_set_from_json(read_json_file(set_path));
        if (kind == "i") c = build_I(a, depth);
        if (kind == "fan") c = build_fan(build_I(a, depth), apex_text.empty() ? default_apex(2) : parse_point(apex_text));
        if (kind == "tilde") c = build_tilde(a, depth);
        if (kind == "j") c = build_J(a, depth);
        if (kind == "hat") c = build_hat(a);
      }
      const Json j = to_json(c);
      if (!out_path.empty()) write_file(out_path, dump(j));
      return emit(j, true, kind + ": " + std::to_string(c.cells.size()) + " cells");
    };
  });

  // lift
  std::string map_path;
  auto* lft = app.add_subcommand("lift", "lift a PL homeomorphism of [0,1] to the hat or tilde complexes");
  lft->add_option("--kind", kind)->required()->check(CLI::IsMember({"hat", "tilde"}));
  lft->add_option("--map", map_path, "PLHomeo1D JSON")->required();
  lft->add_option("--a", a_path)->required();
  lft->add_option("--b", b_path)->required();
  lft->add_option("--depth", depth)->check(CLI::Range(1, 8));
  lft->callback([&] {
    action = [&] {
      const PLHomeo1D f = pl_homeo_from_json(read_json_file(map_path));
      const ClosedSet1D a = closed_set_from_json(read_json_file(a_path));
      const ClosedSet1D b = closed_set_from_json(read_json_file(b_path));
      if (kind == "hat") {
        const EvaluableHomeo fhat = lift_hat_homeo(f, a, b);
        const bool exact = same_cells(map_cells(fhat, build_hat(a)), build_hat(b));
        const BaseHomeo base = extract_base_homeo(fhat);
        Json r{{"kind", "hat"}, {"cells_exact", exact}, {"base_map", to_json(base.map)},
               {"sample_spacing", to_json(base.spacing)}, {"error_bound", to_json(fhat.error_bound())}};
        return emit(r, exact, exact ? "hat lift maps cells exactly" : "hat lift cell mismatch");
      }
      try {
        const TildeLift lift = lift_tilde_homeo(f, a, b, depth);
        const bool ok = preserves_incidence(lift);
        Json r{{"kind", "tilde"}, {"transported", to_json(lift.transported)}, {"cell_map", lift.cell_map},
               {"preserves_incidence", ok}};
        return emit(r, ok, ok ? "tilde lift preserves incidence" : "tilde lift breaks incidence");
      } catch (const TransportError& e) {
        Json r{{"kind", "tilde"}, {"transport_error", e.what()}, {"level", e.level()}};
        return emit(r, false, std::string("transport rejected: ") + e.what());
      }
    };
  });

  // analyze
  std::string op = "components";
  std::vector<std::string> points;
  auto* ana = app.add_subcommand("analyze", "path components and cut points of a complex");
  ana->add_option("--in", in_path)->required();
  ana->add_option("--op", op)->check(CLI::IsMember({"components", "puncture"}));
  ana->add_option("--point", points, "point to puncture, e.g. \"0,1/2\" (repeatable)");
  ana->callback([&] {
    action = [&] {
      const IncidenceGraph g(complex_from_json(read_json_file(in_path)));
      Json r{{"components", g.components().count}};
      if (op == "puncture") {
        if (points.empty()) throw FormatError("--op puncture needs --point");
        Json ps = Json::array();
        for (const auto& text : points) {
          const PunctureResult p = g.puncture(parse_point(text));
          ps.push_back({{"point", point_str(p.point)}, {"is_cut", p.is_cut}, {"after", p.component_count_after}});
        }
        r["punctures"] = std::move(ps);
      }
      return emit(r, true, std::to_string(g.components().count) + " path components");
    };
  });

  // turbulence
  std::string seq_path, x_path, y_path;
  long window = 4;
  double tol = 1e-9;
  auto* tur = app.add_subcommand("turbulence", "the planar gadget F(x) and the homeomorphism sigma");
  tur->require_subcommand(1);
  auto* tb = tur->add_subcommand("build", "build F(x)");
  tb->add_option("--seq", seq_path, "IntSeq JSON")->required();
  tb->add_option("--window", window)->check(CLI::Range(2L, 64L));
  tb->add_option("--out", out_path);
  tb->callback([&] {
    action = [&] {
      const GadgetComplex g = build_F(int_seq_from_json(read_json_file(seq_path)), window);
      const Json j = to_json(g.complex);
      if (!out_path.empty()) write_file(out_path, dump(j));
      return emit(j, true, "F(x): " + std::to_string(g.complex.cells.size()) + " cells");
    };
  });
  auto* tv = tur->add_subcommand("verify", "check sigma carries F(x) onto F(y)");
  tv->add_option("--x", x_path)->required();
  tv->add_option("--y", y_path)->required();
  tv->add_option("--window", window)->check(CLI::Range(2L, 64L));
  tv->add_option("--tol", tol)->check(CLI::NonNegativeNumber);
  tv->callback([&] {
    action = [&] {
      const IntSeq x = int_seq_from_json(read_json_file(x_path));
      const IntSeq y = int_seq_from_json(read_json_file(y_path));
      const SigmaReport s = sigma_verify(x, y, window, tol);
      Json mism = Json::array();
      for (const auto& m : s.mismatches) mism.push_back({{"cell", m.cell}, {"description", m.description}});
      Json disp = Json::array();
      for (const auto& d : s.displacement) {
        disp.push_back({{"n", d.n}, {"stripe", d.stripe}, {"connector", d.connector}, {"bound", d.bound}});
      }
      Json r{{"cells_checked", s.cells_checked}, {"mismatches", mism},        {"round_trip_exact", s.round_trip_exact},
             {"displacement", disp},             {"bound_violations", s.bound_violations}, {"profile", displacement_profile(x, y)}};
      return emit(r, s.ok(), std::to_string(s.cells_checked) + " cells, " + std::to_string(s.mismatches.size()) + " mismatches");
    };
  });

  // render
  int samples = 64;
  auto* ren = app.add_subcommand("render", "render a 2-D or 3-D complex as SVG");
  ren->add_option("--in", in_path)->required();
  ren->add_option("--out", out_path, "SVG file (default: stdout)");
  ren->add_option("--samples", samples)->check(CLI::Range(2, 4096));
  ren->callback([&] {
    action = [&] {
      const std::string svg = render_svg(complex_from_json(read_json_file(in_path)), samples);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        write_file(out_path, svg);
        std::cout << dump(Json{{"svg", out_path}, {"bytes", svg.size()}});
      }
      std::cerr << "rendered " << svg.size() << " bytes\n";
      return kOk;
    };
  });

  // verify
  std::string suite = "all";
  SuiteOptions opts;
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", suite, "suite name or \"all\"");
  ver->add_option("--max-size", opts.max_size, "scale; 0 picks the suite default")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", opts.seed);
  ver->add_flag("--mutant", opts.mutant, "run against a deliberately broken variant");
  ver->callback([&] {
    action = [&] {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json reports = Json::array();
      bool ok = true;
      for (const auto& name : names) {
        const SuiteReport r = run_suite(name, opts);
        ok = ok && r.passed();
        reports.push_back(r.to_json());
        std::fprintf(stderr, "%-11s %8zu cases %6zu failures %8.2f s\n", name.c_str(), r.cases, r.failure_count,
                     r.wall_seconds);
      }
      std::cout << dump(suite == "all" ? reports : reports[0]);
      return ok ? kOk : kViolation;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return action();
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
  }
  return kInputError;
}
