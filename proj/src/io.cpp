#include "contin/io.hpp"

#include <fstream>
#include <sstream>

namespace contin {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(to_json(v));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("point must be an array");
  Point p;
  for (const auto& v : j) p.push_back(rational_from_json(v));
  return p;
}

Json label_json(const CellLabel& l) {
  if (!l.n && !l.k && l.side.empty() && !l.index) return l.role;
  Json out = Json::object();
  out["role"] = l.role;
  if (l.n) out["n"] = *l.n;
  if (l.k) out["k"] = *l.k;
  if (!l.side.empty()) out["side"] = l.side;
  if (l.index) out["index"] = *l.index;
  return out;
}

CellLabel label_from_json(const Json& j) {
  if (j.is_string()) return {j.get<std::string>(), {}, {}, "", {}};
  if (!j.is_object()) throw FormatError("label must be a string or an object");
  CellLabel l;
  l.role = field(j, "role").get<std::string>();
  if (j.contains("n")) l.n = j.at("n").get<long>();
  if (j.contains("k")) l.k = j.at("k").get<long>();
  if (j.contains("side")) l.side = j.at("side").get<std::string>();
  if (j.contains("index")) l.index = j.at("index").get<long>();
  return l;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return guarded([&] { return Rational::parse(j.get<std::string>()); });
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw FormatError("rational must be a \"p/q\" string or an integer");
}

Json to_json(const ClosedSet1D& a) {
  Json comps = Json::array();
  for (const auto& c : a.components()) {
    if (c.is_point()) {
      comps.push_back({{"point", to_json(c.lo)}});
    } else {
      comps.push_back({{"interval", Json::array({to_json(c.lo), to_json(c.hi)})}});
    }
  }
  return {{"components", comps}};
}

ClosedSet1D closed_set_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Component> raw;
    for (const auto& c : field(j, "components")) {
      if (c.contains("point")) {
        raw.push_back(Component::point(rational_from_json(c.at("point"))));
      } else if (c.contains("interval")) {
        const auto& iv = c.at("interval");
        if (!iv.is_array() || iv.size() != 2) throw FormatError("interval needs two endpoints");
        raw.push_back(Component::interval(rational_from_json(iv[0]), rational_from_json(iv[1])));
      } else {
        throw FormatError("component must be a point or an interval");
      }
    }
    return mk_closed_set(raw);
  });
}

Json to_json(const PLHomeo1D& h) {
  Json bps = Json::array();
  for (const auto& b : h.breakpoints()) bps.push_back(Json::array({to_json(b.in), to_json(b.out)}));
  return {{"orientation", h.preserving() ? "preserving" : "reversing"}, {"breakpoints", bps}};
}

PLHomeo1D pl_homeo_from_json(const Json& j) {
  return guarded([&] {
    const std::string o = field(j, "orientation").get<std::string>();
    if (o != "preserving" && o != "reversing") throw FormatError("orientation must be preserving or reversing");
    std::vector<Breakpoint> bps;
    for (const auto& b : field(j, "breakpoints")) {
      if (!b.is_array() || b.size() != 2) throw FormatError("breakpoint must be a pair");
      bps.push_back({rational_from_json(b[0]), rational_from_json(b[1])});
    }
    return PLHomeo1D(std::move(bps), o == "preserving" ? Orientation::preserving : Orientation::reversing);
  });
}

Json to_json(const LinearOrderSpec& r) { return {{"n", r.n}, {"ranks", r.ranks}}; }

LinearOrderSpec order_from_json(const Json& j) {
  return guarded([&] {
    LinearOrderSpec r{field(j, "n").get<std::size_t>(), field(j, "ranks").get<std::vector<int>>()};
    r.validate();
    return r;
  });
}

Json to_json(const RemovedIntervals& r) {
  Json out = Json::array();
  for (const auto& s : r.intervals) out.push_back(Json::array({to_json(s.lo), to_json(s.hi)}));
  return {{"intervals", out}};
}

RemovedIntervals removed_from_json(const Json& j) {
  return guarded([&] {
    RemovedIntervals r;
    for (const auto& s : field(j, "intervals")) {
      if (!s.is_array() || s.size() != 2) throw FormatError("interval must be a pair");
      r.intervals.push_back({rational_from_json(s[0]), rational_from_json(s[1])});
    }
    return r;
  });
}

Json to_json(const GeoComplex& c) {
  Json out = Json::object();
  out["dim"] = c.dim;
  out["box"] = Json::array({point_json(c.box_lo), point_json(c.box_hi)});
  if (c.chart) {
    out["chart"] = {{"axis", c.chart->axis}, {"bound", to_json(c.chart->bound)}, {"f", "1/(1+2^-z)"}};
  }
  Json cells = Json::array();
  for (const auto& cell : c.cells) {
    Json e = Json::object();
    switch (cell.kind) {
      case CellKind::point: e["point"] = point_json(cell.a); break;
      case CellKind::segment: e["seg"] = Json::array({point_json(cell.a), point_json(cell.b)}); break;
      case CellKind::rect: e["rect"] = Json::array({point_json(cell.a), point_json(cell.b)}); break;
    }
    if (!cell.label.role.empty()) e["label"] = label_json(cell.label);
    cells.push_back(std::move(e));
  }
  out["cells"] = std::move(cells);
  return out;
}

GeoComplex complex_from_json(const Json& j) {
  return guarded([&] {
    GeoComplex c = GeoComplex::unit(field(j, "dim").get<int>());
    if (j.contains("box")) {
      const auto& box = j.at("box");
      if (!box.is_array() || box.size() != 2) throw FormatError("box must be [lo, hi]");
      c.box_lo = point_from_json(box[0]);
      c.box_hi = point_from_json(box[1]);
    }
    if (j.contains("chart")) {
      const auto& ch = j.at("chart");
      c.chart = LogisticChart{field(ch, "axis").get<int>(), rational_from_json(field(ch, "bound"))};
    }
    for (const auto& e : field(j, "cells")) {
      const CellLabel label = e.contains("label") ? label_from_json(e.at("label")) : CellLabel{};
      auto pair = [&](const char* key) {
        const auto& v = e.at(key);
        if (!v.is_array() || v.size() != 2) throw FormatError(std::string(key) + " needs two points");
        return std::pair{point_from_json(v[0]), point_from_json(v[1])};
      };
      if (e.contains("point")) {
        c.cells.push_back(Cell::point(point_from_json(e.at("point")), label));
      } else if (e.contains("seg")) {
        auto [p, q] = pair("seg");
        c.cells.push_back(Cell::segment(std::move(p), std::move(q), label));
      } else if (e.contains("rect")) {
        auto [p, q] = pair("rect");
        c.cells.push_back(Cell::rect(std::move(p), std::move(q), label));
      } else {
        throw FormatError("cell must be point, seg or rect");
      }
    }
    c.validate();
    return c;
  });
}

Json to_json(const DSet& d) {
  Json pts = Json::array();
  for (const auto& p : d.points) {
    pts.push_back({{"position", to_json(p.position)}, {"height", to_json(p.height)}, {"level", p.level}});
  }
  return {{"base", to_json(d.base)}, {"depth", d.depth}, {"points", pts}};
}

DSet dset_from_json(const Json& j) {
  return guarded([&] {
    DSet d{closed_set_from_json(field(j, "base")), field(j, "depth").get<int>(), {}};
    for (const auto& p : field(j, "points")) {
      d.points.push_back({rational_from_json(field(p, "position")), rational_from_json(field(p, "height")),
                          field(p, "level").get<int>()});
    }
    return d;
  });
}

Json to_json(const IntSeq& s) { return {{"values", s.values}}; }

IntSeq int_seq_from_json(const Json& j) {
  return guarded([&] { return IntSeq{field(j, "values").get<std::vector<long>>()}; });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace contin
