#include "contin/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "contin/gadget.hpp"

namespace contin {
namespace {

constexpr double kWidth = 800;
constexpr double kMargin = 20;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Frame {
  const GeoComplex& c;
  double lo[2];
  double hi[2];
  double scale;

  explicit Frame(const GeoComplex& complex) : c(complex) {
    for (int i = 0; i < 2; ++i) {
      lo[i] = physical(i, c.box_lo[static_cast<std::size_t>(i)]);
      hi[i] = physical(i, c.box_hi[static_cast<std::size_t>(i)]);
    }
    const double span = std::max(hi[0] - lo[0], hi[1] - lo[1]);
    scale = (kWidth - 2 * kMargin) / (span > 0 ? span : 1);
  }

  bool charted(int axis) const { return c.chart && c.chart->axis == axis; }

  double physical(int axis, const Rational& v) const {
    if (!charted(axis)) return v.to_double();
    if (v >= c.chart->bound) return 1;
    if (v <= -c.chart->bound) return 0;
    return fscale(v.to_double());
  }
  double physical(int axis, double v) const {
    if (!charted(axis)) return v;
    const double bound = c.chart->bound.to_double();
    if (v >= bound) return 1;
    if (v <= -bound) return 0;
    return fscale(v);
  }

  double sx(double x) const { return kMargin + (x - lo[0]) * scale; }
  double sy(double y) const { return kMargin + (hi[1] - y) * scale; }
  double height() const { return 2 * kMargin + (hi[1] - lo[1]) * scale; }
};

std::string css_class(const CellLabel& l) {
  std::string out = "cell";
  if (!l.role.empty()) out += " " + l.role;
  if (!l.side.empty()) out += " " + l.side;
  return out;
}

}  // namespace

std::string render_svg(const GeoComplex& c, int samples) {
  if (c.dim > 3) throw std::invalid_argument("cannot render complexes of dimension > 3");
  if (c.dim < 2) throw std::invalid_argument("cannot render complexes of dimension < 2");
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const Frame f(c);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(f.height())
     << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(f.height()) << "\">\n";
  os << "<style>.cell{stroke:black;stroke-width:1;fill:none}.fill{fill:orange}"
        ".connector{stroke:blue}.i0,.junction{stroke:red}.rail{stroke-dasharray:4 2}"
        ".apex{fill:black}</style>\n";
  for (const auto& cell : c.cells) {
    const std::string cls = css_class(cell.label);
    const double ax = f.physical(0, cell.a[0]);
    const double ay = f.physical(1, cell.a[1]);
    switch (cell.kind) {
      case CellKind::point:
        os << "<circle class=\"" << cls << "\" cx=\"" << num(f.sx(ax)) << "\" cy=\"" << num(f.sy(ay))
           << "\" r=\"2\"/>\n";
        break;
      case CellKind::rect: {
        const double bx = f.physical(0, cell.b[0]);
        const double by = f.physical(1, cell.b[1]);
        if (cell.a[0] == cell.b[0] || cell.a[1] == cell.b[1]) {
          // Vertical in the dropped projection: draw as a line.
          os << "<line class=\"" << cls << "\" x1=\"" << num(f.sx(ax)) << "\" y1=\"" << num(f.sy(ay))
             << "\" x2=\"" << num(f.sx(bx)) << "\" y2=\"" << num(f.sy(by)) << "\"/>\n";
          break;
        }
        os << "<rect class=\"" << cls << "\" x=\"" << num(f.sx(ax)) << "\" y=\"" << num(f.sy(by)) << "\" width=\""
           << num((bx - ax) * f.scale) << "\" height=\"" << num((by - ay) * f.scale) << "\"/>\n";
        break;
      }
      case CellKind::segment: {
        const bool bent = c.chart && cell.a[0] != cell.b[0] && cell.a[1] != cell.b[1];
        if (!bent) {
          os << "<line class=\"" << cls << "\" x1=\"" << num(f.sx(ax)) << "\" y1=\"" << num(f.sy(ay))
             << "\" x2=\"" << num(f.sx(f.physical(0, cell.b[0]))) << "\" y2=\""
             << num(f.sy(f.physical(1, cell.b[1]))) << "\"/>\n";
          break;
        }
        os << "<path class=\"" << cls << "\" d=\"";
        const double x0 = cell.a[0].to_double();
        const double z0 = cell.a[1].to_double();
        const double x1 = cell.b[0].to_double();
        const double z1 = cell.b[1].to_double();
        for (int s = 0; s <= samples; ++s) {
          const double t = static_cast<double>(s) / samples;
          os << (s == 0 ? "M" : " L") << num(f.sx(f.physical(0, x0 + (x1 - x0) * t))) << " "
             << num(f.sy(f.physical(1, z0 + (z1 - z0) * t)));
        }
        os << "\"/>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace contin
