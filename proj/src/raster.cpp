#include "contin/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "contin/analyzer.hpp"
#include "contin/geometry.hpp"

namespace contin {
namespace {

constexpr int kBits = 20;

class VoxelSet {
public:
  VoxelSet(const GeoComplex& c, int resolution) : res_(resolution), dim_(c.dim) {
    for (int i = 0; i < dim_; ++i) {
      lo_.push_back(c.box_lo[static_cast<std::size_t>(i)].to_double());
      size_.push_back((c.box_hi[static_cast<std::size_t>(i)] - c.box_lo[static_cast<std::size_t>(i)]).to_double() /
                      resolution);
    }
  }

  int index(int axis, double x) const {
    const auto a = static_cast<std::size_t>(axis);
    const int i = static_cast<int>(std::floor((x - lo_[a]) / size_[a]));
    return std::clamp(i, 0, res_ - 1);
  }

  void mark(const std::vector<int>& idx) {
    std::uint64_t key = 0;
    for (int i = 0; i < dim_; ++i) key = (key << kBits) | static_cast<std::uint64_t>(idx[static_cast<std::size_t>(i)]);
    occupied_.emplace(key, occupied_.size());
  }

  void mark_point(const std::vector<double>& p) {
    std::vector<int> idx(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) idx[static_cast<std::size_t>(i)] = index(i, p[static_cast<std::size_t>(i)]);
    mark(idx);
  }

  void mark_cell(const Cell& c) {
    auto to_d = [](const Point& p) {
      std::vector<double> out;
      for (const auto& v : p) out.push_back(v.to_double());
      return out;
    };
    if (c.kind == CellKind::point) {
      mark_point(to_d(c.a));
      return;
    }
    if (c.kind == CellKind::segment) {
      const auto p = to_d(c.a);
      const auto q = to_d(c.b);
      double span = 0;
      for (int i = 0; i < dim_; ++i) {
        const auto a = static_cast<std::size_t>(i);
        span = std::max(span, std::abs(q[a] - p[a]) / size_[a]);
      }
      // Steps of at most a quarter voxel keep consecutive samples adjacent.
      const long steps = static_cast<long>(std::ceil(span * 4)) + 1;
      std::vector<double> s(static_cast<std::size_t>(dim_));
      for (long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(steps);
        for (std::size_t a = 0; a < s.size(); ++a) s[a] = p[a] + (q[a] - p[a]) * t;
        mark_point(s);
      }
      mark_point(q);
      return;
    }
    std::vector<int> from(static_cast<std::size_t>(dim_));
    std::vector<int> to(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      const auto a = static_cast<std::size_t>(i);
      from[a] = index(i, c.a[a].to_double());
      to[a] = index(i, c.b[a].to_double());
    }
    std::vector<int> idx = from;
    while (true) {
      mark(idx);
      int axis = 0;
      while (axis < dim_) {
        const auto a = static_cast<std::size_t>(axis);
        if (++idx[a] <= to[a]) break;
        idx[a] = from[a];
        ++axis;
      }
      if (axis == dim_) break;
    }
  }

  std::size_t components() const {
    std::vector<std::size_t> parent(occupied_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const std::uint64_t mask = (std::uint64_t{1} << kBits) - 1;
    int neighbours = 1;
    for (int i = 0; i < dim_; ++i) neighbours *= 3;
    for (const auto& [key, id] : occupied_) {
      std::vector<long> idx(static_cast<std::size_t>(dim_));
      for (int i = dim_ - 1; i >= 0; --i) idx[static_cast<std::size_t>(i)] = static_cast<long>((key >> (kBits * (dim_ - 1 - i))) & mask);
      for (int code = 0; code < neighbours; ++code) {
        int c = code;
        std::uint64_t nkey = 0;
        bool ok = true;
        for (int i = 0; i < dim_; ++i) {
          const long v = idx[static_cast<std::size_t>(i)] + (c % 3) - 1;
          c /= 3;
          if (v < 0 || v >= res_) ok = false;
          nkey = (nkey << kBits) | static_cast<std::uint64_t>(ok ? v : 0);
        }
        if (!ok) continue;
        auto it = occupied_.find(nkey);
        if (it == occupied_.end()) continue;
        const auto ra = find(id);
        const auto rb = find(it->second);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      if (find(i) == i) ++count;
    }
    return count;
  }

private:
  int res_;
  int dim_;
  std::vector<double> lo_;
  std::vector<double> size_;
  std::unordered_map<std::uint64_t, std::size_t> occupied_;
};

}  // namespace

std::size_t raster_oracle(const GeoComplex& c, int resolution) {
  if (resolution < 64 || (resolution & (resolution - 1)) != 0 || resolution > (1 << kBits)) {
    throw std::invalid_argument("raster resolution must be a power of two >= 64");
  }
  if (c.dim > 3) throw std::invalid_argument("raster oracle supports dimension <= 3");
  VoxelSet voxels(c, resolution);
  for (const auto& cell : c.cells) voxels.mark_cell(cell);
  return voxels.components();
}

std::optional<BigRational> min_component_gap_sq(const GeoComplex& c) {
  const auto comps = path_components(c);
  std::optional<BigRational> best;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < c.cells.size(); ++j) {
      if (comps.labels[i] == comps.labels[j]) continue;
      const BigRational d = distance_sq_big(c.cells[i], c.cells[j]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

bool raster_resolution_sufficient(const GeoComplex& c, int resolution) {
  const auto gap = min_component_gap_sq(c);
  if (!gap) return true;
  Rational voxel_sq = 0;
  for (int i = 0; i < c.dim; ++i) {
    const auto a = static_cast<std::size_t>(i);
    const Rational h = (c.box_hi[a] - c.box_lo[a]) / resolution;
    voxel_sq += h * h;
  }
  return *gap > 4 * to_big(voxel_sq);
}

}  // namespace contin
