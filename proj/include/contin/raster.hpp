#pragma once

#include <optional>

#include "contin/complex.hpp"
#include "contin/geometry.hpp"

namespace contin {

/// Brute-force component count: cells are rasterized onto a grid of
/// `resolution` voxels per axis over the complex's box and occupied voxels
/// are flood-filled with full (8- or 26-) neighbourhood connectivity.
/// Independent of the exact incidence computation; used as its oracle.
std::size_t raster_oracle(const GeoComplex& c, int resolution);

/// Smallest exact squared distance between cells lying in different path
/// components; nullopt when the complex is connected.
std::optional<BigRational> min_component_gap_sq(const GeoComplex& c);

/// The raster agrees with the exact count when distinct components are
/// farther apart than two voxel diagonals.
bool raster_resolution_sufficient(const GeoComplex& c, int resolution);

}  // namespace contin
