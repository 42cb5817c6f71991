#pragma once

#include <vector>

#include "shoreline/spaces.hpp"

namespace support {

using namespace shoreline;

// S^2 as the boundary of the octahedron, split into two disks around a vertex.
inline GeneratedInstance disk_disk() {
  const auto octa = cross_polytope_sphere(2);
  const auto l = close_faces(std::vector<Simplex>{Simplex{0}}, 6);
  const auto dn = derived_neighborhood_detailed(octa.complex, l, 2);
  GeneratedInstance g;
  g.dec = dn.decomposition;
  g.n = 1;
  g.label = "disk-disk";
  g.coords = subdivided_coordinates(dn.second, subdivided_coordinates(dn.first, octa.coords));
  g.f = height_function(g.coords, 2, {0.31, 0.07});
  return g;
}

}  // namespace support
