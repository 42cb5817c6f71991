#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shoreline/filtration.hpp"
#include "shoreline/simplicial.hpp"

namespace shoreline {

/// One point per vertex id.
using Coordinates = std::vector<std::vector<double>>;

struct EmbeddedComplex {
  SimplicialComplex complex;
  Coordinates coords;
};

/// Boundary of the (dim+1)-dimensional cross-polytope. Vertex 2i sits at +e_i
/// and vertex 2i+1 at -e_i.
EmbeddedComplex cross_polytope_sphere(int dim);

/// Coordinates of the new vertices of a subdivision: barycenters of the old.
Coordinates subdivided_coordinates(const Subdivision& sd, const Coordinates& coords);

/// Inner product with the unit vector along e_axis + tilt, then perturbed and
/// normalized. tilt may be empty.
VertexFunction height_function(const Coordinates& coords, int axis,
                               const std::vector<double>& tilt = {});
/// Same with an explicit direction.
VertexFunction linear_function(const Coordinates& coords, const std::vector<double>& direction);

struct GeneratedInstance {
  Decomposition dec;
  VertexFunction f;
  int n = 0;
  std::string label;
  std::optional<std::uint64_t> seed;
  Coordinates coords;
  // A regular value of f on M singled out by the generator.
  std::optional<double> marked_value;
};

/// S^3 as the join of a p-gon and a q-gon, U the derived neighborhood of the
/// first polygon. The marked value, searched outward from the middle of the
/// core circle of U, cuts M into an annulus and U into a disk.
GeneratedInstance solid_torus_decomposition(int p = 3, int q = 3);

struct AnnulusCounterexample {
  GeneratedInstance instance;
  double a = 0, b = 0, c = 0, d = 0;
};

/// Grid sphere split into a band between two latitude rings and the two polar
/// caps, with a height tilted enough that the ranges [a, c] and [b, d] of the
/// two rings interleave.
AnnulusCounterexample annulus_counterexample();

/// Cross-polytope sphere of the given dimension (subdivided once in dimension
/// 2), a seeded random subcomplex made of vertices and vertex stars, its
/// derived neighborhood and a perfect Morse height in a random direction.
/// Throws ConstructionError after max_attempts failures.
GeneratedInstance random_decomposition(int dim, std::uint64_t seed, int max_attempts = 32);

/// A closed region of a cubical grid, triangulated by the Kuhn split, inside a
/// box with a free margin of one cell.
struct EuclideanRegion {
  SimplicialComplex a;
  VertexFunction e;
  int n = 0;
  // Grid points per axis of the box.
  std::vector<int> shape;
  int height_axis = 0;
  std::string label;

  std::vector<int> point_of(Vertex v) const;
  Vertex vertex_at(const std::vector<int>& point) const;
};

using Mask2D = std::vector<std::vector<bool>>;
using Mask3D = std::vector<Mask2D>;  // layers, then rows, then columns

/// Cell (row, col) of the mask is the unit square at x = col, y = row. The
/// height is the chosen coordinate with a lexicographic tie break. Throws
/// PreconditionError on an empty mask and ConstructionError naming the grid
/// point where the boundary pinches.
EuclideanRegion terrain_region(const Mask2D& grid, char height_axis = 'y');
/// Voxel (layer, row, col) is the unit cube at x = col, y = row, z = layer.
/// The height is z.
EuclideanRegion voxel_region(const Mask3D& voxels);

/// '1' and '0' characters, one row per line. Throws MalformedInput.
Mask2D parse_mask(const std::string& text);
/// Blocks in the 2D format separated by blank lines.
Mask3D parse_voxel_mask(const std::string& text);

/// Mask of the cells whose height lies above sea_level. The heightmap is CSV
/// of numbers, one row per line.
Mask2D mask_from_heightmap(const std::string& csv, double sea_level);

/// The sphere of the compactification: boundary of the box times an interval,
/// with the region on the bottom face, and the linear extension of e.
struct Compactification {
  Decomposition dec;
  VertexFunction g;
};
Compactification compactify(const EuclideanRegion& region);

}  // namespace shoreline
