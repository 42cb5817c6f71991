#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "shoreline/filtration.hpp"
#include "shoreline/simplicial.hpp"

namespace support {

using namespace shoreline;

inline SimplicialComplex tetra_boundary() {
  std::vector<Simplex> tris{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return close_faces(tris);
}

inline SimplicialComplex triangle_boundary() {
  std::vector<Simplex> edges{{0, 1}, {1, 2}, {0, 2}};
  return close_faces(edges);
}

inline SimplicialComplex random_complex(std::mt19937& rng, int n_vertices, int n_simplices,
                                        int max_dim) {
  std::uniform_int_distribution<int> dim_dist(0, max_dim);
  std::vector<Simplex> tops;
  for (int i = 0; i < n_simplices; ++i) {
    std::vector<Vertex> all(n_vertices);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(dim_dist(rng) + 1);
    tops.emplace_back(all);
  }
  return close_faces(tops, n_vertices);
}

// Distinct values: a random permutation of 0..n-1 scaled into [0, 1].
inline VertexFunction random_function(std::mt19937& rng, std::size_t n) {
  std::vector<double> v(n);
  std::iota(v.begin(), v.end(), 0.0);
  std::shuffle(v.begin(), v.end(), rng);
  if (n > 1)
    for (auto& x : v) x /= static_cast<double>(n - 1);
  return VertexFunction(v);
}

}  // namespace support
