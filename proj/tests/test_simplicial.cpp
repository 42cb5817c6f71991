#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "shoreline/error.hpp"
#include "shoreline/filtration.hpp"
#include "shoreline/homology.hpp"
#include "shoreline/simplicial.hpp"

using namespace shoreline;

namespace {

SimplicialComplex tetra_boundary() {
  std::vector<Simplex> tris{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return close_faces(tris);
}

SimplicialComplex triangle_boundary() {
  std::vector<Simplex> edges{{0, 1}, {1, 2}, {0, 2}};
  return close_faces(edges);
}

SimplicialComplex point() {
  std::vector<Simplex> v{{0}};
  return close_faces(v);
}

// Boundary of the cross-polytope built by hand: vertex 2i is +e_i, 2i+1 is -e_i.
SimplicialComplex octahedral_sphere(int dim) {
  std::vector<Simplex> facets;
  for (unsigned signs = 0; signs < (1u << (dim + 1)); ++signs) {
    std::vector<Vertex> vs;
    for (int i = 0; i <= dim; ++i) vs.push_back(2 * i + ((signs >> i) & 1u));
    facets.emplace_back(std::move(vs));
  }
  return close_faces(facets);
}

// Random complex: a handful of random simplices of dimension <= max_dim.
SimplicialComplex random_complex(std::mt19937& rng, int n_vertices, int n_simplices, int max_dim) {
  std::uniform_int_distribution<int> dim_dist(0, max_dim);
  std::vector<Simplex> tops;
  for (int i = 0; i < n_simplices; ++i) {
    std::vector<Vertex> all(n_vertices);
    for (int v = 0; v < n_vertices; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(dim_dist(rng) + 1);
    tops.emplace_back(all);
  }
  return close_faces(tops, n_vertices);
}

}  // namespace

TEST_CASE("close_faces of one triangle") {
  std::vector<Simplex> t{{0, 1, 2}};
  auto k = close_faces(t);
  CHECK(k.size() == 7);
  CHECK(k.contains(Simplex{0, 2}));
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 3);
  CHECK(k.count(2) == 1);
}

TEST_CASE("close_faces of nothing is empty") {
  auto k = close_faces(std::vector<Simplex>{});
  CHECK(k.empty());
  CHECK(k.dim() == -1);
}

TEST_CASE("tetrahedron boundary has 14 simplices and Euler characteristic 2") {
  auto k = tetra_boundary();
  CHECK(k.size() == 14);
  CHECK(k.euler_characteristic() == 2);
}

TEST_CASE("simplex rejects repeated and negative vertices") {
  CHECK_THROWS_AS(Simplex({1, 1, 2}), MalformedInput);
  CHECK_THROWS_AS(Simplex({-1, 2}), MalformedInput);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), MalformedInput);
}

TEST_CASE("simplices order by dimension then lexicographically") {
  CHECK(Simplex{5} < Simplex{0, 1});
  CHECK(Simplex{0, 2} < Simplex{1, 2});
  CHECK(Simplex{0, 1, 2}.facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("join of two points is an edge") {
  auto k = join(point(), point());
  CHECK(k.size() == 3);
  CHECK(k.contains(Simplex{0, 1}));
}

TEST_CASE("join of two triangle boundaries is a 3-sphere") {
  auto k = join(triangle_boundary(), triangle_boundary());
  CHECK(k.n_vertices() == 6);
  CHECK(k.count(0) == 6);
  CHECK(k.count(1) == 15);
  CHECK(k.count(2) == 18);
  CHECK(k.count(3) == 9);
  CHECK(betti(k) == BettiVector::from_dim0({1, 0, 0, 1}));
  CHECK(is_closed_manifold(k, 3));
}

TEST_CASE("cone over a circle is acyclic") {
  auto k = join(triangle_boundary(), point());
  CHECK(reduced_betti(k) == BettiVector{});
}

TEST_CASE("barycentric subdivision counts") {
  SUBCASE("edge") {
    std::vector<Simplex> e{{0, 1}};
    auto sd = barycentric_subdivision(close_faces(e));
    CHECK(sd.complex.count(0) == 3);
    CHECK(sd.complex.count(1) == 2);
    CHECK(sd.origin.size() == 3);
  }
  SUBCASE("triangle") {
    std::vector<Simplex> t{{0, 1, 2}};
    auto sd = barycentric_subdivision(close_faces(t));
    CHECK(sd.complex.count(0) == 7);
    CHECK(sd.complex.count(2) == 6);
    CHECK(sd.complex.euler_characteristic() == 1);
  }
  SUBCASE("tetrahedron boundary") {
    auto sd = barycentric_subdivision(tetra_boundary());
    CHECK(sd.complex.count(0) == 14);
    CHECK(sd.complex.count(1) == 36);
    CHECK(sd.complex.count(2) == 24);
    CHECK(sd.complex.euler_characteristic() == 2);
  }
}

TEST_CASE("closed manifold recognition") {
  CHECK(is_closed_manifold(tetra_boundary(), 2));
  std::vector<Simplex> t{{0, 1, 2}};
  auto disk = close_faces(t);
  auto check = check_closed_manifold(disk, 2);
  CHECK_FALSE(check.ok);
  CHECK(check.reason.find("[0,1]") != std::string::npos);
  for (int n = 1; n <= 3; ++n) CHECK(is_closed_manifold(octahedral_sphere(n), n));
  CHECK_FALSE(is_closed_manifold(octahedral_sphere(2), 1));
  // Two tetrahedron boundaries sharing one vertex: links fine on ridges, pinched at 0.
  std::vector<Simplex> pinched{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                               {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}};
  auto wedge = close_faces(pinched);
  auto w = check_closed_manifold(wedge, 2);
  CHECK_FALSE(w.ok);
  CHECK(w.reason.find("vertex 0") != std::string::npos);
  std::vector<Simplex> pts{{0}, {3}};
  CHECK(is_closed_manifold(close_faces(pts), 0));
}

TEST_CASE("derived neighborhood of a vertex in the tetrahedron boundary") {
  std::vector<Simplex> l{{0}};
  auto dec = derived_neighborhood(tetra_boundary(), close_faces(l, 4), 2);
  CHECK(reduced_betti(dec.u) == BettiVector{});
  CHECK(reduced_betti(dec.v) == BettiVector{});
  CHECK(betti(dec.m) == BettiVector::from_dim0({1, 1}));
  CHECK(complex_union(dec.u, dec.v) == dec.ambient);
  CHECK(complex_intersection(dec.u, dec.v) == dec.m);
}

TEST_CASE("derived neighborhood of two vertices gives two circles") {
  std::vector<Simplex> l{{0}, {3}};
  auto dec = derived_neighborhood(tetra_boundary(), close_faces(l, 4), 2);
  CHECK(betti(dec.m)[0] == 2);
  CHECK(betti(dec.u)[0] == 2);
}

TEST_CASE("derived neighborhood of a circle factor in the 3-sphere is a solid torus") {
  auto s3 = join(triangle_boundary(), triangle_boundary());
  auto dec = derived_neighborhood(s3, triangle_boundary().with_n_vertices(6), 3);
  CHECK(betti(dec.u) == BettiVector::from_dim0({1, 1, 0, 0}));
  CHECK(betti(dec.v) == BettiVector::from_dim0({1, 1, 0, 0}));
  CHECK(betti(dec.m) == BettiVector::from_dim0({1, 2, 1}));
}

TEST_CASE("derived neighborhood rejects bad subcomplexes") {
  CHECK_THROWS_AS(derived_neighborhood(tetra_boundary(), SimplicialComplex{}, 2),
                  PreconditionError);
  CHECK_THROWS_AS(derived_neighborhood(tetra_boundary(), tetra_boundary(), 2), PreconditionError);
}

TEST_CASE("boundary of pure complexes") {
  std::vector<Simplex> tet{{0, 1, 2, 3}};
  CHECK(boundary_of_pure_complex(close_faces(tet), 2) == tetra_boundary());
  std::vector<Simplex> two{{0, 1, 2, 3}, {1, 2, 3, 4}};
  auto bd = boundary_of_pure_complex(close_faces(two), 2);
  CHECK(bd.count(2) == 6);
  CHECK(is_closed_manifold(bd, 2));
  std::vector<Simplex> tri{{0, 1, 2}};
  auto b1 = boundary_of_pure_complex(close_faces(tri), 1);
  CHECK(b1.count(1) == 3);
  CHECK(b1.count(0) == 3);
  std::vector<Simplex> mixed{{0, 1, 2}, {3, 4}};
  CHECK_THROWS_AS(boundary_of_pure_complex(close_faces(mixed), 1), PreconditionError);
}

TEST_CASE("homology oracle basics") {
  CHECK(betti(tetra_boundary()) == BettiVector::from_dim0({1, 0, 1}));
  auto empty = reduced_betti(SimplicialComplex{});
  CHECK(empty[-1] == 1);
  CHECK(empty[0] == 0);
  std::vector<Simplex> t{{0, 1, 2}};
  CHECK(reduced_betti(close_faces(t)) == BettiVector{});
  std::vector<Simplex> pts{{0}, {1}};
  CHECK(reduced_betti(close_faces(pts))[0] == 1);
}

TEST_CASE("relative Betti numbers via the cone") {
  auto s2 = tetra_boundary();
  std::vector<Simplex> cap{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  auto rel = relative_betti(s2, close_faces(cap, 4));
  CHECK(rel == BettiVector::from_dim0({0, 0, 1}));
  CHECK(relative_betti(s2, s2) == BettiVector{});
  std::vector<Simplex> stray{{7, 8}};
  CHECK_THROWS_AS(relative_betti(s2, close_faces(stray)), PreconditionError);
}

TEST_CASE("property: random complexes") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = random_complex(rng, 7, 1 + trial % 6, 3);
    // close_faces is idempotent.
    auto again = close_faces(k.maximal_simplices(), k.n_vertices());
    CHECK(again == k);
    // Euler-Poincare.
    auto b = betti(k);
    long long alt = 0;
    for (int p = 0; p <= k.dim(); ++p) alt += (p % 2 ? -1 : 1) * static_cast<long long>(b[p]);
    CHECK(alt == k.euler_characteristic());
    // Subdivision keeps homology.
    CHECK(betti(barycentric_subdivision(k).complex) == b);
    // Relative to the empty complex: one extra isolated apex, then reduced.
    CHECK(relative_betti(k, SimplicialComplex{}.with_n_vertices(k.n_vertices()))[0] == b[0]);
    // Join Euler characteristic.
    auto other = random_complex(rng, 4, 2, 2);
    const long long c1 = k.euler_characteristic(), c2 = other.euler_characteristic();
    CHECK(join(k, other).euler_characteristic() == c1 + c2 - c1 * c2);
  }
}

TEST_CASE("property: collapsing oracle agrees with plain elimination") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = random_complex(rng, 8, 1 + trial % 9, 3);
    if (trial % 10 == 0) k = barycentric_subdivision(k).complex;
    SubcomplexHomology oracle(k);
    std::vector<double> values(k.n_vertices());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>((i * 7919) % 101);
    VertexFunction f(values);
    for (double t : {-1.0, 20.5, 50.5, 80.5, 200.0}) {
      CHECK(oracle.sublevel_betti(f, t) == betti(sublevel_complex(k, f, t)));
      CHECK(oracle.superlevel_relative_betti(f, t) ==
            relative_betti(k, superlevel_complex(k, f, t)));
    }
  }
  auto s3 = join(triangle_boundary(), triangle_boundary());
  auto sd = barycentric_subdivision(barycentric_subdivision(s3).complex).complex;
  SubcomplexHomology oracle(sd);
  CHECK(oracle.betti(std::vector<char>(sd.size(), 1)) == BettiVector::from_dim0({1, 0, 0, 1}));
  CHECK(oracle.relative_betti(std::vector<char>(sd.size(), 0)) == BettiVector::from_dim0({1, 0, 0, 1}));
  CHECK(oracle.relative_betti(std::vector<char>(sd.size(), 1)) == BettiVector{});
}
