#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shoreline/error.hpp"
#include "shoreline/homology.hpp"
#include "shoreline/persistence.hpp"
#include "support.hpp"

using namespace shoreline;

namespace {

Dot dot(int dim, double b, Pass bp, double d, Pass dp) { return Dot::make(dim, {b, bp}, {d, dp}); }

constexpr Pass A = Pass::Ascending;
constexpr Pass D = Pass::Descending;

std::vector<Dot> off_diagonal(const PersistenceDiagram& dgm) {
  return dgm.without_diagonal().dots;
}

void check_point_calculus(const SimplicialComplex& k, const VertexFunction& f,
                          const PersistenceDiagram& dgm) {
  for (double t : critical_sequence(k, f).regular_values) {
    const auto low = betti(sublevel_complex(k, f, t));
    const auto rel = relative_betti(k, superlevel_complex(k, f, t));
    for (int p = 0; p <= k.dim() + 1; ++p) {
      CHECK(rectangle_count(dgm, t, p, Side::L) == low[p]);
      CHECK(rectangle_count(dgm, t, p, Side::R) == rel[p]);
    }
  }
}

}  // namespace

TEST_CASE("dot classification") {
  CHECK(dot(0, 0.1, A, 0.5, A).subdiagram == Subdiagram::Ordinary);
  CHECK(dot(1, 0.7, D, 0.2, D).subdiagram == Subdiagram::Relative);
  CHECK(dot(0, 0.1, A, 0.9, D).subdiagram == Subdiagram::Horizontal);
  CHECK(dot(2, 0.9, A, 0.1, D).subdiagram == Subdiagram::Vertical);
  CHECK_THROWS_AS(dot(0, 0.1, D, 0.9, A), MalformedInput);
  CHECK(dot(0, 0.5, A, 0.5, A).is_diagonal());
  CHECK_FALSE(dot(0, 0.5, A, 0.5, D).is_diagonal());
}

TEST_CASE("two isolated vertices") {
  std::vector<Simplex> pts{{0}, {1}};
  auto dgm = compute_diagram(close_faces(pts), VertexFunction({0.0, 1.0}));
  CHECK(dgm.dots == std::vector<Dot>{dot(0, 0.0, A, 0.0, D), dot(0, 1.0, A, 1.0, D)});
}

TEST_CASE("circle with three heights") {
  auto dgm = compute_diagram(support::triangle_boundary(), VertexFunction({0.0, 0.5, 1.0}));
  CHECK(dgm.dots.size() == 6);
  CHECK(off_diagonal(dgm) == std::vector<Dot>{dot(0, 0.0, A, 1.0, D), dot(1, 1.0, A, 0.0, D)});
  CHECK(std::count(dgm.dots.begin(), dgm.dots.end(), dot(0, 0.5, A, 0.5, A)) == 1);
}

TEST_CASE("perfect Morse 2-sphere has two dots") {
  auto dgm = compute_diagram(support::tetra_boundary(), VertexFunction({0.0, 0.3, 0.6, 1.0}));
  CHECK(off_diagonal(dgm) == std::vector<Dot>{dot(0, 0.0, A, 1.0, D), dot(2, 1.0, A, 0.0, D)});
}

TEST_CASE("rectangle counts") {
  auto dgm = compute_diagram(support::triangle_boundary(), VertexFunction({0.0, 0.5, 1.0}));
  for (int p = 0; p <= 2; ++p) CHECK(rectangle_count(dgm, -0.5, p, Side::L) == 0);
  CHECK(rectangle_count(dgm, 0.75, 0, Side::L) == 1);
  CHECK(rectangle_count(dgm, 0.75, 1, Side::L) == 0);
  CHECK(rectangle_count(dgm, 0.25, 1, Side::R) == 1);
  CHECK_THROWS_AS(rectangle_count(dgm, 0.5, 0, Side::L), PreconditionError);
}

TEST_CASE("extended filtration pairs everything except the apex") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = support::random_complex(rng, 7, 1 + trial % 6, 3);
    auto dgm = compute_diagram(k, support::random_function(rng, k.n_vertices()));
    CHECK(dgm.size() == k.size());
  }
}

TEST_CASE("property: point calculus matches the oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    auto k = support::random_complex(rng, 7, 1 + trial % 7, 3);
    auto f = support::random_function(rng, k.n_vertices());
    check_point_calculus(k, f, compute_diagram(k, f));
  }
  auto s2 = support::tetra_boundary();
  auto sd = barycentric_subdivision(barycentric_subdivision(s2).complex).complex;
  auto f = support::random_function(rng, sd.n_vertices());
  check_point_calculus(sd, f, compute_diagram(sd, f));
}

TEST_CASE("property: reduction strategies agree") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = support::random_complex(rng, 8, 1 + trial % 8, 4);
    auto f = support::random_function(rng, k.n_vertices());
    auto twist = compute_diagram(k, f, {Strategy::Twist});
    CHECK(compute_diagram(k, f, {Strategy::Standard}).dots == twist.dots);
    for (std::uint64_t seed = 0; seed < 4; ++seed)
      CHECK(compute_diagram(k, f, {Strategy::Shuffled, seed}).dots == twist.dots);
  }
}

TEST_CASE("genericity is required") {
  CHECK_THROWS_AS(compute_diagram(support::triangle_boundary(), VertexFunction({0.0, 0.0, 1.0})),
                  GenericityError);
  CHECK_THROWS_AS(compute_diagram(SimplicialComplex{}, VertexFunction{}), PreconditionError);
}
