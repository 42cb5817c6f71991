#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "shoreline/error.hpp"
#include "shoreline/serialize.hpp"
#include "shoreline/theorems.hpp"
#include "instances.hpp"

using namespace shoreline;
using support::disk_disk;

namespace {

bool has_pair(const PersistenceDiagram& d, double x, double y) {
  return std::any_of(d.dots.begin(), d.dots.end(),
                     [&](const Dot& dot) { return dot.birth.value == x && dot.death.value == y; });
}

}  // namespace

TEST_CASE("check reports") {
  CheckReport r;
  r.expect("U", 0.5, "b0", 1, 1);
  CHECK(r.passed());
  CHECK(r.checked == 1);
  r.expect("U", 0.5, "b1", 1, 2);
  CHECK(r.status == CheckStatus::Violated);
  CHECK(r.details.size() == 1);
  CheckReport pre;
  pre.precondition("not Morse");
  r.absorb(pre);
  CHECK(r.status == CheckStatus::Violated);
  pre.absorb(CheckReport{});
  CHECK(pre.status == CheckStatus::PreconditionFailed);
  const auto text = check_report_to_json(r);
  CHECK(text.find("\"status\": \"violated\"") != std::string::npos);
  CHECK(text.find("\"passed\": false") != std::string::npos);
}

TEST_CASE("torus worked example") {
  const auto g = solid_torus_decomposition();
  ShoreOracle oracle(g.dec, g.f);
  CHECK(oracle.global(Part::M) == BettiVector::from_dim0({1, 2, 1}));
  CHECK(oracle.global(Part::U) == BettiVector::from_dim0({1, 1, 0, 0}));
  const auto& s = oracle.at(*g.marked_value);
  CHECK(s.sub[2] == BettiVector::from_dim0({1, 1, 0}));
  CHECK(s.rel[2] == BettiVector::from_dim0({0, 1, 1}));
  CHECK(s.sub[0] == BettiVector::from_dim0({1, 0, 0, 0}));
  CHECK(s.rel[0] == BettiVector::from_dim0({0, 1, 0, 0}));
  CHECK(check_betti_relations(oracle, *g.marked_value).passed());
  CHECK(check_land_and_water(g.dec, g.f).passed());
  const auto shore = check_general_shore(g.dec, g.f);
  CHECK(shore.passed());
  CHECK(latitudinal_components(g.dec, g.f).manifolds.size() == 1);
}

TEST_CASE("disk and disk in the sphere") {
  const auto g = disk_disk();
  ShoreOracle oracle(g.dec, g.f);
  const auto values = oracle.regular_values();
  CHECK(values.size() > 2);
  const auto relations = check_betti_relations(oracle);
  CHECK(relations.passed());
  CHECK(relations.checked > 0);
  // Below every value on M, the part holding the south pole has a cap as its
  // sublevel set: b0(Y_t) = b_n(X, X^t) + 1.
  const auto& low = oracle.at(values.front());
  CHECK(low.sub[2][0] == 0);
  const int y = low.sub[0][0] > 0 ? 0 : 1;
  CHECK(low.sub[y][0] == low.rel[1 - y][1] + 1);
  CHECK(check_betti_relations(oracle, values.front()).passed());
  CHECK(check_point_calculus(oracle).passed());
  CHECK(check_land_and_water(g.dec, g.f).passed());
  CHECK(check_general_shore(g.dec, g.f).passed());
  CHECK(check_engine_invariants(g.dec, g.f, 3).passed());
  const double on_m = g.f[g.dec.m.vertices().front()];
  CHECK_THROWS_AS(check_betti_relations(oracle, on_m), PreconditionError);
}

TEST_CASE("latitudes of the disk and disk split") {
  const auto g = disk_disk();
  const auto lat = latitudinal_components(g.dec, g.f);
  CHECK(g.f[lat.south] == 0.0);
  CHECK(g.f[lat.north] == 1.0);
  CHECK(lat.components.size() == lat.manifolds.size() + 1);
}

TEST_CASE("random instances") {
  for (std::uint64_t seed : {1, 2}) {
    const auto g = random_decomposition(2, seed);
    ShoreOracle oracle(g.dec, g.f);
    const auto dgms = part_diagrams(g.dec, g.f);
    CHECK(check_betti_relations(oracle).passed());
    CHECK(check_point_calculus(oracle, dgms).passed());
    CHECK(check_land_and_water(g.dec, g.f, dgms).passed());
    CHECK(check_general_shore(g.dec, g.f, dgms).passed());
    CHECK(check_poincare(g.dec, dgms.m).passed());
  }
}

TEST_CASE("figure five counterexample") {
  const auto cx = annulus_counterexample();
  const auto& g = cx.instance;
  const auto on_m = restrict_and_compute(g.dec, g.f, Part::M).without_diagonal();
  CHECK(on_m.size() == 4);
  CHECK(has_pair(on_m, cx.a, cx.c));
  CHECK(has_pair(on_m, cx.b, cx.d));
  CHECK(has_pair(on_m, cx.c, cx.a));
  CHECK(has_pair(on_m, cx.d, cx.b));
  const auto on_u = restrict_and_compute(g.dec, g.f, Part::U).without_diagonal();
  CHECK(has_pair(on_u, cx.a, cx.d));
  CHECK(has_pair(on_u, cx.c, cx.b));
  const auto naive = disjoint_union(on_u, reflect(on_u, 1));
  CHECK_FALSE(multiset_equal(on_m, naive).equal);
  CHECK(demonstrate_counterexample(cx).passed());
  CHECK(check_general_shore(g.dec, g.f).passed());
  CHECK(check_land_and_water(g.dec, g.f).passed());
}

TEST_CASE("euclidean shore") {
  CHECK(check_euclidean_shore(terrain_region(parse_mask("11\n11\n"))).passed());
  CHECK(check_euclidean_shore(terrain_region(parse_mask("111\n101\n111\n"), 'x')).passed());
  CHECK(check_euclidean_shore(voxel_region(parse_voxel_mask("11\n11\n\n11\n11\n"))).passed());
  const auto disk = terrain_region(parse_mask("11\n11\n"));
  CHECK(check_euclidean_shore(disk.a, disk.e, 1).passed());
  CHECK_THROWS_AS(check_euclidean_shore(disk.a, disk.e, 0), PreconditionError);
}

TEST_CASE("preconditions") {
  const auto g = annulus_counterexample().instance;
  // The north pole pulled down becomes a second minimum.
  std::vector<double> values = g.f.values();
  values[static_cast<std::size_t>(g.dec.ambient.vertices().back())] = 0.01;
  const VertexFunction bad(values);
  REQUIRE_FALSE(is_pl_perfect_morse(g.dec.ambient, bad, 2));
  CHECK(check_land_and_water(g.dec, bad).status == CheckStatus::PreconditionFailed);
  CHECK(check_general_shore(g.dec, bad).status == CheckStatus::PreconditionFailed);
  Decomposition point;
  point.ambient = close_faces(std::vector<Simplex>{Simplex{0, 1}});
  point.ambient_manifold_dim = 1;
  CHECK_THROWS_AS(check_general_shore(point, VertexFunction({0.0, 1.0})), PreconditionError);
}
