#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "shoreline/diagram_ops.hpp"
#include "shoreline/error.hpp"
#include "shoreline/serialize.hpp"
#include "support.hpp"

using namespace shoreline;

namespace {

constexpr Pass A = Pass::Ascending;
constexpr Pass D = Pass::Descending;

Dot dot(int dim, double b, Pass bp, double d, Pass dp) { return Dot::make(dim, {b, bp}, {d, dp}); }
Dot h0(double b, double d) { return dot(0, b, A, d, D); }

PersistenceDiagram diagram(std::vector<Dot> dots, std::optional<int> n = std::nullopt) {
  PersistenceDiagram out{std::move(dots), "test", n};
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("extreme dots") {
  CHECK(extreme_dots(diagram({h0(0, 1)})) == std::vector<Dot>{h0(0, 1)});
  CHECK(extreme_dots(diagram({h0(0, 1), h0(0.2, 0.5)})) == std::vector<Dot>{h0(0, 1)});
  // Four extremes in a staircase plus dominated and ordinary dots.
  auto dgm = diagram({h0(0, 0.3), h0(0.1, 0.5), h0(0.2, 0.7), h0(0.4, 1), h0(0.45, 0.9),
                      dot(0, 0.15, A, 0.25, A), dot(1, 0.3, A, 0.6, D)});
  CHECK(extreme_dots(dgm) == std::vector<Dot>{h0(0, 0.3), h0(0.1, 0.5), h0(0.2, 0.7), h0(0.4, 1)});
  // Dying on the way up ranks below any death on the way down.
  CHECK(extreme_dots(diagram({h0(0.05, 0.6), dot(0, 0.1, A, 0.95, A)})) ==
        std::vector<Dot>{h0(0.05, 0.6)});
}

TEST_CASE("cascade") {
  SUBCASE("single extreme collapses to the diagonal") {
    auto res = cascade(diagram({h0(0, 1)}), 0, 1);
    CHECK(res.diagram.dots.size() == 2);
    CHECK(res.diagram.without_diagonal().dots.empty());
    CHECK(res.report.dots_out.size() == 2);
  }
  SUBCASE("two extremes") {
    auto res = cascade(diagram({h0(0, 0.6), h0(0.4, 1)}), 0, 1);
    CHECK(res.diagram.dots == std::vector<Dot>{dot(-1, 0, A, 0, A), h0(0.4, 0.6), dot(0, 1, D, 1, D)});
    CHECK(res.diagram.without_diagonal().dots == std::vector<Dot>{h0(0.4, 0.6)});
  }
  SUBCASE("four extremes give five dots") {
    auto dgm = diagram({h0(0, 0.3), h0(0.1, 0.5), h0(0.2, 0.7), h0(0.4, 1), h0(0.45, 0.9)});
    auto res = cascade(dgm, 0, 1);
    CHECK(res.report.extreme_dots_in.size() == 4);
    CHECK(res.report.dots_out == std::vector<Dot>{dot(-1, 0, A, 0, A), h0(0.1, 0.3), h0(0.2, 0.5),
                                                  h0(0.4, 0.7), dot(0, 1, D, 1, D)});
    CHECK(res.diagram.size() == dgm.size() + 1);
    CHECK(std::count(res.diagram.dots.begin(), res.diagram.dots.end(), h0(0.45, 0.9)) == 1);
  }
  SUBCASE("crossing chain gives a vertical dot") {
    auto res = cascade(diagram({h0(0.3, 0.4), h0(0.6, 0.9)}), 0, 1);
    CHECK(res.report.dots_out[1] == dot(0, 0.6, A, 0.4, D));
    CHECK(res.report.dots_out[1].subdiagram == Subdiagram::Vertical);
  }
  CHECK_THROWS_AS(cascade(diagram({h0(0, 1.5)}), 0, 1), PreconditionError);
}

TEST_CASE("reduced diagram") {
  auto sphere = diagram({h0(0, 1), dot(2, 1, A, 0, D)}, 2);
  auto red = reduced_diagram(sphere).without_diagonal();
  CHECK(red.dots == std::vector<Dot>{dot(2, 1, A, 0, D)});
  auto no_zero = diagram({dot(1, 0.2, A, 0.7, A)});
  CHECK(reduced_diagram(no_zero).dots == no_zero.dots);
}

TEST_CASE("reflect") {
  auto ord = reflect(diagram({dot(1, 0.2, A, 0.7, A)}), 3);
  CHECK(ord.dots == std::vector<Dot>{dot(2, 0.7, D, 0.2, D)});
  CHECK(ord.dots[0].subdiagram == Subdiagram::Relative);
  auto hz = reflect(diagram({h0(0, 1)}), 2);
  CHECK(hz.dots == std::vector<Dot>{dot(2, 1, A, 0, D)});
  CHECK(hz.dots[0].subdiagram == Subdiagram::Vertical);
}

TEST_CASE("disjoint union and comparison") {
  auto d = diagram({h0(0, 1), dot(1, 0.2, A, 0.7, A)});
  PersistenceDiagram empty;
  CHECK(multiset_equal(disjoint_union(d, empty), d));
  CHECK(disjoint_union(empty, empty).dots.empty());
  CHECK(disjoint_union(d, d).size() == 2 * d.size());
  auto changed = d;
  changed.dots[1].dim = 2;
  auto cmp = multiset_equal(d, changed);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.only_in_left == std::vector<Dot>{d.dots[1]});
  CHECK(cmp.only_in_right == std::vector<Dot>{changed.dots[1]});
  auto json = comparison_to_json(cmp);
  CHECK(json.find("only_in_left") != std::string::npos);
  CHECK(multiset_equal(d, diagram({h0(0, 1), dot(1, 0.2 + 1e-12, A, 0.7, A)}), 1e-9));
  CHECK_FALSE(multiset_equal(d, diagram({h0(0, 1), dot(1, 0.2 + 1e-12, A, 0.7, A)})));
  // Diagonal dots only count when asked to.
  auto diag = disjoint_union(d, diagram({dot(0, 0.5, A, 0.5, A)}));
  CHECK(multiset_equal(d, diag));
  CHECK_FALSE(multiset_equal(d, diag, 0.0, false));
}

TEST_CASE("property: reflect and cascade on computed diagrams") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto k = support::random_complex(rng, 7, 1 + trial % 6, 3);
    auto f = support::random_function(rng, k.n_vertices());
    auto dgm = compute_diagram(k, f);
    for (int n = k.dim(); n <= k.dim() + 2; ++n) {
      auto twice = reflect(reflect(dgm, n), n);
      CHECK(twice.dots == dgm.dots);
      CHECK(reflect(dgm, n).size() == dgm.size());
    }
    try {
      auto res = cascade(dgm, 0, 1);
      CHECK(res.diagram.size() == dgm.size() + 1);
      auto ex = res.report.extreme_dots_in;
      for (std::size_t i = 1; i < ex.size(); ++i) {
        CHECK(ex[i - 1].birth.value < ex[i].birth.value);
        CHECK(ex[i - 1].death.value < ex[i].death.value);
      }
    } catch (const GenericityError&) {
      // Single-vertex components tie with themselves; nothing to check.
    }
  }
}

TEST_CASE("diagram documents round-trip") {
  auto d = diagram({h0(0, 1), dot(1, 0.1, A, 0.7, A), dot(2, 0.3, D, 0.1, D),
                    dot(0, 0.5, A, 0.5, A)}, 2);
  auto text = diagram_to_json(d, true);
  auto back = diagram_from_json(text);
  CHECK(back.dots == d.dots);
  CHECK(back.n == 2);
  CHECK(diagram_to_json(back, true) == text);
  CHECK(diagram_from_json(diagram_to_json(d)).size() == 3);
  CHECK(text.find("0.1") != std::string::npos);
  CHECK_THROWS_AS(diagram_from_json("{"), MalformedInput);
  CHECK_THROWS_AS(diagram_from_json(R"({"dots":[{"dim":0,"birth":{"value":0,"pass":"desc"},"death":{"value":1,"pass":"asc"}}]})"),
                  MalformedInput);
  CHECK(diagram_to_plot_csv(d).rfind("x,y,dim,subdiagram\n", 0) == 0);
  CHECK(diagram_to_pretty(d).find("horizontal") != std::string::npos);
}

TEST_CASE("complex and value files") {
  auto k = parse_complex("# a triangle\ndim 2\n0 1 2\n\n3\n");
  CHECK(k.size() == 8);
  CHECK(parse_complex(complex_to_text(k)) == k);
  CHECK_THROWS_WITH_AS(parse_complex("0 1\n1 x\n"), doctest::Contains("line 2"), MalformedInput);
  CHECK_THROWS_AS(parse_complex("0 0 1\n"), MalformedInput);
  CHECK_THROWS_AS(parse_complex("dim 1\n0 1 2\n"), MalformedInput);
  auto f = parse_values("vertex,value\n1,0.5\n0,0.25\n");
  CHECK(f == VertexFunction({0.25, 0.5}));
  CHECK(parse_values(values_to_csv(f)) == f);
  CHECK_THROWS_WITH_AS(parse_values("vertex,value\n0,abc\n"), doctest::Contains("line 2"),
                       MalformedInput);
  CHECK_THROWS_AS(parse_values("vertex,value\n1,0.5\n"), MalformedInput);
  CHECK_THROWS_AS(parse_values("v,x\n"), MalformedInput);
}
