#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shoreline/diagram_ops.hpp"
#include "shoreline/filtration.hpp"
#include "shoreline/homology.hpp"
#include "shoreline/persistence.hpp"
#include "shoreline/simplicial.hpp"
#include "shoreline/spaces.hpp"

namespace shoreline {

enum class CheckStatus { Passed, Violated, PreconditionFailed };
const char* status_name(CheckStatus s);

/// One comparison that went wrong, or a note worth keeping.
struct CheckDetail {
  std::string space;
  std::optional<double> t;
  std::string relation;
  std::string expected;
  std::string actual;
  bool mismatch = true;
};

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::Passed;
  std::string message;
  std::size_t checked = 0;
  // Relations that do not apply at some value, for instance because a
  // sublevel set is empty there.
  std::size_t skipped = 0;
  std::vector<CheckDetail> details;

  bool passed() const { return status == CheckStatus::Passed; }
  /// Counts the comparison and records a mismatch when the values differ.
  void expect(const std::string& space, std::optional<double> t, const std::string& relation,
              long long expected, long long actual);
  void expect(const std::string& space, std::optional<double> t, const std::string& relation,
              const MultisetComparison& cmp);
  void fail(const std::string& space, const std::string& relation, const std::string& what);
  void note(const std::string& space, const std::string& text);
  void precondition(const std::string& why);
  /// Folds another report in; the worse status wins.
  void absorb(const CheckReport& other);
};

/// Diagrams of f on U, V and M, computed once and shared by the checks.
struct PartDiagrams {
  PersistenceDiagram u, v, m;
};
PartDiagrams part_diagrams(const Decomposition& dec, const VertexFunction& f);

/// Oracle Betti numbers of U, V and M at regular values, computed once per t.
class ShoreOracle {
 public:
  struct Sample {
    // Indexed by Part U, V, M.
    BettiVector sub[3];
    BettiVector rel[3];
  };

  ShoreOracle(const Decomposition& dec, const VertexFunction& f);

  const Decomposition& decomposition() const { return dec_; }
  const VertexFunction& function() const { return f_; }
  BettiVector global(Part which) const;
  const Sample& at(double t);

  /// One value inside each gap between consecutive values of f on M, the ends
  /// 0 and 1 included. Each is also regular for f on the whole sphere.
  std::vector<double> regular_values() const;

 private:
  Decomposition dec_;
  VertexFunction f_;
  std::vector<SubcomplexHomology> oracles_;
  std::vector<BettiVector> global_;
  std::map<double, Sample> cache_;
};

/// Alexander duality, Mayer-Vietoris and their combinations at t, for both
/// orientations of the pair, plus the reduced and Lefschetz forms. Throws
/// PreconditionError when t is a value of f on M.
CheckReport check_betti_relations(ShoreOracle& oracle, double t);
CheckReport check_betti_relations(const Decomposition& dec, const VertexFunction& f, double t);
/// Every value from ShoreOracle::regular_values.
CheckReport check_betti_relations(ShoreOracle& oracle);

/// Rectangle counts of the diagrams of f on U, V and M, standard and reduced,
/// against oracle Betti numbers at every regular value.
CheckReport check_point_calculus(ShoreOracle& oracle);
CheckReport check_point_calculus(ShoreOracle& oracle, const PartDiagrams& dgms);

/// Reduced diagram of f on V against the reflected reduced diagram on U.
CheckReport check_land_and_water(const Decomposition& dec, const VertexFunction& f);
CheckReport check_land_and_water(const Decomposition& dec, const VertexFunction& f,
                                 const PartDiagrams& dgms);

struct LatitudinalManifold {
  SimplicialComplex complex;
  double u = 0;  // smallest value on it
  double w = 0;  // largest value on it
};

struct LatitudinalComponent {
  Part part = Part::U;
  SimplicialComplex complex;
  double lo = 0;
  double hi = 0;
};

struct Latitudes {
  Vertex south = 0;
  Vertex north = 0;
  std::vector<LatitudinalManifold> manifolds;    // south to north
  std::vector<LatitudinalComponent> components;  // one more than manifolds
};

/// Components of M separating the lowest from the highest vertex, and the
/// components of U and V between them. Throws PreconditionError when a pole
/// lies on M.
Latitudes latitudinal_components(const Decomposition& dec, const VertexFunction& f);

/// The dimension-zero cascade relation, equality in middle dimensions, the
/// reflected cascade in dimension n, and the extreme dots against the
/// latitudinal components. Throws PreconditionError for n = 0.
CheckReport check_general_shore(const Decomposition& dec, const VertexFunction& f);
CheckReport check_general_shore(const Decomposition& dec, const VertexFunction& f,
                                const PartDiagrams& dgms);

/// Diagram on the boundary of the region against the diagram on the region
/// and its reflection, after embedding the region in a sphere and checking
/// the extended height there.
CheckReport check_euclidean_shore(const EuclideanRegion& region);
/// Without an embedding: only the boundary and the diagram equality.
CheckReport check_euclidean_shore(const SimplicialComplex& a, const VertexFunction& e, int n);

/// The four-dot pattern on M, the two dots on U, the failing naive relation,
/// and the General Shore Theorem on the same instance.
CheckReport demonstrate_counterexample();
CheckReport demonstrate_counterexample(const AnnulusCounterexample& cx);

/// Top-dimensional diagram of f on M against the reflection of its
/// dimension-zero diagram.
CheckReport check_poincare(const Decomposition& dec, const VertexFunction& f);
CheckReport check_poincare(const Decomposition& dec, const PersistenceDiagram& on_m);

/// Reduction strategies agree on every part, reflection is an involution, the
/// cascade adds exactly one dot.
CheckReport check_engine_invariants(const Decomposition& dec, const VertexFunction& f,
                                    std::uint64_t seed = 0);

}  // namespace shoreline
