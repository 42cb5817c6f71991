#pragma once

#include <vector>

#include "shoreline/persistence.hpp"

namespace shoreline {

/// Dimension-zero dots not dominated by another dimension-zero dot, sorted by
/// birth. A dot dies "later" on the second axis when it dies on the way down
/// rather than up, and then by larger value. Throws GenericityError when the
/// extremes do not strictly increase in both coordinates, and ConstructionError
/// if an extreme dot is not horizontal.
std::vector<Dot> extreme_dots(const PersistenceDiagram& dgm);

struct CascadeReport {
  std::vector<Dot> extreme_dots_in;
  std::vector<Dot> dots_out;
  double lo = 0.0;
  double hi = 1.0;
};

struct CascadeResult {
  PersistenceDiagram diagram;
  CascadeReport report;
};

/// Replaces the extremes (u_k, w_{k+1}) by (lo, u_0) in dimension -1, the
/// chain (u_k, w_k), and (hi, w_last) as a relative dot. Throws
/// PreconditionError if a coordinate falls outside [lo, hi].
CascadeResult cascade(const PersistenceDiagram& dgm, double lo, double hi);

/// The cascade alone; higher dimensions pass through.
PersistenceDiagram reduced_diagram(const PersistenceDiagram& dgm, double lo = 0.0, double hi = 1.0);

/// Swaps birth and death, flips both passes, and maps dimension p to n - p.
PersistenceDiagram reflect(const PersistenceDiagram& dgm, int n);

PersistenceDiagram disjoint_union(const PersistenceDiagram& a, const PersistenceDiagram& b);

struct MultisetComparison {
  bool equal = true;
  std::vector<Dot> only_in_left;
  std::vector<Dot> only_in_right;
  explicit operator bool() const { return equal; }
};

/// Compares (dim, passes, values) as multisets. Values match when they differ
/// by at most value_tolerance.
MultisetComparison multiset_equal(const PersistenceDiagram& left, const PersistenceDiagram& right,
                                  double value_tolerance = 0.0, bool drop_diagonal = true);

}  // namespace shoreline
