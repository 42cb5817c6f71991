#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shoreline/simplicial.hpp"

namespace shoreline {

class VertexFunction;

/// Ranks by dimension, starting at -1. Dimensions outside the stored range
/// read as zero.
class BettiVector {
 public:
  BettiVector() = default;
  /// ranks[i] is the rank in dimension i - 1.
  explicit BettiVector(std::vector<std::size_t> ranks_from_minus_one);
  /// Convenience: ranks starting at dimension 0, no (-1) entry.
  static BettiVector from_dim0(std::vector<std::size_t> ranks);

  std::size_t operator[](int p) const;
  void set(int p, std::size_t rank);
  int max_dim() const;

  friend bool operator==(const BettiVector& a, const BettiVector& b);
  std::string to_string() const;

 private:
  std::vector<std::size_t> ranks_;
};

/// Rank of every boundary map over the two-element field. Dense bit-packed
/// elimination.
std::vector<std::size_t> boundary_ranks(const SimplicialComplex& k);

BettiVector betti(const SimplicialComplex& k);
BettiVector reduced_betti(const SimplicialComplex& k);

/// Reduced Betti numbers of k with a fresh vertex coned over sub. Throws
/// PreconditionError when sub is not a subcomplex of k.
BettiVector relative_betti(const SimplicialComplex& k, const SimplicialComplex& sub);

/// Betti numbers of many subcomplexes of one fixed complex, and of the
/// complex relative to them. Incidences are built once; each query shrinks
/// the chain complex by collapses and coreductions, then eliminates densely.
class SubcomplexHomology {
 public:
  explicit SubcomplexHomology(const SimplicialComplex& k);

  const SimplicialComplex& complex() const { return k_; }

  /// keep[i] selects the i-th simplex of the complex; must be face-closed.
  BettiVector betti(const std::vector<char>& keep) const;
  /// Betti numbers of the pair (complex, selected part), from the quotient
  /// chain complex. Agrees with the cone construction.
  BettiVector relative_betti(const std::vector<char>& sub) const;

  BettiVector sublevel_betti(const VertexFunction& f, double t) const;
  /// Pair of the complex and its superlevel set at t.
  BettiVector superlevel_relative_betti(const VertexFunction& f, double t) const;

 private:
  BettiVector run(std::vector<char> alive, bool face_closed) const;

  SimplicialComplex k_;
  std::vector<int> dim_;
  std::vector<std::size_t> facet_start_, facet_;
  std::vector<std::size_t> cofacet_start_, cofacet_;
};

}  // namespace shoreline
