#include "shoreline/diagram_ops.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <utility>

#include "shoreline/error.hpp"

namespace shoreline {

namespace {

std::pair<int, double> death_key(const Dot& d) {
  return {d.death.pass == Pass::Descending ? 1 : 0, d.death.value};
}

bool dominates(const Dot& a, const Dot& b) {
  return a.birth.value < b.birth.value && death_key(a) > death_key(b);
}

Pass flip(Pass p) { return p == Pass::Ascending ? Pass::Descending : Pass::Ascending; }

bool matches(const Dot& a, const Dot& b, double tol) {
  return a.dim == b.dim && a.birth.pass == b.birth.pass && a.death.pass == b.death.pass &&
         std::abs(a.birth.value - b.birth.value) <= tol &&
         std::abs(a.death.value - b.death.value) <= tol;
}

}  // namespace

std::vector<Dot> extreme_dots(const PersistenceDiagram& dgm) {
  std::vector<Dot> zero;
  for (const auto& d : dgm.dots)
    if (d.dim == 0 && !d.is_diagonal()) zero.push_back(d);
  std::vector<Dot> out;
  for (const auto& d : zero) {
    bool dominated = false;
    for (const auto& other : zero)
      if (dominates(other, d)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].subdiagram != Subdiagram::Horizontal)
      throw ConstructionError("extreme dot " + out[i].to_string() + " is not horizontal");
    if (i > 0 && !(out[i - 1].birth.value < out[i].birth.value &&
                   out[i - 1].death.value < out[i].death.value))
      throw GenericityError("extreme dots " + out[i - 1].to_string() + " and " +
                            out[i].to_string() + " share a coordinate");
  }
  return out;
}

CascadeResult cascade(const PersistenceDiagram& dgm, double lo, double hi) {
  for (const auto& d : dgm.dots)
    for (double v : {d.birth.value, d.death.value})
      if (v < lo || v > hi)
        throw PreconditionError("dot " + d.to_string() + " lies outside the cascade range");
  CascadeResult out;
  out.report.lo = lo;
  out.report.hi = hi;
  out.report.extreme_dots_in = extreme_dots(dgm);
  const auto& ex = out.report.extreme_dots_in;
  auto& fresh = out.report.dots_out;
  if (!ex.empty()) {
    fresh.push_back(Dot::make(-1, {lo, Pass::Ascending}, {ex.front().birth.value, Pass::Ascending}));
    for (std::size_t k = 1; k < ex.size(); ++k)
      fresh.push_back(Dot::make(0, {ex[k].birth.value, Pass::Ascending},
                                {ex[k - 1].death.value, Pass::Descending}));
    fresh.push_back(Dot::make(0, {hi, Pass::Descending}, {ex.back().death.value, Pass::Descending}));
  }
  out.diagram.source = dgm.source.empty() ? "" : dgm.source + "^C";
  out.diagram.n = dgm.n;
  std::vector<Dot> pending(ex);
  for (const auto& d : dgm.dots) {
    auto it = std::find(pending.begin(), pending.end(), d);
    if (it != pending.end()) {
      pending.erase(it);
      continue;
    }
    out.diagram.dots.push_back(d);
  }
  out.diagram.dots.insert(out.diagram.dots.end(), fresh.begin(), fresh.end());
  out.diagram.canonicalize();
  return out;
}

PersistenceDiagram reduced_diagram(const PersistenceDiagram& dgm, double lo, double hi) {
  return cascade(dgm, lo, hi).diagram;
}

PersistenceDiagram reflect(const PersistenceDiagram& dgm, int n) {
  PersistenceDiagram out;
  // Reflecting twice restores the source exactly.
  const bool reflected = dgm.source.ends_with("^T");
  out.source = reflected ? dgm.source.substr(0, dgm.source.size() - 2)
                         : dgm.source.empty() ? "" : dgm.source + "^T";
  out.n = dgm.n;
  out.dots.reserve(dgm.dots.size());
  for (const auto& d : dgm.dots)
    out.dots.push_back(Dot::make(n - d.dim, {d.death.value, flip(d.death.pass)},
                                 {d.birth.value, flip(d.birth.pass)}));
  out.canonicalize();
  return out;
}

PersistenceDiagram disjoint_union(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  PersistenceDiagram out;
  out.source = a.source.empty() ? b.source
               : b.source.empty() ? a.source
                                  : a.source + " + " + b.source;
  out.n = a.n ? a.n : b.n;
  out.dots = a.dots;
  out.dots.insert(out.dots.end(), b.dots.begin(), b.dots.end());
  out.canonicalize();
  return out;
}

MultisetComparison multiset_equal(const PersistenceDiagram& left, const PersistenceDiagram& right,
                                  double value_tolerance, bool drop_diagonal) {
  auto l = drop_diagonal ? left.without_diagonal() : left;
  auto r = drop_diagonal ? right.without_diagonal() : right;
  l.canonicalize();
  r.canonicalize();
  MultisetComparison out;
  if (value_tolerance == 0) {
    // Both sides are sorted, so exact matching is a merge.
    std::set_difference(l.dots.begin(), l.dots.end(), r.dots.begin(), r.dots.end(),
                        std::back_inserter(out.only_in_left), canonical_less);
    std::set_difference(r.dots.begin(), r.dots.end(), l.dots.begin(), l.dots.end(),
                        std::back_inserter(out.only_in_right), canonical_less);
    out.equal = out.only_in_left.empty() && out.only_in_right.empty();
    return out;
  }
  std::vector<char> used(r.dots.size(), 0);
  for (const auto& d : l.dots) {
    bool found = false;
    for (std::size_t j = 0; j < r.dots.size(); ++j)
      if (!used[j] && matches(d, r.dots[j], value_tolerance)) {
        used[j] = 1;
        found = true;
        break;
      }
    if (!found) out.only_in_left.push_back(d);
  }
  for (std::size_t j = 0; j < r.dots.size(); ++j)
    if (!used[j]) out.only_in_right.push_back(r.dots[j]);
  out.equal = out.only_in_left.empty() && out.only_in_right.empty();
  return out;
}

}  // namespace shoreline
