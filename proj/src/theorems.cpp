#include "shoreline/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shoreline/error.hpp"
#include "shoreline/serialize.hpp"

namespace shoreline {

namespace {

constexpr Part kParts[3] = {Part::U, Part::V, Part::M};

std::size_t slot(Part p) { return p == Part::U ? 0 : p == Part::V ? 1 : 2; }

std::string dots_text(const std::vector<Dot>& dots) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dots.size(); ++i) os << (i ? "; " : "") << dots[i].to_string();
  return dots.empty() ? "none" : os.str();
}

// b3(U_t), b1(V,V^t), rb-1(V_t)...
std::string term(const std::string& b, int p, const std::string& space) {
  return b + std::to_string(p) + "(" + space + ")";
}

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

// Reduced Betti numbers from standard ones, -1 included.
BettiVector reduce(const BettiVector& b) {
  BettiVector out = b;
  if (b[0] == 0) {
    out.set(-1, 1);
  } else {
    out.set(0, b[0] - 1);
  }
  return out;
}

std::optional<std::string> morse_problem(const Decomposition& dec, const VertexFunction& f) {
  auto check = check_pl_perfect_morse(dec.ambient, f, dec.ambient_manifold_dim);
  if (check) return std::nullopt;
  return "f is not perfect Morse on the ambient sphere: " + check.reason;
}

PersistenceDiagram dims_between(const PersistenceDiagram& d, int lo, int hi) {
  PersistenceDiagram out{{}, d.source, d.n};
  for (const auto& dot : d.dots)
    if (dot.dim >= lo && dot.dim <= hi) out.dots.push_back(dot);
  return out;
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

void CheckReport::expect(const std::string& space, std::optional<double> t,
                         const std::string& relation, long long expected, long long actual) {
  ++checked;
  if (expected == actual) return;
  details.push_back({space, t, relation, std::to_string(expected), std::to_string(actual), true});
  if (status == CheckStatus::Passed) status = CheckStatus::Violated;
}

void CheckReport::expect(const std::string& space, std::optional<double> t,
                         const std::string& relation, const MultisetComparison& cmp) {
  ++checked;
  if (cmp.equal) return;
  details.push_back({space, t, relation, "only on the left: " + dots_text(cmp.only_in_left),
                     "only on the right: " + dots_text(cmp.only_in_right), true});
  if (status == CheckStatus::Passed) status = CheckStatus::Violated;
}

void CheckReport::fail(const std::string& space, const std::string& relation, const std::string& what) {
  ++checked;
  details.push_back({space, std::nullopt, relation, "", what, true});
  if (status == CheckStatus::Passed) status = CheckStatus::Violated;
}

void CheckReport::note(const std::string& space, const std::string& text) {
  details.push_back({space, std::nullopt, text, "", "", false});
}

void CheckReport::precondition(const std::string& why) {
  if (status != CheckStatus::Violated) status = CheckStatus::PreconditionFailed;
  message = message.empty() ? why : message + "; " + why;
}

void CheckReport::absorb(const CheckReport& other) {
  checked += other.checked;
  skipped += other.skipped;
  details.insert(details.end(), other.details.begin(), other.details.end());
  if (!other.message.empty()) message = message.empty() ? other.message : message + "; " + other.message;
  if (other.status == CheckStatus::Violated ||
      (other.status == CheckStatus::PreconditionFailed && status == CheckStatus::Passed))
    status = other.status;
}

PartDiagrams part_diagrams(const Decomposition& dec, const VertexFunction& f) {
  return {restrict_and_compute(dec, f, Part::U), restrict_and_compute(dec, f, Part::V),
          restrict_and_compute(dec, f, Part::M)};
}

ShoreOracle::ShoreOracle(const Decomposition& dec, const VertexFunction& f) : dec_(dec), f_(f) {
  require_generic(dec_.ambient, f_);
  for (Part p : kParts) {
    oracles_.emplace_back(part_of(dec_, p));
    const auto& o = oracles_.back();
    global_.push_back(o.betti(std::vector<char>(o.complex().size(), 1)));
  }
}

BettiVector ShoreOracle::global(Part which) const { return global_[slot(which)]; }

const ShoreOracle::Sample& ShoreOracle::at(double t) {
  if (auto it = cache_.find(t); it != cache_.end()) return it->second;
  Sample s;
  for (std::size_t i = 0; i < 3; ++i) {
    s.sub[i] = oracles_[i].sublevel_betti(f_, t);
    s.rel[i] = oracles_[i].superlevel_relative_betti(f_, t);
  }
  return cache_.emplace(t, std::move(s)).first->second;
}

std::vector<double> ShoreOracle::regular_values() const {
  std::vector<double> all;
  for (Vertex v : dec_.ambient.vertices()) all.push_back(f_[v]);
  std::sort(all.begin(), all.end());
  std::vector<double> keys{all.front(), all.back()};
  for (Vertex v : dec_.m.vertices()) keys.push_back(f_[v]);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    const double next = *std::upper_bound(all.begin(), all.end(), keys[i]);
    out.push_back(std::midpoint(keys[i], next));
  }
  return out;
}

CheckReport check_betti_relations(ShoreOracle& oracle, double t) {
  const auto& dec = oracle.decomposition();
  const auto& f = oracle.function();
  for (Vertex v : dec.m.vertices())
    if (f[v] == t) throw PreconditionError("t is a value of f on M");
  const int n = dec.n();
  CheckReport r;
  r.name = "betti-relations";
  const auto& s = oracle.at(t);
  const BettiVector whole[3] = {oracle.global(Part::U), oracle.global(Part::V), oracle.global(Part::M)};
  const bool below_top = t < f.max(), above_bottom = t > f.min();
  const std::string space = "t";

  auto b = [&](Part x, int p) { return as_ll(whole[slot(x)][p]); };
  auto sub = [&](Part x, int p) { return as_ll(s.sub[slot(x)][p]); };
  auto rel = [&](Part x, int p) { return as_ll(s.rel[slot(x)][p]); };
  auto empty_sub = [&](Part x) { return s.sub[slot(x)][0] == 0; };

  // Global relations do not depend on t; they are checked with every t so a
  // single call stands on its own.
  for (auto [x, y] : {std::pair{Part::U, Part::V}, std::pair{Part::V, Part::U}}) {
    const std::string X = part_name(x), Y = part_name(y);
    // Alexander duality in the sphere.
    r.expect(space, t, term("b", 0, Y) + " = " + term("b", n, X) + " + 1", b(x, n) + 1, b(y, 0));
    for (int p = 1; p <= n - 1; ++p)
      r.expect(space, t, term("b", p, Y) + " = " + term("b", n - p, X), b(x, n - p), b(y, p));
    r.expect(space, t, term("b", n, Y) + " = " + term("b", 0, X) + " - 1", b(x, 0) - 1, b(y, n));
    // Alexander duality in the ball.
    if (empty_sub(y)) {
      ++r.skipped;
    } else {
      r.expect(space, t, term("b", 0, Y + "_t") + " = " + term("b", n, X + "," + X + "^t") + " + 1",
               rel(x, n) + 1, sub(y, 0));
    }
    for (int p = 1; p <= n; ++p)
      r.expect(space, t, term("b", p, Y + "_t") + " = " + term("b", n - p, X + "," + X + "^t"),
               rel(x, n - p), sub(y, p));
    // Reduced form, the empty case included.
    const auto reduced = reduce(s.sub[slot(y)]);
    for (int p = -1; p <= n; ++p)
      r.expect(space, t, term("rb", p, Y + "_t") + " = " + term("b", n - p, X + "," + X + "^t"),
               rel(x, n - p), as_ll(reduced[p]));
    // Both combined.
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      r.expect(space, t, term("b", p, "M") + " = " + term("b", p, X) + " + " + term("b", q, X),
               b(x, p) + b(x, q), b(Part::M, p));
      if (p == 0 && empty_sub(y)) {
        ++r.skipped;
      } else {
        r.expect(space, t,
                 term("b", p, "M_t") + " = " + term("b", p, X + "_t") + " + " +
                     term("b", q, X + "," + X + "^t"),
                 sub(x, p) + rel(x, q), sub(Part::M, p));
      }
      // Needs a component of M_t, else a component of X_t misses M.
      if (p == n && empty_sub(Part::M)) {
        ++r.skipped;
      } else {
        r.expect(space, t,
                 term("b", p, "M,M^t") + " = " + term("b", p, X + "," + X + "^t") + " + " +
                     term("b", q, X + "_t"),
                 rel(x, p) + sub(x, q), rel(Part::M, p));
      }
    }
  }

  // Mayer-Vietoris in the sphere, the ball and the pair.
  const auto U = Part::U, V = Part::V, M = Part::M;
  r.expect(space, t, "b0(M) = b0(U) + b0(V) - 1", b(U, 0) + b(V, 0) - 1, b(M, 0));
  for (int p = 1; p <= n - 1; ++p)
    r.expect(space, t, term("b", p, "M") + " = " + term("b", p, "U") + " + " + term("b", p, "V"),
             b(U, p) + b(V, p), b(M, p));
  r.expect(space, t, term("b", n, "M") + " = " + term("b", n, "U") + " + " + term("b", n, "V") + " + 1",
           b(U, n) + b(V, n) + 1, b(M, n));
  if (above_bottom) {
    r.expect(space, t, "b0(M_t) = b0(U_t) + b0(V_t) - 1", sub(U, 0) + sub(V, 0) - 1, sub(M, 0));
    for (int p = 1; p <= n; ++p)
      r.expect(space, t,
               term("b", p, "M_t") + " = " + term("b", p, "U_t") + " + " + term("b", p, "V_t"),
               sub(U, p) + sub(V, p), sub(M, p));
  } else {
    r.skipped += static_cast<std::size_t>(n) + 1;
  }
  // A component of U_t or V_t missing M would add top relative classes.
  if (below_top && !empty_sub(M)) {
    for (int p = 0; p <= n - 1; ++p)
      r.expect(space, t,
               term("b", p, "M,M^t") + " = " + term("b", p, "U,U^t") + " + " + term("b", p, "V,V^t"),
               rel(U, p) + rel(V, p), rel(M, p));
    r.expect(space, t,
             term("b", n, "M,M^t") + " = " + term("b", n, "U,U^t") + " + " + term("b", n, "V,V^t") + " + 1",
             rel(U, n) + rel(V, n) + 1, rel(M, n));
  } else {
    r.skipped += static_cast<std::size_t>(n) + 1;
  }
  // Lefschetz duality on M.
  for (int p = 0; p <= n; ++p)
    r.expect(space, t, term("b", p, "M_t") + " = " + term("b", n - p, "M,M^t"), rel(M, n - p), sub(M, p));
  return r;
}

CheckReport check_betti_relations(const Decomposition& dec, const VertexFunction& f, double t) {
  ShoreOracle oracle(dec, f);
  return check_betti_relations(oracle, t);
}

CheckReport check_betti_relations(ShoreOracle& oracle) {
  CheckReport r;
  r.name = "betti-relations";
  for (double t : oracle.regular_values()) r.absorb(check_betti_relations(oracle, t));
  return r;
}

CheckReport check_point_calculus(ShoreOracle& oracle, const PartDiagrams& dgms) {
  CheckReport r;
  r.name = "point-calculus";
  const int n = oracle.decomposition().n();
  // Diagonal dots never fall in a rectangle; dropping them saves the scans.
  const PersistenceDiagram standard[3] = {dgms.u.without_diagonal(), dgms.v.without_diagonal(),
                                          dgms.m.without_diagonal()};
  PersistenceDiagram reduced[3];
  for (std::size_t i = 0; i < 3; ++i) reduced[i] = reduced_diagram(standard[i]).without_diagonal();
  for (double t : oracle.regular_values()) {
    const auto& s = oracle.at(t);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string X = part_name(kParts[i]);
      const auto rsub = reduce(s.sub[i]);
      for (int p = -1; p <= n + 1; ++p) {
        r.expect(X, t, "L count = " + term("b", p, X + "_t"), as_ll(s.sub[i][p]),
                 as_ll(rectangle_count(standard[i], t, p, Side::L)));
        r.expect(X, t, "R count = " + term("b", p, X + "," + X + "^t"), as_ll(s.rel[i][p]),
                 as_ll(rectangle_count(standard[i], t, p, Side::R)));
        r.expect(X, t, "reduced L count = " + term("rb", p, X + "_t"), as_ll(rsub[p]),
                 as_ll(rectangle_count(reduced[i], t, p, Side::L)));
        r.expect(X, t, "reduced R count = " + term("b", p, X + "," + X + "^t"),
                 p < 0 ? 0 : as_ll(s.rel[i][p]), as_ll(rectangle_count(reduced[i], t, p, Side::R)));
      }
    }
  }
  return r;
}

CheckReport check_point_calculus(ShoreOracle& oracle) {
  return check_point_calculus(oracle, part_diagrams(oracle.decomposition(), oracle.function()));
}

CheckReport check_land_and_water(const Decomposition& dec, const VertexFunction& f,
                                 const PartDiagrams& dgms) {
  CheckReport r;
  r.name = "land-and-water";
  if (auto why = morse_problem(dec, f)) {
    r.precondition(*why);
    return r;
  }
  const auto on_v = reduced_diagram(dgms.v);
  const auto on_u = reflect(reduced_diagram(dgms.u), dec.n());
  r.expect("U,V", std::nullopt, "rDgm(f|V) = rDgm(f|U)^T", multiset_equal(on_v, on_u));
  return r;
}

CheckReport check_land_and_water(const Decomposition& dec, const VertexFunction& f) {
  CheckReport r;
  r.name = "land-and-water";
  if (auto why = morse_problem(dec, f)) {
    r.precondition(*why);
    return r;
  }
  return check_land_and_water(dec, f, part_diagrams(dec, f));
}

Latitudes latitudinal_components(const Decomposition& dec, const VertexFunction& f) {
  Latitudes out;
  const auto verts = dec.ambient.vertices();
  if (verts.empty()) throw PreconditionError("empty ambient complex");
  auto by_value = [&](Vertex a, Vertex b) { return f[a] < f[b]; };
  out.south = *std::min_element(verts.begin(), verts.end(), by_value);
  out.north = *std::max_element(verts.begin(), verts.end(), by_value);
  for (Vertex pole : {out.south, out.north})
    if (dec.m.contains(Simplex{pole}))
      throw PreconditionError("pole " + std::to_string(pole) + " lies on M");

  // Ridges of the ambient sphere and the two top simplices on either side.
  const int top = dec.ambient_manifold_dim;
  const auto tops = dec.ambient.of_dim(top);
  const auto ridges = dec.ambient.of_dim(top - 1);
  const std::size_t ridge_base = ridges.empty() ? 0 : *dec.ambient.index_of(ridges.front());
  std::vector<std::vector<std::size_t>> sides(ridges.size());
  std::size_t south_top = tops.size(), north_top = tops.size();
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (const auto& r : tops[i].facets()) sides[*dec.ambient.index_of(r) - ridge_base].push_back(i);
    if (tops[i].contains(out.south)) south_top = i;
    if (tops[i].contains(out.north)) north_top = i;
  }

  auto range = [&](const SimplicialComplex& k) {
    double lo = f[k.vertices().front()], hi = lo;
    for (Vertex v : k.vertices()) {
      lo = std::min(lo, f[v]);
      hi = std::max(hi, f[v]);
    }
    return std::pair{lo, hi};
  };

  for (auto& shore : connected_components(dec.m)) {
    std::vector<std::size_t> parent(tops.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < ridges.size(); ++i)
      if (sides[i].size() == 2 && !shore.contains(ridges[i])) parent[find(sides[i][0])] = find(sides[i][1]);
    if (find(south_top) == find(north_top)) continue;
    const auto [u, w] = range(shore);
    out.manifolds.push_back({std::move(shore), u, w});
  }
  std::sort(out.manifolds.begin(), out.manifolds.end(),
            [](const auto& a, const auto& b) { return a.u < b.u; });

  // Components of U and V; each latitudinal manifold sits between the
  // component below it and a new one above.
  struct Piece {
    Part part;
    SimplicialComplex complex;
  };
  std::vector<Piece> pieces;
  for (Part p : {Part::U, Part::V})
    for (auto& c : connected_components(part_of(dec, p))) pieces.push_back({p, std::move(c)});
  auto holding = [&](Vertex v, std::optional<std::size_t> other_than) {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (i != other_than && pieces[i].complex.contains(Simplex{v})) return i;
    throw ConstructionError("vertex " + std::to_string(v) + " lies in no component of U or V");
  };
  std::size_t current = holding(out.south, std::nullopt);
  auto push = [&](std::size_t i) {
    const auto [lo, hi] = range(pieces[i].complex);
    out.components.push_back({pieces[i].part, pieces[i].complex, lo, hi});
  };
  push(current);
  for (const auto& mk : out.manifolds) {
    current = holding(mk.complex.vertices().front(), current);
    push(current);
  }
  return out;
}

CheckReport check_general_shore(const Decomposition& dec, const VertexFunction& f,
                                const PartDiagrams& dgms) {
  const int n = dec.n();
  if (n < 1) throw PreconditionError("the shore relations need n >= 1");
  CheckReport r;
  r.name = "general-shore";
  if (auto why = morse_problem(dec, f)) {
    r.precondition(*why);
    return r;
  }
  const auto both = disjoint_union(dgms.u.of_dim(0), dgms.v.of_dim(0));
  CascadeResult casc;
  try {
    casc = cascade(both, 0.0, 1.0);
  } catch (const Error& e) {
    r.fail("U,V", "extreme dots", e.what());
    return r;
  }
  r.expect("M", std::nullopt, "Dgm0(f|M) = [Dgm0(f|U) + Dgm0(f|V)]^C",
           multiset_equal(dims_between(dgms.m, -1, 0), casc.diagram));
  for (int p = 1; p <= n - 1; ++p)
    r.expect("M", std::nullopt,
             "Dgm" + std::to_string(p) + "(f|M) = Dgm" + std::to_string(p) + "(f|U) + Dgm" +
                 std::to_string(p) + "(f|V)",
             multiset_equal(dgms.m.of_dim(p), disjoint_union(dgms.u.of_dim(p), dgms.v.of_dim(p))));
  r.expect("M", std::nullopt,
           "Dgm" + std::to_string(n) + "(f|M) = [Dgm0(f|U) + Dgm0(f|V)]^CT",
           multiset_equal(dims_between(dgms.m, n, n + 1), reflect(casc.diagram, n)));

  try {
    const auto lat = latitudinal_components(dec, f);
    const auto& ex = casc.report.extreme_dots_in;
    r.expect("U,V", std::nullopt, "extreme dots = latitudinal components",
             as_ll(lat.components.size()), as_ll(ex.size()));
    std::vector<std::pair<double, double>> want, got;
    for (const auto& c : lat.components) want.emplace_back(c.lo, c.hi);
    for (const auto& d : ex) got.emplace_back(d.birth.value, d.death.value);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    ++r.checked;
    if (want != got) r.fail("U,V", "extreme dots match latitudinal component ranges", dots_text(ex));
    r.note("U,V", std::to_string(lat.manifolds.size()) + " latitudinal manifolds, " +
                      std::to_string(lat.components.size()) + " latitudinal components");
  } catch (const PreconditionError& e) {
    r.precondition(e.what());
  }
  return r;
}

CheckReport check_general_shore(const Decomposition& dec, const VertexFunction& f) {
  if (dec.n() < 1) throw PreconditionError("the shore relations need n >= 1");
  CheckReport r;
  r.name = "general-shore";
  if (auto why = morse_problem(dec, f)) {
    r.precondition(*why);
    return r;
  }
  return check_general_shore(dec, f, part_diagrams(dec, f));
}

CheckReport check_euclidean_shore(const SimplicialComplex& a, const VertexFunction& e, int n) {
  if (n < 1) throw PreconditionError("the shore relation needs n >= 1");
  if (!a.is_pure(n + 1)) throw PreconditionError("A must be a pure " + std::to_string(n + 1) + "-complex");
  const auto boundary = boundary_of_pure_complex(a, n);
  if (auto check = check_closed_manifold(boundary, n); !check)
    throw PreconditionError("boundary of A is not a closed manifold: " + check.reason);
  CheckReport r;
  r.name = "euclidean-shore";
  const auto on_a = compute_diagram(a, e, {}, "e|A");
  const auto on_boundary = compute_diagram(boundary, e, {}, "e|dA");
  r.expect("dA", std::nullopt, "Dgm(e|dA) = Dgm(e|A) + Dgm(e|A)^T",
           multiset_equal(on_boundary, disjoint_union(on_a, reflect(on_a, n))));
  return r;
}

CheckReport check_euclidean_shore(const EuclideanRegion& region) {
  CheckReport r;
  r.name = "euclidean-shore";
  Compactification cpt;
  try {
    cpt = compactify(region);
  } catch (const Error& e) {
    r.precondition(std::string("embedding into a sphere failed: ") + e.what());
    return r;
  }
  if (auto why = morse_problem(cpt.dec, cpt.g)) {
    r.precondition("extension: " + *why);
    return r;
  }
  const auto verts = cpt.dec.ambient.vertices();
  auto by_value = [&](Vertex a, Vertex b) { return cpt.g[a] < cpt.g[b]; };
  for (Vertex pole : {*std::min_element(verts.begin(), verts.end(), by_value),
                      *std::max_element(verts.begin(), verts.end(), by_value)})
    if (cpt.dec.u.contains(Simplex{pole})) {
      r.precondition("pole " + std::to_string(pole) + " lies in A");
      return r;
    }
  ++r.checked;
  if (cpt.dec.m != boundary_of_pure_complex(region.a, region.n).with_n_vertices(cpt.dec.m.n_vertices()))
    r.fail(region.label, "shore of the embedding", "differs from the boundary of A");
  auto core = check_euclidean_shore(region.a, region.e, region.n);
  for (auto& d : core.details) d.space = region.label;
  r.absorb(core);
  return r;
}

CheckReport demonstrate_counterexample(const AnnulusCounterexample& cx) {
  CheckReport r;
  r.name = "counterexample";
  const auto& inst = cx.instance;
  const auto dgms = part_diagrams(inst.dec, inst.f);
  const auto on_m = dgms.m.without_diagonal();
  const auto on_u = dgms.u.without_diagonal();

  std::vector<std::pair<double, double>> got, want{{cx.a, cx.c}, {cx.b, cx.d}, {cx.c, cx.a}, {cx.d, cx.b}};
  for (const auto& d : on_m.dots) got.emplace_back(d.birth.value, d.death.value);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  ++r.checked;
  if (got != want) r.fail("M", "dots (a,c), (b,d), (c,a), (d,b)", dots_text(on_m.dots));
  for (auto [x, y] : {std::pair{cx.a, cx.d}, std::pair{cx.c, cx.b}}) {
    ++r.checked;
    const bool found = std::any_of(on_u.dots.begin(), on_u.dots.end(), [&](const Dot& d) {
      return d.birth.value == x && d.death.value == y;
    });
    if (!found) r.fail("U", "dot (" + format_double(x) + ", " + format_double(y) + ")", dots_text(on_u.dots));
  }
  const auto naive = multiset_equal(dgms.m, disjoint_union(dgms.u, reflect(dgms.u, inst.n)));
  ++r.checked;
  if (naive.equal) {
    r.fail("M", "Dgm(f|M) = Dgm(f|U) + Dgm(f|U)^T must fail", "it holds");
  } else {
    r.note("M", "Dgm(f|M) = Dgm(f|U) + Dgm(f|U)^T fails: only in Dgm(f|M): " +
                    dots_text(naive.only_in_left) + "; only on the right: " + dots_text(naive.only_in_right));
  }
  r.note("M", "Dgm(f|M): " + dots_text(on_m.dots));
  r.note("U", "Dgm(f|U): " + dots_text(on_u.dots));
  r.absorb(check_general_shore(inst.dec, inst.f, dgms));
  return r;
}

CheckReport demonstrate_counterexample() { return demonstrate_counterexample(annulus_counterexample()); }

CheckReport check_poincare(const Decomposition& dec, const PersistenceDiagram& on_m) {
  CheckReport r;
  r.name = "poincare";
  const int n = dec.n();
  r.expect("M", std::nullopt, "Dgm" + std::to_string(n) + "(f|M) = Dgm0(f|M)^T",
           multiset_equal(on_m.of_dim(n), reflect(on_m.of_dim(0), n)));
  return r;
}

CheckReport check_poincare(const Decomposition& dec, const VertexFunction& f) {
  return check_poincare(dec, restrict_and_compute(dec, f, Part::M));
}

CheckReport check_engine_invariants(const Decomposition& dec, const VertexFunction& f,
                                    std::uint64_t seed) {
  CheckReport r;
  r.name = "engine-invariants";
  const int n = dec.n();
  for (Part p : {Part::U, Part::V, Part::M, Part::S}) {
    const std::string X = part_name(p);
    const auto twist = restrict_and_compute(dec, f, p, {Strategy::Twist, seed});
    const auto standard = restrict_and_compute(dec, f, p, {Strategy::Standard, seed});
    const auto shuffled = restrict_and_compute(dec, f, p, {Strategy::Shuffled, seed});
    r.expect(X, std::nullopt, "standard order = twist order", multiset_equal(standard, twist, 0, false));
    r.expect(X, std::nullopt, "shuffled order = twist order", multiset_equal(shuffled, twist, 0, false));
    r.expect(X, std::nullopt, "reflection is an involution",
             multiset_equal(reflect(reflect(twist, n), n), twist, 0, false));
    r.expect(X, std::nullopt, "cascade adds one dot", as_ll(twist.size()) + 1,
             as_ll(cascade(twist, 0.0, 1.0).diagram.size()));
    if (p == Part::M) r.absorb(check_poincare(dec, twist));
  }
  return r;
}

}  // namespace shoreline
