#include "shoreline/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "shoreline/error.hpp"
#include "shoreline/homology.hpp"

namespace shoreline {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_betti(const SimplicialComplex& k, const BettiVector& want, const std::string& what) {
  const auto got = betti(k);
  if (got != want)
    throw ConstructionError(what + " has Betti numbers " + got.to_string() + ", expected " +
                            want.to_string());
}

void require_perfect_morse(const Decomposition& dec, const VertexFunction& f) {
  if (auto check = check_pl_perfect_morse(dec.ambient, f, dec.ambient_manifold_dim); !check)
    throw ConstructionError("height is not perfect Morse: " + check.reason);
}

// The vertex of the twice subdivided complex sitting at an old vertex.
Vertex refined_vertex(const DerivedNeighborhood& dn, Vertex old) {
  auto find = [](const Subdivision& sd, Vertex v) {
    for (std::size_t i = 0; i < sd.origin.size(); ++i)
      if (sd.origin[i].dim() == 0 && sd.origin[i].front() == v) return static_cast<Vertex>(i);
    throw ConstructionError("vertex " + std::to_string(v) + " vanished in the subdivision");
  };
  return find(dn.second, find(dn.first, old));
}

// The value closest to t, between two consecutive values of f on M and below
// every other vertex value in that gap, where the sublevel set of M is an
// annulus cut from the torus and that of U a disk cut from the solid torus.
double half_torus_value(const Decomposition& dec, const VertexFunction& f, double t) {
  std::vector<double> on_m, all;
  for (Vertex v : dec.m.vertices()) on_m.push_back(f[v]);
  for (Vertex v : dec.ambient.vertices()) all.push_back(f[v]);
  std::sort(on_m.begin(), on_m.end());
  std::sort(all.begin(), all.end());
  std::vector<double> candidates;
  for (std::size_t i = 0; i + 1 < on_m.size(); ++i) {
    const double next = *std::upper_bound(all.begin(), all.end(), on_m[i]);
    candidates.push_back(std::midpoint(on_m[i], next));
  }
  std::sort(candidates.begin(), candidates.end(),
            [t](double a, double b) { return std::abs(a - t) < std::abs(b - t); });
  const SubcomplexHomology m(dec.m), u(dec.u);
  for (double c : candidates)
    if (m.sublevel_betti(f, c) == BettiVector::from_dim0({1, 1, 0}) &&
        m.superlevel_relative_betti(f, c) == BettiVector::from_dim0({0, 1, 1}) &&
        u.sublevel_betti(f, c) == BettiVector::from_dim0({1, 0, 0, 0}) &&
        u.superlevel_relative_betti(f, c) == BettiVector::from_dim0({0, 1, 0, 0}))
      return c;
  throw ConstructionError("no value cuts the torus in half");
}

GeneratedInstance from_neighborhood(const DerivedNeighborhood& dn, const Coordinates& coords,
                                    const std::vector<double>& direction) {
  GeneratedInstance out;
  out.dec = dn.decomposition;
  out.n = out.dec.n();
  out.coords = subdivided_coordinates(dn.second, subdivided_coordinates(dn.first, coords));
  out.f = linear_function(out.coords, direction);
  require_generic(out.dec.ambient, out.f);
  return out;
}

}  // namespace

EmbeddedComplex cross_polytope_sphere(int dim) {
  if (dim < 1) throw PreconditionError("cross-polytope sphere needs dim >= 1");
  const int axes = dim + 1;
  std::vector<Simplex> facets;
  for (unsigned signs = 0; signs < (1u << axes); ++signs) {
    std::vector<Vertex> vs;
    for (int i = 0; i < axes; ++i) vs.push_back(2 * i + static_cast<int>((signs >> i) & 1u));
    facets.emplace_back(std::move(vs));
  }
  EmbeddedComplex out{close_faces(facets, static_cast<std::size_t>(2 * axes)), {}};
  for (int v = 0; v < 2 * axes; ++v) {
    std::vector<double> p(static_cast<std::size_t>(axes), 0.0);
    p[static_cast<std::size_t>(v / 2)] = v % 2 ? -1.0 : 1.0;
    out.coords.push_back(std::move(p));
  }
  return out;
}

Coordinates subdivided_coordinates(const Subdivision& sd, const Coordinates& coords) {
  Coordinates out;
  out.reserve(sd.origin.size());
  for (const auto& s : sd.origin) {
    std::vector<double> p(coords.at(static_cast<std::size_t>(s.front())).size(), 0.0);
    for (Vertex v : s.vertices())
      for (std::size_t j = 0; j < p.size(); ++j) p[j] += coords[static_cast<std::size_t>(v)][j];
    for (double& x : p) x /= static_cast<double>(s.vertices().size());
    out.push_back(std::move(p));
  }
  return out;
}

VertexFunction linear_function(const Coordinates& coords, const std::vector<double>& direction) {
  if (coords.empty()) throw PreconditionError("no coordinates");
  std::vector<double> values;
  values.reserve(coords.size());
  for (const auto& p : coords) {
    if (p.size() != direction.size()) throw PreconditionError("direction and coordinates differ in size");
    values.push_back(dot(p, direction));
  }
  VertexFunction f(std::move(values));
  return normalize(f.is_generic() ? f : perturb(f));
}

VertexFunction height_function(const Coordinates& coords, int axis, const std::vector<double>& tilt) {
  if (coords.empty()) throw PreconditionError("no coordinates");
  const std::size_t d = coords.front().size();
  if (axis < 0 || static_cast<std::size_t>(axis) >= d) throw PreconditionError("axis out of range");
  std::vector<double> dir(d, 0.0);
  dir[static_cast<std::size_t>(axis)] = 1.0;
  for (std::size_t i = 0; i < tilt.size() && i < d; ++i) dir[i] += tilt[i];
  const double len = std::sqrt(dot(dir, dir));
  if (len == 0) throw PreconditionError("tilt cancels the axis");
  for (double& x : dir) x /= len;
  return linear_function(coords, dir);
}

GeneratedInstance solid_torus_decomposition(int p, int q) {
  if (p < 3 || q < 3) throw PreconditionError("polygons need at least three sides");
  auto polygon = [](int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back(Simplex{i, (i + 1) % n});
    return close_faces(edges);
  };
  const auto s3 = join(polygon(p), polygon(q));
  Coordinates coords;
  for (int i = 0; i < p; ++i) {
    const double a = 2 * std::numbers::pi * i / p;
    coords.push_back({std::cos(a), std::sin(a), 0, 0});
  }
  for (int i = 0; i < q; ++i) {
    const double a = 2 * std::numbers::pi * i / q;
    coords.push_back({0, 0, std::cos(a), std::sin(a)});
  }
  const auto core = polygon(p).with_n_vertices(s3.n_vertices());
  const auto dn = derived_neighborhood_detailed(s3, core, 3);
  // Lowest point on the core circle of U, highest on the core of V.
  const std::vector<double> dir{-1.0, std::numbers::pi / 40, std::numbers::e / 2,
                                std::numbers::pi / (40 * std::numbers::e)};
  auto out = from_neighborhood(dn, coords, dir);
  out.label = "solid-torus-" + std::to_string(p) + "-" + std::to_string(q);
  require_perfect_morse(out.dec, out.f);
  require_betti(out.dec.u, BettiVector::from_dim0({1, 1, 0, 0}), "U");
  require_betti(out.dec.m, BettiVector::from_dim0({1, 2, 1}), "M");

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < p; ++i) {
    const double x = out.f[refined_vertex(dn, i)];
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  out.marked_value = half_torus_value(out.dec, out.f, std::midpoint(lo, hi));
  return out;
}

AnnulusCounterexample annulus_counterexample() {
  // Three longitudes and two rings at 15 degrees south and north: the smallest
  // grid sphere. The band between the rings is U, the two polar caps are V. A
  // tilted height makes the ring ranges interleave while both poles stay the
  // lowest and highest points.
  constexpr int kLongitudes = 3;
  const double lat = std::numbers::pi / 12;
  const Vertex south = 0, north = 1 + 2 * kLongitudes;
  auto at = [&](int ring, int lon) { return 1 + ring * kLongitudes + lon % kLongitudes; };
  std::vector<Simplex> band, caps;
  for (int j = 0; j < kLongitudes; ++j) {
    caps.push_back(Simplex{south, at(0, j), at(0, j + 1)});
    caps.push_back(Simplex{north, at(1, j), at(1, j + 1)});
    band.push_back(Simplex{at(0, j), at(0, j + 1), at(1, j + 1)});
    band.push_back(Simplex{at(0, j), at(1, j), at(1, j + 1)});
  }
  const std::size_t n_vertices = static_cast<std::size_t>(north) + 1;
  Coordinates coords(n_vertices);
  coords[static_cast<std::size_t>(south)] = {0, 0, -1};
  coords[static_cast<std::size_t>(north)] = {0, 0, 1};
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < kLongitudes; ++j) {
      const double lon = 2 * std::numbers::pi * j / kLongitudes;
      coords[static_cast<std::size_t>(at(r, j))] = {std::cos(lat) * std::cos(lon),
                                                    std::cos(lat) * std::sin(lon),
                                                    r ? std::sin(lat) : -std::sin(lat)};
    }

  AnnulusCounterexample out;
  auto& inst = out.instance;
  inst.dec.u = close_faces(band, n_vertices);
  inst.dec.v = close_faces(caps, n_vertices);
  inst.dec.ambient = complex_union(inst.dec.u, inst.dec.v);
  inst.dec.m = complex_intersection(inst.dec.u, inst.dec.v);
  inst.dec.ambient_manifold_dim = 2;
  inst.dec.validate();
  inst.n = 1;
  inst.coords = coords;
  inst.f = linear_function(coords, {0.5, std::numbers::e / 100, 1.0});
  inst.label = "annulus-counterexample";
  require_perfect_morse(inst.dec, inst.f);
  require_betti(inst.dec.u, BettiVector::from_dim0({1, 1, 0}), "U");
  require_betti(inst.dec.v, BettiVector::from_dim0({2, 0, 0}), "V");

  const auto& f = out.instance.f;
  auto shores = connected_components(out.instance.dec.m);
  if (shores.size() != 2) throw ConstructionError("expected two shore circles");
  std::vector<std::pair<double, double>> ranges;
  for (const auto& c : shores) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (Vertex v : c.vertices()) {
      lo = std::min(lo, f[v]);
      hi = std::max(hi, f[v]);
    }
    ranges.emplace_back(lo, hi);
  }
  std::sort(ranges.begin(), ranges.end());
  out.a = ranges[0].first;
  out.c = ranges[0].second;
  out.b = ranges[1].first;
  out.d = ranges[1].second;
  if (!(out.a < out.b && out.b < out.c && out.c < out.d))
    throw ConstructionError("shore ranges do not interleave");
  return out;
}

GeneratedInstance random_decomposition(int dim, std::uint64_t seed, int max_attempts) {
  if (dim != 2 && dim != 3) throw PreconditionError("random decompositions exist for dim 2 and 3");
  auto base = cross_polytope_sphere(dim);
  if (dim == 2) {
    const auto sd = barycentric_subdivision(base.complex);
    base = {sd.complex, subdivided_coordinates(sd, base.coords)};
  }
  const auto& k = base.complex;
  const auto vertices = k.vertices();
  std::mt19937_64 rng(seed);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // A few vertices, some of them widened to their closed stars.
    std::uniform_int_distribution<int> n_centers(1, dim == 2 ? 3 : 2);
    std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
    std::bernoulli_distribution widen(dim == 2 ? 0.5 : 0.25);
    std::vector<Simplex> gens;
    const int centers = n_centers(rng);
    for (int c = 0; c < centers; ++c) {
      const Vertex v = vertices[pick(rng)];
      if (widen(rng)) {
        for (const auto& s : k.simplices())
          if (s.contains(v)) gens.push_back(s);
      } else {
        gens.push_back(Simplex{v});
      }
    }
    std::normal_distribution<double> gauss;
    std::vector<double> dir(static_cast<std::size_t>(dim) + 1);
    for (double& x : dir) x = gauss(rng);
    try {
      const auto l = close_faces(gens, k.n_vertices());
      const auto dn = derived_neighborhood_detailed(k, l, dim);
      if (dn.decomposition.v.empty()) throw ConstructionError("V is empty");
      auto out = from_neighborhood(dn, base.coords, dir);
      require_perfect_morse(out.dec, out.f);
      out.label = "random-" + std::to_string(dim) + "-" + std::to_string(seed);
      out.seed = seed;
      return out;
    } catch (const Error& e) {
      last_failure = e.what();
    }
  }
  throw ConstructionError("no valid decomposition after " + std::to_string(max_attempts) +
                          " attempts: " + last_failure);
}

std::vector<int> EuclideanRegion::point_of(Vertex v) const {
  std::vector<int> p;
  for (int extent : shape) {
    p.push_back(v % extent);
    v /= extent;
  }
  return p;
}

Vertex EuclideanRegion::vertex_at(const std::vector<int>& point) const {
  Vertex id = 0, stride = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    id += point[i] * stride;
    stride *= shape[i];
  }
  return id;
}

namespace {

// Kuhn simplices of the unit cube with lower corner `corner`, one per
// ordering of the axes, over points indexed row-major with axis 0 fastest.
void kuhn_cube(const std::vector<int>& shape, const std::vector<int>& corner,
               std::vector<Simplex>& out) {
  std::vector<int> order(shape.size());
  std::iota(order.begin(), order.end(), 0);
  auto id = [&](const std::vector<int>& p) {
    Vertex v = 0, stride = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      v += p[i] * stride;
      stride *= shape[i];
    }
    return v;
  };
  do {
    auto p = corner;
    std::vector<Vertex> vs{id(p)};
    for (int axis : order) {
      ++p[static_cast<std::size_t>(axis)];
      vs.push_back(id(p));
    }
    out.emplace_back(std::move(vs));
  } while (std::next_permutation(order.begin(), order.end()));
}

std::string point_text(const std::vector<int>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

// Marked cells given by their lower corners in grid coordinates (margin
// already added).
EuclideanRegion build_region(std::vector<int> shape, const std::vector<std::vector<int>>& cells,
                             int height_axis, std::string label) {
  if (cells.empty()) throw PreconditionError("the mask marks no cells");
  EuclideanRegion r;
  r.shape = std::move(shape);
  r.n = static_cast<int>(r.shape.size()) - 1;
  r.height_axis = height_axis;
  r.label = std::move(label);
  std::vector<Simplex> tops;
  for (const auto& c : cells) kuhn_cube(r.shape, c, tops);
  const std::size_t n_points = static_cast<std::size_t>(
      std::accumulate(r.shape.begin(), r.shape.end(), 1, std::multiplies<int>()));
  r.a = close_faces(tops, n_points);

  // The chosen coordinate, ties broken by the others in a fixed order. Every
  // value is exact in double precision.
  const double base = *std::max_element(r.shape.begin(), r.shape.end()) + 1.0;
  std::vector<double> values(n_points);
  for (std::size_t v = 0; v < n_points; ++v) {
    const auto p = r.point_of(static_cast<Vertex>(v));
    double x = p[static_cast<std::size_t>(height_axis)], scale = 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (static_cast<int>(i) == height_axis) continue;
      scale /= base;
      x += p[i] * scale;
    }
    values[v] = x;
  }
  r.e = normalize(VertexFunction(std::move(values)));

  const auto boundary = boundary_of_pure_complex(r.a, r.n);
  if (!is_closed_manifold(boundary, r.n)) {
    BettiVector sphere = BettiVector::from_dim0({r.n == 1 ? 2u : 1u});
    if (r.n > 1) sphere.set(r.n - 1, 1);
    for (Vertex v : boundary.vertices()) {
      const auto lk = boundary.link(v);
      if (betti(lk) != sphere || (r.n == 1 && lk.count(0) != 2))
        throw ConstructionError("region boundary pinches at grid point " +
                                point_text(r.point_of(v)));
    }
    throw ConstructionError("region boundary is not a closed manifold");
  }
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    out.push_back(line);
  }
  return out;
}

}  // namespace

EuclideanRegion terrain_region(const Mask2D& grid, char height_axis) {
  if (height_axis != 'x' && height_axis != 'y') throw PreconditionError("height axis must be x or y");
  if (grid.empty() || grid.front().empty()) throw PreconditionError("empty mask");
  const int rows = static_cast<int>(grid.size());
  const int cols = static_cast<int>(grid.front().size());
  std::vector<std::vector<int>> cells;
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(grid[static_cast<std::size_t>(r)].size()) != cols)
      throw MalformedInput("mask rows differ in length");
    for (int c = 0; c < cols; ++c)
      if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) cells.push_back({c + 1, r + 1});
  }
  return build_region({cols + 3, rows + 3}, cells, height_axis == 'x' ? 0 : 1, "terrain");
}

EuclideanRegion voxel_region(const Mask3D& voxels) {
  if (voxels.empty() || voxels.front().empty() || voxels.front().front().empty())
    throw PreconditionError("empty voxel mask");
  const int layers = static_cast<int>(voxels.size());
  const int rows = static_cast<int>(voxels.front().size());
  const int cols = static_cast<int>(voxels.front().front().size());
  std::vector<std::vector<int>> cells;
  for (int z = 0; z < layers; ++z) {
    const auto& layer = voxels[static_cast<std::size_t>(z)];
    if (static_cast<int>(layer.size()) != rows) throw MalformedInput("voxel layers differ in size");
    for (int r = 0; r < rows; ++r) {
      if (static_cast<int>(layer[static_cast<std::size_t>(r)].size()) != cols)
        throw MalformedInput("voxel rows differ in length");
      for (int c = 0; c < cols; ++c)
        if (layer[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) cells.push_back({c + 1, r + 1, z + 1});
    }
  }
  return build_region({cols + 3, rows + 3, layers + 3}, cells, 2, "voxels");
}

Mask2D parse_mask(const std::string& text) {
  Mask2D out;
  std::size_t n = 0;
  for (const auto& line : lines_of(text)) {
    ++n;
    if (line.empty()) continue;
    std::vector<bool> row;
    for (char ch : line) {
      if (ch != '0' && ch != '1')
        throw MalformedInput("line " + std::to_string(n) + ": mask characters must be 0 or 1");
      row.push_back(ch == '1');
    }
    if (!out.empty() && row.size() != out.front().size())
      throw MalformedInput("line " + std::to_string(n) + ": row length differs");
    out.push_back(std::move(row));
  }
  if (out.empty()) throw MalformedInput("mask is empty");
  return out;
}

Mask3D parse_voxel_mask(const std::string& text) {
  Mask3D out;
  std::string block;
  auto flush = [&] {
    if (block.empty()) return;
    out.push_back(parse_mask(block));
    if (out.back().size() != out.front().size() || out.back().front().size() != out.front().front().size())
      throw MalformedInput("voxel layer " + std::to_string(out.size()) + " differs in size");
    block.clear();
  };
  for (const auto& line : lines_of(text)) {
    if (line.empty()) {
      flush();
    } else {
      block += line + "\n";
    }
  }
  flush();
  if (out.empty()) throw MalformedInput("voxel mask is empty");
  return out;
}

Mask2D mask_from_heightmap(const std::string& csv, double sea_level) {
  Mask2D out;
  std::size_t n = 0;
  for (const auto& line : lines_of(csv)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    std::vector<bool> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      std::size_t used = 0;
      double h = 0;
      try {
        h = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0) throw MalformedInput("line " + std::to_string(n) + ": bad height '" + cell + "'");
      row.push_back(h > sea_level);
    }
    if (!out.empty() && row.size() != out.front().size())
      throw MalformedInput("line " + std::to_string(n) + ": row length differs");
    out.push_back(std::move(row));
  }
  if (out.empty()) throw MalformedInput("heightmap is empty");
  return out;
}

Compactification compactify(const EuclideanRegion& region) {
  // The box times [0, 1] in one more dimension; its boundary is a sphere
  // holding the box as the bottom face, with the same vertex ids there.
  auto shape = region.shape;
  shape.push_back(2);
  const std::size_t layer = region.e.size();
  std::vector<Simplex> tops;
  std::vector<int> corner(shape.size(), 0);
  std::function<void(std::size_t)> sweep = [&](std::size_t axis) {
    if (axis == shape.size()) {
      kuhn_cube(shape, corner, tops);
      return;
    }
    for (int i = 0; i + 1 < shape[axis]; ++i) {
      corner[axis] = i;
      sweep(axis + 1);
    }
  };
  sweep(0);
  const int dim = region.n + 1;
  const auto solid = close_faces(tops, 2 * layer);
  Compactification out;
  out.dec.ambient = boundary_of_pure_complex(solid, dim);
  out.dec.ambient_manifold_dim = dim;
  out.dec.u = region.a.with_n_vertices(2 * layer);
  std::vector<Simplex> rest;
  for (const auto& s : out.dec.ambient.of_dim(dim))
    if (!out.dec.u.contains(s)) rest.push_back(s);
  out.dec.v = close_faces(rest, 2 * layer);
  out.dec.m = complex_intersection(out.dec.u, out.dec.v);
  out.dec.validate();

  // The top face sits a little higher than the bottom face; the step is below
  // every gap between values so the extension stays generic and linear.
  auto sorted = region.e.values();
  std::sort(sorted.begin(), sorted.end());
  double gap = 1.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
  std::vector<double> g(2 * layer);
  for (std::size_t v = 0; v < layer; ++v) {
    g[v] = region.e.values()[v];
    g[v + layer] = region.e.values()[v] + gap / 2;
  }
  out.g = VertexFunction(std::move(g));
  return out;
}

}  // namespace shoreline
