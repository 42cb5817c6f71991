#include "shoreline/shoreline.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "shoreline/error.hpp"
#include "shoreline/serialize.hpp"
#include "shoreline/theorems.hpp"

using namespace shoreline;
using json = nlohmann::ordered_json;

struct shl_complex {
  SimplicialComplex k;
};
struct shl_values {
  VertexFunction f;
};
struct shl_diagram {
  PersistenceDiagram d;
};
struct shl_instance {
  GeneratedInstance g;
  bool has_decomposition = true;
  std::optional<AnnulusCounterexample> annulus;
};
struct shl_region {
  EuclideanRegion r;
  bool embedded = true;
};
struct shl_report {
  CheckReport r;
};

namespace {

thread_local std::string last_error;

template <class F>
shl_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SHL_OK;
  } catch (const MalformedInput& e) {
    last_error = e.what();
    return SHL_MALFORMED_INPUT;
  } catch (const GenericityError& e) {
    last_error = e.what();
    return SHL_GENERICITY;
  } catch (const ConstructionError& e) {
    last_error = e.what();
    return SHL_CONSTRUCTION;
  } catch (const PreconditionError& e) {
    last_error = e.what();
    return SHL_PRECONDITION;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return SHL_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SHL_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SHL_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T, class... A>
T* make(A&&... args) {
  return new T{std::forward<A>(args)...};
}

// Theorem checks need a decomposition and turn a failed precondition into a
// report instead of an error.
template <class F>
shl_status run_check(const shl_instance* inst, const char* name, shl_report** out, F&& check) {
  return guard([&] {
    require(inst, "instance");
    require(out, "out");
    CheckReport r;
    try {
      if (!inst->has_decomposition) throw PreconditionError("instance has no decomposition");
      r = check(inst->g);
    } catch (const PreconditionError& e) {
      r = CheckReport{};
      r.name = name;
      r.precondition(e.what());
    } catch (const GenericityError& e) {
      r = CheckReport{};
      r.name = name;
      r.precondition(e.what());
    }
    *out = make<shl_report>(std::move(r));
  });
}

// Precondition of the checks that compare against oracle Betti numbers.
void require_perfect_morse(const GeneratedInstance& g) {
  if (auto check = check_pl_perfect_morse(g.dec.ambient, g.f, g.dec.ambient_manifold_dim); !check)
    throw PreconditionError("f is not perfect Morse on the sphere: " + check.reason);
}

SimplicialComplex widened(const SimplicialComplex& k, std::size_t n_vertices) {
  if (k.n_vertices() > n_vertices)
    throw MalformedInput("subcomplex uses vertex ids outside the ambient complex");
  return k.with_n_vertices(n_vertices);
}

}  // namespace

extern "C" {

const char* shl_version(void) { return "0.1.0"; }
const char* shl_last_error(void) { return last_error.c_str(); }

const char* shl_status_name(shl_status status) {
  switch (status) {
    case SHL_OK: return "ok";
    case SHL_MALFORMED_INPUT: return "malformed input";
    case SHL_GENERICITY: return "genericity";
    case SHL_CONSTRUCTION: return "construction";
    case SHL_PRECONDITION: return "precondition";
    case SHL_INVALID_ARGUMENT: return "invalid argument";
    case SHL_INTERNAL: return "internal";
  }
  return "unknown";
}

void shl_string_free(char* s) { std::free(s); }

shl_status shl_complex_parse(const char* text, shl_complex** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = make<shl_complex>(parse_complex(text));
  });
}

shl_status shl_complex_to_text(const shl_complex* k, char** out) {
  return guard([&] {
    require(k, "complex");
    require(out, "out");
    *out = copy_string(complex_to_text(k->k));
  });
}

int shl_complex_dim(const shl_complex* k) { return k ? k->k.dim() : -1; }
uint64_t shl_complex_size(const shl_complex* k) { return k ? k->k.size() : 0; }
void shl_complex_free(shl_complex* k) { delete k; }

shl_status shl_values_parse(const char* text, shl_values** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = make<shl_values>(parse_values(text));
  });
}

shl_status shl_values_to_csv(const shl_values* f, char** out) {
  return guard([&] {
    require(f, "values");
    require(out, "out");
    *out = copy_string(values_to_csv(f->f));
  });
}

shl_status shl_values_make_generic(shl_values* f, int allow_perturb, double* epsilon) {
  return guard([&] {
    require(f, "values");
    double used = 0;
    if (!f->f.is_generic()) {
      if (!allow_perturb) throw GenericityError("values have ties and perturbation is off");
      used = std::ldexp(f->f.max() - f->f.min(), -30);
      f->f = perturb(f->f);
    }
    if (epsilon) *epsilon = used;
  });
}

shl_status shl_values_normalize(shl_values* f) {
  return guard([&] {
    require(f, "values");
    f->f = normalize(f->f);
  });
}

void shl_values_free(shl_values* f) { delete f; }

shl_status shl_diagram_compute(const shl_complex* k, const shl_values* f,
                               const shl_complex* restrict_to, shl_diagram** out) {
  return guard([&] {
    require(k, "complex");
    require(f, "values");
    require(out, "out");
    if (!restrict_to) {
      *out = make<shl_diagram>(compute_diagram(k->k, f->f, {}, "complex"));
      return;
    }
    if (restrict_to->k.empty()) throw PreconditionError("restriction is empty");
    const auto sub = widened(restrict_to->k, k->k.n_vertices());
    if (!sub.is_subcomplex_of(k->k)) throw PreconditionError("restriction is not a subcomplex");
    *out = make<shl_diagram>(compute_diagram(sub, f->f, {}, "restricted"));
  });
}

shl_status shl_diagram_parse(const char* text, shl_diagram** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = make<shl_diagram>(diagram_from_json(text));
  });
}

shl_status shl_diagram_to_json(const shl_diagram* d, int keep_diagonal, char** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = copy_string(diagram_to_json(d->d, keep_diagonal != 0));
  });
}

shl_status shl_diagram_to_pretty(const shl_diagram* d, int keep_diagonal, char** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = copy_string(diagram_to_pretty(d->d, keep_diagonal != 0));
  });
}

shl_status shl_diagram_to_plot_csv(const shl_diagram* d, int keep_diagonal, char** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = copy_string(diagram_to_plot_csv(d->d, keep_diagonal != 0));
  });
}

shl_status shl_diagram_reflect(const shl_diagram* d, int n, shl_diagram** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = make<shl_diagram>(reflect(d->d, n));
  });
}

shl_status shl_diagram_cascade(const shl_diagram* d, double lo, double hi, shl_diagram** out,
                               char** report_json) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    auto result = cascade(d->d, lo, hi);
    char* report = report_json ? copy_string(cascade_report_to_json(result.report)) : nullptr;
    *out = make<shl_diagram>(std::move(result.diagram));
    if (report_json) *report_json = report;
  });
}

shl_status shl_diagram_reduce(const shl_diagram* d, shl_diagram** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = make<shl_diagram>(reduced_diagram(d->d));
  });
}

shl_status shl_diagram_union(const shl_diagram* a, const shl_diagram* b, shl_diagram** out) {
  return guard([&] {
    require(a, "diagram");
    require(b, "diagram");
    require(out, "out");
    *out = make<shl_diagram>(disjoint_union(a->d, b->d));
  });
}

shl_status shl_diagram_equal(const shl_diagram* a, const shl_diagram* b, int* equal,
                             char** report_json) {
  return guard([&] {
    require(a, "diagram");
    require(b, "diagram");
    require(equal, "equal");
    const auto cmp = multiset_equal(a->d, b->d, 0.0, true);
    if (report_json) *report_json = copy_string(comparison_to_json(cmp));
    *equal = cmp.equal ? 1 : 0;
  });
}

uint64_t shl_diagram_size(const shl_diagram* d) { return d ? d->d.size() : 0; }
void shl_diagram_free(shl_diagram* d) { delete d; }

shl_status shl_gen_sphere(int dim, shl_instance** out) {
  return guard([&] {
    require(out, "out");
    auto sphere = cross_polytope_sphere(dim);
    GeneratedInstance g;
    g.dec.ambient = std::move(sphere.complex);
    g.dec.ambient_manifold_dim = dim;
    g.n = dim - 1;
    g.f = height_function(sphere.coords, dim, {0.1, 0.01});
    g.coords = std::move(sphere.coords);
    g.label = "sphere-" + std::to_string(dim);
    *out = make<shl_instance>(std::move(g), false, std::nullopt);
  });
}

shl_status shl_gen_solid_torus(int p, int q, shl_instance** out) {
  return guard([&] {
    require(out, "out");
    *out = make<shl_instance>(solid_torus_decomposition(p, q), true, std::nullopt);
  });
}

shl_status shl_gen_annulus_cx(shl_instance** out) {
  return guard([&] {
    require(out, "out");
    auto cx = annulus_counterexample();
    *out = make<shl_instance>(cx.instance, true, cx);
  });
}

shl_status shl_gen_random(int dim, uint64_t seed, shl_instance** out) {
  return guard([&] {
    require(out, "out");
    *out = make<shl_instance>(random_decomposition(dim, seed), true, std::nullopt);
  });
}

shl_status shl_instance_from_parts(const shl_complex* ambient, const shl_complex* u,
                                   const shl_complex* v, const shl_values* f, shl_instance** out) {
  return guard([&] {
    require(ambient, "ambient");
    require(u, "u");
    require(v, "v");
    require(f, "values");
    require(out, "out");
    GeneratedInstance g;
    const std::size_t nv = ambient->k.n_vertices();
    g.dec.ambient = ambient->k;
    g.dec.u = widened(u->k, nv);
    g.dec.v = widened(v->k, nv);
    g.dec.m = complex_intersection(g.dec.u, g.dec.v);
    g.dec.ambient_manifold_dim = ambient->k.dim();
    g.dec.validate();
    g.n = g.dec.n();
    g.f = f->f;
    require_generic(g.dec.ambient, g.f);
    g.label = "files";
    *out = make<shl_instance>(std::move(g), true, std::nullopt);
  });
}

shl_status shl_instance_part(const shl_instance* inst, char part, shl_complex** out) {
  return guard([&] {
    require(inst, "instance");
    require(out, "out");
    const Part p = parse_part(std::string(1, part));
    if (p != Part::S && !inst->has_decomposition)
      throw PreconditionError("instance has no decomposition");
    *out = make<shl_complex>(part_of(inst->g.dec, p));
  });
}

shl_status shl_instance_values(const shl_instance* inst, shl_values** out) {
  return guard([&] {
    require(inst, "instance");
    require(out, "out");
    *out = make<shl_values>(inst->g.f);
  });
}

int shl_instance_has_decomposition(const shl_instance* inst) {
  return inst && inst->has_decomposition ? 1 : 0;
}

shl_status shl_instance_info_json(const shl_instance* inst, char** out) {
  return guard([&] {
    require(inst, "instance");
    require(out, "out");
    const auto& g = inst->g;
    json doc;
    doc["label"] = g.label;
    doc["n"] = g.n;
    doc["seed"] = g.seed ? json(*g.seed) : json(nullptr);
    json sizes;
    sizes["S"] = g.dec.ambient.size();
    if (inst->has_decomposition) {
      sizes["U"] = g.dec.u.size();
      sizes["V"] = g.dec.v.size();
      sizes["M"] = g.dec.m.size();
    }
    doc["simplices"] = sizes;
    doc["vertices"] = g.dec.ambient.vertices().size();
    if (g.marked_value) doc["marked_value"] = *g.marked_value;
    if (inst->annulus) {
      const auto& cx = *inst->annulus;
      doc["a"] = cx.a;
      doc["b"] = cx.b;
      doc["c"] = cx.c;
      doc["d"] = cx.d;
    }
    *out = copy_string(doc.dump(2) + "\n");
  });
}

void shl_instance_free(shl_instance* inst) { delete inst; }

namespace {

char parse_axis(char axis) {
  if (axis != 'x' && axis != 'y') throw std::invalid_argument("height axis must be x or y");
  return axis;
}

}  // namespace

shl_status shl_region_from_mask(const char* text, char height_axis, shl_region** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = make<shl_region>(terrain_region(parse_mask(text), parse_axis(height_axis)));
  });
}

shl_status shl_region_from_voxels(const char* text, shl_region** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = make<shl_region>(voxel_region(parse_voxel_mask(text)));
  });
}

shl_status shl_region_from_heightmap(const char* csv, double sea_level, char height_axis,
                                     shl_region** out) {
  return guard([&] {
    require(csv, "csv");
    require(out, "out");
    auto region = terrain_region(mask_from_heightmap(csv, sea_level), parse_axis(height_axis));
    region.label = "heightmap";
    *out = make<shl_region>(std::move(region));
  });
}

shl_status shl_region_from_parts(const shl_complex* a, const shl_values* e, int n,
                                 shl_region** out) {
  return guard([&] {
    require(a, "complex");
    require(e, "values");
    require(out, "out");
    EuclideanRegion region;
    region.a = a->k;
    region.e = e->f;
    region.n = n;
    region.label = "files";
    *out = make<shl_region>(std::move(region), false);
  });
}

shl_status shl_region_complex(const shl_region* r, shl_complex** out) {
  return guard([&] {
    require(r, "region");
    require(out, "out");
    *out = make<shl_complex>(r->r.a);
  });
}

shl_status shl_region_boundary(const shl_region* r, shl_complex** out) {
  return guard([&] {
    require(r, "region");
    require(out, "out");
    *out = make<shl_complex>(boundary_of_pure_complex(r->r.a, r->r.n));
  });
}

shl_status shl_region_values(const shl_region* r, shl_values** out) {
  return guard([&] {
    require(r, "region");
    require(out, "out");
    *out = make<shl_values>(r->r.e);
  });
}

shl_status shl_region_info_json(const shl_region* r, char** out) {
  return guard([&] {
    require(r, "region");
    require(out, "out");
    json doc;
    doc["label"] = r->r.label;
    doc["n"] = r->r.n;
    doc["shape"] = r->r.shape;
    doc["simplices"] = r->r.a.size();
    doc["vertices"] = r->r.a.vertices().size();
    *out = copy_string(doc.dump(2) + "\n");
  });
}

void shl_region_free(shl_region* r) { delete r; }

shl_status shl_check_betti(const shl_instance* inst, const double* t, shl_report** out) {
  std::optional<double> at;
  if (t) at = *t;
  return run_check(inst, "betti-relations", out, [&](const GeneratedInstance& g) {
    require_perfect_morse(g);
    ShoreOracle oracle(g.dec, g.f);
    return at ? check_betti_relations(oracle, *at) : check_betti_relations(oracle);
  });
}

shl_status shl_check_point_calculus(const shl_instance* inst, shl_report** out) {
  return run_check(inst, "point-calculus", out, [](const GeneratedInstance& g) {
    ShoreOracle oracle(g.dec, g.f);
    return check_point_calculus(oracle);
  });
}

shl_status shl_check_land_water(const shl_instance* inst, shl_report** out) {
  return run_check(inst, "land-and-water", out,
                   [](const GeneratedInstance& g) { return check_land_and_water(g.dec, g.f); });
}

shl_status shl_check_shore(const shl_instance* inst, shl_report** out) {
  return run_check(inst, "general-shore", out,
                   [](const GeneratedInstance& g) { return check_general_shore(g.dec, g.f); });
}

shl_status shl_check_engine(const shl_instance* inst, uint64_t seed, shl_report** out) {
  return run_check(inst, "engine-invariants", out, [&](const GeneratedInstance& g) {
    return check_engine_invariants(g.dec, g.f, seed);
  });
}

shl_status shl_check_euclid(const shl_region* r, shl_report** out) {
  return guard([&] {
    require(r, "region");
    require(out, "out");
    CheckReport report;
    try {
      report = r->embedded ? check_euclidean_shore(r->r)
                           : check_euclidean_shore(r->r.a, r->r.e, r->r.n);
    } catch (const PreconditionError& e) {
      report = CheckReport{};
      report.name = "euclidean-shore";
      report.precondition(e.what());
    }
    *out = make<shl_report>(std::move(report));
  });
}

shl_status shl_check_counterexample(shl_report** out) {
  return guard([&] {
    require(out, "out");
    *out = make<shl_report>(demonstrate_counterexample());
  });
}

shl_check_status shl_report_status(const shl_report* r) {
  if (!r) return SHL_CHECK_PRECONDITION_FAILED;
  switch (r->r.status) {
    case CheckStatus::Passed: return SHL_CHECK_PASSED;
    case CheckStatus::Violated: return SHL_CHECK_VIOLATED;
    case CheckStatus::PreconditionFailed: return SHL_CHECK_PRECONDITION_FAILED;
  }
  return SHL_CHECK_PRECONDITION_FAILED;
}

shl_status shl_report_to_json(const shl_report* r, char** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(check_report_to_json(r->r));
  });
}

void shl_report_free(shl_report* r) { delete r; }

}  // extern "C"
