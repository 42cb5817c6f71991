// Command line front end; talks to the library only through its C interface.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shoreline/shoreline.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPassed = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ok(shl_status s) {
  if (s != SHL_OK) throw Failure(std::string(shl_status_name(s)) + ": " + shl_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Complex = std::unique_ptr<shl_complex, Deleter<shl_complex, shl_complex_free>>;
using Values = std::unique_ptr<shl_values, Deleter<shl_values, shl_values_free>>;
using Diagram = std::unique_ptr<shl_diagram, Deleter<shl_diagram, shl_diagram_free>>;
using Instance = std::unique_ptr<shl_instance, Deleter<shl_instance, shl_instance_free>>;
using Region = std::unique_ptr<shl_region, Deleter<shl_region, shl_region_free>>;
using Report = std::unique_ptr<shl_report, Deleter<shl_report, shl_report_free>>;

std::string take(char* s) {
  std::string out(s);
  shl_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure("cannot write " + path.string());
  out << text;
}

Complex load_complex(const std::string& path) {
  shl_complex* k = nullptr;
  const auto text = read_input(path);
  if (shl_complex_parse(text.c_str(), &k) != SHL_OK)
    throw Failure(path + ": " + shl_last_error());
  return Complex(k);
}

Values load_values(const std::string& path) {
  shl_values* f = nullptr;
  const auto text = read_input(path);
  if (shl_values_parse(text.c_str(), &f) != SHL_OK) throw Failure(path + ": " + shl_last_error());
  return Values(f);
}

Diagram load_diagram(const std::string& path) {
  shl_diagram* d = nullptr;
  const auto text = read_input(path);
  if (shl_diagram_parse(text.c_str(), &d) != SHL_OK) throw Failure(path + ": " + shl_last_error());
  return Diagram(d);
}

struct Options {
  bool pretty = false;
  bool plot_csv = false;
  bool keep_diagonal = false;
  bool no_perturb = false;
  std::uint64_t seed = 0;
};

// Ties are broken by default, with a note on stderr.
void make_generic(shl_values* f, const Options& opt) {
  double epsilon = 0;
  ok(shl_values_make_generic(f, opt.no_perturb ? 0 : 1, &epsilon));
  if (epsilon > 0)
    std::cerr << "shoreline: values had ties, perturbed vertex i by i * " << epsilon
              << " (pass --no-perturb to refuse)\n";
}

void print_diagram(const shl_diagram* d, const Options& opt) {
  char* s = nullptr;
  const int keep = opt.keep_diagonal ? 1 : 0;
  if (opt.plot_csv)
    ok(shl_diagram_to_plot_csv(d, keep, &s));
  else if (opt.pretty)
    ok(shl_diagram_to_pretty(d, keep, &s));
  else
    ok(shl_diagram_to_json(d, keep, &s));
  std::cout << take(s);
}

int exit_code(shl_check_status s) {
  switch (s) {
    case SHL_CHECK_PASSED: return kExitPassed;
    case SHL_CHECK_VIOLATED: return kExitViolated;
    case SHL_CHECK_PRECONDITION_FAILED: return kExitError;
  }
  return kExitError;
}

// Text rendering of a report JSON document.
std::string report_text(const json& r) {
  std::ostringstream os;
  os << r["name"].get<std::string>() << ": " << r["status"].get<std::string>() << " ("
     << r["checked"].get<std::size_t>() << " checked, " << r["skipped"].get<std::size_t>()
     << " skipped)\n";
  if (!r["message"].get<std::string>().empty()) os << "  " << r["message"].get<std::string>() << "\n";
  for (const auto& d : r["details"]) {
    os << "  " << (d["mismatch"].get<bool>() ? "MISMATCH " : "") << "[" << d["space"].get<std::string>();
    if (!d["t"].is_null()) os << " t=" << d["t"].get<double>();
    os << "] " << d["relation"].get<std::string>();
    if (!d["expected"].get<std::string>().empty()) os << "\n    expected " << d["expected"].get<std::string>();
    if (!d["actual"].get<std::string>().empty())
      os << "\n    " << (d["mismatch"].get<bool>() ? "actual " : "") << d["actual"].get<std::string>();
    os << "\n";
  }
  return os.str();
}

int print_report(shl_report* r, const Options& opt) {
  char* s = nullptr;
  ok(shl_report_to_json(r, &s));
  const auto text = take(s);
  if (opt.pretty)
    std::cout << report_text(json::parse(text));
  else
    std::cout << text;
  return exit_code(shl_report_status(r));
}

struct InstanceArgs {
  std::string gen;
  int dim = 2;
  std::optional<std::uint64_t> seed;
  int p = 3, q = 3;
  std::string instance_dir;
  std::string complex, values, u, v;
  std::string mask, voxels, heightmap;
  double sea_level = 0;
  std::string height_axis = "y";
  int n = -1;
  std::optional<double> t;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("--gen", a.gen, "Generated instance")
      ->check(CLI::IsMember({"solid-torus", "annulus-cx", "random", "terrain"}));
  cmd->add_option("--dim", a.dim, "Ambient sphere dimension for --gen random")->check(CLI::Range(2, 3));
  cmd->add_option("--seed", a.seed, "Seed for --gen random");
  cmd->add_option("--p", a.p, "Sides of the first polygon of the solid torus");
  cmd->add_option("--q", a.q, "Sides of the second polygon of the solid torus");
  cmd->add_option("--instance", a.instance_dir, "Directory written by gen --out");
  cmd->add_option("--complex", a.complex, "Ambient complex file (region file for euclid)");
  cmd->add_option("--values", a.values, "Vertex values CSV");
  cmd->add_option("--u", a.u, "Complex file of U");
  cmd->add_option("--v", a.v, "Complex file of V");
  cmd->add_option("--mask", a.mask, "2D mask file");
  cmd->add_option("--voxels", a.voxels, "Voxel mask file");
  cmd->add_option("--heightmap", a.heightmap, "Heightmap CSV, land above --sea-level");
  cmd->add_option("--sea-level", a.sea_level, "Sea level for --heightmap");
  cmd->add_option("--height-axis", a.height_axis, "Height axis of a 2D mask")->check(CLI::IsMember({"x", "y"}));
  cmd->add_option("--n", a.n, "Boundary dimension of a region given by --complex");
  cmd->add_option("--t", a.t, "Single value for check betti");
}

Instance load_instance(const InstanceArgs& a, const Options& opt) {
  shl_instance* inst = nullptr;
  if (!a.gen.empty()) {
    if (a.gen == "solid-torus")
      ok(shl_gen_solid_torus(a.p, a.q, &inst));
    else if (a.gen == "annulus-cx")
      ok(shl_gen_annulus_cx(&inst));
    else if (a.gen == "random")
      ok(shl_gen_random(a.dim, a.seed.value_or(opt.seed), &inst));
    else
      throw Failure("--gen " + a.gen + " does not make a decomposition");
    return Instance(inst);
  }
  std::string complex = a.complex, values = a.values, u = a.u, v = a.v;
  if (!a.instance_dir.empty()) {
    const fs::path dir(a.instance_dir);
    if (complex.empty()) complex = (dir / "ambient.txt").string();
    if (values.empty()) values = (dir / "values.csv").string();
    if (u.empty()) u = (dir / "u.txt").string();
    if (v.empty()) v = (dir / "v.txt").string();
  }
  if (complex.empty() || values.empty() || u.empty() || v.empty())
    throw Failure("an instance needs --gen, --instance, or --complex, --values, --u and --v");
  auto ambient = load_complex(complex), cu = load_complex(u), cv = load_complex(v);
  auto f = load_values(values);
  make_generic(f.get(), opt);
  ok(shl_values_normalize(f.get()));
  ok(shl_instance_from_parts(ambient.get(), cu.get(), cv.get(), f.get(), &inst));
  return Instance(inst);
}

Region load_region(const InstanceArgs& a, const Options& opt) {
  shl_region* r = nullptr;
  const char axis = a.height_axis.at(0);
  if (!a.mask.empty())
    ok(shl_region_from_mask(read_input(a.mask).c_str(), axis, &r));
  else if (!a.voxels.empty())
    ok(shl_region_from_voxels(read_input(a.voxels).c_str(), &r));
  else if (!a.heightmap.empty())
    ok(shl_region_from_heightmap(read_input(a.heightmap).c_str(), a.sea_level, axis, &r));
  else if (!a.complex.empty() && !a.values.empty() && a.n >= 0) {
    auto k = load_complex(a.complex);
    auto e = load_values(a.values);
    make_generic(e.get(), opt);
    ok(shl_region_from_parts(k.get(), e.get(), a.n, &r));
  } else {
    throw Failure("a region needs --mask, --voxels, --heightmap, or --complex, --values and --n");
  }
  return Region(r);
}

int cmd_check(const std::string& theorem, const InstanceArgs& a, const Options& opt) {
  shl_report* r = nullptr;
  if (theorem == "counterexample") {
    ok(shl_check_counterexample(&r));
  } else if (theorem == "euclid") {
    auto region = load_region(a, opt);
    ok(shl_check_euclid(region.get(), &r));
  } else {
    auto inst = load_instance(a, opt);
    if (theorem == "betti")
      ok(shl_check_betti(inst.get(), a.t ? &*a.t : nullptr, &r));
    else if (theorem == "point-calculus")
      ok(shl_check_point_calculus(inst.get(), &r));
    else if (theorem == "land-water")
      ok(shl_check_land_water(inst.get(), &r));
    else if (theorem == "shore")
      ok(shl_check_shore(inst.get(), &r));
    else
      ok(shl_check_engine(inst.get(), a.seed.value_or(opt.seed), &r));
  }
  Report report(r);
  return print_report(report.get(), opt);
}

int cmd_diagram(const std::string& complex, const std::string& values, const std::string& restrict_to,
                const Options& opt) {
  auto k = load_complex(complex);
  auto f = load_values(values);
  make_generic(f.get(), opt);
  Complex sub;
  if (!restrict_to.empty()) sub = load_complex(restrict_to);
  shl_diagram* d = nullptr;
  ok(shl_diagram_compute(k.get(), f.get(), sub.get(), &d));
  Diagram dgm(d);
  print_diagram(dgm.get(), opt);
  return kExitPassed;
}

int cmd_corpus(int dim, int count, std::uint64_t seed, const Options& opt) {
  using Check = shl_status (*)(const shl_instance*, shl_report**);
  const std::vector<std::pair<std::string, Check>> checks = {
      {"betti-relations", [](const shl_instance* i, shl_report** r) { return shl_check_betti(i, nullptr, r); }},
      {"point-calculus", shl_check_point_calculus},
      {"land-and-water", shl_check_land_water},
      {"general-shore", shl_check_shore},
  };
  json rows = json::array();
  std::size_t generation_errors = 0, passed = 0, violated = 0, preconditions = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    json row;
    row["id"] = i;
    row["seed"] = s;
    shl_instance* raw = nullptr;
    if (shl_gen_random(dim, s, &raw) != SHL_OK) {
      ++generation_errors;
      row["generated"] = false;
      row["error"] = shl_last_error();
      rows.push_back(std::move(row));
      continue;
    }
    Instance inst(raw);
    row["generated"] = true;
    json results;
    auto record = [&](const std::string& name, shl_report* r) {
      Report report(r);
      const auto st = shl_report_status(report.get());
      results[name] = st == SHL_CHECK_PASSED ? "passed" : st == SHL_CHECK_VIOLATED ? "violated" : "precondition-failed";
      (st == SHL_CHECK_PASSED ? passed : st == SHL_CHECK_VIOLATED ? violated : preconditions)++;
    };
    for (const auto& [name, check] : checks) {
      shl_report* r = nullptr;
      ok(check(inst.get(), &r));
      record(name, r);
    }
    shl_report* r = nullptr;
    ok(shl_check_engine(inst.get(), s, &r));
    record("engine-invariants", r);
    row["checks"] = std::move(results);
    rows.push_back(std::move(row));
  }
  json summary;
  summary["instances"] = count;
  summary["generation_errors"] = generation_errors;
  summary["checks_passed"] = passed;
  summary["checks_violated"] = violated;
  summary["checks_precondition_failed"] = preconditions;
  if (opt.pretty) {
    std::cout << "dim " << dim << ", seeds " << seed << " to " << seed + static_cast<std::uint64_t>(count) - 1
              << "\n";
    for (const auto& row : rows) {
      std::cout << "  seed " << row["seed"].get<std::uint64_t>() << ":";
      if (!row["generated"].get<bool>()) {
        std::cout << " generation error: " << row["error"].get<std::string>() << "\n";
        continue;
      }
      for (const auto& [name, status] : row["checks"].items())
        std::cout << " " << name << "=" << status.get<std::string>();
      std::cout << "\n";
    }
    std::cout << "passed " << passed << ", violated " << violated << ", precondition failed "
              << preconditions << ", generation errors " << generation_errors << "\n";
  } else {
    json doc;
    doc["dim"] = dim;
    doc["count"] = count;
    doc["seed"] = seed;
    doc["instances"] = std::move(rows);
    doc["summary"] = std::move(summary);
    std::cout << doc.dump(2) << "\n";
  }
  if (violated > 0) return kExitViolated;
  if (generation_errors > 0 || preconditions > 0) return kExitError;
  return kExitPassed;
}

void write_instance(const shl_instance* inst, const fs::path& dir) {
  fs::create_directories(dir);
  auto part = [&](char which, const char* name) {
    shl_complex* k = nullptr;
    ok(shl_instance_part(inst, which, &k));
    Complex c(k);
    char* s = nullptr;
    ok(shl_complex_to_text(c.get(), &s));
    write_file(dir / name, take(s));
  };
  part('S', "ambient.txt");
  if (shl_instance_has_decomposition(inst)) {
    part('U', "u.txt");
    part('V', "v.txt");
    part('M', "m.txt");
  }
  shl_values* f = nullptr;
  ok(shl_instance_values(inst, &f));
  Values values(f);
  char* s = nullptr;
  ok(shl_values_to_csv(values.get(), &s));
  write_file(dir / "values.csv", take(s));
}

void write_region(const shl_region* region, const fs::path& dir) {
  fs::create_directories(dir);
  shl_complex* k = nullptr;
  char* s = nullptr;
  ok(shl_region_complex(region, &k));
  Complex a(k);
  ok(shl_complex_to_text(a.get(), &s));
  write_file(dir / "region.txt", take(s));
  ok(shl_region_boundary(region, &k));
  Complex b(k);
  ok(shl_complex_to_text(b.get(), &s));
  write_file(dir / "boundary.txt", take(s));
  shl_values* f = nullptr;
  ok(shl_region_values(region, &f));
  Values e(f);
  ok(shl_values_to_csv(e.get(), &s));
  write_file(dir / "values.csv", take(s));
}

int cmd_gen(const std::string& kind, const InstanceArgs& a, const std::string& out, const Options& opt) {
  char* info = nullptr;
  if (kind == "terrain") {
    auto region = load_region(a, opt);
    if (!out.empty()) write_region(region.get(), out);
    ok(shl_region_info_json(region.get(), &info));
  } else {
    shl_instance* raw = nullptr;
    if (kind == "sphere")
      ok(shl_gen_sphere(a.dim, &raw));
    else if (kind == "solid-torus")
      ok(shl_gen_solid_torus(a.p, a.q, &raw));
    else if (kind == "annulus-cx")
      ok(shl_gen_annulus_cx(&raw));
    else
      ok(shl_gen_random(a.dim, a.seed.value_or(opt.seed), &raw));
    Instance inst(raw);
    if (!out.empty()) write_instance(inst.get(), out);
    ok(shl_instance_info_json(inst.get(), &info));
  }
  std::cout << take(info);
  return kExitPassed;
}

int cmd_transform(const std::string& op, const std::string& file, const std::string& file2, int n,
                  double lo, double hi, const Options& opt) {
  auto d = load_diagram(file);
  shl_diagram* out = nullptr;
  if (op == "reflect") {
    ok(shl_diagram_reflect(d.get(), n, &out));
  } else if (op == "cascade") {
    ok(shl_diagram_cascade(d.get(), lo, hi, &out, nullptr));
  } else if (op == "reduce") {
    ok(shl_diagram_reduce(d.get(), &out));
  } else {
    auto other = load_diagram(file2);
    ok(shl_diagram_union(d.get(), other.get(), &out));
  }
  Diagram result(out);
  print_diagram(result.get(), opt);
  return kExitPassed;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("SHORELINE_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Failure(std::string("SHORELINE_SEED is not a number: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended persistence diagrams and shore theorems over Z2", "shoreline"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::optional<std::uint64_t> seed;
  app.add_flag("--pretty", opt.pretty, "Aligned text instead of JSON");
  app.add_flag("--emit-plot-csv", opt.plot_csv, "Diagram as x, y, dim, subdiagram CSV");
  app.add_flag("--keep-diagonal", opt.keep_diagonal, "Keep diagonal dots in diagram output");
  app.add_flag("--no-perturb", opt.no_perturb, "Fail on tied values instead of perturbing");
  app.add_option("--global-seed", seed, "Default seed, overrides SHORELINE_SEED");

  auto* diagram = app.add_subcommand("diagram", "Extended persistence diagram of a function");
  std::string complex_file, values_file, restrict_file;
  diagram->add_option("complex", complex_file, "Complex file")->required();
  diagram->add_option("values", values_file, "Vertex values CSV")->required();
  diagram->add_option("--restrict", restrict_file, "Subcomplex to restrict to");

  auto* check = app.add_subcommand("check", "Verify a theorem on an instance");
  std::string theorem;
  InstanceArgs check_args;
  check->add_option("theorem", theorem, "Theorem to check")
      ->required()
      ->check(CLI::IsMember(
          {"betti", "point-calculus", "land-water", "shore", "euclid", "counterexample", "engine"}));
  add_instance_options(check, check_args);

  auto* corpus = app.add_subcommand("corpus", "Run every check on random decompositions");
  int corpus_dim = 2, corpus_count = 0;
  std::optional<std::uint64_t> corpus_seed;
  corpus->add_option("--dim", corpus_dim, "Ambient sphere dimension")->check(CLI::Range(2, 3));
  corpus->add_option("--count", corpus_count, "Number of instances")->required()->check(CLI::PositiveNumber);
  corpus->add_option("--seed", corpus_seed, "First seed");

  auto* transform = app.add_subcommand("transform", "Apply a diagram operation");
  transform->require_subcommand(1);
  std::string t_file = "-", t_file2;
  int t_n = 0;
  double t_lo = 0, t_hi = 1;
  auto* t_reflect = transform->add_subcommand("reflect", "Reflect across the diagonal");
  t_reflect->add_option("--n", t_n, "Manifold dimension")->required();
  t_reflect->add_option("file", t_file, "Diagram file, - for stdin");
  auto* t_cascade = transform->add_subcommand("cascade", "Replace the extreme dots by the cascade");
  t_cascade->add_option("--lo", t_lo, "Lower end");
  t_cascade->add_option("--hi", t_hi, "Upper end");
  t_cascade->add_option("file", t_file, "Diagram file, - for stdin");
  auto* t_reduce = transform->add_subcommand("reduce", "Reduced diagram");
  t_reduce->add_option("file", t_file, "Diagram file, - for stdin");
  auto* t_union = transform->add_subcommand("union", "Disjoint union");
  t_union->add_option("file2", t_file2, "Second diagram file")->required();
  t_union->add_option("file", t_file, "First diagram file, - for stdin");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  InstanceArgs gen_args;
  std::string gen_out;
  auto add_out = [&](CLI::App* c) { c->add_option("--out", gen_out, "Directory for the instance files"); };
  auto* g_sphere = gen->add_subcommand("sphere", "Cross-polytope sphere with a height");
  g_sphere->add_option("--dim", gen_args.dim, "Sphere dimension")->check(CLI::Range(1, 4));
  add_out(g_sphere);
  auto* g_torus = gen->add_subcommand("solid-torus", "S3 split into two solid tori");
  g_torus->add_option("--p", gen_args.p, "Sides of the first polygon");
  g_torus->add_option("--q", gen_args.q, "Sides of the second polygon");
  add_out(g_torus);
  auto* g_annulus = gen->add_subcommand("annulus-cx", "S2 split into a band and two caps");
  add_out(g_annulus);
  auto* g_random = gen->add_subcommand("random", "Random decomposition of a sphere");
  g_random->add_option("--dim", gen_args.dim, "Ambient sphere dimension")->check(CLI::Range(2, 3));
  g_random->add_option("--seed", gen_args.seed, "Seed");
  add_out(g_random);
  auto* g_terrain = gen->add_subcommand("terrain", "Region of a grid from a mask");
  g_terrain->add_option("--mask", gen_args.mask, "2D mask file");
  g_terrain->add_option("--voxels", gen_args.voxels, "Voxel mask file");
  g_terrain->add_option("--heightmap", gen_args.heightmap, "Heightmap CSV");
  g_terrain->add_option("--sea-level", gen_args.sea_level, "Sea level for --heightmap");
  g_terrain->add_option("--height-axis", gen_args.height_axis, "Height axis")->check(CLI::IsMember({"x", "y"}));
  add_out(g_terrain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    opt.seed = seed ? *seed : default_seed();
    if (diagram->parsed()) return cmd_diagram(complex_file, values_file, restrict_file, opt);
    if (check->parsed()) return cmd_check(theorem, check_args, opt);
    if (corpus->parsed()) return cmd_corpus(corpus_dim, corpus_count, corpus_seed.value_or(opt.seed), opt);
    if (transform->parsed()) {
      const std::string op = t_reflect->parsed()   ? "reflect"
                             : t_cascade->parsed() ? "cascade"
                             : t_reduce->parsed()  ? "reduce"
                                                   : "union";
      return cmd_transform(op, t_file, t_file2, t_n, t_lo, t_hi, opt);
    }
    for (auto* sub : gen->get_subcommands())
      if (sub->parsed()) return cmd_gen(sub->get_name(), gen_args, gen_out, opt);
  } catch (const std::exception& e) {
    std::cerr << "shoreline: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
