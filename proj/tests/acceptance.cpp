// Runs every acceptance criterion once and prints one PASS or FAIL line each.
// An optional argument names the command line binary for the determinism
// part of the engine criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "shoreline/theorems.hpp"

using namespace shoreline;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;
  std::string summary;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    problems.push_back(what);
  }
  void require(const CheckReport& r, const std::string& where) {
    std::string what = where + ": " + r.name + " " + status_name(r.status);
    if (!r.message.empty()) what += " (" + r.message + ")";
    for (const auto& d : r.details)
      if (d.mismatch) {
        what += "; " + d.relation + " expected " + d.expected + " got " + d.actual;
        break;
      }
    require(r.passed(), what);
  }
};

struct Corpus {
  std::vector<GeneratedInstance> instances;
  std::vector<PartDiagrams> diagrams;
};

void report(int number, const std::string& name, const Outcome& o, double seconds) {
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << number << " " << name;
  if (!o.summary.empty()) std::cout << ": " << o.summary;
  std::cout << " [" << static_cast<int>(seconds * 1000) << " ms]\n";
  for (std::size_t i = 0; i < o.problems.size() && i < 5; ++i) std::cout << "    " << o.problems[i] << "\n";
  std::cout.flush();
}

std::string run_command(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<failed to start>";
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

std::string tuple(const BettiVector& b) { return b.to_string(); }

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool all = true;
  int number = 0;
  auto run = [&](const std::string& name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    report(++number, name, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  };

  Corpus corpus;
  std::vector<ShoreOracle> oracles;
  const auto setup_start = std::chrono::steady_clock::now();
  corpus.instances.push_back(solid_torus_decomposition());
  corpus.instances.push_back(support::disk_disk());
  for (std::uint64_t s = 1; s <= 20; ++s) corpus.instances.push_back(random_decomposition(2, s));
  for (std::uint64_t s = 1; s <= 5; ++s) corpus.instances.push_back(random_decomposition(3, s));
  const auto cx = annulus_counterexample();
  // The annulus joins the corpus for the diagram theorems only.
  const std::size_t betti_count = corpus.instances.size();
  corpus.instances.push_back(cx.instance);
  for (const auto& g : corpus.instances) corpus.diagrams.push_back(part_diagrams(g.dec, g.f));
  for (std::size_t i = 0; i < betti_count; ++i)
    oracles.emplace_back(corpus.instances[i].dec, corpus.instances[i].f);
  std::cout << "corpus: " << corpus.instances.size() << " instances built in "
            << static_cast<int>(std::chrono::duration<double>(std::chrono::steady_clock::now() - setup_start).count() * 1000)
            << " ms\n";
  auto label = [&](std::size_t i) {
    const auto& g = corpus.instances[i];
    return g.label.empty() ? "instance " + std::to_string(i) : g.label;
  };

  run("torus worked example", [&](Outcome& o) {
    const auto& g = corpus.instances[0];
    auto& oracle = oracles[0];
    const double t = g.marked_value.value();
    const auto& s = oracle.at(t);
    const auto m = oracle.global(Part::M), u = oracle.global(Part::U);
    o.require(m == BettiVector::from_dim0({1, 2, 1}), "b(M) = " + tuple(m));
    o.require(u == BettiVector::from_dim0({1, 1, 0, 0}), "b(U) = " + tuple(u));
    o.require(s.sub[2] == BettiVector::from_dim0({1, 1, 0}), "b(M_t) = " + tuple(s.sub[2]));
    o.require(s.rel[2] == BettiVector::from_dim0({0, 1, 1}), "b(M,M^t) = " + tuple(s.rel[2]));
    o.require(s.sub[0] == BettiVector::from_dim0({1, 0, 0, 0}), "b(U_t) = " + tuple(s.sub[0]));
    o.require(s.rel[0] == BettiVector::from_dim0({0, 1, 0, 0}), "b(U,U^t) = " + tuple(s.rel[0]));
    o.summary = "t = " + std::to_string(t) + ", b(M) " + tuple(m) + ", b(M_t) " + tuple(s.sub[2]) +
                ", b(M,M^t) " + tuple(s.rel[2]) + ", b(U_t) " + tuple(s.sub[0]) + ", b(U,U^t) " +
                tuple(s.rel[0]);
  });

  run("Betti relations at every regular value", [&](Outcome& o) {
    std::size_t checked = 0, values = 0;
    for (std::size_t i = 0; i < betti_count; ++i) {
      const auto r = check_betti_relations(oracles[i]);
      o.require(r, label(i));
      checked += r.checked;
      values += oracles[i].regular_values().size();
    }
    o.summary = std::to_string(betti_count) + " instances, " + std::to_string(values) +
                " regular values, " + std::to_string(checked) + " relations";
  });

  run("point calculus", [&](Outcome& o) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < betti_count; ++i) {
      const auto r = check_point_calculus(oracles[i], corpus.diagrams[i]);
      o.require(r, label(i));
      checked += r.checked;
    }
    o.summary = std::to_string(betti_count) + " instances, " + std::to_string(checked) + " rectangle counts";
  });

  run("land and water", [&](Outcome& o) {
    for (std::size_t i = 0; i < corpus.instances.size(); ++i)
      o.require(check_land_and_water(corpus.instances[i].dec, corpus.instances[i].f, corpus.diagrams[i]),
                label(i));
    o.summary = std::to_string(corpus.instances.size()) + " instances";
  });

  run("general shore and extrema", [&](Outcome& o) {
    std::size_t latitudinal = 0;
    for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
      const auto& g = corpus.instances[i];
      o.require(check_general_shore(g.dec, g.f, corpus.diagrams[i]), label(i));
      latitudinal += latitudinal_components(g.dec, g.f).manifolds.size();
    }
    const auto lat = latitudinal_components(cx.instance.dec, cx.instance.f);
    o.require(lat.manifolds.size() == 2, "annulus has " + std::to_string(lat.manifolds.size()) + " latitudes");
    o.summary = std::to_string(corpus.instances.size()) + " instances, " + std::to_string(latitudinal) +
                " latitudinal manifolds in total";
  });

  run("figure five counterexample", [&](Outcome& o) {
    const auto r = demonstrate_counterexample(cx);
    o.require(r, "annulus");
    std::ostringstream s;
    s << "a " << cx.a << ", b " << cx.b << ", c " << cx.c << ", d " << cx.d;
    o.summary = s.str();
  });

  run("euclidean shore", [&](Outcome& o) {
    o.require(check_euclidean_shore(terrain_region(parse_mask("11\n11\n"))), "disk");
    o.require(check_euclidean_shore(terrain_region(parse_mask("111\n101\n111\n"))), "annulus");
    o.require(check_euclidean_shore(voxel_region(parse_voxel_mask("11\n11\n\n11\n11\n"))), "voxel ball");
    o.summary = "disk, annulus, voxel ball";
  });

  run("engine invariants", [&](Outcome& o) {
    for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
      const auto& g = corpus.instances[i];
      o.require(check_engine_invariants(g.dec, g.f, i), label(i));
    }
    std::size_t commands = 0;
    if (!cli.empty()) {
      const std::vector<std::string> cmds = {
          "gen random --dim 2 --seed 5",
          "gen random --dim 2 --seed 2",
          "check shore --gen random --dim 2 --seed 6",
          "check counterexample",
          "check land-water --gen solid-torus",
          "corpus --dim 2 --count 2 --seed 8",
      };
      for (const auto& c : cmds) {
        const auto first = run_command(cli + " " + c + " 2>&1");
        const auto second = run_command(cli + " " + c + " 2>&1");
        o.require(!first.empty() && first == second, "output of '" + c + "' differs between runs");
        ++commands;
      }
    }
    o.summary = std::to_string(corpus.instances.size()) + " instances, " + std::to_string(commands) +
                " commands run twice";
  });

  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
