#include "shoreline/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "shoreline/error.hpp"
#include "shoreline/homology.hpp"

namespace shoreline {

VertexFunction::VertexFunction(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw MalformedInput("non-finite value at vertex " + std::to_string(i));
}

double VertexFunction::min() const {
  if (values_.empty()) throw PreconditionError("empty function has no minimum");
  return *std::min_element(values_.begin(), values_.end());
}

double VertexFunction::max() const {
  if (values_.empty()) throw PreconditionError("empty function has no maximum");
  return *std::max_element(values_.begin(), values_.end());
}

bool VertexFunction::is_generic() const {
  auto sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

VertexFunction normalize(const VertexFunction& f) {
  const double lo = f.min(), hi = f.max();
  if (!(hi > lo)) throw PreconditionError("cannot normalize a constant function");
  if (lo == 0.0 && hi == 1.0) return f;
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = (f.values()[i] - lo) / (hi - lo);
  // Pin the ends exactly.
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.values()[i] == lo) out[i] = 0.0;
    if (f.values()[i] == hi) out[i] = 1.0;
  }
  return VertexFunction(std::move(out));
}

VertexFunction perturb(const VertexFunction& f, std::optional<double> tie_break_scale) {
  const double lo = f.min(), hi = f.max();
  const double range = hi > lo ? hi - lo : 1.0;
  const double eps = tie_break_scale.value_or(std::ldexp(range, -30));
  if (!(eps > 0.0)) throw PreconditionError("tie-break scale must be positive");
  std::vector<double> shifted(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    shifted[i] = f.values()[i] + static_cast<double>(i) * eps;
  auto out = normalize(VertexFunction(std::move(shifted)));

  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(f.values()[a], a) < std::tie(f.values()[b], b);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t a = order[i - 1], b = order[i];
    if (!(out.values()[a] < out.values()[b]))
      throw GenericityError("perturbation did not separate vertices " + std::to_string(a) +
                            " and " + std::to_string(b) + "; use a smaller scale");
  }
  return out;
}

void require_generic(const SimplicialComplex& k, const VertexFunction& f) {
  auto vs = k.vertices();
  if (!vs.empty() && static_cast<std::size_t>(vs.back()) >= f.size())
    throw MalformedInput("function has " + std::to_string(f.size()) +
                         " values but the complex uses vertex " +
                         std::to_string(vs.back()));
  std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return f[a] < f[b]; });
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (f[vs[i - 1]] == f[vs[i]])
      throw GenericityError("vertices " + std::to_string(vs[i - 1]) + " and " +
                            std::to_string(vs[i]) + " share the value " +
                            std::to_string(f[vs[i]]) + "; perturb the function");
}

double max_value(const Simplex& s, const VertexFunction& f) {
  double m = f[s.front()];
  for (Vertex v : s.vertices()) m = std::max(m, f[v]);
  return m;
}

double min_value(const Simplex& s, const VertexFunction& f) {
  double m = f[s.front()];
  for (Vertex v : s.vertices()) m = std::min(m, f[v]);
  return m;
}

SimplicialComplex sublevel_complex(const SimplicialComplex& k, const VertexFunction& f, double t) {
  return k.filter([&](const Simplex& s) { return max_value(s, f) <= t; });
}

SimplicialComplex superlevel_complex(const SimplicialComplex& k, const VertexFunction& f,
                                     double t) {
  return k.filter([&](const Simplex& s) { return min_value(s, f) >= t; });
}

CriticalSequence critical_sequence(const SimplicialComplex& k, const VertexFunction& f) {
  require_generic(k, f);
  CriticalSequence out;
  for (Vertex v : k.vertices()) out.critical_values.push_back(f[v]);
  std::sort(out.critical_values.begin(), out.critical_values.end());
  for (std::size_t i = 1; i < out.critical_values.size(); ++i)
    out.regular_values.push_back(std::midpoint(out.critical_values[i - 1], out.critical_values[i]));
  return out;
}

std::string Cell::to_string() const {
  if (is_apex()) return "w";
  std::string s = base->to_string();
  return pass == Pass::Ascending ? s : "w*" + s;
}

ExtendedFiltration extended_filtration(const SimplicialComplex& k, const VertexFunction& f) {
  if (k.empty()) throw PreconditionError("extended filtration of an empty complex");
  require_generic(k, f);
  const auto& simplices = k.simplices();
  const std::size_t n = simplices.size();

  // Storage order is already (dim, lex), so a stable sort on value suffices.
  std::vector<std::size_t> up(n), down(n);
  std::iota(up.begin(), up.end(), 0);
  std::iota(down.begin(), down.end(), 0);
  std::vector<double> hi(n), lo(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = max_value(simplices[i], f);
    lo[i] = min_value(simplices[i], f);
  }
  std::stable_sort(up.begin(), up.end(), [&](std::size_t a, std::size_t b) { return hi[a] < hi[b]; });
  std::stable_sort(down.begin(), down.end(),
                   [&](std::size_t a, std::size_t b) { return lo[a] > lo[b]; });

  ExtendedFiltration out;
  out.apex = n;
  out.cells.reserve(2 * n + 1);
  std::vector<std::size_t> pos_up(n), pos_down(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos_up[up[i]] = i;
    pos_down[down[i]] = n + 1 + i;
  }
  for (std::size_t i : up)
    out.cells.push_back({Pass::Ascending, simplices[i], hi[i], simplices[i].dim()});
  // The apex sits at the top value of the complex, not of the whole function.
  out.cells.push_back({Pass::Descending, std::nullopt, hi[up.back()], 0});
  for (std::size_t i : down)
    out.cells.push_back({Pass::Descending, simplices[i], lo[i], simplices[i].dim() + 1});

  out.boundaries.resize(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> b_up, b_down{pos_up[i]};
    if (simplices[i].dim() == 0) {
      b_down.push_back(n);
    } else {
      for (const auto& facet : simplices[i].facets()) {
        const std::size_t j = *k.index_of(facet);
        b_up.push_back(pos_up[j]);
        b_down.push_back(pos_down[j]);
      }
    }
    std::sort(b_up.begin(), b_up.end());
    std::sort(b_down.begin(), b_down.end());
    out.boundaries[pos_up[i]] = std::move(b_up);
    out.boundaries[pos_down[i]] = std::move(b_down);
  }
  return out;
}

namespace {

SimplicialComplex partial_link(const SimplicialComplex& s, const VertexFunction& f, Vertex v,
                               bool below) {
  const double fv = f[v];
  return s.link(v).filter([&](const Simplex& t) {
    for (Vertex w : t.vertices())
      if (below ? !(f[w] < fv) : !(f[w] > fv)) return false;
    return true;
  });
}

}  // namespace

SimplicialComplex lower_link(const SimplicialComplex& s, const VertexFunction& f, Vertex v) {
  return partial_link(s, f, v, true);
}

SimplicialComplex upper_link(const SimplicialComplex& s, const VertexFunction& f, Vertex v) {
  return partial_link(s, f, v, false);
}

MorseCheck check_pl_perfect_morse(const SimplicialComplex& s, const VertexFunction& f,
                                  int n_plus_1) {
  MorseCheck out;
  if (auto m = check_closed_manifold(s, n_plus_1); !m.ok) {
    out.reason = "not a closed " + std::to_string(n_plus_1) + "-manifold: " + m.reason;
    return out;
  }
  if (s.count(0) < 2) {
    out.reason = "fewer than two vertices";
    return out;
  }
  try {
    require_generic(s, f);
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  // Stars gathered in one pass; each lower link is read off its star.
  std::vector<std::vector<std::size_t>> star(s.n_vertices());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.simplices()[i].dim() >= 1)
      for (Vertex w : s.simplices()[i].vertices()) star[static_cast<std::size_t>(w)].push_back(i);
  for (Vertex v : s.vertices()) {
    const double fv = f[v];
    std::vector<Simplex> low;
    bool any_above = false;
    for (std::size_t i : star[static_cast<std::size_t>(v)]) {
      std::vector<Vertex> rest;
      bool below = true;
      for (Vertex w : s.simplices()[i].vertices()) {
        if (w == v) continue;
        rest.push_back(w);
        if (f[w] > fv) {
          below = false;
          any_above = true;
        }
      }
      if (below) low.emplace_back(std::move(rest));
    }
    if (low.empty()) {
      out.minima.push_back(v);
      continue;
    }
    if (!any_above) {
      out.maxima.push_back(v);
      continue;
    }
    auto lk = SimplicialComplex::from_face_closed(std::move(low), s.n_vertices(), false);
    if (reduced_betti(lk) != BettiVector{}) out.irregular.push_back(v);
  }
  std::ostringstream os;
  auto list = [&](const char* what, const std::vector<Vertex>& vs) {
    os << what << " {";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "} ";
  };
  out.ok = out.minima.size() == 1 && out.maxima.size() == 1 && out.irregular.empty();
  if (!out.ok) {
    list("minima", out.minima);
    list("maxima", out.maxima);
    list("irregular", out.irregular);
    out.reason = os.str();
    out.reason.pop_back();
  }
  return out;
}

}  // namespace shoreline
