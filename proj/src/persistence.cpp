#include "shoreline/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "shoreline/error.hpp"

namespace shoreline {

Dot Dot::make(int dim, Endpoint birth, Endpoint death) {
  if (dim < -1) throw MalformedInput("dot dimension below -1");
  Dot d{dim, birth, death, Subdiagram::Ordinary};
  if (birth.pass == Pass::Ascending && death.pass == Pass::Ascending) {
    d.subdiagram = Subdiagram::Ordinary;
  } else if (birth.pass == Pass::Descending && death.pass == Pass::Descending) {
    d.subdiagram = Subdiagram::Relative;
  } else if (birth.pass == Pass::Ascending) {
    d.subdiagram = birth.value <= death.value ? Subdiagram::Horizontal : Subdiagram::Vertical;
  } else {
    throw MalformedInput("dot born descending cannot die ascending");
  }
  return d;
}

std::string Dot::to_string() const {
  std::ostringstream os;
  os << subdiagram_name(subdiagram) << "_" << dim << " (" << birth.value << " "
     << pass_name(birth.pass) << ", " << death.value << " " << pass_name(death.pass) << ")";
  return os.str();
}

bool canonical_less(const Dot& a, const Dot& b) {
  return std::tie(a.dim, a.birth.pass, a.birth.value, a.death.pass, a.death.value) <
         std::tie(b.dim, b.birth.pass, b.birth.value, b.death.pass, b.death.value);
}

const char* pass_name(Pass p) { return p == Pass::Ascending ? "asc" : "desc"; }

const char* subdiagram_name(Subdiagram s) {
  switch (s) {
    case Subdiagram::Ordinary: return "ordinary";
    case Subdiagram::Horizontal: return "horizontal";
    case Subdiagram::Vertical: return "vertical";
    case Subdiagram::Relative: return "relative";
  }
  return "?";
}

Pass parse_pass(const std::string& s) {
  if (s == "asc") return Pass::Ascending;
  if (s == "desc") return Pass::Descending;
  throw MalformedInput("unknown pass '" + s + "'");
}

Subdiagram parse_subdiagram(const std::string& s) {
  for (auto sd : {Subdiagram::Ordinary, Subdiagram::Horizontal, Subdiagram::Vertical,
                  Subdiagram::Relative})
    if (s == subdiagram_name(sd)) return sd;
  throw MalformedInput("unknown subdiagram '" + s + "'");
}

void PersistenceDiagram::canonicalize() {
  std::sort(dots.begin(), dots.end(), canonical_less);
}

PersistenceDiagram PersistenceDiagram::of_dim(int p) const {
  PersistenceDiagram out{{}, source, n};
  for (const auto& d : dots)
    if (d.dim == p) out.dots.push_back(d);
  return out;
}

PersistenceDiagram PersistenceDiagram::without_diagonal() const {
  PersistenceDiagram out{{}, source, n};
  for (const auto& d : dots)
    if (!d.is_diagonal()) out.dots.push_back(d);
  return out;
}

namespace {

using Column = std::vector<std::uint32_t>;

void add_into(Column& target, const Column& other, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

constexpr std::uint32_t kNone = ~std::uint32_t{0};

struct Reducer {
  std::vector<Column> columns;
  std::vector<int> dims;
  std::vector<std::uint32_t> owner;  // owner[row] = column whose pivot is row
  std::vector<char> cleared;
  Column scratch;

  void reduce(std::uint32_t j) {
    auto& col = columns[j];
    while (!col.empty()) {
      const std::uint32_t low = col.back();
      const std::uint32_t k = owner[low];
      if (k == kNone) {
        owner[low] = j;
        return;
      }
      add_into(col, columns[k], scratch);
    }
  }

  // Reduces every column of dimension d in index order. With clearing, a
  // column whose index is already a pivot is zeroed without work.
  void reduce_dim(int d, bool clearing) {
    for (std::uint32_t j = 0; j < columns.size(); ++j) {
      if (dims[j] != d) continue;
      if (clearing && owner[j] != kNone) {
        columns[j].clear();
        cleared[j] = 1;
        continue;
      }
      reduce(j);
    }
  }
};

}  // namespace

PersistenceDiagram compute_diagram(const SimplicialComplex& k, const VertexFunction& f,
                                   ReductionOptions options, std::string source) {
  const auto filt = extended_filtration(k, f);
  const std::size_t n_cells = filt.cells.size();
  Reducer r;
  r.columns.resize(n_cells);
  r.dims.resize(n_cells);
  r.owner.assign(n_cells, kNone);
  r.cleared.assign(n_cells, 0);
  int top_dim = 0;
  for (std::size_t j = 0; j < n_cells; ++j) {
    r.dims[j] = filt.cells[j].dim;
    top_dim = std::max(top_dim, r.dims[j]);
    // The apex row is dropped: homology relative to the apex.
    for (std::size_t i : filt.boundaries[j])
      if (i != filt.apex) r.columns[j].push_back(static_cast<std::uint32_t>(i));
  }

  switch (options.strategy) {
    case Strategy::Standard:
      for (std::uint32_t j = 0; j < n_cells; ++j) r.reduce(j);
      break;
    case Strategy::Twist:
      for (int d = top_dim; d >= 1; --d) r.reduce_dim(d, true);
      // Zero-dimensional columns are empty after dropping the apex row.
      r.reduce_dim(0, true);
      break;
    case Strategy::Shuffled: {
      std::vector<int> order(static_cast<std::size_t>(top_dim) + 1);
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 rng(options.seed);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<char> done(order.size(), 0);
      for (int d : order) {
        // Clearing is only sound once the next dimension up is reduced.
        const bool clearing = d == top_dim || done[static_cast<std::size_t>(d) + 1];
        r.reduce_dim(d, clearing);
        done[static_cast<std::size_t>(d)] = 1;
      }
      break;
    }
  }

  PersistenceDiagram out;
  out.source = std::move(source);
  std::vector<char> paired(n_cells, 0);
  for (std::uint32_t j = 0; j < n_cells; ++j) {
    if (r.columns[j].empty()) continue;
    const std::uint32_t i = r.columns[j].back();
    paired[i] = paired[j] = 1;
    const auto& creator = filt.cells[i];
    const auto& destroyer = filt.cells[j];
    out.dots.push_back(Dot::make(creator.dim, {creator.value, creator.pass},
                                 {destroyer.value, destroyer.pass}));
  }
  for (std::size_t j = 0; j < n_cells; ++j)
    if (!paired[j] && j != filt.apex)
      throw ConstructionError("unpaired cell " + filt.cells[j].to_string() +
                              " in the extended filtration");
  out.canonicalize();
  return out;
}

const char* part_name(Part p) {
  switch (p) {
    case Part::U: return "U";
    case Part::V: return "V";
    case Part::M: return "M";
    case Part::S: return "S";
  }
  return "?";
}

Part parse_part(const std::string& s) {
  for (auto p : {Part::U, Part::V, Part::M, Part::S})
    if (s == part_name(p)) return p;
  throw MalformedInput("unknown part '" + s + "'");
}

const SimplicialComplex& part_of(const Decomposition& dec, Part which) {
  switch (which) {
    case Part::U: return dec.u;
    case Part::V: return dec.v;
    case Part::M: return dec.m;
    case Part::S: return dec.ambient;
  }
  return dec.ambient;
}

PersistenceDiagram restrict_and_compute(const Decomposition& dec, const VertexFunction& f,
                                        Part which, ReductionOptions options) {
  auto dgm = compute_diagram(part_of(dec, which), f, options, std::string("f|") + part_name(which));
  dgm.n = dec.n();
  return dgm;
}

std::size_t rectangle_count(const PersistenceDiagram& dgm, double t, int p, Side side) {
  std::size_t count = 0;
  for (const auto& d : dgm.dots) {
    if (d.birth.value == t || d.death.value == t)
      throw PreconditionError("rectangle corner at a critical value");
    if (d.dim != p) continue;
    const bool asc_b = d.birth.pass == Pass::Ascending;
    const bool asc_d = d.death.pass == Pass::Ascending;
    if (side == Side::L) {
      if (asc_b && d.birth.value < t && (!asc_d || d.death.value > t)) ++count;
    } else {
      if (!asc_d && d.death.value < t && (asc_b || d.birth.value > t)) ++count;
    }
  }
  return count;
}

}  // namespace shoreline
