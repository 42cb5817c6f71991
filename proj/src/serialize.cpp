#include "shoreline/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "shoreline/error.hpp"
#include "shoreline/theorems.hpp"

namespace shoreline {

using json = nlohmann::ordered_json;

namespace {

json endpoint_json(const Endpoint& e) { return json{{"value", e.value}, {"pass", pass_name(e.pass)}}; }

json dot_json(const Dot& d) {
  return json{{"dim", d.dim},
              {"birth", endpoint_json(d.birth)},
              {"death", endpoint_json(d.death)},
              {"subdiagram", subdiagram_name(d.subdiagram)}};
}

json dots_json(std::vector<Dot> dots) {
  std::sort(dots.begin(), dots.end(), canonical_less);
  json arr = json::array();
  for (const auto& d : dots) arr.push_back(dot_json(d));
  return arr;
}

Endpoint endpoint_from(const json& j) {
  return {j.at("value").get<double>(), parse_pass(j.at("pass").get<std::string>())};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw MalformedInput("line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string diagram_to_json(const PersistenceDiagram& dgm, bool keep_diagonal) {
  json doc;
  doc["n"] = dgm.n ? json(*dgm.n) : json(nullptr);
  doc["source"] = dgm.source;
  doc["dots"] = dots_json(keep_diagonal ? dgm.dots : dgm.without_diagonal().dots);
  return doc.dump(2) + "\n";
}

PersistenceDiagram diagram_from_json(const std::string& text) {
  try {
    const auto doc = json::parse(text);
    PersistenceDiagram out;
    if (doc.contains("n") && !doc.at("n").is_null()) out.n = doc.at("n").get<int>();
    if (doc.contains("source")) out.source = doc.at("source").get<std::string>();
    for (const auto& d : doc.at("dots")) {
      auto dot = Dot::make(d.at("dim").get<int>(), endpoint_from(d.at("birth")),
                           endpoint_from(d.at("death")));
      if (d.contains("subdiagram") &&
          parse_subdiagram(d.at("subdiagram").get<std::string>()) != dot.subdiagram)
        throw MalformedInput("subdiagram label does not match " + dot.to_string());
      out.dots.push_back(dot);
    }
    out.canonicalize();
    return out;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("diagram document: ") + e.what());
  }
}

std::string comparison_to_json(const MultisetComparison& cmp) {
  json doc;
  doc["equal"] = cmp.equal;
  doc["only_in_left"] = dots_json(cmp.only_in_left);
  doc["only_in_right"] = dots_json(cmp.only_in_right);
  return doc.dump(2) + "\n";
}

std::string cascade_report_to_json(const CascadeReport& report) {
  json doc;
  doc["lo"] = report.lo;
  doc["hi"] = report.hi;
  json in = json::array(), out = json::array();
  for (const auto& d : report.extreme_dots_in) in.push_back(dot_json(d));
  for (const auto& d : report.dots_out) out.push_back(dot_json(d));
  doc["extreme_dots_in"] = in;
  doc["dots_out"] = out;
  return doc.dump(2) + "\n";
}

std::string check_report_to_json(const CheckReport& report) {
  json doc;
  doc["name"] = report.name;
  doc["passed"] = report.passed();
  doc["status"] = status_name(report.status);
  doc["message"] = report.message;
  doc["checked"] = report.checked;
  doc["skipped"] = report.skipped;
  json details = json::array();
  for (const auto& d : report.details) {
    json j;
    j["space"] = d.space;
    j["t"] = d.t ? json(*d.t) : json(nullptr);
    j["relation"] = d.relation;
    j["expected"] = d.expected;
    j["actual"] = d.actual;
    j["mismatch"] = d.mismatch;
    details.push_back(std::move(j));
  }
  doc["details"] = std::move(details);
  return doc.dump(2) + "\n";
}

std::string diagram_to_pretty(const PersistenceDiagram& dgm, bool keep_diagonal) {
  auto dots = keep_diagonal ? dgm.dots : dgm.without_diagonal().dots;
  std::sort(dots.begin(), dots.end(), canonical_less);
  std::ostringstream os;
  os << "source: " << (dgm.source.empty() ? "-" : dgm.source);
  if (dgm.n) os << "  n: " << *dgm.n;
  os << "\n";
  std::map<Subdiagram, std::vector<Dot>> groups;
  for (const auto& d : dots) groups[d.subdiagram].push_back(d);
  for (const auto& [sd, list] : groups) {
    os << subdiagram_name(sd) << " (" << list.size() << ")\n";
    for (const auto& d : list) {
      os << "  dim " << std::setw(2) << d.dim << "  " << std::setw(24) << format_double(d.birth.value)
         << " " << std::setw(4) << pass_name(d.birth.pass) << "  ->  " << std::setw(24)
         << format_double(d.death.value) << " " << pass_name(d.death.pass) << "\n";
    }
  }
  if (groups.empty()) os << "(no dots)\n";
  return os.str();
}

std::string diagram_to_plot_csv(const PersistenceDiagram& dgm, bool keep_diagonal) {
  auto dots = keep_diagonal ? dgm.dots : dgm.without_diagonal().dots;
  std::sort(dots.begin(), dots.end(), canonical_less);
  std::ostringstream os;
  os << "x,y,dim,subdiagram\n";
  for (const auto& d : dots)
    os << format_double(d.birth.value) << "," << format_double(d.death.value) << "," << d.dim
       << "," << subdiagram_name(d.subdiagram) << "\n";
  return os.str();
}

SimplicialComplex read_complex(std::istream& in) {
  std::vector<Simplex> tops;
  std::optional<int> declared;
  std::string raw;
  std::size_t line = 0;
  Vertex largest = -1;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    if (text.rfind("dim", 0) == 0) {
      std::istringstream hs(text.substr(3));
      int d;
      if (!(hs >> d) || d < 0) bad_line(line, "bad dim header");
      declared = d;
      continue;
    }
    std::istringstream ls(text);
    std::vector<Vertex> vs;
    std::string tok;
    while (ls >> tok) {
      Vertex v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) bad_line(line, "bad vertex id '" + tok + "'");
      vs.push_back(v);
      largest = std::max(largest, v);
    }
    try {
      tops.emplace_back(std::move(vs));
    } catch (const MalformedInput& e) {
      bad_line(line, e.what());
    }
  }
  auto k = close_faces(tops, static_cast<std::size_t>(largest + 1));
  if (declared && k.dim() > *declared)
    throw MalformedInput("complex has dimension " + std::to_string(k.dim()) + " above the declared " +
                         std::to_string(*declared));
  return k;
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream is(text);
  return read_complex(is);
}

std::string complex_to_text(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "dim " << std::max(k.dim(), 0) << "\n";
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.vertices().size(); ++i) os << (i ? " " : "") << s.vertices()[i];
    os << "\n";
  }
  return os.str();
}

VertexFunction read_values(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::map<Vertex, double> rows;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty() || text[0] == '#') continue;
    if (!header) {
      if (text != "vertex,value") bad_line(line, "expected header 'vertex,value'");
      header = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) bad_line(line, "expected 'vertex,value'");
    const auto a = trim(text.substr(0, comma)), b = trim(text.substr(comma + 1));
    Vertex v = 0;
    double x = 0;
    auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), v);
    if (ea != std::errc{} || pa != a.data() + a.size() || v < 0) bad_line(line, "bad vertex id '" + a + "'");
    auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), x);
    if (eb != std::errc{} || pb != b.data() + b.size() || !std::isfinite(x))
      bad_line(line, "bad value '" + b + "'");
    if (!rows.emplace(v, x).second) bad_line(line, "vertex " + a + " listed twice");
  }
  if (!header) throw MalformedInput("values file is empty");
  std::vector<double> values;
  for (const auto& [v, x] : rows) {
    if (static_cast<std::size_t>(v) != values.size())
      throw MalformedInput("vertex " + std::to_string(values.size()) + " has no value");
    values.push_back(x);
  }
  return VertexFunction(std::move(values));
}

VertexFunction parse_values(const std::string& text) {
  std::istringstream is(text);
  return read_values(is);
}

std::string values_to_csv(const VertexFunction& f) {
  std::ostringstream os;
  os << "vertex,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) os << i << "," << format_double(f.values()[i]) << "\n";
  return os.str();
}

}  // namespace shoreline
