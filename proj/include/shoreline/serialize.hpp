#pragma once

#include <iosfwd>
#include <string>

#include "shoreline/diagram_ops.hpp"
#include "shoreline/filtration.hpp"
#include "shoreline/persistence.hpp"
#include "shoreline/simplicial.hpp"

namespace shoreline {

struct CheckReport;

/// JSON document with "n", "source" and "dots", in canonical order. Values use
/// the shortest decimal that round-trips.
std::string diagram_to_json(const PersistenceDiagram& dgm, bool keep_diagonal = false);
/// Throws MalformedInput on anything that does not parse into valid dots.
PersistenceDiagram diagram_from_json(const std::string& text);

/// {"equal", "only_in_left", "only_in_right"}.
std::string comparison_to_json(const MultisetComparison& cmp);
std::string cascade_report_to_json(const CascadeReport& report);
/// {"name", "passed", "status", "message", "checked", "skipped", "details"}.
std::string check_report_to_json(const CheckReport& report);

/// Aligned text, one block per subdiagram, passes as they run.
std::string diagram_to_pretty(const PersistenceDiagram& dgm, bool keep_diagonal = false);
/// Columns x, y, dim, subdiagram.
std::string diagram_to_plot_csv(const PersistenceDiagram& dgm, bool keep_diagonal = false);

/// One maximal simplex per line, '#' comments, optional "dim d" header. Throws
/// MalformedInput with the line number on bad input.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);
std::string complex_to_text(const SimplicialComplex& k);

/// CSV with header "vertex,value"; every vertex from 0 to the largest id must
/// appear exactly once.
VertexFunction read_values(std::istream& in);
VertexFunction parse_values(const std::string& text);
std::string values_to_csv(const VertexFunction& f);

/// Shortest round-trip decimal.
std::string format_double(double x);

}  // namespace shoreline
