#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gcodes/graph_code.hpp"
#include "gcodes/linear_code.hpp"
#include "gcodes/partite_graph.hpp"

namespace gcodes {

// Matrix text format: first line "rows cols q", then one whitespace-
// separated row per line with entries as canonical integers.
GFMatrix load_matrix_text(std::istream& in);
void save_matrix_text(std::ostream& out, const GFMatrix& m);

// Code file format: line 1 "generator" or "parity", then the matrix text
// format.
LinearCode load_code(std::istream& in);
LinearCode load_code_file(const std::string& path);
void save_code(std::ostream& out, const LinearCode& code, bool as_generator = true);

// Graph file format: line 1 "partite <ell> <m>", then one "u v" edge per
// line with 1-based vertex labels.
PartiteGraph load_graph(std::istream& in, EdgeOrderMode order = EdgeOrderMode::Canonical);
PartiteGraph load_graph_file(const std::string& path,
                             EdgeOrderMode order = EdgeOrderMode::Canonical);
void save_graph(std::ostream& out, const PartiteGraph& graph);

// Assignment file: N field elements in edge order, whitespace-separated.
GFVector load_assignment(std::istream& in, FieldPtr field, std::size_t expected_length);
GFVector load_assignment_file(const std::string& path, FieldPtr field,
                              std::size_t expected_length);

/// Graph spec: "complete:<ell>,<m>" or a file path.
PartiteGraph parse_graph_spec(const std::string& spec,
                              EdgeOrderMode order = EdgeOrderMode::Canonical);

/// Inner-code spec list. Grammar per item: hamming:<r> | even:<n> |
/// rep:<n> | dsum:<spec>,<spec> | file:<path>; items separated by commas
/// (dsum consumes its own two comma-separated arguments first).
std::vector<LinearCode> parse_code_spec_list(const std::string& spec);

}  // namespace gcodes
