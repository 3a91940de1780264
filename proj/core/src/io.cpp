#include "gcodes/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gcodes {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  return in;
}

unsigned parse_uint(std::string_view text, const std::string& what) {
  unsigned value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || p != text.data() + text.size())
    throw UsageError("bad " + what + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

GFMatrix load_matrix_text(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::uint32_t q = 0;
  if (!(in >> rows >> cols >> q)) throw UsageError("matrix header must be 'rows cols q'");
  auto field = FieldSpec::from_order(q);
  GFMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint32_t v = 0;
      if (!(in >> v)) throw UsageError("matrix data ended early");
      if (v >= q) throw UsageError("matrix entry " + std::to_string(v) + " not in [0, q)");
      m.set(i, j, std::uint16_t(v));
    }
  return m;
}

void save_matrix_text(std::ostream& out, const GFMatrix& m) {
  out << m.rows() << " " << m.cols() << " " << m.field()->order() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m.get(i, j);
    }
    out << "\n";
  }
}

LinearCode load_code(std::istream& in) {
  std::string kind;
  if (!(in >> kind)) throw UsageError("code file is empty");
  GFMatrix m = load_matrix_text(in);
  if (kind == "generator") return LinearCode::from_generator(std::move(m));
  if (kind == "parity") return LinearCode::from_parity_check(std::move(m));
  throw UsageError("code file must start with 'generator' or 'parity', got '" + kind + "'");
}

LinearCode load_code_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_code(in);
}

void save_code(std::ostream& out, const LinearCode& code, bool as_generator) {
  out << (as_generator ? "generator" : "parity") << "\n";
  save_matrix_text(out, as_generator ? code.generator() : code.parity_check());
}

PartiteGraph load_graph(std::istream& in, EdgeOrderMode order) {
  std::string tag;
  std::uint32_t ell = 0, m = 0;
  if (!(in >> tag >> ell >> m) || tag != "partite")
    throw UsageError("graph file must start with 'partite <ell> <m>'");
  std::vector<Edge> edges;
  std::uint32_t u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw UsageError("dangling vertex label in graph file");
    if (u == 0 || v == 0) throw UsageError("vertex labels are 1-based");
    edges.push_back({u - 1, v - 1});
  }
  if (!in.eof() && in.fail()) throw UsageError("malformed edge line in graph file");
  return PartiteGraph(std::vector<std::uint32_t>(ell, m), std::move(edges), order);
}

PartiteGraph load_graph_file(const std::string& path, EdgeOrderMode order) {
  auto in = open_or_throw(path);
  return load_graph(in, order);
}

void save_graph(std::ostream& out, const PartiteGraph& graph) {
  out << "partite " << graph.ell() << " " << graph.m() << "\n";
  for (const Edge& e : graph.edges()) out << e.u + 1 << " " << e.v + 1 << "\n";
}

GFVector load_assignment(std::istream& in, FieldPtr field, std::size_t expected_length) {
  GFVector out{field, {}};
  out.symbols.reserve(expected_length);
  std::uint32_t v = 0;
  while (in >> v) {
    if (v >= field->order()) throw UsageError("assignment symbol not in [0, q)");
    out.symbols.push_back(std::uint16_t(v));
  }
  if (!in.eof() && in.fail()) throw UsageError("malformed assignment file");
  if (out.symbols.size() != expected_length)
    throw UsageError("assignment has " + std::to_string(out.symbols.size()) +
                     " symbols, expected " + std::to_string(expected_length));
  return out;
}

GFVector load_assignment_file(const std::string& path, FieldPtr field,
                              std::size_t expected_length) {
  auto in = open_or_throw(path);
  return load_assignment(in, std::move(field), expected_length);
}

PartiteGraph parse_graph_spec(const std::string& spec, EdgeOrderMode order) {
  if (spec.rfind("complete:", 0) == 0) {
    const std::string body = spec.substr(9);
    const auto comma = body.find(',');
    if (comma == std::string::npos)
      throw UsageError("complete graph spec is complete:<ell>,<m>");
    const unsigned ell = parse_uint(body.substr(0, comma), "part count");
    const unsigned m = parse_uint(body.substr(comma + 1), "part size");
    return PartiteGraph::complete_multipartite(ell, m);
  }
  return load_graph_file(spec, order);
}

namespace {

// Recursive descent over the inner-code mini-language.
LinearCode parse_one_code(const std::string& text, std::size_t& pos) {
  auto take_prefix = [&](std::string_view prefix) {
    if (text.compare(pos, prefix.size(), prefix) == 0) {
      pos += prefix.size();
      return true;
    }
    return false;
  };
  auto take_uint = [&](const std::string& what) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw UsageError("expected a number in code spec after '" +
                                       text.substr(0, start) + "'");
    return parse_uint(std::string_view(text).substr(start, pos - start), what);
  };

  if (take_prefix("hamming:")) return LinearCode::hamming_binary(take_uint("hamming parameter"));
  if (take_prefix("even:")) return LinearCode::even_weight(take_uint("even-weight length"));
  if (take_prefix("rep:")) return LinearCode::repetition_binary(take_uint("repetition length"));
  if (take_prefix("dsum:")) {
    LinearCode first = parse_one_code(text, pos);
    if (pos >= text.size() || text[pos] != ',')
      throw UsageError("dsum needs two comma-separated code specs");
    ++pos;
    LinearCode second = parse_one_code(text, pos);
    return first.direct_sum(second);
  }
  if (take_prefix("file:")) {
    // A path runs to the next top-level comma.
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    return load_code_file(text.substr(start, pos - start));
  }
  throw UsageError("unrecognized code spec at '" + text.substr(pos) + "'");
}

}  // namespace

std::vector<LinearCode> parse_code_spec_list(const std::string& spec) {
  std::vector<LinearCode> codes;
  std::size_t pos = 0;
  for (;;) {
    codes.push_back(parse_one_code(spec, pos));
    if (pos == spec.size()) break;
    if (spec[pos] != ',') throw UsageError("unexpected text in code spec: '" + spec.substr(pos) + "'");
    ++pos;
  }
  return codes;
}

}  // namespace gcodes
