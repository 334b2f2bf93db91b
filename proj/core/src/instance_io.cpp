#include "geoinsert/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace geoinsert {

namespace {

struct LineReader {
  std::istream& in;
  int number = 0;

  // next non-blank line with comments stripped
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
};

long long read_int(std::istringstream& ss, int line, const char* what) {
  long long x = 0;
  if (!(ss >> x)) throw ParseError(line, std::string("expected ") + what);
  return x;
}

void expect_end(std::istringstream& ss, int line) {
  std::string rest;
  if (ss >> rest) throw ParseError(line, "unexpected token '" + rest + "'");
}

}  // namespace

Instance parse_instance(std::istream& in, std::string name) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(0, "empty instance");
  std::istringstream header(line);
  const long long n = read_int(header, reader.number, "vertex count n");
  const long long m = read_int(header, reader.number, "edge count m");
  expect_end(header, reader.number);
  if (n < 1 || n > 10'000'000) throw ParseError(reader.number, "vertex count out of range");
  if (m < 0) throw ParseError(reader.number, "negative edge count");

  std::vector<std::vector<VertexId>> rot(n);
  std::vector<char> seen(n, 0);
  long long half_edges = 0;
  for (long long i = 0; i < n; ++i) {
    if (!reader.next(line)) {
      throw ParseError(0, "file ends after " + std::to_string(i) + " of " + std::to_string(n) + " rotation lines");
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(reader.number, "expected 'v: u1 u2 ...'");
    std::istringstream head(line.substr(0, colon));
    const long long v = read_int(head, reader.number, "vertex id before ':'");
    expect_end(head, reader.number);
    if (v < 0 || v >= n) throw ParseError(reader.number, "vertex id " + std::to_string(v) + " out of range");
    if (seen[v]) throw ParseError(reader.number, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    std::istringstream body(line.substr(colon + 1));
    std::string tok;
    while (body >> tok) {
      std::size_t used = 0;
      long long u = 0;
      try {
        u = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(reader.number, "bad neighbour '" + tok + "'");
      if (u < 0 || u >= n) throw ParseError(reader.number, "neighbour " + tok + " out of range");
      rot[v].push_back(static_cast<VertexId>(u));
      ++half_edges;
    }
  }
  if (half_edges != 2 * m) {
    throw ParseError(reader.number, "rotations list " + std::to_string(half_edges) + " half-edges, expected 2m = " +
                                        std::to_string(2 * m));
  }

  if (!reader.next(line)) throw ParseError(0, "missing terminal line 's t'");
  std::istringstream term(line);
  const long long s = read_int(term, reader.number, "terminal s");
  const long long t = read_int(term, reader.number, "terminal t");
  expect_end(term, reader.number);
  if (s < 0 || s >= n || t < 0 || t >= n) throw ParseError(reader.number, "terminal out of range");
  if (reader.next(line)) throw ParseError(reader.number, "trailing content after terminal line");

  Instance inst;
  try {
    inst.graph = EmbeddedGraph::from_rotations(std::move(rot));
  } catch (const StructuralError& e) {
    throw ParseError(0, e.what());
  }
  inst.s = static_cast<VertexId>(s);
  inst.t = static_cast<VertexId>(t);
  inst.name = std::move(name);
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  if (const auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name.erase(dot);
  return parse_instance(in, name);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const EmbeddedGraph& g = inst.graph;
  if (!inst.name.empty()) out << "# " << inst.name << "\n";
  out << g.vertex_count() << ' ' << g.edge_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (VertexId u : g.rotation(v)) out << ' ' << u;
    out << "\n";
  }
  out << inst.s << ' ' << inst.t << "\n";
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_instance(out, inst);
}

}  // namespace geoinsert
